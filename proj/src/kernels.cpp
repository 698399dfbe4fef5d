#include "ucp/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace ucp::kernels {

const Ops* avx2_ops() {
    static const Ops* selected = [] {
        const Ops* impl = detail::avx2_ops_impl();
        if (!impl) return static_cast<const Ops*>(nullptr);
#if defined(__x86_64__)
        if (!__builtin_cpu_supports("avx2")) return static_cast<const Ops*>(nullptr);
#endif
        return impl;
    }();
    return selected;
}

const Ops& active_ops() {
    static const Ops* selected = [] {
        if (const char* env = std::getenv("UCP_KERNEL")) {
            if (std::strcmp(env, "scalar") == 0) return &scalar_ops();
            if (std::strcmp(env, "avx2") == 0 && avx2_ops()) return avx2_ops();
        }
        return avx2_ops() ? avx2_ops() : &scalar_ops();
    }();
    return *selected;
}

} // namespace ucp::kernels
