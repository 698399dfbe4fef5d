#include "ucp/kernels.hpp"

#include "kernel_rollback.hpp"

namespace ucp::kernels {

namespace {

bool scalar_mul(std::int64_t* c, std::size_t len, std::size_t d, int sign) {
    // descending so c[i-d] is still the old value
    for (std::size_t i = len; i-- > 0;) {
        std::int64_t low = i >= d ? c[i - d] : 0;
        std::int64_t r;
        bool ov = sign > 0 ? __builtin_add_overflow(low, c[i], &r)
                           : __builtin_sub_overflow(low, c[i], &r);
        if (ov) {
            detail::rollback_mul(c, len, d, sign, i);
            return false;
        }
        c[i] = r;
    }
    return true;
}

bool scalar_div(std::int64_t* c, std::size_t len, std::size_t d, int sign) {
    // ascending; q[i] depends on q[i-d] already written
    for (std::size_t i = 0; i < len; ++i) {
        std::int64_t prev = i >= d ? c[i - d] : 0;
        std::int64_t r;
        bool ov = sign > 0 ? __builtin_sub_overflow(c[i], prev, &r)
                           : __builtin_sub_overflow(prev, c[i], &r);
        if (ov) {
            detail::rollback_div(c, d, sign, i);
            return false;
        }
        c[i] = r;
    }
    return true;
}

std::uint64_t scalar_max_abs(const std::int64_t* c, std::size_t len) {
    std::uint64_t m = 0;
    for (std::size_t i = 0; i < len; ++i) {
        std::uint64_t a = c[i] < 0 ? -static_cast<std::uint64_t>(c[i])
                                   : static_cast<std::uint64_t>(c[i]);
        if (a > m) m = a;
    }
    return m;
}

} // namespace

const Ops& scalar_ops() {
    static const Ops ops{"scalar", scalar_mul, scalar_div, scalar_max_abs};
    return ops;
}

} // namespace ucp::kernels
