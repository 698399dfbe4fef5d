#pragma once

#include <cstddef>
#include <cstdint>

// Rollback helpers shared by the kernel implementations. The binomial passes
// are exact integer bijections, so every value needed to restore the buffer
// after a partial pass is representable and plain arithmetic suffices.

namespace ucp::kernels::detail {

// mul pass ran descending and wrote indices (failed, len); restore them.
inline void rollback_mul(std::int64_t* c, std::size_t len, std::size_t d, int sign,
                         std::size_t failed) {
    for (std::size_t j = failed + 1; j < len; ++j) {
        std::int64_t low = j >= d ? c[j - d] : 0;
        c[j] = sign > 0 ? c[j] - low : low - c[j];
    }
}

// div pass ran ascending and wrote indices [0, written); restore them.
inline void rollback_div(std::int64_t* c, std::size_t d, int sign, std::size_t written) {
    for (std::size_t j = written; j-- > 0;) {
        std::int64_t prev = j >= d ? c[j - d] : 0;
        c[j] = sign > 0 ? c[j] + prev : prev - c[j];
    }
}

} // namespace ucp::kernels::detail
