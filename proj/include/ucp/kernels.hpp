#pragma once

#include <cstddef>
#include <cstdint>

namespace ucp::kernels {

// Coefficient-buffer passes shared by every polynomial build in the project.
// Buffers hold the ascending coefficients of a power series truncated to
// `len` terms.
//
//   mul_binomial: c <- c * (x^d + sign),  c[i] = old c[i-d] + sign*old c[i]
//   div_binomial: c <- c / (x^d + sign),  q[i] = sign*(c[i] - q[i-d])
//
// (out-of-range reads are zero; sign is +1 or -1). Both return false and
// leave the buffer exactly as found if any step would overflow int64.
//
// max_abs returns max |c[i]| as an unsigned value (so INT64_MIN is exact).
struct Ops {
    const char* name;
    bool (*mul_binomial)(std::int64_t* c, std::size_t len, std::size_t d, int sign);
    bool (*div_binomial)(std::int64_t* c, std::size_t len, std::size_t d, int sign);
    std::uint64_t (*max_abs)(const std::int64_t* c, std::size_t len);
};

const Ops& scalar_ops();
const Ops* avx2_ops(); // nullptr when not compiled in or CPU lacks AVX2

// Runtime-selected implementation. Honors UCP_KERNEL=scalar|avx2 (checked
// once, at first use).
const Ops& active_ops();

namespace detail {
const Ops* avx2_ops_impl(); // compiled-in table, no CPU check
}

} // namespace ucp::kernels
