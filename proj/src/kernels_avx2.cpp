#include "ucp/kernels.hpp"

#include "kernel_rollback.hpp"

#if defined(__AVX2__) && defined(__x86_64__)

#include <immintrin.h>

namespace ucp::kernels {

namespace {

// Sign bits of four packed int64 lanes.
inline int sign_mask(__m256i v) {
    return _mm256_movemask_pd(_mm256_castsi256_pd(v));
}

// r = a + b; overflow iff operands share a sign the result lost.
inline __m256i add_checked(__m256i a, __m256i b, int& ov) {
    __m256i r = _mm256_add_epi64(a, b);
    __m256i bad = _mm256_and_si256(_mm256_xor_si256(a, r), _mm256_xor_si256(b, r));
    ov = sign_mask(bad);
    return r;
}

// r = a - b; overflow iff operands differ in sign and the result flipped.
inline __m256i sub_checked(__m256i a, __m256i b, int& ov) {
    __m256i r = _mm256_sub_epi64(a, b);
    __m256i bad = _mm256_and_si256(_mm256_xor_si256(a, b), _mm256_xor_si256(a, r));
    ov = sign_mask(bad);
    return r;
}

bool avx2_mul(std::int64_t* c, std::size_t len, std::size_t d, int sign) {
    std::size_t i = len;
    // vector chunks [i-4, i) while the shifted reads stay in range
    while (i >= d + 4) {
        __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(c + i - 4));
        __m256i low = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(c + i - 4 - d));
        int ov;
        __m256i r = sign > 0 ? add_checked(low, cur, ov) : sub_checked(low, cur, ov);
        if (ov) {
            detail::rollback_mul(c, len, d, sign, i - 1);
            return false;
        }
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(c + i - 4), r);
        i -= 4;
    }
    while (i-- > 0) {
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

bool avx2_div(std::int64_t* c, std::size_t len, std::size_t d, int sign) {
    std::size_t i = 0;
    std::size_t head = d < len ? d : len;
    // q[i] = sign*c[i] while i < d
    for (; i < head; ++i) {
        std::int64_t r;
        if (sign > 0) {
            r = c[i];
        } else if (__builtin_sub_overflow(std::int64_t{0}, c[i], &r)) {
            detail::rollback_div(c, d, sign, i);
            return false;
        }
        c[i] = r;
    }
    if (d >= 4) {
        // the lag-d recurrence only reads finalized lanes when d >= lane count
        while (i + 4 <= len) {
            __m256i cur = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(c + i));
            __m256i prev = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(c + i - d));
            int ov;
            __m256i r = sign > 0 ? sub_checked(cur, prev, ov) : sub_checked(prev, cur, ov);
            if (ov) {
                detail::rollback_div(c, d, sign, i);
                return false;
            }
            _mm256_storeu_si256(reinterpret_cast<__m256i*>(c + i), r);
            i += 4;
        }
    }
    for (; i < len; ++i) {
        std::int64_t prev = c[i - d];
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

std::uint64_t avx2_max_abs(const std::int64_t* c, std::size_t len) {
    const __m256i top = _mm256_set1_epi64x(static_cast<long long>(0x8000000000000000ull));
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= len; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(c + i));
        __m256i neg = _mm256_cmpgt_epi64(_mm256_setzero_si256(), v);
        // two's-complement |v| read as unsigned (INT64_MIN maps to 2^63)
        __m256i a = _mm256_sub_epi64(_mm256_xor_si256(v, neg), neg);
        // unsigned max via biased signed compare
        __m256i gt = _mm256_cmpgt_epi64(_mm256_xor_si256(a, top), _mm256_xor_si256(acc, top));
        acc = _mm256_blendv_epi8(acc, a, gt);
    }
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    std::uint64_t m = 0;
    for (std::uint64_t lane : lanes)
        if (lane > m) m = lane;
    for (; i < len; ++i) {
        std::uint64_t a = c[i] < 0 ? -static_cast<std::uint64_t>(c[i])
                                   : static_cast<std::uint64_t>(c[i]);
        if (a > m) m = a;
    }
    return m;
}

} // namespace

namespace detail {

const Ops* avx2_ops_impl() {
    static const Ops ops{"avx2", avx2_mul, avx2_div, avx2_max_abs};
    return &ops;
}

} // namespace detail

} // namespace ucp::kernels

#else

namespace ucp::kernels::detail {

const Ops* avx2_ops_impl() { return nullptr; }

} // namespace ucp::kernels::detail

#endif
