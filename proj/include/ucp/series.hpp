#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "ucp/poly.hpp"

namespace ucp {

// Fixed-length coefficient buffer for truncated power-series products of
// binomials (x^d + sign). This is the workhorse behind every cyclotomic
// build: all passes are closed at the truncation order, so a polynomial of
// degree length-1 can be assembled without intermediate degree growth.
//
// Coefficients live in an overflow-checked int64 buffer; the first overflow
// promotes the whole buffer to arbitrary precision (never mixed widths).
class BinomialSeries {
public:
    explicit BinomialSeries(std::size_t length); // series = 1
    BinomialSeries(const IntPoly& p, std::size_t length);

    std::size_t length() const { return wide_ ? big_.size() : small_.size(); }
    bool wide() const { return wide_; }

    void mul_binomial(std::uint64_t d, int sign = -1); // *(x^d + sign), truncated
    void div_binomial(std::uint64_t d, int sign = -1); // /(x^d + sign), truncated

    // Full-length exact division: the top d coefficients of the quotient
    // must vanish. Otherwise restores the buffer and throws
    // DivisibilityError carrying the remainder's degree.
    void div_binomial_exact(std::uint64_t d, int sign = -1);

    mpz_class coeff(std::size_t i) const;
    mpz_class max_abs() const;
    IntPoly to_poly() const;

    // Test hook: raw narrow storage (empty once promoted).
    const std::vector<std::int64_t>& narrow_storage() const { return small_; }

private:
    std::vector<std::int64_t> small_;
    std::vector<mpz_class> big_;
    bool wide_ = false;

    void promote();
};

} // namespace ucp
