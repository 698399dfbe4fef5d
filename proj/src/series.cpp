#include "ucp/series.hpp"

#include <stdexcept>

#include "ucp/errors.hpp"
#include "ucp/kernels.hpp"

namespace ucp {

namespace {

void wide_mul(std::vector<mpz_class>& c, std::size_t d, int sign) {
    for (std::size_t i = c.size(); i-- > 0;) {
        if (sign > 0) {
            if (i >= d)
                c[i] += c[i - d];
        } else {
            c[i] = (i >= d ? c[i - d] : mpz_class(0)) - c[i];
        }
    }
}

void wide_div(std::vector<mpz_class>& c, std::size_t d, int sign) {
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (sign > 0) {
            if (i >= d)
                c[i] -= c[i - d];
        } else {
            c[i] = (i >= d ? c[i - d] : mpz_class(0)) - c[i];
        }
    }
}

} // namespace

BinomialSeries::BinomialSeries(std::size_t length) {
    if (length == 0) throw std::domain_error("BinomialSeries: length must be positive");
    small_.assign(length, 0);
    small_[0] = 1;
}

BinomialSeries::BinomialSeries(const IntPoly& p, std::size_t length) {
    if (length == 0) throw std::domain_error("BinomialSeries: length must be positive");
    small_.assign(length, 0);
    bool fits = true;
    const auto& pc = p.coeffs();
    for (std::size_t i = 0; i < pc.size() && i < length; ++i) {
        if (!pc[i].fits_slong_p()) {
            fits = false;
            break;
        }
        small_[i] = mpz_get_si(pc[i].get_mpz_t());
    }
    if (!fits) {
        small_.clear();
        big_.assign(length, mpz_class(0));
        for (std::size_t i = 0; i < pc.size() && i < length; ++i) big_[i] = pc[i];
        wide_ = true;
    }
}

void BinomialSeries::promote() {
    big_.resize(small_.size());
    for (std::size_t i = 0; i < small_.size(); ++i)
        big_[i] = mpz_class(static_cast<long>(small_[i]));
    small_.clear();
    small_.shrink_to_fit();
    wide_ = true;
}

void BinomialSeries::mul_binomial(std::uint64_t d, int sign) {
    if (!wide_) {
        if (kernels::active_ops().mul_binomial(small_.data(), small_.size(), d, sign)) return;
        promote();
    }
    wide_mul(big_, d, sign);
}

void BinomialSeries::div_binomial(std::uint64_t d, int sign) {
    if (!wide_) {
        if (kernels::active_ops().div_binomial(small_.data(), small_.size(), d, sign)) return;
        promote();
    }
    wide_div(big_, d, sign);
}

void BinomialSeries::div_binomial_exact(std::uint64_t d, int sign) {
    std::size_t len = length();
    if (d >= len)
        throw DivisibilityError("div_binomial_exact: divisor degree exceeds buffer",
                                static_cast<long>(len) - 1);
    div_binomial(d, sign);
    // exact iff the quotient's top d entries vanish; otherwise the remainder
    // equals sign * (that tail) and its degree is the top nonzero index
    long bad = -1;
    for (std::size_t i = len; i-- > len - d;) {
        bool nonzero = wide_ ? (big_[i] != 0) : (small_[i] != 0);
        if (nonzero) {
            bad = static_cast<long>(i);
            break;
        }
    }
    if (bad >= 0) {
        // roll the division back so the caller sees the original buffer
        mul_binomial(d, sign);
        throw DivisibilityError("div_binomial_exact: inexact division", bad);
    }
}

mpz_class BinomialSeries::coeff(std::size_t i) const {
    if (i >= length()) return mpz_class(0);
    return wide_ ? big_[i] : mpz_class(static_cast<long>(small_[i]));
}

mpz_class BinomialSeries::max_abs() const {
    if (!wide_) {
        std::uint64_t m = kernels::active_ops().max_abs(small_.data(), small_.size());
        mpz_class r;
        mpz_import(r.get_mpz_t(), 1, 1, sizeof(m), 0, 0, &m);
        return r;
    }
    mpz_class h(0);
    for (const auto& v : big_)
        if (mpz_cmpabs(v.get_mpz_t(), h.get_mpz_t()) > 0) h = abs(v);
    return h;
}

IntPoly BinomialSeries::to_poly() const {
    if (wide_) return IntPoly(big_);
    return IntPoly::from_int64(small_);
}

} // namespace ucp
