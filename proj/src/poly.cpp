#include "ucp/poly.hpp"

#include <algorithm>
#include <stdexcept>

#include "ucp/errors.hpp"

namespace ucp {

namespace {

const mpz_class k_zero(0);

constexpr std::size_t kKaratsubaThreshold = 48;

bool fits_int64(const mpz_class& v) { return v.fits_slong_p(); }

std::uint64_t abs_u64(std::int64_t v) {
    return v < 0 ? -static_cast<std::uint64_t>(v) : static_cast<std::uint64_t>(v);
}

// Schoolbook product in int64 when a conservative bound rules out overflow.
bool try_mul_int64(const std::vector<mpz_class>& a, const std::vector<mpz_class>& b,
                   std::vector<mpz_class>& out) {
    std::vector<std::int64_t> av(a.size()), bv(b.size());
    std::uint64_t amax = 0, bmax = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!fits_int64(a[i])) return false;
        av[i] = mpz_get_si(a[i].get_mpz_t());
        amax = std::max(amax, abs_u64(av[i]));
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (!fits_int64(b[i])) return false;
        bv[i] = mpz_get_si(b[i].get_mpz_t());
        bmax = std::max(bmax, abs_u64(bv[i]));
    }
    // canonical nonzero inputs, so amax, bmax >= 1
    std::uint64_t terms = std::min(a.size(), b.size());
    // amax*bmax*terms < 2^62 keeps every accumulated sum representable
    if (amax > (std::uint64_t(1) << 62) / bmax) return false;
    if (amax * bmax > (std::uint64_t(1) << 62) / terms) return false;
    std::vector<std::int64_t> cv(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < av.size(); ++i) {
        std::int64_t ai = av[i];
        if (ai == 0) continue;
        for (std::size_t j = 0; j < bv.size(); ++j) cv[i + j] += ai * bv[j];
    }
    out.assign(cv.begin(), cv.end());
    return true;
}

std::vector<mpz_class> mul_schoolbook(const std::vector<mpz_class>& a,
                                      const std::vector<mpz_class>& b) {
    std::vector<mpz_class> c(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) {
            if (b[j] == 0) continue;
            mpz_addmul(c[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    }
    return c;
}

void add_shifted(std::vector<mpz_class>& acc, const std::vector<mpz_class>& v,
                 std::size_t shift) {
    if (acc.size() < v.size() + shift) acc.resize(v.size() + shift, mpz_class(0));
    for (std::size_t i = 0; i < v.size(); ++i) acc[i + shift] += v[i];
}

std::vector<mpz_class> mul_karatsuba(const std::vector<mpz_class>& a,
                                     const std::vector<mpz_class>& b) {
    if (std::min(a.size(), b.size()) <= kKaratsubaThreshold) return mul_schoolbook(a, b);
    std::size_t half = std::max(a.size(), b.size()) / 2;
    auto split = [half](const std::vector<mpz_class>& v) {
        std::size_t cut = std::min(half, v.size());
        return std::pair(std::vector<mpz_class>(v.begin(), v.begin() + cut),
                         std::vector<mpz_class>(v.begin() + cut, v.end()));
    };
    auto [a0, a1] = split(a);
    auto [b0, b1] = split(b);
    auto sum = [](const std::vector<mpz_class>& x, const std::vector<mpz_class>& y) {
        std::vector<mpz_class> s(std::max(x.size(), y.size()), mpz_class(0));
        for (std::size_t i = 0; i < x.size(); ++i) s[i] += x[i];
        for (std::size_t i = 0; i < y.size(); ++i) s[i] += y[i];
        return s;
    };
    std::vector<mpz_class> low, high, mid;
    if (!a0.empty() && !b0.empty()) low = mul_karatsuba(a0, b0);
    if (!a1.empty() && !b1.empty()) high = mul_karatsuba(a1, b1);
    std::vector<mpz_class> asum = sum(a0, a1), bsum = sum(b0, b1);
    if (!asum.empty() && !bsum.empty()) mid = mul_karatsuba(asum, bsum);
    for (std::size_t i = 0; i < low.size(); ++i) mid[i] -= low[i];
    for (std::size_t i = 0; i < high.size(); ++i) mid[i] -= high[i];

    std::vector<mpz_class> c;
    add_shifted(c, low, 0);
    add_shifted(c, mid, half);
    add_shifted(c, high, 2 * half);
    return c;
}

} // namespace

IntPoly::IntPoly(std::vector<mpz_class> ascending_coeffs) : coeffs_(std::move(ascending_coeffs)) {
    canonicalize();
}

void IntPoly::canonicalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly IntPoly::one() { return constant(mpz_class(1)); }

IntPoly IntPoly::constant(mpz_class v) {
    IntPoly p;
    if (v != 0) p.coeffs_.push_back(std::move(v));
    return p;
}

IntPoly IntPoly::monomial(std::size_t degree, mpz_class lead) {
    IntPoly p;
    if (lead != 0) {
        p.coeffs_.assign(degree + 1, mpz_class(0));
        p.coeffs_[degree] = std::move(lead);
    }
    return p;
}

IntPoly IntPoly::binomial(std::size_t d, int sign) {
    IntPoly p;
    p.coeffs_.assign(d + 1, mpz_class(0));
    p.coeffs_[0] = sign;
    p.coeffs_[d] += 1; // d = 0 collapses to the constant sign+1
    p.canonicalize();
    return p;
}

IntPoly IntPoly::from_int64(const std::vector<std::int64_t>& ascending) {
    std::vector<mpz_class> c(ascending.size());
    for (std::size_t i = 0; i < ascending.size(); ++i)
        c[i] = mpz_class(static_cast<long>(ascending[i]));
    return IntPoly(std::move(c));
}

const mpz_class& IntPoly::coeff(std::size_t j) const {
    return j < coeffs_.size() ? coeffs_[j] : k_zero;
}

bool IntPoly::is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& v : r.coeffs_) v = -v;
    return r;
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] += b.coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
    std::vector<mpz_class> c(std::max(a.coeffs_.size(), b.coeffs_.size()), mpz_class(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) c[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) c[i] -= b.coeffs_[i];
    return IntPoly(std::move(c));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
    if (a.is_zero() || b.is_zero()) return IntPoly();
    std::vector<mpz_class> c;
    if (!try_mul_int64(a.coeffs_, b.coeffs_, c)) {
        c = std::min(a.coeffs_.size(), b.coeffs_.size()) <= kKaratsubaThreshold
                ? mul_schoolbook(a.coeffs_, b.coeffs_)
                : mul_karatsuba(a.coeffs_, b.coeffs_);
    }
    return IntPoly(std::move(c));
}

IntPoly IntPoly::substitute_power(std::size_t d) const {
    if (d == 0) throw std::domain_error("substitute_power: d must be positive");
    if (is_zero() || d == 1) return *this;
    std::vector<mpz_class> c((coeffs_.size() - 1) * d + 1, mpz_class(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) c[i * d] = coeffs_[i];
    return IntPoly(std::move(c));
}

mpz_class IntPoly::eval(const mpz_class& t) const {
    mpz_class r(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) {
        r *= t;
        r += coeffs_[i];
    }
    return r;
}

std::complex<double> IntPoly::eval(std::complex<double> z) const {
    std::complex<double> r(0.0, 0.0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) r = r * z + coeffs_[i].get_d();
    return r;
}

mpz_class IntPoly::height() const {
    mpz_class h(0);
    for (const auto& v : coeffs_)
        if (mpz_cmpabs(v.get_mpz_t(), h.get_mpz_t()) > 0) h = abs(v);
    return h;
}

bool IntPoly::is_self_reciprocal() const {
    for (std::size_t i = 0, j = coeffs_.size(); i < j--; ++i)
        if (coeffs_[i] != coeffs_[j]) return false;
    return true;
}

IntPoly exact_div(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
    if (a.is_zero()) return IntPoly();
    if (a.degree() < b.degree())
        throw DivisibilityError("exact_div: divisor degree exceeds dividend", a.degree());

    std::vector<mpz_class> rem = a.coeffs();
    const auto& bc = b.coeffs();
    const mpz_class& lead = bc.back();
    std::size_t qlen = rem.size() - bc.size() + 1;
    std::vector<mpz_class> q(qlen, mpz_class(0));
    mpz_class tmp;
    for (std::size_t k = qlen; k-- > 0;) {
        mpz_class& top = rem[k + bc.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) {
            long deg = static_cast<long>(k + bc.size() - 1);
            throw DivisibilityError("exact_div: inexact division", deg);
        }
        mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lead.get_mpz_t());
        for (std::size_t i = 0; i < bc.size(); ++i)
            mpz_submul(rem[k + i].get_mpz_t(), q[k].get_mpz_t(), bc[i].get_mpz_t());
    }
    for (std::size_t i = rem.size(); i-- > 0;)
        if (rem[i] != 0)
            throw DivisibilityError("exact_div: nonzero remainder", static_cast<long>(i));
    return IntPoly(std::move(q));
}

bool divides(const IntPoly& b, const IntPoly& a) {
    if (b.is_zero()) return a.is_zero();
    if (a.is_zero()) return true;
    if (a.degree() < b.degree()) return false;
    try {
        exact_div(a, b);
        return true;
    } catch (const DivisibilityError&) {
        return false;
    }
}

} // namespace ucp
