#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace ucp {

// Dense univariate polynomial over Z, ascending coefficients, canonical form
// (no trailing zero coefficient; the zero polynomial has no coefficients).
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<mpz_class> ascending_coeffs);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly one();
    static IntPoly constant(mpz_class v);
    static IntPoly monomial(std::size_t degree, mpz_class lead = mpz_class(1));
    static IntPoly binomial(std::size_t d, int sign); // x^d + sign
    static IntPoly from_int64(const std::vector<std::int64_t>& ascending);

    bool is_zero() const { return coeffs_.empty(); }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    const std::vector<mpz_class>& coeffs() const { return coeffs_; }
    const mpz_class& coeff(std::size_t j) const; // 0 beyond the degree
    bool is_monic() const;

    IntPoly operator-() const;
    friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    IntPoly& operator+=(const IntPoly& b) { return *this = *this + b; }
    IntPoly& operator-=(const IntPoly& b) { return *this = *this - b; }
    IntPoly& operator*=(const IntPoly& b) { return *this = *this * b; }
    friend bool operator==(const IntPoly&, const IntPoly&) = default;

    IntPoly substitute_power(std::size_t d) const; // f(x^d)

    mpz_class eval(const mpz_class& t) const;
    std::complex<double> eval(std::complex<double> z) const;

    mpz_class height() const; // max |coefficient|, 0 for the zero polynomial
    bool is_self_reciprocal() const;

private:
    std::vector<mpz_class> coeffs_;
    void canonicalize();
};

// Exact quotient a / b; throws DivisibilityError (with the remainder's
// degree) when b does not divide a, and std::domain_error when b = 0.
IntPoly exact_div(const IntPoly& a, const IntPoly& b);
bool divides(const IntPoly& b, const IntPoly& a); // decision form of the above

enum class PolyStyle {
    expr,      // descending powers: "x^2 - x + 1"
    coeff_list // ascending JSON array: "[1, -1, 1]"
};

// Grammar (expr style):
//   poly := ('+'|'-')? term (('+'|'-') term)*
//   term := INT ('*'? 'x' ('^' UINT)?)? | 'x' ('^' UINT)?
// coeff_list inputs (leading '[') are accepted too, so both format styles
// round-trip. Throws PolyParseError with the byte offset.
IntPoly parse_poly(std::string_view text);
std::string format_poly(const IntPoly& p, PolyStyle style = PolyStyle::expr);

} // namespace ucp
