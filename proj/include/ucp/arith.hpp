#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <utility>

#include <gmpxx.h>

#include "ucp/factorize.hpp"

namespace ucp {

int mobius(std::uint64_t n);         // classical mu
int unitary_mobius(std::uint64_t n); // mu*(n) = (-1)^omega(n)

std::uint64_t euler_phi(std::uint64_t n);
std::uint64_t unitary_phi(std::uint64_t n); // phi*(n) = prod (p^a - 1)

// (phi(n), phi*(n))
std::pair<std::uint64_t, std::uint64_t> totients(std::uint64_t n);

std::uint64_t unitary_sigma(std::uint64_t n); // sigma*(n) = prod (p^a + 1)

// (J_s(n), J*_s(n)); rational for negative s.
std::pair<mpq_class, mpq_class> jordan(int s, std::uint64_t n);

// Exact value of the form sum_p a_p * log p, stored as the factored integer
// prod p^{a_p}. Sums of von Mangoldt values live here so identity checks can
// compare products of prime powers instead of floating logs.
class LogInt {
public:
    LogInt() = default;

    static LogInt log_of(std::uint64_t n); // log n, n >= 1
    static LogInt multiple_of_log(std::uint64_t multiplier, std::uint64_t p);

    bool is_zero() const { return terms_.empty(); }
    double to_double() const;
    mpz_class as_product() const; // prod p^{a_p}

    LogInt& operator+=(const LogInt& other);
    friend LogInt operator+(LogInt a, const LogInt& b) { return a += b; }
    friend bool operator==(const LogInt&, const LogInt&) = default;

    const std::map<std::uint64_t, std::uint64_t>& terms() const { return terms_; }

private:
    std::map<std::uint64_t, std::uint64_t> terms_; // base -> multiplier
};

// (Lambda(n), Lambda*(n)): log p resp. a*log p at n = p^a, zero elsewhere.
std::pair<LogInt, LogInt> mangoldt(std::uint64_t n);

// A total arithmetic function with exact rational values.
struct ArithFn {
    std::function<mpq_class(std::uint64_t)> eval;
    bool multiplicative = false;

    mpq_class operator()(std::uint64_t n) const { return eval(n); }
};

ArithFn arith_one();            // constant 1
ArithFn arith_epsilon();        // 1 at n=1, else 0
ArithFn arith_id(int s = 1);    // n^s (rational for s < 0)
ArithFn arith_mobius();
ArithFn arith_unitary_mobius();
ArithFn arith_euler_phi();

enum class ConvolutionKind {
    dirichlet, // sum over d | n
    unitary,   // sum over d || n
    kernel     // sum over d | n with kappa(d) = kappa(n)
};

mpq_class convolve(ConvolutionKind kind, const ArithFn& f, const ArithFn& g, std::uint64_t n);

// g*(n) = sum_{d|n, kappa(d)=kappa(n)} g(d); preserves multiplicativity.
ArithFn kernel_transform(ArithFn g);
// g(n) = sum_{d|n, kappa(d)=kappa(n)} g*(d) mu(n/d); inverse of the above.
ArithFn kernel_inverse(ArithFn g_star);

} // namespace ucp
