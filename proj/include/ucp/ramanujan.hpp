#pragma once

#include <complex>
#include <cstdint>

#include <gmpxx.h>

#include "ucp/arith.hpp"

namespace ucp {

mpz_class ramanujan(std::uint64_t n, std::uint64_t k);         // c_n(k)
mpz_class unitary_ramanujan(std::uint64_t n, std::uint64_t k); // c*_n(k)

// Root-of-unity sum oracle (floating point): sum of zeta_n^{jk} over j with
// (j,n) = 1 resp. (j,n)_* = 1.
std::complex<double> ramanujan_numeric(std::uint64_t n, std::uint64_t k, bool unitary);

// sum_{d||n} c*_d(k) = n if n | k else 0. Throws VerificationError with a
// witness on mismatch; returns true otherwise.
bool rho_indicator_check(std::uint64_t n, std::uint64_t k);

// c*_n(k) = sum_{d|n, kappa(d)=kappa(n)} c_d(k) and the Mobius-weighted
// inverse. Throws VerificationError on mismatch; returns true otherwise.
bool kernel_sum_check(std::uint64_t n, std::uint64_t k);

// S*(n) = sum of j in [1,n] with (j,n)_* = 1, which equals n*phi*(n)/2.
// Defined for n >= 2.
mpz_class s_star(std::uint64_t n);

enum class DftMethod { exact_conv, exact_ramanujan, numeric };

// DFT of f((k,n)_*): exact_conv sums d*(mu* x f)(n/d) over d || (m,n)_*;
// exact_ramanujan sums f(d) c*_{n/d}(m) over d || n.
mpq_class dft(const ArithFn& f, std::uint64_t m, std::uint64_t n, DftMethod method);
std::complex<double> dft_numeric(const ArithFn& f, std::uint64_t m, std::uint64_t n);

struct TrigProductReport {
    double sin_product = 0, sin_closed_form = 0;
    double cos_product = 0, cos_closed_form = 0;
    bool sin_ok = false, cos_ok = false;
};

// Sine/cosine products over unitary-coprime residues vs the closed forms
// Phi*_n(1)/2^{phi*} and Phi*_n(-1)/(-4)^{phi*/2}; n = 2^a short-circuits
// the cosine identity to 0 = 0. Needs n >= 2.
TrigProductReport trig_products(std::uint64_t n);

// prod_{j=1..n} (x^{(j,n)_*} - 1)^{cos(2 pi j m / n)} for x > 1;
// equals prod_{d || (m,n)_*} Phi*_{n/d}(x)^d (= Phi*_n(x) at m = 1).
double schramm_unitary(std::uint64_t n, double x, std::uint64_t m = 1);
double schramm_reference(std::uint64_t n, double x, std::uint64_t m = 1);

struct ExpSeriesResult {
    double value = 0;      // exp(-sum_{k<=K} c*_n(k) x^k / k)
    double tail_bound = 0; // geometric bound on the truncated log-sum
};

// Needs n > 1 and |x| < 1.
ExpSeriesResult exp_series(std::uint64_t n, double x, unsigned k_terms);

struct LambdaSeriesResult {
    double raw = 0;    // -sum_{k<=K} c*_n(k)/k
    double cesaro = 0; // average of the partial sums
};

// Slowly and conditionally convergent; smoke-signal quality only. Needs n > 1.
LambdaSeriesResult lambda_series_partial(std::uint64_t n, std::uint64_t k_terms);

} // namespace ucp
