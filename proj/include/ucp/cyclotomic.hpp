#pragma once

#include <cstdint>
#include <vector>

#include "ucp/poly.hpp"

namespace ucp {

enum class UnitaryAlgorithm {
    mobius_product,   // binomial passes over unitary divisors (default)
    cyclo_factors,    // product of Phi_d over d | n with kappa(d) = kappa(n)
    kernel_reduction, // product of Phi_kappa(x^d) over d | n/kappa(n)
    quotient_tower    // repeated Phi*_{q m}(x) = Phi*_m(x^q) / Phi*_m(x)
};

enum class CycloKind { classical, unitary };

// Phi_n, monic of degree phi(n). Phi_1 = x - 1. Cached.
IntPoly cyclotomic(std::uint64_t n);

// Phi*_n, monic of degree phi*(n). Phi*_1 = x - 1. The one-argument form is
// cached; selecting an algorithm recomputes from scratch (all four agree).
IntPoly unitary_cyclotomic(std::uint64_t n);
IntPoly unitary_cyclotomic(std::uint64_t n, UnitaryAlgorithm algorithm);

// a*_n(j): coefficient of x^j in Phi*_n (zero beyond the degree).
mpz_class unitary_coeff(std::uint64_t n, std::uint64_t j);

// Closed forms for Phi_n(+-1) and Phi*_n(+-1).
mpz_class value_at_one(std::uint64_t n, CycloKind kind);
mpz_class value_at_minus_one(std::uint64_t n, CycloKind kind);

struct IdentitySuiteReport {
    std::uint64_t n_max = 0;
    std::uint64_t checks = 0;
};

// Checks, for every n <= n_max: the defining product x^n - 1 = prod Phi*_d
// over d || n, degree/monicity, self-reciprocity (n > 1), and
// Phi*_{2n}(x) = Phi*_n(-x) for odd n > 1. Throws VerificationError with a
// witness on the first counterexample.
IdentitySuiteReport identity_suite(std::uint64_t n_max);

// Checks Phi*_{p^k m}(x) = Phi*_m(x^{p^k}) / Phi*_m(x) and
// Phi*_{p^k m}(x) = prod_{j<k} Phi*_{p m}(x^{p^j}) for p in `primes`,
// 1 <= k <= k_max, m <= m_max with p not dividing m. Returns the number of
// identities checked; throws VerificationError on a counterexample.
std::uint64_t check_prime_power_identities(const std::vector<std::uint64_t>& primes,
                                           unsigned k_max, std::uint64_t m_max);

void clear_cyclo_caches();

} // namespace ucp
