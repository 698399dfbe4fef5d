#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <vector>

#include "ucp/poly.hpp"

namespace ucp {

// The defining set of an inclusion-exclusion polynomial: pairwise-coprime
// integers > 1, kept ascending. The empty set is allowed and corresponds to
// Q = x - 1 = Phi*_1.
class Rho {
public:
    Rho() = default;
    explicit Rho(std::vector<std::uint64_t> entries); // sorts; throws std::domain_error

    const std::vector<std::uint64_t>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    std::uint64_t product() const; // n_0

    friend bool operator==(const Rho&, const Rho&) = default;

private:
    std::vector<std::uint64_t> entries_;
};

// Q_rho: alternating binomial product over subset gcd-complements; a monic
// integer polynomial of degree prod (r_i - 1).
IntPoly q_poly(const Rho& rho);

// D_rho = {d : d | n_0 and gcd(d, r_i) > 1 for all i}; the product of Phi_d
// over this set equals Q_rho.
std::vector<std::uint64_t> d_rho(const Rho& rho);

struct CyclotomicFactors {
    std::uint64_t power_of_x = 0;
    std::map<std::uint64_t, unsigned> multiplicity; // m -> e with Phi_m^e
};

// Strips x^s, then divides out cyclotomic factors Phi_m ascending until the
// residual is 1 (m capped at 2*deg(f)^2). nullopt = not a Kronecker
// polynomial. Throws std::domain_error for the zero polynomial.
std::optional<CyclotomicFactors> cyclotomic_factorization(const IntPoly& f);

struct KroneckerExpansion {
    std::uint64_t monomial_order = 0;           // s
    std::map<std::uint64_t, long> terms;        // d -> e_d, all nonzero
};

enum class ExpansionMethod { peel, mobius };

// Unique representation f = x^s * prod (x^d - 1)^{e_d}. peel works on the
// power series around 0; mobius converts the cyclotomic factorization.
// Throws std::domain_error when f is not Kronecker.
KroneckerExpansion kronecker_expansion(const IntPoly& f, ExpansionMethod method);

// Exact reconstruction identity (test oracle for the expansion):
//   f * prod_{e_d < 0} (x^d-1)^{-e_d} == x^s * prod_{e_d > 0} (x^d-1)^{e_d}
bool expansion_reconstructs(const IntPoly& f, const KroneckerExpansion& e);

// Inverse of q_poly: expansion -> greedy coprime selection -> validation by
// exact reconstruction. nullopt = not an inclusion-exclusion polynomial.
std::optional<Rho> recover_rho(const IntPoly& f);

enum class Tier { unitary_cyclotomic, inclusion_exclusion, kronecker, not_kronecker };

struct Classification {
    Tier tier = Tier::not_kronecker;
    std::uint64_t n = 0; // set for unitary_cyclotomic
    std::optional<Rho> rho;
    std::optional<CyclotomicFactors> factors;
    std::optional<KroneckerExpansion> expansion;
};

const char* tier_name(Tier t);

// Tier per the inclusion chain: unitary cyclotomic (rho has prime-power
// entries with distinct base primes) < inclusion-exclusion < Kronecker.
Classification classify(const IntPoly& f);

// Sampling helper for the round-trip verification suites: a nonempty random
// Rho with product <= max_product.
Rho random_rho(std::mt19937_64& rng, std::uint64_t max_product, std::size_t max_entries = 5);

} // namespace ucp
