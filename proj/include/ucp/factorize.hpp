#pragma once

#include <cstdint>
#include <vector>

namespace ucp {

struct PrimePower {
    std::uint64_t prime;
    unsigned exponent;

    std::uint64_t value() const; // prime^exponent
    friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

// Canonical prime-power factorization, primes strictly ascending.
// The empty factorization encodes n = 1.
class Factorization {
public:
    Factorization() : n_(1) {}
    Factorization(std::uint64_t n, std::vector<PrimePower> pairs)
        : n_(n), pairs_(std::move(pairs)) {}

    std::uint64_t value() const { return n_; }
    const std::vector<PrimePower>& pairs() const { return pairs_; }
    unsigned omega() const { return static_cast<unsigned>(pairs_.size()); }

    std::uint64_t kernel() const; // product of distinct primes
    bool is_squarefree() const;
    bool is_prime_power() const { return pairs_.size() == 1; }

    std::vector<std::uint64_t> divisors() const;         // ascending
    std::vector<std::uint64_t> unitary_divisors() const; // ascending

private:
    std::uint64_t n_;
    std::vector<PrimePower> pairs_;
};

// Trial division up to 1e6, then deterministic Miller-Rabin with
// Pollard/Brent splitting of the remaining cofactor. Results are memoized.
// Throws std::domain_error for n = 0.
Factorization factorize(std::uint64_t n);

bool is_prime(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);
std::vector<std::uint64_t> unitary_divisors(std::uint64_t n);

std::uint64_t kernel(std::uint64_t n);
unsigned omega(std::uint64_t n);

// (j,n)_* = max{d : d | j, d || n}.
std::uint64_t unitary_gcd(std::uint64_t j, std::uint64_t n);
std::uint64_t unitary_gcd(std::uint64_t j, const Factorization& n);

// Drops all memoized factorizations (test hook; safe under concurrent use).
void clear_factorization_cache();

} // namespace ucp
