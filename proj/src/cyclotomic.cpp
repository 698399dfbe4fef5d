#include "ucp/cyclotomic.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "ucp/arith.hpp"
#include "ucp/errors.hpp"
#include "ucp/factorize.hpp"
#include "ucp/series.hpp"

namespace ucp {

namespace {

std::shared_mutex g_classical_mutex;
std::unordered_map<std::uint64_t, IntPoly> g_classical_cache;
std::shared_mutex g_unitary_mutex;
std::unordered_map<std::uint64_t, IntPoly> g_unitary_cache;

// Run the multiply/divide binomial passes interleaved (largest first) so the
// running series stays close to a genuine partial product.
IntPoly run_passes(std::vector<std::uint64_t> muls, std::vector<std::uint64_t> divs,
                   std::size_t length) {
    std::sort(muls.rbegin(), muls.rend());
    std::sort(divs.rbegin(), divs.rend());
    BinomialSeries s(length);
    std::size_t i = 0, j = 0;
    while (i < muls.size() || j < divs.size()) {
        if (i < muls.size()) s.mul_binomial(muls[i++]);
        if (j < divs.size()) s.div_binomial(divs[j++]);
    }
    return s.to_poly();
}

// Phi_n by Eq-style Mobius product over divisors, no caching.
IntPoly build_classical(std::uint64_t n, const Factorization& f) {
    if (n == 1) return IntPoly::binomial(1, -1);
    std::vector<std::uint64_t> muls, divs;
    for (std::uint64_t t : factorize(f.kernel()).divisors()) {
        // d = n/t, exponent mu(t); t runs over squarefree divisors
        int mu = omega(t) % 2 == 0 ? 1 : -1;
        (mu > 0 ? muls : divs).push_back(n / t);
    }
    return run_passes(std::move(muls), std::move(divs), euler_phi(n) + 1);
}

// Phi*_n by the unitary Mobius product, no caching.
IntPoly build_unitary_mobius(std::uint64_t n, const Factorization& f) {
    std::vector<std::uint64_t> muls, divs;
    for (std::uint64_t d : f.unitary_divisors()) {
        int mu = unitary_mobius(n / d);
        (mu > 0 ? muls : divs).push_back(d);
    }
    std::uint64_t deg = 1;
    for (const auto& pp : f.pairs()) deg *= pp.value() - 1;
    return run_passes(std::move(muls), std::move(divs), deg + 1);
}

IntPoly build_unitary(std::uint64_t n, UnitaryAlgorithm algorithm);

IntPoly cached_classical(std::uint64_t n) {
    {
        std::shared_lock lock(g_classical_mutex);
        auto it = g_classical_cache.find(n);
        if (it != g_classical_cache.end()) return it->second;
    }
    IntPoly p = build_classical(n, factorize(n));
    {
        std::unique_lock lock(g_classical_mutex);
        g_classical_cache.emplace(n, p);
    }
    return p;
}

IntPoly build_unitary(std::uint64_t n, UnitaryAlgorithm algorithm) {
    Factorization f = factorize(n);
    switch (algorithm) {
    case UnitaryAlgorithm::mobius_product:
        return build_unitary_mobius(n, f);
    case UnitaryAlgorithm::cyclo_factors: {
        // product of Phi_d over the divisors with full kernel
        std::uint64_t k = f.kernel();
        IntPoly result = IntPoly::one();
        for (std::uint64_t t : divisors(n / k)) result *= cached_classical(k * t);
        return result;
    }
    case UnitaryAlgorithm::kernel_reduction: {
        std::uint64_t k = f.kernel();
        IntPoly base = cached_classical(k);
        IntPoly result = IntPoly::one();
        for (std::uint64_t t : divisors(n / k)) result *= base.substitute_power(t);
        return result;
    }
    case UnitaryAlgorithm::quotient_tower: {
        IntPoly result = IntPoly::binomial(1, -1); // Phi*_1
        for (const auto& pp : f.pairs()) {
            std::uint64_t q = pp.value();
            result = exact_div(result.substitute_power(q), result);
        }
        return result;
    }
    }
    throw std::logic_error("unknown algorithm");
}

[[noreturn]] void suite_fail(const std::string& what, std::uint64_t n) {
    std::ostringstream os;
    os << what << " (witness n = " << n << ")";
    throw VerificationError(os.str());
}

} // namespace

IntPoly cyclotomic(std::uint64_t n) {
    if (n == 0) throw std::domain_error("cyclotomic: n must be positive");
    return cached_classical(n);
}

IntPoly unitary_cyclotomic(std::uint64_t n) {
    if (n == 0) throw std::domain_error("unitary_cyclotomic: n must be positive");
    {
        std::shared_lock lock(g_unitary_mutex);
        auto it = g_unitary_cache.find(n);
        if (it != g_unitary_cache.end()) return it->second;
    }
    IntPoly p = build_unitary(n, UnitaryAlgorithm::mobius_product);
    {
        std::unique_lock lock(g_unitary_mutex);
        g_unitary_cache.emplace(n, p);
    }
    return p;
}

IntPoly unitary_cyclotomic(std::uint64_t n, UnitaryAlgorithm algorithm) {
    if (n == 0) throw std::domain_error("unitary_cyclotomic: n must be positive");
    return build_unitary(n, algorithm);
}

mpz_class unitary_coeff(std::uint64_t n, std::uint64_t j) {
    if (n == 0) throw std::domain_error("unitary_coeff: n must be positive");
    if (j > unitary_phi(n)) return mpz_class(0);
    return unitary_cyclotomic(n).coeff(static_cast<std::size_t>(j));
}

mpz_class value_at_one(std::uint64_t n, CycloKind kind) {
    if (n == 0) throw std::domain_error("value_at_one: n must be positive");
    if (n == 1) return mpz_class(0);
    Factorization f = factorize(n);
    if (f.is_prime_power()) {
        if (kind == CycloKind::classical) return mpz_class(static_cast<unsigned long>(f.pairs()[0].prime));
        return mpz_class(static_cast<unsigned long>(n));
    }
    return mpz_class(1);
}

mpz_class value_at_minus_one(std::uint64_t n, CycloKind kind) {
    if (n == 0) throw std::domain_error("value_at_minus_one: n must be positive");
    if (n == 1) return mpz_class(-2);
    Factorization f = factorize(n);
    const auto& pp = f.pairs();
    if (kind == CycloKind::classical) {
        if (n == 2) return mpz_class(0);
        // n = 2 p^e (p any prime, e >= 1) evaluates to p; includes n = 2^{e+1}
        if (pp.size() == 1 && pp[0].prime == 2) return mpz_class(2);
        if (pp.size() == 2 && pp[0].prime == 2 && pp[0].exponent == 1)
            return mpz_class(static_cast<unsigned long>(pp[1].prime));
        return mpz_class(1);
    }
    // unitary: 0 at n = 2^a; p^b at n = 2^a p^b; else 1
    if (pp.size() == 1 && pp[0].prime == 2) return mpz_class(0);
    if (pp.size() == 2 && pp[0].prime == 2)
        return mpz_class(static_cast<unsigned long>(pp[1].value()));
    return mpz_class(1);
}

IdentitySuiteReport identity_suite(std::uint64_t n_max) {
    if (n_max < 2) throw std::domain_error("identity_suite: n_max must be at least 2");
    IdentitySuiteReport report{n_max, 0};
    for (std::uint64_t n = 1; n <= n_max; ++n) {
        Factorization f = factorize(n);
        IntPoly phi_star = build_unitary_mobius(n, f);

        if (phi_star.degree() != static_cast<long>(unitary_phi(n)))
            suite_fail("deg Phi*_n != phi*(n)", n);
        if (!phi_star.is_monic()) suite_fail("Phi*_n not monic", n);
        ++report.checks;

        // defining product: x^n - 1 = prod of Phi*_d over d || n
        IntPoly prod = IntPoly::one();
        for (std::uint64_t d : f.unitary_divisors())
            prod *= d == n ? phi_star : build_unitary_mobius(d, factorize(d));
        if (prod != IntPoly::binomial(n, -1)) suite_fail("x^n - 1 product identity failed", n);
        ++report.checks;

        // self-reciprocal for n > 1
        if (n > 1) {
            if (!phi_star.is_self_reciprocal()) suite_fail("Phi*_n not self-reciprocal", n);
            ++report.checks;
        }

        // Phi*_{2n}(x) = Phi*_n(-x) for odd n > 1
        if (n > 1 && n % 2 == 1) {
            IntPoly doubled = build_unitary_mobius(2 * n, factorize(2 * n));
            std::vector<mpz_class> neg = phi_star.coeffs();
            for (std::size_t i = 1; i < neg.size(); i += 2) neg[i] = -neg[i];
            if (doubled != IntPoly(std::move(neg))) suite_fail("Phi*_{2n}(x) != Phi*_n(-x)", n);
            ++report.checks;
        }
    }
    return report;
}

std::uint64_t check_prime_power_identities(const std::vector<std::uint64_t>& primes,
                                           unsigned k_max, std::uint64_t m_max) {
    std::uint64_t checks = 0;
    for (std::uint64_t p : primes) {
        for (std::uint64_t m = 1; m <= m_max; ++m) {
            if (m % p == 0) continue;
            IntPoly phi_m = build_unitary_mobius(m, factorize(m));
            IntPoly phi_pm; // built lazily for the tower identity
            std::uint64_t q = 1;
            for (unsigned k = 1; k <= k_max; ++k) {
                q *= p;
                IntPoly lhs = build_unitary_mobius(q * m, factorize(q * m));

                // quotient identity: Phi*_{p^k m} * Phi*_m = Phi*_m(x^{p^k})
                if (lhs * phi_m != phi_m.substitute_power(q)) {
                    std::ostringstream os;
                    os << "Phi*_{p^k m} quotient identity failed (p=" << p << ", k=" << k
                       << ", m=" << m << ")";
                    throw VerificationError(os.str());
                }
                ++checks;

                // tower identity: product of Phi*_{pm}(x^{p^j}) over 0 <= j < k
                if (k == 1) phi_pm = lhs;
                IntPoly rhs = phi_pm;
                std::uint64_t pj = 1;
                for (unsigned j = 1; j < k; ++j) {
                    pj *= p;
                    rhs *= phi_pm.substitute_power(pj);
                }
                if (rhs != lhs) {
                    std::ostringstream os;
                    os << "Phi*_{p^k m} power-tower identity failed (p=" << p << ", k=" << k
                       << ", m=" << m << ")";
                    throw VerificationError(os.str());
                }
                ++checks;
            }
        }
    }
    return checks;
}

void clear_cyclo_caches() {
    {
        std::unique_lock lock(g_classical_mutex);
        g_classical_cache.clear();
    }
    {
        std::unique_lock lock(g_unitary_mutex);
        g_unitary_cache.clear();
    }
}

} // namespace ucp
