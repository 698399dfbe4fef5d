#include "ucp/kronecker.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ucp/arith.hpp"
#include "ucp/cyclotomic.hpp"
#include "ucp/errors.hpp"
#include "ucp/factorize.hpp"
#include "ucp/series.hpp"

namespace ucp {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what) {
    std::uint64_t r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::domain_error(std::string(what) + ": product overflows 64 bits");
    return r;
}

} // namespace

Rho::Rho(std::vector<std::uint64_t> entries) : entries_(std::move(entries)) {
    std::sort(entries_.begin(), entries_.end());
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i] <= 1) throw std::domain_error("Rho: entries must exceed 1");
        if (i && entries_[i] == entries_[i - 1])
            throw std::domain_error("Rho: entries must be distinct");
    }
    for (std::size_t i = 0; i < entries_.size(); ++i)
        for (std::size_t j = i + 1; j < entries_.size(); ++j)
            if (std::gcd(entries_[i], entries_[j]) != 1)
                throw std::domain_error("Rho: entries must be pairwise coprime");
    (void)product(); // reject products beyond 64 bits up front
}

std::uint64_t Rho::product() const {
    std::uint64_t n0 = 1;
    for (std::uint64_t r : entries_) n0 = checked_mul(n0, r, "Rho");
    return n0;
}

IntPoly q_poly(const Rho& rho) {
    const auto& rs = rho.entries();
    if (rs.size() >= 32) throw std::domain_error("q_poly: too many rho entries");
    std::uint64_t n0 = rho.product();
    std::uint64_t degree = 1;
    for (std::uint64_t r : rs) degree = checked_mul(degree, r - 1, "q_poly degree");

    // n_I = n_0 / prod_{i in I} r_i; even |I| multiplies, odd |I| divides
    std::vector<std::uint64_t> muls, divs;
    for (std::uint32_t mask = 0; mask < (1u << rs.size()); ++mask) {
        std::uint64_t d = n0;
        for (std::size_t i = 0; i < rs.size(); ++i)
            if (mask & (1u << i)) d /= rs[i];
        (__builtin_popcount(mask) % 2 == 0 ? muls : divs).push_back(d);
    }
    std::sort(muls.rbegin(), muls.rend());
    std::sort(divs.rbegin(), divs.rend());

    BinomialSeries s(static_cast<std::size_t>(degree) + 1);
    std::size_t i = 0, j = 0;
    while (i < muls.size() || j < divs.size()) {
        if (i < muls.size()) s.mul_binomial(muls[i++]);
        if (j < divs.size()) s.div_binomial(divs[j++]);
    }
    return s.to_poly();
}

std::vector<std::uint64_t> d_rho(const Rho& rho) {
    std::uint64_t n0 = rho.product();
    std::vector<std::uint64_t> out;
    for (std::uint64_t d : divisors(n0)) {
        bool ok = true;
        for (std::uint64_t r : rho.entries())
            if (std::gcd(d, r) == 1) {
                ok = false;
                break;
            }
        if (ok) out.push_back(d);
    }
    return out;
}

namespace {

// Phi_m(2) via the Mobius product; an integer divisibility filter for trial
// division (Phi_m | f over Z forces Phi_m(2) | f(2)).
mpz_class cyclotomic_at_two(std::uint64_t m) {
    mpz_class num(1), den(1), pw;
    for (std::uint64_t d : divisors(m)) {
        int mu = mobius(m / d);
        if (!mu) continue;
        mpz_ui_pow_ui(pw.get_mpz_t(), 2, static_cast<unsigned long>(d));
        pw -= 1;
        (mu > 0 ? num : den) *= pw;
    }
    mpz_class out;
    mpz_divexact(out.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return out;
}

} // namespace

std::optional<CyclotomicFactors> cyclotomic_factorization(const IntPoly& f) {
    if (f.is_zero()) throw std::domain_error("cyclotomic_factorization: zero polynomial");
    if (f.degree() == 0) {
        mpz_class c = f.coeff(0);
        if (c == 1 || c == -1) return CyclotomicFactors{};
        return std::nullopt;
    }
    if (!f.is_monic()) return std::nullopt;

    CyclotomicFactors out;
    std::size_t s = 0;
    while (f.coeff(s) == 0) ++s;
    out.power_of_x = s;

    std::vector<mpz_class> shifted(f.coeffs().begin() + static_cast<long>(s), f.coeffs().end());
    IntPoly rem(std::move(shifted));
    mpz_class rem_at_two = rem.eval(mpz_class(2));

    const std::uint64_t deg = static_cast<std::uint64_t>(f.degree());
    const std::uint64_t m_bound = 2 * deg * deg; // phi(m) >= sqrt(m/2)
    for (std::uint64_t m = 1; m <= m_bound && rem.degree() > 0; ++m) {
        if (euler_phi(m) > static_cast<std::uint64_t>(rem.degree())) continue;
        mpz_class at_two = cyclotomic_at_two(m);
        if (rem_at_two != 0 &&
            !mpz_divisible_p(rem_at_two.get_mpz_t(), at_two.get_mpz_t()))
            continue;
        IntPoly phi = cyclotomic(m);
        unsigned mult = 0;
        for (;;) {
            try {
                rem = exact_div(rem, phi);
                ++mult;
                if (rem_at_two != 0)
                    mpz_divexact(rem_at_two.get_mpz_t(), rem_at_two.get_mpz_t(),
                                 at_two.get_mpz_t());
                if (rem_at_two != 0 &&
                    !mpz_divisible_p(rem_at_two.get_mpz_t(), at_two.get_mpz_t()))
                    break;
            } catch (const DivisibilityError&) {
                break;
            }
        }
        if (mult) out.multiplicity[m] = mult;
    }
    if (rem != IntPoly::one()) return std::nullopt;
    return out;
}

namespace {

// One peel run at a fixed truncation. Returns false when the truncation was
// too short to finish; throws domain_error on structural impossibility.
bool peel_at(const IntPoly& f, std::size_t shift, std::uint64_t d_bound, std::size_t truncation,
             std::map<std::uint64_t, long>& terms) {
    terms.clear();
    std::vector<mpz_class> base(f.coeffs().begin() + static_cast<long>(shift), f.coeffs().end());
    BinomialSeries series(IntPoly(std::move(base)), truncation);

    const std::uint64_t degree = static_cast<std::uint64_t>(f.degree()) - shift;
    std::uint64_t last_d = 0;
    for (;;) {
        mpz_class sigma = series.coeff(0);
        if (sigma != 1 && sigma != -1)
            throw std::domain_error("kronecker_expansion: series unit lost (not Kronecker)");
        // find the next exponent
        std::size_t d = truncation;
        for (std::size_t i = last_d + 1; i < truncation; ++i) {
            if (series.coeff(i) != 0) {
                d = i;
                break;
            }
        }
        if (d == truncation) {
            if (sigma == 1) return true; // series is exactly 1
            return false;                // odd sign parity: factors beyond the window
        }
        if (d > d_bound)
            throw std::domain_error("kronecker_expansion: exponent bound exceeded (not Kronecker)");
        // remaining product = sigma * (1 - e_d x^d + O(x^{d+1}))
        mpz_class e_big = -sigma * series.coeff(d);
        if (!e_big.fits_slong_p())
            throw std::domain_error("kronecker_expansion: exponent overflow (not Kronecker)");
        long e = mpz_get_si(e_big.get_mpz_t());
        if (e == 0 || static_cast<std::uint64_t>(e < 0 ? -e : e) > degree + 1)
            throw std::domain_error("kronecker_expansion: exponent too large (not Kronecker)");
        for (long k = 0; k < (e < 0 ? -e : e); ++k) {
            if (e > 0)
                series.div_binomial(d);
            else
                series.mul_binomial(d);
        }
        terms[d] = e;
        last_d = d;
    }
}

KroneckerExpansion expansion_by_peel(const IntPoly& f) {
    KroneckerExpansion out;
    std::size_t s = 0;
    while (f.coeff(s) == 0) ++s;
    out.monomial_order = s;

    std::uint64_t degree = static_cast<std::uint64_t>(f.degree()) - s;
    if (degree == 0) {
        if (f.coeff(s) == 1) return out; // x^s
        throw std::domain_error("kronecker_expansion: constant is not +1");
    }
    std::uint64_t d_bound = 2 * degree * degree;
    std::size_t truncation = std::max<std::size_t>(2 * (degree + 1), 16);
    for (;;) {
        // reconstruction guards against a window that closed early because
        // the unseen factors happened to have an even exponent sum
        if (peel_at(f, s, d_bound, truncation, out.terms) && expansion_reconstructs(f, out))
            return out;
        if (truncation >= d_bound + 2)
            throw std::domain_error("kronecker_expansion: unterminated peel (not Kronecker)");
        truncation = std::min(truncation * 2, static_cast<std::size_t>(d_bound + 2));
    }
}

KroneckerExpansion expansion_by_mobius(const IntPoly& f) {
    auto cf = cyclotomic_factorization(f);
    if (!cf) throw std::domain_error("kronecker_expansion: not a Kronecker polynomial");
    KroneckerExpansion out;
    out.monomial_order = cf->power_of_x;
    // e_d = sum over multiples m of d present in the factorization of a_m mu(m/d)
    for (const auto& [m, mult] : cf->multiplicity) {
        for (std::uint64_t d : divisors(m)) {
            int mu = mobius(m / d);
            if (mu) out.terms[d] += static_cast<long>(mult) * mu;
        }
    }
    std::erase_if(out.terms, [](const auto& kv) { return kv.second == 0; });
    return out;
}

} // namespace

KroneckerExpansion kronecker_expansion(const IntPoly& f, ExpansionMethod method) {
    if (f.is_zero()) throw std::domain_error("kronecker_expansion: zero polynomial");
    if (!f.is_monic()) throw std::domain_error("kronecker_expansion: not monic");
    return method == ExpansionMethod::peel ? expansion_by_peel(f) : expansion_by_mobius(f);
}

bool expansion_reconstructs(const IntPoly& f, const KroneckerExpansion& e) {
    IntPoly lhs = f;
    IntPoly rhs = IntPoly::monomial(e.monomial_order);
    for (const auto& [d, exp] : e.terms) {
        IntPoly binom = IntPoly::binomial(d, -1);
        for (long k = 0; k < (exp < 0 ? -exp : exp); ++k) {
            if (exp < 0)
                lhs *= binom;
            else
                rhs *= binom;
        }
    }
    return lhs == rhs;
}

std::optional<Rho> recover_rho(const IntPoly& f) {
    if (f.is_zero()) throw std::domain_error("recover_rho: zero polynomial");
    if (!f.is_monic() || f.coeff(0) == 0) return std::nullopt;

    KroneckerExpansion expansion;
    try {
        expansion = expansion_by_peel(f);
    } catch (const std::domain_error&) {
        return std::nullopt;
    }

    // greedy: ascending exponents, skip 1, keep those coprime to the picks
    std::vector<std::uint64_t> picked;
    for (const auto& term : expansion.terms) {
        std::uint64_t d = term.first;
        if (d == 1) continue;
        bool coprime = std::all_of(picked.begin(), picked.end(),
                                   [d](std::uint64_t r) { return std::gcd(r, d) == 1; });
        if (coprime) picked.push_back(d);
    }
    try {
        Rho candidate(std::move(picked));
        if (q_poly(candidate) == f) return candidate;
    } catch (const std::domain_error&) {
        // oversized product or the like: not an inclusion-exclusion polynomial
    }
    return std::nullopt;
}

const char* tier_name(Tier t) {
    switch (t) {
    case Tier::unitary_cyclotomic: return "unitary_cyclotomic";
    case Tier::inclusion_exclusion: return "inclusion_exclusion";
    case Tier::kronecker: return "kronecker";
    case Tier::not_kronecker: return "not_kronecker";
    }
    return "?";
}

Rho random_rho(std::mt19937_64& rng, std::uint64_t max_product, std::size_t max_entries) {
    if (max_product < 2) throw std::domain_error("random_rho: max_product must be at least 2");
    std::size_t target = 1 + rng() % max_entries;
    std::vector<std::uint64_t> entries;
    std::uint64_t product = 1;
    for (unsigned attempts = 0; entries.size() < target && attempts < 64; ++attempts) {
        std::uint64_t r = 2 + rng() % 58;
        if (product > max_product / r) continue;
        bool coprime = std::all_of(entries.begin(), entries.end(),
                                   [r](std::uint64_t e) { return std::gcd(e, r) == 1; });
        if (!coprime) continue;
        entries.push_back(r);
        product *= r;
    }
    if (entries.empty()) entries.push_back(2);
    return Rho(std::move(entries));
}

Classification classify(const IntPoly& f) {
    Classification out;
    if (f.is_zero()) return out; // degenerate: not_kronecker
    if (f.degree() == 0) {
        mpz_class c = f.coeff(0);
        if (c == 1 || c == -1) {
            out.tier = Tier::kronecker;
            out.factors = CyclotomicFactors{};
            if (c == 1) out.expansion = KroneckerExpansion{};
        }
        return out;
    }
    if (!f.is_monic()) return out;

    auto cf = cyclotomic_factorization(f);
    if (!cf) return out;
    out.factors = cf;
    out.expansion = expansion_by_mobius(f);
    out.tier = Tier::kronecker;

    if (auto rho = recover_rho(f)) {
        out.rho = rho;
        out.tier = Tier::inclusion_exclusion;
        // unitary iff all entries are prime powers with pairwise-distinct bases
        bool unitary = true;
        for (std::uint64_t r : rho->entries()) {
            Factorization rf = factorize(r);
            if (!rf.is_prime_power()) {
                unitary = false;
                break;
            }
        }
        if (unitary) {
            out.tier = Tier::unitary_cyclotomic;
            out.n = rho->product();
        }
    }
    return out;
}

} // namespace ucp
