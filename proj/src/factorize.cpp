#include "ucp/factorize.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

namespace ucp {

namespace {

constexpr std::uint64_t kTrialLimit = 1'000'000;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
    std::uint64_t r = 1;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

// Deterministic for all 64-bit inputs with this base set.
bool miller_rabin(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % p == 0) return n == p;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 0; i + 1 < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// Brent's variant of Pollard rho; n must be composite and odd.
std::uint64_t pollard_brent(std::uint64_t n) {
    if (n % 2 == 0) return 2;
    for (std::uint64_t c = 1;; ++c) {
        std::uint64_t x = 2, y = 2, d = 1;
        std::uint64_t q = 1, ys = 0;
        const unsigned step = 128;
        std::uint64_t r = 1;
        while (d == 1) {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
            for (std::uint64_t k = 0; k < r && d == 1; k += step) {
                ys = y;
                std::uint64_t lim = std::min<std::uint64_t>(step, r - k);
                for (std::uint64_t i = 0; i < lim; ++i) {
                    y = (mulmod(y, y, n) + c) % n;
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                d = std::gcd(q, n);
            }
            r <<= 1;
        }
        if (d == n) {
            // backtrack one step at a time
            d = 1;
            while (d == 1) {
                ys = (mulmod(ys, ys, n) + c) % n;
                d = std::gcd(x > ys ? x - ys : ys - x, n);
            }
        }
        if (d != n) return d;
    }
}

void factor_recursive(std::uint64_t n, std::vector<std::uint64_t>& primes) {
    if (n == 1) return;
    if (miller_rabin(n)) {
        primes.push_back(n);
        return;
    }
    std::uint64_t d = pollard_brent(n);
    factor_recursive(d, primes);
    factor_recursive(n / d, primes);
}

Factorization factorize_uncached(std::uint64_t n) {
    std::vector<PrimePower> pairs;
    std::uint64_t rest = n;
    for (std::uint64_t p = 2; p <= kTrialLimit && p * p <= rest; p += (p == 2 ? 1 : 2)) {
        if (rest % p) continue;
        unsigned e = 0;
        while (rest % p == 0) {
            rest /= p;
            ++e;
        }
        pairs.push_back({p, e});
    }
    if (rest > 1) {
        if (rest <= kTrialLimit * kTrialLimit || miller_rabin(rest)) {
            pairs.push_back({rest, 1});
        } else {
            std::vector<std::uint64_t> primes;
            factor_recursive(rest, primes);
            std::sort(primes.begin(), primes.end());
            for (std::size_t i = 0; i < primes.size();) {
                std::size_t j = i;
                while (j < primes.size() && primes[j] == primes[i]) ++j;
                pairs.push_back({primes[i], static_cast<unsigned>(j - i)});
                i = j;
            }
        }
    }
    return Factorization(n, std::move(pairs));
}

std::shared_mutex g_cache_mutex;
std::unordered_map<std::uint64_t, Factorization> g_cache;

} // namespace

std::uint64_t PrimePower::value() const {
    std::uint64_t v = 1;
    for (unsigned i = 0; i < exponent; ++i) v *= prime;
    return v;
}

std::uint64_t Factorization::kernel() const {
    std::uint64_t k = 1;
    for (const auto& pp : pairs_) k *= pp.prime;
    return k;
}

bool Factorization::is_squarefree() const {
    return std::all_of(pairs_.begin(), pairs_.end(),
                       [](const PrimePower& pp) { return pp.exponent == 1; });
}

std::vector<std::uint64_t> Factorization::divisors() const {
    std::vector<std::uint64_t> divs{1};
    for (const auto& pp : pairs_) {
        std::size_t prev = divs.size();
        std::uint64_t q = 1;
        for (unsigned e = 1; e <= pp.exponent; ++e) {
            q *= pp.prime;
            for (std::size_t i = 0; i < prev; ++i) divs.push_back(divs[i] * q);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

std::vector<std::uint64_t> Factorization::unitary_divisors() const {
    std::vector<std::uint64_t> divs{1};
    for (const auto& pp : pairs_) {
        std::size_t prev = divs.size();
        std::uint64_t q = pp.value();
        for (std::size_t i = 0; i < prev; ++i) divs.push_back(divs[i] * q);
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

Factorization factorize(std::uint64_t n) {
    if (n == 0) throw std::domain_error("factorize: n must be positive");
    {
        std::shared_lock lock(g_cache_mutex);
        auto it = g_cache.find(n);
        if (it != g_cache.end()) return it->second;
    }
    Factorization f = factorize_uncached(n);
    {
        std::unique_lock lock(g_cache_mutex);
        g_cache.emplace(n, f);
    }
    return f;
}

bool is_prime(std::uint64_t n) { return miller_rabin(n); }

std::vector<std::uint64_t> divisors(std::uint64_t n) { return factorize(n).divisors(); }

std::vector<std::uint64_t> unitary_divisors(std::uint64_t n) {
    return factorize(n).unitary_divisors();
}

std::uint64_t kernel(std::uint64_t n) { return factorize(n).kernel(); }

unsigned omega(std::uint64_t n) { return factorize(n).omega(); }

std::uint64_t unitary_gcd(std::uint64_t j, const Factorization& n) {
    if (j == 0) throw std::domain_error("unitary_gcd: j must be positive");
    // (j,n)_* is the product of the full prime powers p^a || n that divide j.
    std::uint64_t g = 1;
    for (const auto& pp : n.pairs()) {
        std::uint64_t q = pp.value();
        if (j % q == 0) g *= q;
    }
    return g;
}

std::uint64_t unitary_gcd(std::uint64_t j, std::uint64_t n) {
    return unitary_gcd(j, factorize(n));
}

void clear_factorization_cache() {
    std::unique_lock lock(g_cache_mutex);
    g_cache.clear();
}

} // namespace ucp
