#include "ucp/scan.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "ucp/arith.hpp"
#include "ucp/errors.hpp"
#include "ucp/factorize.hpp"
#include "ucp/series.hpp"

namespace ucp {

namespace {

unsigned resolve_threads(unsigned requested) {
    if (requested) return requested;
    if (const char* env = std::getenv("UCP_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v > 0) return static_cast<unsigned>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? hw : 1;
}

// Phi*_n streamed into a window of `length` coefficients.
BinomialSeries stream_unitary(const Factorization& f, std::size_t length) {
    std::uint64_t n = f.value();
    std::vector<std::uint64_t> muls, divs;
    for (std::uint64_t d : f.unitary_divisors())
        (unitary_mobius(n / d) > 0 ? muls : divs).push_back(d);
    std::sort(muls.rbegin(), muls.rend());
    std::sort(divs.rbegin(), divs.rend());
    BinomialSeries s(length);
    std::size_t i = 0, j = 0;
    while (i < muls.size() || j < divs.size()) {
        if (i < muls.size()) s.mul_binomial(muls[i++]);
        if (j < divs.size()) s.div_binomial(divs[j++]);
    }
    return s;
}

HeightRecord height_of(const Factorization& f, const ScanOptions& opts) {
    auto start = std::chrono::steady_clock::now();
    std::uint64_t deg = 1;
    for (const auto& pp : f.pairs()) deg *= pp.value() - 1;

    std::uint64_t full_len = deg + 1;
    if (full_len > opts.memory_budget / sizeof(std::int64_t))
        throw ResourceError("height_unitary: coefficient buffer exceeds memory budget");

    // self-reciprocity: the low half carries every distinct coefficient
    std::size_t length = opts.halve_by_symmetry && f.value() > 1
                             ? static_cast<std::size_t>(deg / 2 + 1)
                             : static_cast<std::size_t>(full_len);
    BinomialSeries s = stream_unitary(f, length);

    HeightRecord rec;
    rec.n = f.value();
    rec.degree = deg;
    rec.height = s.max_abs();
    rec.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

// products of primes[idx..] * acc below limit, exponents >= min_exp
void enumerate_smooth(const std::vector<std::uint64_t>& primes, std::size_t idx,
                      std::uint64_t acc, std::uint64_t limit, bool require_all,
                      std::vector<std::uint64_t>& out) {
    if (idx == primes.size()) {
        if (acc > 1) out.push_back(acc);
        return;
    }
    std::uint64_t p = primes[idx];
    if (!require_all) enumerate_smooth(primes, idx + 1, acc, limit, require_all, out);
    unsigned __int128 v = static_cast<unsigned __int128>(acc) * p;
    while (v < limit) {
        enumerate_smooth(primes, idx + 1, static_cast<std::uint64_t>(v), limit, require_all, out);
        v *= p;
    }
}

} // namespace

HeightRecord height_unitary(std::uint64_t n, const ScanOptions& opts) {
    if (n == 0) throw std::domain_error("height_unitary: n must be positive");
    return height_of(factorize(n), opts);
}

std::set<mpz_class> b_k_sample(std::uint64_t k, std::uint64_t bound, const ScanOptions& opts) {
    if (k == 0) throw std::domain_error("b_k_sample: k must be positive");
    Factorization f = factorize(k);
    if (!f.is_squarefree()) throw std::domain_error("b_k_sample: k must be squarefree");
    std::vector<std::uint64_t> primes;
    for (const auto& pp : f.pairs()) primes.push_back(pp.prime);

    std::vector<std::uint64_t> ns;
    if (k == 1) {
        ns.push_back(1); // kappa(1) = 1
    } else {
        enumerate_smooth(primes, 0, 1, bound + 1, true, ns);
    }
    std::set<mpz_class> heights;
    for (std::uint64_t n : ns) heights.insert(height_unitary(n, opts).height);
    return heights;
}

SurveyResult max_height_smooth(const std::vector<std::uint64_t>& primes, std::uint64_t limit,
                               bool require_all, const ScanOptions& opts,
                               const std::map<std::uint64_t, mpz_class>& known,
                               const std::function<void(const HeightRecord&)>& sink) {
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (primes[i] < 2 || !is_prime(primes[i]))
            throw std::domain_error("max_height_smooth: primes must be prime");
        for (std::size_t j = i + 1; j < primes.size(); ++j)
            if (primes[i] == primes[j])
                throw std::domain_error("max_height_smooth: primes must be distinct");
    }

    std::vector<std::uint64_t> ns;
    enumerate_smooth(primes, 0, 1, limit, require_all, ns);
    std::sort(ns.begin(), ns.end());

    SurveyResult result;
    result.limit = limit;
    result.count = ns.size();
    result.table.resize(ns.size());

    std::atomic<std::size_t> next{0};
    std::mutex sink_mutex;
    unsigned workers = std::min<std::size_t>(resolve_threads(opts.threads), std::max<std::size_t>(ns.size(), 1));
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto work = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= ns.size()) return;
            try {
                std::uint64_t n = ns[i];
                auto it = known.find(n);
                if (it != known.end()) {
                    HeightRecord rec;
                    rec.n = n;
                    rec.height = it->second;
                    rec.degree = unitary_phi(n);
                    result.table[i] = std::move(rec);
                } else {
                    HeightRecord rec = height_of(factorize(n), opts);
                    if (sink) {
                        std::lock_guard lock(sink_mutex);
                        sink(rec);
                    }
                    result.table[i] = std::move(rec);
                }
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
    work();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);

    result.max_height = 0;
    for (const auto& rec : result.table) {
        if (rec.height > result.max_height) {
            result.max_height = rec.height;
            result.argmax_n = rec.n;
        }
    }
    return result;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>>
witness_search(const mpz_class& value, std::uint64_t n_bound,
               std::optional<std::uint64_t> j_bound) {
    for (std::uint64_t n = 1; n <= n_bound; ++n) {
        Factorization f = factorize(n);
        std::uint64_t deg = 1;
        for (const auto& pp : f.pairs()) deg *= pp.value() - 1;
        BinomialSeries s = stream_unitary(f, static_cast<std::size_t>(deg) + 1);
        std::uint64_t j_max = j_bound ? std::min(*j_bound, deg) : deg;
        for (std::uint64_t j = 0; j <= j_max; ++j)
            if (s.coeff(static_cast<std::size_t>(j)) == value) return std::pair{n, j};
    }
    return std::nullopt;
}

} // namespace ucp
