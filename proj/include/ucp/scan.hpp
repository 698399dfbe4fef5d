#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace ucp {

struct ScanOptions {
    std::size_t memory_budget = std::size_t{2} << 30; // bytes, per buffer
    unsigned threads = 0; // 0: --threads/UCP_THREADS/hardware default
    bool halve_by_symmetry = true; // exploit self-reciprocity of Phi*_n
};

struct HeightRecord {
    std::uint64_t n = 0;
    mpz_class height;
    std::uint64_t degree = 0; // phi*(n)
    double elapsed_seconds = 0.0;
};

// Streams Phi*_n through a single fixed-length coefficient buffer and
// returns its height. Throws ResourceError when phi*(n)+1 coefficients
// exceed the memory budget.
HeightRecord height_unitary(std::uint64_t n, const ScanOptions& opts = {});

// B(k) sample: heights of Phi*_n over n <= bound with kappa(n) = k.
// k must be squarefree.
std::set<mpz_class> b_k_sample(std::uint64_t k, std::uint64_t bound,
                               const ScanOptions& opts = {});

struct SurveyResult {
    mpz_class max_height;
    std::uint64_t argmax_n = 0; // smallest n attaining the max
    std::uint64_t count = 0;
    std::uint64_t limit = 0;
    std::vector<HeightRecord> table; // ascending by n, worker-count invariant
};

// Enumerates n < limit of the form prod p^{e_p} over `primes` (e_p >= 1 when
// require_all, else e_p >= 0 with n > 1) and computes each height in a
// bounded worker pool. `known` entries are trusted and skipped; `sink`, when
// set, receives each freshly computed record (serialized, unspecified order).
SurveyResult max_height_smooth(const std::vector<std::uint64_t>& primes, std::uint64_t limit,
                               bool require_all, const ScanOptions& opts = {},
                               const std::map<std::uint64_t, mpz_class>& known = {},
                               const std::function<void(const HeightRecord&)>& sink = {});

// First (n, j) in lexicographic order with a*_n(j) = value, scanning
// n <= n_bound and 0 <= j <= min(phi*(n), j_bound).
std::optional<std::pair<std::uint64_t, std::uint64_t>>
witness_search(const mpz_class& value, std::uint64_t n_bound,
               std::optional<std::uint64_t> j_bound = std::nullopt);

} // namespace ucp
