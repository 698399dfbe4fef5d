#include <doctest.h>

#include <numeric>
#include <stdexcept>

#include "ucp/arith.hpp"
#include "ucp/factorize.hpp"

using namespace ucp;

namespace {

std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

// deterministic pseudo-random rational-valued function
ArithFn random_fn(std::uint64_t salt) {
    return {[salt](std::uint64_t n) {
                std::uint64_t h = mix(n ^ salt);
                long num = static_cast<long>(h % 41) - 20;
                unsigned long den = 1 + static_cast<unsigned long>(mix(h) % 7);
                mpq_class q(num, den);
                q.canonicalize();
                return q;
            },
            false};
}

std::uint64_t brute_unitary_phi(std::uint64_t n) {
    std::uint64_t count = 0;
    for (std::uint64_t j = 1; j <= n; ++j)
        if (unitary_gcd(j, n) == 1) ++count;
    return count;
}

} // namespace

TEST_CASE("mobius functions") {
    CHECK(mobius(12) == 0);
    CHECK(unitary_mobius(12) == 1);
    CHECK(mobius(6) == 1);
    CHECK(unitary_mobius(6) == 1);
    CHECK(mobius(1) == 1);
    CHECK(unitary_mobius(1) == 1);
    for (std::uint64_t q : {2ull, 4ull, 8ull, 9ull, 27ull, 125ull, 343ull})
        CHECK(unitary_mobius(q) == -1);
}

TEST_CASE("unitary Mobius inversion: sum of mu* over unitary divisors is epsilon") {
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        long sum = 0;
        for (std::uint64_t d : unitary_divisors(n)) sum += unitary_mobius(d);
        CHECK(sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("totients") {
    CHECK(totients(12) == std::pair<std::uint64_t, std::uint64_t>{4, 6});
    CHECK(unitary_phi(12) == 6);
    for (std::uint64_t q : {2ull, 4ull, 9ull, 32ull, 125ull}) CHECK(unitary_phi(q) == q - 1);
    // full invariant range against the counting oracle
    for (std::uint64_t n = 1; n <= 10000; ++n) CHECK(unitary_phi(n) == brute_unitary_phi(n));
}

TEST_CASE("unitary sigma against the brute-force unitary divisor sum") {
    CHECK(unitary_sigma(12) == 20); // (4+1)(3+1)
    for (std::uint64_t n = 1; n <= 1000; ++n) {
        std::uint64_t sum = 0;
        for (std::uint64_t d : unitary_divisors(n)) sum += d;
        CHECK(unitary_sigma(n) == sum);
    }
}

TEST_CASE("jordan functions") {
    auto [j2, j2s] = jordan(2, 12);
    CHECK(j2s == 120); // (16-1)(9-1)
    auto [j1, j1s] = jordan(1, 12);
    CHECK(j1 == 4);
    CHECK(j1s == 6);
    CHECK(jordan(5, 1).second == 1);

    // brute force: J*_s = mu* x id_s, J_s = mu * id_s
    for (int s : {1, 2, 3, -1}) {
        for (std::uint64_t n = 1; n <= 200; ++n) {
            mpq_class unitary(0), classical(0);
            for (std::uint64_t d : unitary_divisors(n)) {
                mpq_class id = arith_id(s)(n / d);
                unitary += unitary_mobius(d) * id;
            }
            for (std::uint64_t d : divisors(n)) {
                int mu = mobius(d);
                if (mu) classical += mu * arith_id(s)(n / d);
            }
            auto [jc, ju] = jordan(s, n);
            CHECK(jc == classical);
            CHECK(ju == unitary);
        }
    }
}

TEST_CASE("mangoldt values and the unitary log identity") {
    auto [l8, ls8] = mangoldt(8);
    CHECK(ls8 == LogInt::multiple_of_log(3, 2)); // 3 log 2
    CHECK(l8 == LogInt::multiple_of_log(1, 2));
    CHECK(mangoldt(12).second.is_zero());
    CHECK(mangoldt(1).second.is_zero());

    // sum over unitary divisors of Lambda* equals log n, exactly
    for (std::uint64_t n = 1; n <= 10000; ++n) {
        LogInt sum;
        for (std::uint64_t d : unitary_divisors(n)) sum += mangoldt(d).second;
        CHECK(sum == LogInt::log_of(n));
    }
    // spot check the (multiplier, base) arithmetic
    LogInt twelve = mangoldt(4).second + mangoldt(3).second;
    CHECK(twelve == LogInt::log_of(12));
    CHECK(twelve.as_product() == 12);
}

TEST_CASE("Lambda* is the kernel transform of Lambda") {
    for (std::uint64_t n = 1; n <= 2000; ++n) {
        LogInt sum;
        std::uint64_t k = kernel(n);
        for (std::uint64_t d : divisors(n))
            if (kernel(d) == k) sum += mangoldt(d).first;
        CHECK(sum == mangoldt(n).second);
    }
    // g = Lambda: g*(8) = 3 log 2
    LogInt g8;
    for (std::uint64_t d : divisors(8))
        if (kernel(d) == 2) g8 += mangoldt(d).first;
    CHECK(g8 == LogInt::multiple_of_log(3, 2));
}

TEST_CASE("convolution examples") {
    CHECK(convolve(ConvolutionKind::unitary, arith_one(), arith_one(), 12) == 4);
    CHECK(convolve(ConvolutionKind::unitary, arith_unitary_mobius(), arith_one(), 12) == 0);
    CHECK(convolve(ConvolutionKind::unitary, arith_unitary_mobius(), arith_one(), 1) == 1);
    CHECK(convolve(ConvolutionKind::kernel, arith_euler_phi(), arith_one(), 12) == 6);

    // epsilon is a two-sided identity for dirichlet and unitary convolutions
    ArithFn f = random_fn(7);
    for (std::uint64_t n = 1; n <= 100; ++n) {
        for (auto kind : {ConvolutionKind::dirichlet, ConvolutionKind::unitary}) {
            CHECK(convolve(kind, f, arith_epsilon(), n) == f(n));
            CHECK(convolve(kind, arith_epsilon(), f, n) == f(n));
        }
    }
}

TEST_CASE("unitary convolution is commutative and associative") {
    ArithFn f = random_fn(1), g = random_fn(2), h = random_fn(3);
    for (std::uint64_t n = 1; n <= 500; ++n) {
        CHECK(convolve(ConvolutionKind::unitary, f, g, n) ==
              convolve(ConvolutionKind::unitary, g, f, n));
        ArithFn fg{[&](std::uint64_t m) { return convolve(ConvolutionKind::unitary, f, g, m); },
                   false};
        ArithFn gh{[&](std::uint64_t m) { return convolve(ConvolutionKind::unitary, g, h, m); },
                   false};
        CHECK(convolve(ConvolutionKind::unitary, fg, h, n) ==
              convolve(ConvolutionKind::unitary, f, gh, n));
    }
}

TEST_CASE("mixed associativity: (f <> g) <> h = f <> (g * h)") {
    ArithFn f = random_fn(11), g = random_fn(12), h = random_fn(13);
    for (std::uint64_t n = 1; n <= 500; ++n) {
        ArithFn fg{[&](std::uint64_t m) { return convolve(ConvolutionKind::kernel, f, g, m); },
                   false};
        ArithFn gh{[&](std::uint64_t m) { return convolve(ConvolutionKind::dirichlet, g, h, m); },
                   false};
        CHECK(convolve(ConvolutionKind::kernel, fg, h, n) ==
              convolve(ConvolutionKind::kernel, f, gh, n));
    }
}

TEST_CASE("kernel transform and its inverse") {
    // g = mu: g*(n) = mu(kappa(n))
    ArithFn mu_star = kernel_transform(arith_mobius());
    for (std::uint64_t n = 1; n <= 500; ++n) {
        CHECK(mu_star(n) == mobius(kernel(n)));
        CHECK(mu_star(n) == unitary_mobius(n));
    }
    CHECK(mu_star(12) == 1);

    // g = J_2: g*(12) = 120
    ArithFn j2{[](std::uint64_t n) { return jordan(2, n).first; }, true};
    CHECK(kernel_transform(j2)(12) == 120);
    for (std::uint64_t n = 1; n <= 300; ++n) CHECK(kernel_transform(j2)(n) == jordan(2, n).second);

    // round trip on randomized functions
    for (std::uint64_t salt = 0; salt < 50; ++salt) {
        ArithFn g = random_fn(salt * 1000 + 17);
        ArithFn back = kernel_inverse(kernel_transform(g));
        for (std::uint64_t n = 1; n <= 500; ++n) CHECK(back(n) == g(n));
    }
}

TEST_CASE("multiplicative flag is honored by named instances") {
    for (const ArithFn& f : {arith_one(), arith_epsilon(), arith_id(2), arith_mobius(),
                             arith_unitary_mobius(), arith_euler_phi()}) {
        REQUIRE(f.multiplicative);
        CHECK(f(1) == 1);
        for (auto [m, n] : {std::pair{4, 9}, {5, 8}, {7, 12}, {25, 27}})
            CHECK(f(static_cast<std::uint64_t>(m) * n) == f(m) * f(n));
    }
    CHECK(kernel_transform(arith_mobius()).multiplicative);
    CHECK(kernel_inverse(arith_mobius()).multiplicative);
}
