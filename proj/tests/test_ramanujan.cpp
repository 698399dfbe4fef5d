#include <doctest.h>

#include <cmath>

#include "ucp/arith.hpp"
#include "ucp/cyclotomic.hpp"
#include "ucp/errors.hpp"
#include "ucp/factorize.hpp"
#include "ucp/ramanujan.hpp"

using namespace ucp;

TEST_CASE("unitary Ramanujan sums: examples and root-of-unity oracle") {
    CHECK(unitary_ramanujan(4, 2) == -1);
    CHECK(unitary_ramanujan(12, 1) == 1);
    CHECK(unitary_ramanujan(12, 12) == 6);

    for (std::uint64_t n = 1; n <= 300; ++n) {
        CHECK(unitary_ramanujan(n, 1) == unitary_mobius(n));
        CHECK(unitary_ramanujan(n, n) == static_cast<long>(unitary_phi(n)));
    }

    for (std::uint64_t n = 1; n <= 100; ++n) {
        for (std::uint64_t k = 1; k <= 20; ++k) {
            auto exact = unitary_ramanujan(n, k);
            auto numeric = ramanujan_numeric(n, k, true);
            CHECK(std::fabs(numeric.real() - exact.get_d()) < 1e-6);
            CHECK(std::fabs(numeric.imag()) < 1e-6);

            auto cexact = ramanujan(n, k);
            auto cnumeric = ramanujan_numeric(n, k, false);
            CHECK(std::fabs(cnumeric.real() - cexact.get_d()) < 1e-6);
            CHECK(std::fabs(cnumeric.imag()) < 1e-6);
        }
    }
}

TEST_CASE("unitary divisor sums of c* give the periodic indicator") {
    CHECK(rho_indicator_check(4, 4)); // 1 + phi*(4) = 4
    CHECK(rho_indicator_check(4, 2)); // 1 + c*_4(2) = 0
    CHECK(rho_indicator_check(1, 7));
    for (std::uint64_t n = 1; n <= 200; ++n)
        for (std::uint64_t k = 1; k <= 30; ++k) CHECK(rho_indicator_check(n, k));
}

TEST_CASE("kernel sums relate c* and c") {
    // c*_12(1) = c_6(1) + c_12(1) = 1 + 0
    CHECK(ramanujan(6, 1) == 1);
    CHECK(ramanujan(12, 1) == 0);
    CHECK(kernel_sum_check(12, 1));
    // c*_12(12) = c_6(12) + c_12(12) = phi(6) + phi(12) = 2 + 4
    CHECK(ramanujan(6, 12) == 2);
    CHECK(ramanujan(12, 12) == 4);
    CHECK(kernel_sum_check(12, 12));
    // prime powers: single term
    for (std::uint64_t q : {8ull, 9ull, 25ull})
        for (std::uint64_t k = 1; k <= 10; ++k) CHECK(kernel_sum_check(q, k));
    for (std::uint64_t n = 1; n <= 200; ++n)
        for (std::uint64_t k = 1; k <= 20; ++k) CHECK(kernel_sum_check(n, k));
}

TEST_CASE("S*(n)") {
    CHECK(s_star(4) == 6);
    CHECK(s_star(6) == 6);
    for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull})
        CHECK(s_star(p) == p * (p - 1) / 2);
    CHECK_THROWS_AS(s_star(1), std::domain_error);

    // brute force
    for (std::uint64_t n = 2; n <= 500; ++n) {
        std::uint64_t sum = 0;
        for (std::uint64_t j = 1; j <= n; ++j)
            if (unitary_gcd(j, n) == 1) sum += j;
        CHECK(s_star(n) == sum);
    }
}

TEST_CASE("DFT examples") {
    // f = id, m = 1, n = 4: equals phi*(4) = 3
    CHECK(dft(arith_id(1), 1, 4, DftMethod::exact_conv) == 3);
    CHECK(dft(arith_id(1), 1, 4, DftMethod::exact_ramanujan) == 3);

    // f = epsilon: collapses to c*_n(m)
    for (std::uint64_t n = 1; n <= 40; ++n)
        for (std::uint64_t m = 1; m <= 10; ++m)
            CHECK(dft(arith_epsilon(), m, n, DftMethod::exact_ramanujan) ==
                  mpq_class(unitary_ramanujan(n, m)));

    // f = 1, m = n = 4: c*_1(4) + c*_4(4) = 1 + 3
    CHECK(dft(arith_one(), 4, 4, DftMethod::exact_conv) == 4);
}

TEST_CASE("DFT identities: both exact routes and the numeric sum agree") {
    std::vector<ArithFn> fns = {arith_one(), arith_id(1), arith_mobius(), arith_unitary_mobius()};
    for (std::uint64_t n = 1; n <= 60; ++n) {
        for (std::uint64_t m = 1; m <= 60; ++m) {
            for (const auto& f : fns) {
                mpq_class a = dft(f, m, n, DftMethod::exact_conv);
                mpq_class b = dft(f, m, n, DftMethod::exact_ramanujan);
                CHECK(a == b);
            }
        }
    }
    for (std::uint64_t n = 1; n <= 30; ++n) {
        for (std::uint64_t m = 1; m <= 8; ++m) {
            mpq_class exact = dft(arith_id(1), m, n, DftMethod::exact_conv);
            auto numeric = dft_numeric(arith_id(1), m, n);
            CHECK(std::fabs(numeric.real() - exact.get_d()) <
                  1e-6 * (1 + std::fabs(exact.get_d())));
            CHECK(std::fabs(numeric.imag()) < 1e-6 * (1 + std::fabs(exact.get_d())));
        }
    }
}

TEST_CASE("trigonometric products") {
    auto r4 = trig_products(4);
    CHECK(r4.sin_product == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(r4.sin_closed_form == doctest::Approx(0.5).epsilon(1e-12)); // 4 / 2^3
    CHECK(r4.sin_ok);
    CHECK(r4.cos_ok); // n = 2^a: short-circuit, both zero
    CHECK(r4.cos_product == 0.0);
    CHECK(r4.cos_closed_form == 0.0);

    auto r6 = trig_products(6);
    CHECK(r6.cos_product == doctest::Approx(-0.75).epsilon(1e-12));
    CHECK(r6.cos_closed_form == doctest::Approx(3.0 / -4.0).epsilon(1e-12));
    CHECK(r6.cos_ok);
    CHECK(r6.sin_ok);

    for (std::uint64_t n = 2; n <= 300; ++n) {
        auto rep = trig_products(n);
        CHECK(rep.sin_ok);
        CHECK(rep.cos_ok);
    }
    CHECK_THROWS_AS(trig_products(1), std::domain_error);
}

TEST_CASE("Schramm product") {
    CHECK(schramm_unitary(2, 2.0) == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(schramm_unitary(12, 2.0) == doctest::Approx(39.0).epsilon(1e-9)); // Phi*_12(2)
    CHECK(schramm_unitary(4, 3.0, 2) == doctest::Approx(40.0).epsilon(1e-9)); // (2,4)_* = 1
    CHECK_THROWS_AS(schramm_unitary(4, 1.0), std::domain_error);

    for (std::uint64_t n = 1; n <= 50; ++n) {
        double via_product = schramm_unitary(n, 1.5);
        double direct = unitary_cyclotomic(n).eval(std::complex<double>(1.5, 0.0)).real();
        CHECK(std::fabs(via_product - direct) < 1e-6 * std::fabs(direct));
    }
    // general m against the reference product
    for (std::uint64_t n : {4ull, 12ull, 18ull, 36ull}) {
        for (std::uint64_t m = 1; m <= 6; ++m) {
            double lhs = schramm_unitary(n, 2.0, m);
            double rhs = schramm_reference(n, 2.0, m);
            CHECK(std::fabs(lhs - rhs) < 1e-6 * std::fabs(rhs));
        }
    }
}

TEST_CASE("exponential series from unitary Ramanujan sums") {
    // n = 2: the series is log(1+x)
    auto r2 = exp_series(2, 0.5, 40);
    CHECK(r2.value == doctest::Approx(1.5).epsilon(1e-9));

    auto r12 = exp_series(12, 0.5, 64);
    double direct12 = unitary_cyclotomic(12).eval(std::complex<double>(0.5, 0.0)).real();
    CHECK(std::fabs(r12.value - direct12) < 1e-8);

    auto r4 = exp_series(4, -0.5, 64);
    double direct4 = unitary_cyclotomic(4).eval(std::complex<double>(-0.5, 0.0)).real();
    CHECK(std::fabs(r4.value - direct4) < 1e-8);

    CHECK_THROWS_AS(exp_series(1, 0.5, 64), std::domain_error);
    CHECK_THROWS_AS(exp_series(12, 1.0, 64), std::domain_error);

    for (std::uint64_t n = 2; n <= 100; ++n) {
        IntPoly p = unitary_cyclotomic(n);
        for (double x : {0.5, -0.5, 0.9}) {
            auto res = exp_series(n, x, 64);
            double direct = p.eval(std::complex<double>(x, 0.0)).real();
            double tol = x == 0.9 ? res.tail_bound * std::fabs(direct) * 4 + 1e-8 : 1e-8;
            CHECK(std::fabs(res.value - direct) < tol);
        }
    }
}

TEST_CASE("Lambda* partial series (smoke quality only)") {
    // n=2, K=2: -(c*_2(1)/1 + c*_2(2)/2) = -(-1 + 1/2) = 1/2
    auto r = lambda_series_partial(2, 2);
    CHECK(r.raw == doctest::Approx(0.5).epsilon(1e-12));

    auto r4 = lambda_series_partial(4, 100000);
    CHECK(std::fabs(r4.cesaro - 2 * std::log(2.0)) < 0.3);

    auto r12 = lambda_series_partial(12, 100000);
    CHECK(std::fabs(r12.cesaro) < 0.3);

    CHECK_THROWS_AS(lambda_series_partial(1, 10), std::domain_error);
}
