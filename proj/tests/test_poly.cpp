#include <doctest.h>

#include <limits>
#include <random>

#include "ucp/errors.hpp"
#include "ucp/poly.hpp"
#include "ucp/series.hpp"

using namespace ucp;

namespace {

IntPoly poly(std::initializer_list<long> ascending) {
    std::vector<mpz_class> c;
    for (long v : ascending) c.emplace_back(v);
    return IntPoly(std::move(c));
}

IntPoly random_poly(std::mt19937_64& rng, std::size_t max_deg, long bound) {
    std::uniform_int_distribution<long> dist(-bound, bound);
    std::vector<mpz_class> c(1 + rng() % (max_deg + 1));
    for (auto& v : c) v = dist(rng);
    return IntPoly(std::move(c));
}

} // namespace

TEST_CASE("construction and canonical form") {
    CHECK(IntPoly::zero().is_zero());
    CHECK(IntPoly::zero().degree() == -1);
    CHECK(poly({0, 0, 0}).is_zero());
    CHECK(poly({1, 2, 0}).degree() == 1);
    CHECK(IntPoly::binomial(3, -1) == poly({-1, 0, 0, 1}));
    CHECK(IntPoly::binomial(1, 1) == poly({1, 1}));
    CHECK(IntPoly::monomial(2) == poly({0, 0, 1}));
    CHECK(poly({5}).height() == 5);
}

TEST_CASE("multiplication examples") {
    CHECK(poly({-1, 1}) * poly({1, 1}) == poly({-1, 0, 1}));
    CHECK(poly({1, -1, 1}) * poly({1, 0, -1, 0, 1}) == poly({1, -1, 0, 1, 0, -1, 1}));
    CHECK(poly({1, 2, 3}) * IntPoly::zero() == IntPoly::zero());
}

TEST_CASE("exact division") {
    CHECK(exact_div(IntPoly::binomial(6, -1), IntPoly::binomial(2, -1)) == poly({1, 0, 1, 0, 1}));

    IntPoly num = IntPoly::binomial(12, -1) * IntPoly::binomial(1, -1);
    IntPoly den = IntPoly::binomial(4, -1) * IntPoly::binomial(3, -1);
    CHECK(exact_div(num, den) == poly({1, -1, 0, 1, 0, -1, 1}));

    CHECK_THROWS_AS(exact_div(poly({1, 0, 1}), poly({1, 1})), DivisibilityError);
    CHECK_THROWS_AS(exact_div(poly({1}), IntPoly::zero()), std::domain_error);
    CHECK(divides(IntPoly::binomial(2, -1), IntPoly::binomial(6, -1)));
    CHECK_FALSE(divides(poly({1, 1}), poly({1, 0, 1})));

    // remainder degree is reported
    try {
        exact_div(poly({1, 0, 1}), poly({1, 1}));
        FAIL("expected DivisibilityError");
    } catch (const DivisibilityError& e) {
        CHECK(e.remainder_degree() == 0); // remainder is the constant 2
    }
}

TEST_CASE("ring axioms on randomized polynomials") {
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 120; ++trial) {
        IntPoly a = random_poly(rng, 64, 1'000'000);
        IntPoly b = random_poly(rng, 64, 1'000'000);
        IntPoly c = random_poly(rng, 64, 1'000'000);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK(exact_div(a * b, b) == a);
    }
    // degrees above the Karatsuba threshold with coefficients too big for int64
    for (int trial = 0; trial < 10; ++trial) {
        IntPoly a = random_poly(rng, 150, 1'000'000);
        IntPoly b = random_poly(rng, 150, 1'000'000);
        IntPoly big = IntPoly::constant(mpz_class("123456789123456789123456789"));
        IntPoly ab = (a * big) * b;
        CHECK(ab == (b * big) * a);
        if (!b.is_zero()) CHECK(exact_div(ab, b) == a * big);
    }
}

TEST_CASE("evaluation") {
    IntPoly p = poly({1, 1, 1, 1}); // Phi*_4
    CHECK(p.eval(mpz_class(1)) == 4);
    CHECK(poly({7, 3, 5}).eval(mpz_class(0)) == 7);
    CHECK(poly({1, 0, 1}).eval(std::complex<double>(0.0, 1.0)).real() == doctest::Approx(0).epsilon(1e-12));
    CHECK(poly({1, 0, 1}).eval(std::complex<double>(0.0, 1.0)).imag() == doctest::Approx(0).epsilon(1e-12));
    CHECK(poly({-1, 2, -3}).eval(mpz_class(-5)) == -1 - 10 - 75);
}

TEST_CASE("height and self-reciprocal") {
    CHECK(poly({1, -1, 0, 1, 0, -1, 1}).height() == 1);
    CHECK(IntPoly::zero().height() == 0);
    CHECK(poly({1, -1, 1}).is_self_reciprocal());
    CHECK_FALSE(poly({1, 2, 3}).is_self_reciprocal());
    CHECK(poly({-7, 100, -7}).height() == 100);
}

TEST_CASE("substitute_power") {
    CHECK(poly({1, -1, 1}).substitute_power(2) == poly({1, 0, -1, 0, 1}));
    CHECK(poly({3}).substitute_power(5) == poly({3}));
    CHECK(IntPoly::zero().substitute_power(3).is_zero());
}

TEST_CASE("parser examples") {
    CHECK(parse_poly("x^2 - x + 1") == poly({1, -1, 1}));
    CHECK(parse_poly("3*x^4+x-7") == poly({-7, 1, 0, 0, 3}));
    CHECK(parse_poly("-x") == poly({0, -1}));
    CHECK(parse_poly("+ 5") == poly({5}));
    CHECK(parse_poly("x + x") == poly({0, 2}));
    CHECK(parse_poly("2x") == poly({0, 2})); // '*' optional
    CHECK(parse_poly("0") == IntPoly::zero());
    CHECK(parse_poly("[1, -1, 1]") == poly({1, -1, 1}));
    CHECK(parse_poly("[]") == IntPoly::zero());

    try {
        parse_poly("x^^2");
        FAIL("expected PolyParseError");
    } catch (const PolyParseError& e) {
        CHECK(e.offset() == 2);
    }
    CHECK_THROWS_AS(parse_poly(""), PolyParseError);
    CHECK_THROWS_AS(parse_poly("x +"), PolyParseError);
    CHECK_THROWS_AS(parse_poly("x^999999999999"), PolyParseError); // exponent overflow
    CHECK_THROWS_AS(parse_poly("[1, 2"), PolyParseError);
    CHECK_THROWS_AS(parse_poly("x 1"), PolyParseError);
}

TEST_CASE("formatting") {
    CHECK(format_poly(poly({1, -1, 1})) == "x^2 - x + 1");
    CHECK(format_poly(poly({-7, 1, 0, 0, 3})) == "3*x^4 + x - 7");
    CHECK(format_poly(IntPoly::zero()) == "0");
    CHECK(format_poly(poly({0, -1})) == "-x");
    CHECK(format_poly(poly({1, -1, 1}), PolyStyle::coeff_list) == "[1, -1, 1]");
    CHECK(format_poly(IntPoly::zero(), PolyStyle::coeff_list) == "[]");
}

TEST_CASE("parse(format(p)) = p in both styles") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        IntPoly p = random_poly(rng, 20, trial % 2 ? 5 : 1'000'000'000);
        CHECK(parse_poly(format_poly(p, PolyStyle::expr)) == p);
        CHECK(parse_poly(format_poly(p, PolyStyle::coeff_list)) == p);
    }
    // big coefficients survive the round trip
    IntPoly big(std::vector<mpz_class>{mpz_class("-987654321987654321987654321"), mpz_class(1)});
    CHECK(parse_poly(format_poly(big)) == big);
    CHECK(parse_poly(format_poly(big, PolyStyle::coeff_list)) == big);
}

TEST_CASE("binomial series passes") {
    // x^4 + x^2 + 1 times (x^2 - 1) in a length-7 buffer
    BinomialSeries s(poly({1, 0, 1, 0, 1}), 7);
    s.mul_binomial(2);
    CHECK(s.to_poly() == IntPoly::binomial(6, -1));

    // Phi*_12 built from (x^12-1)(x-1)/((x^4-1)(x^3-1)) in four passes
    BinomialSeries t(7);
    t.mul_binomial(12);
    t.div_binomial(4);
    t.mul_binomial(1);
    t.div_binomial(3);
    CHECK(t.to_poly() == poly({1, -1, 0, 1, 0, -1, 1}));
    CHECK(t.max_abs() == 1);
    CHECK_FALSE(t.wide());

    // divide x^3 - 1 by (x^2 - 1): not exact
    BinomialSeries u(IntPoly::binomial(3, -1), 4);
    CHECK_THROWS_AS(u.div_binomial_exact(2), DivisibilityError);
    CHECK(u.to_poly() == IntPoly::binomial(3, -1)); // restored

    BinomialSeries v(IntPoly::binomial(6, -1), 7);
    v.div_binomial_exact(2);
    CHECK(v.to_poly() == poly({1, 0, 1, 0, 1}));
}

TEST_CASE("series passes agree with polynomial arithmetic") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 1000; ++trial) {
        IntPoly a = random_poly(rng, 24, 1000);
        std::size_t d = 1 + rng() % 8;
        int sign = rng() % 2 ? 1 : -1;
        IntPoly binom = IntPoly::binomial(d, sign);

        if (rng() % 2) {
            IntPoly want = a * binom;
            std::size_t len = static_cast<std::size_t>(a.degree() + 1) + d;
            BinomialSeries s(a, len);
            s.mul_binomial(d, sign);
            CHECK(s.to_poly() == want);
        } else {
            IntPoly product = a * binom;
            std::size_t len = static_cast<std::size_t>(product.degree()) + 1;
            BinomialSeries s(product, len);
            s.div_binomial_exact(d, sign);
            CHECK(s.to_poly() == exact_div(product, binom));
        }
    }
}

TEST_CASE("series escalates to arbitrary precision on overflow") {
    std::vector<mpz_class> c{mpz_class(1), mpz_class(std::numeric_limits<long>::max())};
    BinomialSeries s(IntPoly(c), 8);
    CHECK_FALSE(s.wide());
    s.mul_binomial(2, 1); // (x^2 + 1): doubles nothing yet
    s.mul_binomial(1, 1); // c[2] += big values repeatedly
    s.mul_binomial(1, 1);
    CHECK(s.wide());
    // compare against the exact product
    IntPoly want = IntPoly(c) * IntPoly::binomial(2, 1) * IntPoly::binomial(1, 1) *
                   IntPoly::binomial(1, 1);
    std::vector<mpz_class> got;
    for (std::size_t i = 0; i < 8; ++i) got.push_back(s.coeff(i));
    for (std::size_t i = 0; i < 8; ++i) CHECK(got[i] == want.coeff(i));
}
