#include "ucp/arith.hpp"

#include <cmath>
#include <stdexcept>

namespace ucp {

namespace {

void require_positive(std::uint64_t n, const char* what) {
    if (n == 0) throw std::domain_error(std::string(what) + ": n must be positive");
}

mpq_class pow_rational(std::uint64_t base, int exp) {
    mpz_class b(static_cast<unsigned long>(base));
    mpz_class p;
    mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp < 0 ? -exp : exp));
    if (exp < 0) return mpq_class(1, p);
    return mpq_class(p);
}

} // namespace

int mobius(std::uint64_t n) {
    require_positive(n, "mobius");
    Factorization f = factorize(n);
    if (!f.is_squarefree()) return 0;
    return f.omega() % 2 == 0 ? 1 : -1;
}

int unitary_mobius(std::uint64_t n) {
    require_positive(n, "unitary_mobius");
    return omega(n) % 2 == 0 ? 1 : -1;
}

std::uint64_t euler_phi(std::uint64_t n) {
    require_positive(n, "euler_phi");
    Factorization f = factorize(n);
    std::uint64_t r = 1;
    for (const auto& pp : f.pairs()) {
        std::uint64_t q = pp.value();
        r *= q - q / pp.prime;
    }
    return r;
}

std::uint64_t unitary_phi(std::uint64_t n) {
    require_positive(n, "unitary_phi");
    Factorization f = factorize(n);
    std::uint64_t r = 1;
    for (const auto& pp : f.pairs()) r *= pp.value() - 1;
    return r;
}

std::pair<std::uint64_t, std::uint64_t> totients(std::uint64_t n) {
    return {euler_phi(n), unitary_phi(n)};
}

std::uint64_t unitary_sigma(std::uint64_t n) {
    require_positive(n, "unitary_sigma");
    Factorization f = factorize(n);
    std::uint64_t r = 1;
    for (const auto& pp : f.pairs()) r *= pp.value() + 1;
    return r;
}

std::pair<mpq_class, mpq_class> jordan(int s, std::uint64_t n) {
    require_positive(n, "jordan");
    // J_s(p^a) = p^{as} - p^{(a-1)s},  J*_s(p^a) = p^{as} - 1; both multiplicative.
    Factorization f = factorize(n);
    mpq_class classical(1), unitary(1);
    for (const auto& pp : f.pairs()) {
        mpq_class pas = pow_rational(pp.prime, s * static_cast<int>(pp.exponent));
        mpq_class pa1s = pow_rational(pp.prime, s * static_cast<int>(pp.exponent - 1));
        classical *= pas - pa1s;
        unitary *= pas - 1;
    }
    classical.canonicalize();
    unitary.canonicalize();
    return {classical, unitary};
}

LogInt LogInt::log_of(std::uint64_t n) {
    if (n == 0) throw std::domain_error("LogInt::log_of: n must be positive");
    Factorization f = factorize(n);
    LogInt v;
    for (const auto& pp : f.pairs()) v.terms_[pp.prime] = pp.exponent;
    return v;
}

LogInt LogInt::multiple_of_log(std::uint64_t multiplier, std::uint64_t p) {
    LogInt v;
    if (multiplier > 0) v.terms_[p] = multiplier;
    return v;
}

double LogInt::to_double() const {
    double s = 0.0;
    for (const auto& [p, a] : terms_) s += static_cast<double>(a) * std::log(static_cast<double>(p));
    return s;
}

mpz_class LogInt::as_product() const {
    mpz_class r(1), b, q;
    for (const auto& [p, a] : terms_) {
        b = static_cast<unsigned long>(p);
        mpz_pow_ui(q.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(a));
        r *= q;
    }
    return r;
}

LogInt& LogInt::operator+=(const LogInt& other) {
    for (const auto& [p, a] : other.terms_) terms_[p] += a;
    return *this;
}

std::pair<LogInt, LogInt> mangoldt(std::uint64_t n) {
    require_positive(n, "mangoldt");
    Factorization f = factorize(n);
    if (!f.is_prime_power()) return {LogInt{}, LogInt{}};
    const auto& pp = f.pairs().front();
    return {LogInt::multiple_of_log(1, pp.prime),
            LogInt::multiple_of_log(pp.exponent, pp.prime)};
}

ArithFn arith_one() {
    return {[](std::uint64_t) { return mpq_class(1); }, true};
}

ArithFn arith_epsilon() {
    return {[](std::uint64_t n) { return mpq_class(n == 1 ? 1 : 0); }, true};
}

ArithFn arith_id(int s) {
    return {[s](std::uint64_t n) {
                mpz_class b(static_cast<unsigned long>(n));
                mpz_class p;
                mpz_pow_ui(p.get_mpz_t(), b.get_mpz_t(),
                           static_cast<unsigned long>(s < 0 ? -s : s));
                return s < 0 ? mpq_class(1, p) : mpq_class(p);
            },
            true};
}

ArithFn arith_mobius() {
    return {[](std::uint64_t n) { return mpq_class(mobius(n)); }, true};
}

ArithFn arith_unitary_mobius() {
    return {[](std::uint64_t n) { return mpq_class(unitary_mobius(n)); }, true};
}

ArithFn arith_euler_phi() {
    return {[](std::uint64_t n) {
                return mpq_class(mpz_class(static_cast<unsigned long>(euler_phi(n))));
            },
            true};
}

mpq_class convolve(ConvolutionKind kind, const ArithFn& f, const ArithFn& g, std::uint64_t n) {
    require_positive(n, "convolve");
    mpq_class sum(0);
    switch (kind) {
    case ConvolutionKind::dirichlet:
        for (std::uint64_t d : divisors(n)) sum += f(d) * g(n / d);
        break;
    case ConvolutionKind::unitary:
        for (std::uint64_t d : unitary_divisors(n)) sum += f(d) * g(n / d);
        break;
    case ConvolutionKind::kernel: {
        std::uint64_t k = kernel(n);
        for (std::uint64_t d : divisors(n))
            if (kernel(d) == k) sum += f(d) * g(n / d);
        break;
    }
    }
    sum.canonicalize();
    return sum;
}

ArithFn kernel_transform(ArithFn g) {
    bool mult = g.multiplicative;
    return {[g = std::move(g)](std::uint64_t n) {
                mpq_class sum(0);
                std::uint64_t k = kernel(n);
                for (std::uint64_t d : divisors(n))
                    if (kernel(d) == k) sum += g(d);
                sum.canonicalize();
                return sum;
            },
            mult};
}

ArithFn kernel_inverse(ArithFn g_star) {
    bool mult = g_star.multiplicative;
    return {[g_star = std::move(g_star)](std::uint64_t n) {
                mpq_class sum(0);
                std::uint64_t k = kernel(n);
                for (std::uint64_t d : divisors(n))
                    if (kernel(d) == k) sum += g_star(d) * mobius(n / d);
                sum.canonicalize();
                return sum;
            },
            mult};
}

} // namespace ucp
