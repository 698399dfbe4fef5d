#include "ucp/ramanujan.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "ucp/cyclotomic.hpp"
#include "ucp/errors.hpp"
#include "ucp/factorize.hpp"

namespace ucp {

namespace {

void require_positive(std::uint64_t v, const char* what) {
    if (v == 0) throw std::domain_error(std::string(what) + ": argument must be positive");
}

mpz_class mpz_u64(std::uint64_t v) {
    mpz_class r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}

} // namespace

mpz_class ramanujan(std::uint64_t n, std::uint64_t k) {
    require_positive(n, "ramanujan");
    require_positive(k, "ramanujan");
    mpz_class sum(0);
    for (std::uint64_t d : divisors(std::gcd(n, k))) {
        int mu = mobius(n / d);
        if (mu) sum += mu > 0 ? mpz_u64(d) : -mpz_u64(d);
    }
    return sum;
}

mpz_class unitary_ramanujan(std::uint64_t n, std::uint64_t k) {
    require_positive(n, "unitary_ramanujan");
    require_positive(k, "unitary_ramanujan");
    std::uint64_t g = unitary_gcd(k, n);
    mpz_class sum(0);
    for (std::uint64_t d : unitary_divisors(g)) {
        // d || g and g || n, so d || n
        int mu = unitary_mobius(n / d);
        sum += mu > 0 ? mpz_u64(d) : -mpz_u64(d);
    }
    return sum;
}

std::complex<double> ramanujan_numeric(std::uint64_t n, std::uint64_t k, bool unitary) {
    require_positive(n, "ramanujan_numeric");
    require_positive(k, "ramanujan_numeric");
    Factorization f = factorize(n);
    std::complex<double> sum(0.0, 0.0);
    for (std::uint64_t j = 1; j <= n; ++j) {
        bool coprime = unitary ? unitary_gcd(j, f) == 1 : std::gcd(j, n) == 1;
        if (!coprime) continue;
        double angle = 2.0 * std::numbers::pi * static_cast<double>((static_cast<unsigned __int128>(j) * k) % n) /
                       static_cast<double>(n);
        sum += std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return sum;
}

bool rho_indicator_check(std::uint64_t n, std::uint64_t k) {
    require_positive(n, "rho_indicator_check");
    require_positive(k, "rho_indicator_check");
    mpz_class sum(0);
    for (std::uint64_t d : unitary_divisors(n)) sum += unitary_ramanujan(d, k);
    mpz_class expected = k % n == 0 ? mpz_u64(n) : mpz_class(0);
    if (sum != expected) {
        std::ostringstream os;
        os << "rho indicator identity failed at n=" << n << ", k=" << k << ": got " << sum
           << ", expected " << expected;
        throw VerificationError(os.str());
    }
    return true;
}

bool kernel_sum_check(std::uint64_t n, std::uint64_t k) {
    require_positive(n, "kernel_sum_check");
    require_positive(k, "kernel_sum_check");
    std::uint64_t kappa = kernel(n);
    mpz_class forward(0), inverse(0);
    for (std::uint64_t d : divisors(n)) {
        if (kernel(d) != kappa) continue;
        forward += ramanujan(d, k);
        int mu = mobius(n / d);
        if (mu) inverse += mu * unitary_ramanujan(d, k);
    }
    if (forward != unitary_ramanujan(n, k) || inverse != ramanujan(n, k)) {
        std::ostringstream os;
        os << "kernel-sum identity failed at n=" << n << ", k=" << k;
        throw VerificationError(os.str());
    }
    return true;
}

mpz_class s_star(std::uint64_t n) {
    if (n < 2) throw std::domain_error("s_star: defined for n >= 2");
    mpz_class r = mpz_u64(n) * mpz_u64(unitary_phi(n));
    r /= 2;
    return r;
}

mpq_class dft(const ArithFn& f, std::uint64_t m, std::uint64_t n, DftMethod method) {
    require_positive(n, "dft");
    require_positive(m, "dft");
    mpq_class sum(0);
    switch (method) {
    case DftMethod::exact_conv: {
        // sum over d || (m,n)_* of d * (mu* x f)(n/d)
        for (std::uint64_t d : unitary_divisors(unitary_gcd(m, factorize(n)))) {
            std::uint64_t t = n / d;
            mpq_class conv(0);
            for (std::uint64_t u : unitary_divisors(t)) conv += unitary_mobius(u) * f(t / u);
            sum += mpq_class(mpz_u64(d)) * conv;
        }
        break;
    }
    case DftMethod::exact_ramanujan:
        for (std::uint64_t d : unitary_divisors(n))
            sum += f(d) * mpq_class(unitary_ramanujan(n / d, m));
        break;
    case DftMethod::numeric:
        throw std::domain_error("dft: use dft_numeric for the numeric method");
    }
    sum.canonicalize();
    return sum;
}

std::complex<double> dft_numeric(const ArithFn& f, std::uint64_t m, std::uint64_t n) {
    require_positive(n, "dft_numeric");
    require_positive(m, "dft_numeric");
    Factorization fac = factorize(n);
    std::complex<double> sum(0.0, 0.0);
    for (std::uint64_t k = 1; k <= n; ++k) {
        double weight = f(unitary_gcd(k, fac)).get_d();
        double angle = 2.0 * std::numbers::pi *
                       static_cast<double>((static_cast<unsigned __int128>(k) * m) % n) /
                       static_cast<double>(n);
        sum += weight * std::complex<double>(std::cos(angle), std::sin(angle));
    }
    return sum;
}

TrigProductReport trig_products(std::uint64_t n) {
    if (n < 2) throw std::domain_error("trig_products: defined for n >= 2");
    Factorization f = factorize(n);
    std::uint64_t phi_star = unitary_phi(n);

    TrigProductReport rep;
    double sinp = 1.0, cosp = 1.0;
    for (std::uint64_t j = 1; j <= n; ++j) {
        if (unitary_gcd(j, f) != 1) continue;
        double t = std::numbers::pi * static_cast<double>(j) / static_cast<double>(n);
        sinp *= std::sin(t);
        cosp *= std::cos(t);
    }
    rep.sin_product = sinp;
    rep.sin_closed_form =
        value_at_one(n, CycloKind::unitary).get_d() / std::ldexp(1.0, static_cast<int>(phi_star));

    bool pow2 = f.is_prime_power() && f.pairs()[0].prime == 2;
    if (pow2) {
        // both sides vanish: the product hits cos(pi/2), and Phi*_{2^a}(-1) = 0
        rep.cos_product = 0.0;
        rep.cos_closed_form = 0.0;
    } else {
        rep.cos_product = cosp;
        double magnitude = std::ldexp(1.0, static_cast<int>(phi_star)); // 4^{phi*/2}
        double sign = (phi_star / 2) % 2 == 0 ? 1.0 : -1.0;
        rep.cos_closed_form = value_at_minus_one(n, CycloKind::unitary).get_d() / (sign * magnitude);
    }

    auto close = [](double a, double b) {
        if (a == 0.0 || b == 0.0) return std::fabs(a - b) < 1e-12;
        return std::fabs(a - b) <= 1e-9 * std::max(std::fabs(a), std::fabs(b));
    };
    rep.sin_ok = close(rep.sin_product, rep.sin_closed_form);
    rep.cos_ok = close(rep.cos_product, rep.cos_closed_form);
    return rep;
}

double schramm_unitary(std::uint64_t n, double x, std::uint64_t m) {
    require_positive(n, "schramm_unitary");
    require_positive(m, "schramm_unitary");
    if (!(x > 1.0)) throw std::domain_error("schramm_unitary: requires x > 1");
    Factorization f = factorize(n);
    double logx = std::log(x);
    double acc = 0.0;
    for (std::uint64_t j = 1; j <= n; ++j) {
        std::uint64_t g = unitary_gcd(j, f);
        // log(x^g - 1) = g log x + log(1 - x^{-g}), stable for large g
        double lg = static_cast<double>(g) * logx +
                    std::log1p(-std::exp(-static_cast<double>(g) * logx));
        double angle = 2.0 * std::numbers::pi *
                       static_cast<double>((static_cast<unsigned __int128>(j) * m) % n) /
                       static_cast<double>(n);
        acc += std::cos(angle) * lg;
    }
    return std::exp(acc);
}

double schramm_reference(std::uint64_t n, double x, std::uint64_t m) {
    require_positive(n, "schramm_reference");
    require_positive(m, "schramm_reference");
    if (!(x > 1.0)) throw std::domain_error("schramm_reference: requires x > 1");
    double prod = 1.0;
    for (std::uint64_t d : unitary_divisors(unitary_gcd(m, factorize(n)))) {
        double base = unitary_cyclotomic(n / d).eval(std::complex<double>(x, 0.0)).real();
        prod *= std::pow(base, static_cast<double>(d));
    }
    return prod;
}

ExpSeriesResult exp_series(std::uint64_t n, double x, unsigned k_terms) {
    if (n < 2) throw std::domain_error("exp_series: defined for n > 1");
    if (!(std::fabs(x) < 1.0)) throw std::domain_error("exp_series: requires |x| < 1");
    if (k_terms == 0) throw std::domain_error("exp_series: needs at least one term");
    double sum = 0.0;
    double xk = 1.0;
    for (unsigned k = 1; k <= k_terms; ++k) {
        xk *= x;
        sum += unitary_ramanujan(n, k).get_d() * xk / static_cast<double>(k);
    }
    double ax = std::fabs(x);
    double sigma = static_cast<double>(unitary_sigma(n)); // |c*_n(k)| <= sigma*(n)
    ExpSeriesResult r;
    r.tail_bound = sigma * std::pow(ax, k_terms + 1) /
                   (static_cast<double>(k_terms + 1) * (1.0 - ax));
    r.value = std::exp(-sum);
    return r;
}

LambdaSeriesResult lambda_series_partial(std::uint64_t n, std::uint64_t k_terms) {
    if (n < 2) throw std::domain_error("lambda_series_partial: defined for n > 1");
    if (k_terms == 0) throw std::domain_error("lambda_series_partial: needs at least one term");
    Factorization f = factorize(n);
    // c*_n(k) as a divisor sum, with the unitary gcd read off the factorization
    auto c_star = [&](std::uint64_t k) {
        std::uint64_t g = 1;
        for (const auto& pp : f.pairs()) {
            std::uint64_t q = pp.value();
            if (k % q == 0) g *= q;
        }
        double sum = 0.0;
        for (std::uint64_t d : unitary_divisors(g))
            sum += unitary_mobius(n / d) > 0 ? static_cast<double>(d) : -static_cast<double>(d);
        return sum;
    };
    double partial = 0.0, partial_acc = 0.0;
    for (std::uint64_t k = 1; k <= k_terms; ++k) {
        partial += -c_star(k) / static_cast<double>(k);
        partial_acc += partial;
    }
    return {partial, partial_acc / static_cast<double>(k_terms)};
}

} // namespace ucp
