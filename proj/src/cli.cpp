#include "ucp/cli.hpp"

#include <complex>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "ucp/arith.hpp"
#include "ucp/cyclotomic.hpp"
#include "ucp/errors.hpp"
#include "ucp/factorize.hpp"
#include "ucp/kronecker.hpp"
#include "ucp/poly.hpp"
#include "ucp/ramanujan.hpp"
#include "ucp/scan.hpp"

namespace ucp {

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitVerification = 2;
constexpr int kExitUsage = 64;

ojson json_mpz(const mpz_class& v) {
    if (v.fits_slong_p()) return ojson(static_cast<std::int64_t>(mpz_get_si(v.get_mpz_t())));
    return ojson(v.get_str());
}

ojson json_coeffs(const IntPoly& p) {
    ojson arr = ojson::array();
    for (const auto& c : p.coeffs()) arr.push_back(json_mpz(c));
    return arr;
}

mpz_class parse_mpz_arg(const std::string& text) {
    try {
        return mpz_class(text, 10);
    } catch (const std::invalid_argument&) {
        throw CLI::ValidationError("expected an integer, got '" + text + "'");
    }
}

struct Options {
    std::string format = "text";
    bool json() const { return format == "json"; }
};

// ---------------------------------------------------------------- verify ---

struct SuiteResult {
    std::string name;
    bool ok = true;
    std::uint64_t checks = 0;
    std::string message;
};

SuiteResult verify_identities(std::uint64_t nmax) {
    SuiteResult r;
    r.name = "identities";
    try {
        auto rep = identity_suite(nmax);
        r.checks = rep.checks;
        r.checks += check_prime_power_identities({2, 3, 5}, 4,
                                                 std::min<std::uint64_t>(nmax, 200));
    } catch (const VerificationError& e) {
        r.ok = false;
        r.message = e.what();
    }
    return r;
}

SuiteResult verify_trig(std::uint64_t nmax) {
    SuiteResult r;
    r.name = "trig";
    for (std::uint64_t n = 2; n <= nmax; ++n) {
        auto rep = trig_products(n);
        r.checks += 2;
        if (!rep.sin_ok || !rep.cos_ok) {
            r.ok = false;
            r.message = "trigonometric product mismatch at n = " + std::to_string(n);
            return r;
        }
    }
    return r;
}

SuiteResult verify_dft(std::uint64_t nmax) {
    SuiteResult r;
    r.name = "dft";
    std::vector<std::pair<const char*, ArithFn>> fns = {
        {"one", arith_one()}, {"id", arith_id(1)}, {"mobius", arith_mobius()}};
    for (std::uint64_t n = 1; n <= nmax; ++n) {
        for (std::uint64_t m = 1; m <= nmax; ++m) {
            for (auto& [name, f] : fns) {
                mpq_class a = dft(f, m, n, DftMethod::exact_conv);
                mpq_class b = dft(f, m, n, DftMethod::exact_ramanujan);
                ++r.checks;
                if (a != b) {
                    r.ok = false;
                    r.message = std::string("DFT identity failed for f=") + name + " at n=" +
                                std::to_string(n) + ", m=" + std::to_string(m);
                    return r;
                }
            }
        }
    }
    // sine component of the DFT must vanish for real f
    std::uint64_t sine_max = std::min<std::uint64_t>(nmax, 100);
    for (std::uint64_t n = 1; n <= sine_max; ++n) {
        Factorization fac = factorize(n);
        for (std::uint64_t m = 1; m <= sine_max; ++m) {
            double s = 0;
            for (std::uint64_t k = 1; k <= n; ++k) {
                double angle = 2.0 * 3.14159265358979323846 *
                               static_cast<double>((k * m) % n) / static_cast<double>(n);
                s += static_cast<double>(unitary_gcd(k, fac)) * std::sin(angle);
            }
            ++r.checks;
            if (std::fabs(s) >= 1e-9 * std::max<double>(1.0, static_cast<double>(n) * n)) {
                r.ok = false;
                r.message = "DFT sine component did not vanish at n=" + std::to_string(n) +
                            ", m=" + std::to_string(m);
                return r;
            }
        }
    }
    return r;
}

SuiteResult verify_series(std::uint64_t nmax) {
    SuiteResult r;
    r.name = "series";
    for (std::uint64_t n = 2; n <= std::min<std::uint64_t>(nmax, 100); ++n) {
        IntPoly p = unitary_cyclotomic(n);
        for (double x : {0.5, -0.5, 0.9}) {
            auto res = exp_series(n, x, 64);
            double direct = p.eval(std::complex<double>(x, 0.0)).real();
            ++r.checks;
            if (std::fabs(res.value - direct) > 1e-8 + res.tail_bound * std::fabs(direct) * 4) {
                r.ok = false;
                r.message = "exp series mismatch at n=" + std::to_string(n) +
                            ", x=" + std::to_string(x);
                return r;
            }
        }
    }
    return r;
}

SuiteResult verify_kron(std::uint64_t nmax) {
    SuiteResult r;
    r.name = "kron";
    std::mt19937_64 rng(0x5eedULL);
    std::uint64_t bound = std::max<std::uint64_t>(nmax * 50, 1000);
    for (int i = 0; i < 100; ++i) {
        Rho rho = random_rho(rng, bound);
        auto back = recover_rho(q_poly(rho));
        ++r.checks;
        if (!back || *back != rho) {
            r.ok = false;
            r.message = "rho round trip failed";
            return r;
        }
    }
    auto check_tier = [&r](const IntPoly& f, Tier expected, const char* what) {
        ++r.checks;
        if (classify(f).tier != expected) {
            r.ok = false;
            r.message = std::string("unexpected classification for ") + what;
            return false;
        }
        return true;
    };
    if (!check_tier(q_poly(Rho({5, 6})), Tier::inclusion_exclusion, "Q_{5,6}")) return r;
    if (!check_tier(unitary_cyclotomic(12), Tier::unitary_cyclotomic, "Phi*_12")) return r;
    if (!check_tier(parse_poly("x^2 - 2"), Tier::not_kronecker, "x^2 - 2")) return r;
    return r;
}

SuiteResult verify_heights(std::uint64_t nmax) {
    SuiteResult r;
    r.name = "heights";
    if (height_unitary(60).height != 2) {
        r.ok = false;
        r.message = "h(Phi*_60) != 2";
        return r;
    }
    ++r.checks;
    for (std::uint64_t n = 1; n <= std::min<std::uint64_t>(nmax, 500); ++n) {
        ++r.checks;
        if (height_unitary(n).height != unitary_cyclotomic(n, UnitaryAlgorithm::mobius_product).height()) {
            r.ok = false;
            r.message = "streaming height mismatch at n = " + std::to_string(n);
            return r;
        }
    }
    for (std::uint64_t k : {6, 10}) {
        ++r.checks;
        auto heights = b_k_sample(k, 10000);
        if (heights != std::set<mpz_class>{mpz_class(1)}) {
            r.ok = false;
            r.message = "B(" + std::to_string(k) + ") != {1} below 10^4";
            return r;
        }
    }
    auto survey = max_height_smooth({2, 3, 5}, 100, true);
    ++r.checks;
    if (survey.max_height != 2 || survey.argmax_n != 60) {
        r.ok = false;
        r.message = "smooth survey below 100 should peak at n = 60 with height 2";
    }
    return r;
}

// ------------------------------------------------------------- commands ---

int cmd_phi(std::uint64_t n, bool unitary, const std::string& algorithm, const Options& opt,
            std::ostream& out) {
    IntPoly p;
    std::string kind = unitary ? "unitary" : "classical";
    if (!unitary) {
        p = cyclotomic(n);
    } else if (algorithm.empty()) {
        p = unitary_cyclotomic(n);
    } else {
        UnitaryAlgorithm alg;
        if (algorithm == "mobius_product") alg = UnitaryAlgorithm::mobius_product;
        else if (algorithm == "cyclo_factors") alg = UnitaryAlgorithm::cyclo_factors;
        else if (algorithm == "kernel_reduction") alg = UnitaryAlgorithm::kernel_reduction;
        else alg = UnitaryAlgorithm::quotient_tower;
        p = unitary_cyclotomic(n, alg);
    }
    if (opt.json()) {
        ojson j;
        j["schema"] = 1;
        j["n"] = n;
        j["kind"] = kind;
        j["degree"] = p.degree();
        j["coeffs_ascending"] = json_coeffs(p);
        out << j.dump() << '\n';
    } else {
        out << (unitary ? "Phi*_" : "Phi_") << n << " = " << format_poly(p) << '\n';
    }
    return kExitOk;
}

int cmd_eval(const std::string& poly_text, std::uint64_t n, bool unitary,
             const std::string& at_text, const Options& opt, std::ostream& out) {
    IntPoly p;
    std::string source;
    if (!poly_text.empty()) {
        p = parse_poly(poly_text);
        source = format_poly(p);
    } else {
        p = unitary ? unitary_cyclotomic(n) : cyclotomic(n);
        source = (unitary ? "Phi*_" : "Phi_") + std::to_string(n);
    }
    mpz_class at = parse_mpz_arg(at_text);
    mpz_class value = p.eval(at);
    if (opt.json()) {
        ojson j;
        j["schema"] = 1;
        j["poly"] = source;
        j["at"] = json_mpz(at);
        j["value"] = json_mpz(value);
        out << j.dump() << '\n';
    } else {
        out << source << " at " << at << " = " << value << '\n';
    }
    return kExitOk;
}

int cmd_ramanujan(std::uint64_t n, std::uint64_t k, const Options& opt, std::ostream& out) {
    mpz_class classical = ramanujan(n, k);
    mpz_class unitary = unitary_ramanujan(n, k);
    if (opt.json()) {
        ojson j;
        j["schema"] = 1;
        j["n"] = n;
        j["k"] = k;
        j["classical"] = json_mpz(classical);
        j["unitary"] = json_mpz(unitary);
        out << j.dump() << '\n';
    } else {
        out << "c_" << n << "(" << k << ") = " << classical << '\n';
        out << "c*_" << n << "(" << k << ") = " << unitary << '\n';
    }
    return kExitOk;
}

int cmd_qpoly(const std::vector<std::uint64_t>& entries, const Options& opt, std::ostream& out) {
    Rho rho(entries);
    IntPoly q = q_poly(rho);
    if (opt.json()) {
        ojson j;
        j["schema"] = 1;
        j["rho"] = rho.entries();
        j["degree"] = q.degree();
        j["coeffs_ascending"] = json_coeffs(q);
        out << j.dump() << '\n';
    } else {
        out << "Q_rho = " << format_poly(q) << '\n';
    }
    return kExitOk;
}

int cmd_identify(const std::string& poly_text, const Options& opt, std::ostream& out) {
    IntPoly f = parse_poly(poly_text);
    Classification c = classify(f);
    if (opt.json()) {
        ojson j;
        j["schema"] = 1;
        j["tier"] = tier_name(c.tier);
        if (c.tier == Tier::unitary_cyclotomic) j["n"] = c.n;
        if (c.rho) j["rho"] = c.rho->entries();
        if (c.factors) {
            ojson factors = ojson::object();
            for (const auto& [m, e] : c.factors->multiplicity)
                factors[std::to_string(m)] = e;
            j["cyclotomic_factors"] = factors;
            if (c.factors->power_of_x) j["power_of_x"] = c.factors->power_of_x;
        }
        if (c.expansion) {
            ojson e;
            e["s"] = c.expansion->monomial_order;
            ojson terms = ojson::object();
            for (const auto& [d, exp] : c.expansion->terms) terms[std::to_string(d)] = exp;
            e["terms"] = terms;
            j["expansion"] = e;
        }
        out << j.dump() << '\n';
    } else {
        out << "tier: " << tier_name(c.tier) << '\n';
        if (c.tier == Tier::unitary_cyclotomic) out << "n: " << c.n << '\n';
        if (c.rho) {
            out << "rho:";
            for (auto r : c.rho->entries()) out << ' ' << r;
            out << '\n';
        }
        if (c.factors) {
            out << "cyclotomic factors:";
            for (const auto& [m, e] : c.factors->multiplicity) {
                out << " Phi_" << m;
                if (e > 1) out << '^' << e;
            }
            if (c.factors->power_of_x) out << " x^" << c.factors->power_of_x;
            out << '\n';
        }
    }
    return kExitOk;
}

int cmd_witness(const std::string& value_text, std::uint64_t nmax,
                std::optional<std::uint64_t> jmax, const Options& opt, std::ostream& out) {
    mpz_class value = parse_mpz_arg(value_text);
    auto hit = witness_search(value, nmax, jmax);
    if (opt.json()) {
        ojson j;
        j["schema"] = 1;
        j["value"] = json_mpz(value);
        j["found"] = static_cast<bool>(hit);
        if (hit) {
            j["n"] = hit->first;
            j["j"] = hit->second;
        }
        out << j.dump() << '\n';
    } else if (hit) {
        out << "a*_" << hit->first << "(" << hit->second << ") = " << value << '\n';
    } else {
        out << "no witness for " << value << " with n <= " << nmax << '\n';
    }
    return kExitOk;
}

int cmd_scan_heights(const std::vector<std::uint64_t>& primes, std::uint64_t limit,
                     bool require_all, unsigned threads, std::uint64_t memory_budget,
                     const std::string& output, bool resume, const Options& opt,
                     std::ostream& out) {
    ScanOptions scan_opts;
    scan_opts.threads = threads;
    if (memory_budget) scan_opts.memory_budget = memory_budget;

    std::map<std::uint64_t, mpz_class> known;
    if (resume) {
        if (output.empty()) throw std::domain_error("scan-heights: --resume requires --output");
        std::ifstream in(output);
        std::uint64_t n;
        std::string h;
        while (in >> n >> h) known.emplace(n, mpz_class(h, 10));
    }

    std::ofstream file;
    if (!output.empty()) {
        file.open(output, resume ? std::ios::app : std::ios::trunc);
        if (!file) throw std::domain_error("scan-heights: cannot open output file " + output);
    }
    std::function<void(const HeightRecord&)> sink;
    if (!output.empty()) {
        sink = [&file](const HeightRecord& rec) {
            file << rec.n << '\t' << rec.height << '\n';
            file.flush();
        };
    } else if (!opt.json()) {
        sink = [&out](const HeightRecord& rec) { out << rec.n << '\t' << rec.height << '\n'; };
    }

    SurveyResult res = max_height_smooth(primes, limit, require_all, scan_opts, known, sink);
    if (opt.json()) {
        ojson j;
        j["schema"] = 1;
        j["max_height"] = json_mpz(res.max_height);
        j["argmax_n"] = res.argmax_n;
        j["count"] = res.count;
        j["limit"] = res.limit;
        out << j.dump() << '\n';
    } else {
        out << "max_height = " << res.max_height << " at n = " << res.argmax_n << " ("
            << res.count << " values below " << res.limit << ")\n";
    }
    return kExitOk;
}

int cmd_verify(const std::string& suite, std::uint64_t nmax, const Options& opt,
               std::ostream& out) {
    std::vector<SuiteResult> results;
    auto want = [&suite](const char* name) { return suite == "all" || suite == name; };
    if (want("identities")) results.push_back(verify_identities(nmax));
    if (want("trig")) results.push_back(verify_trig(std::min<std::uint64_t>(nmax, 300)));
    if (want("dft")) results.push_back(verify_dft(std::min<std::uint64_t>(nmax, 200)));
    if (want("series")) results.push_back(verify_series(nmax));
    if (want("kron")) results.push_back(verify_kron(nmax));
    if (want("heights")) results.push_back(verify_heights(nmax));

    bool all_ok = true;
    if (opt.json()) {
        ojson j;
        j["schema"] = 1;
        ojson arr = ojson::array();
        for (const auto& r : results) {
            all_ok = all_ok && r.ok;
            ojson e;
            e["name"] = r.name;
            e["ok"] = r.ok;
            e["checks"] = r.checks;
            if (!r.ok) e["message"] = r.message;
            arr.push_back(e);
        }
        j["suites"] = arr;
        j["ok"] = all_ok;
        out << j.dump() << '\n';
    } else {
        for (const auto& r : results) {
            all_ok = all_ok && r.ok;
            if (r.ok)
                out << "PASS " << r.name << " (" << r.checks << " checks)\n";
            else
                out << "FAIL " << r.name << ": " << r.message << '\n';
        }
    }
    return all_ok ? kExitOk : kExitVerification;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"unitary cyclotomic polynomial toolkit"};
    app.require_subcommand(1);

    Options opt;

    // phi
    auto* phi = app.add_subcommand("phi", "compute Phi_n or Phi*_n");
    std::uint64_t phi_n = 1;
    bool phi_unitary = false;
    std::string phi_algorithm;
    phi->add_option("n", phi_n, "index n >= 1")->required();
    phi->add_flag("--unitary", phi_unitary, "unitary cyclotomic Phi*_n");
    phi->add_option("--algorithm", phi_algorithm, "construction route (with --unitary)")
        ->check(CLI::IsMember({"mobius_product", "cyclo_factors", "kernel_reduction",
                               "quotient_tower"}));
    phi->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a polynomial at an integer");
    std::string eval_poly, eval_at;
    std::uint64_t eval_n = 0;
    bool eval_unitary = false;
    eval->add_option("--poly", eval_poly, "polynomial text");
    eval->add_option("--n", eval_n, "evaluate Phi_n / Phi*_n instead of --poly");
    eval->add_flag("--unitary", eval_unitary);
    eval->add_option("--at", eval_at, "integer evaluation point")->required();
    eval->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

    // ramanujan
    auto* rama = app.add_subcommand("ramanujan", "Ramanujan sums c_n(k) and c*_n(k)");
    std::uint64_t rama_n = 1, rama_k = 1;
    rama->add_option("n", rama_n)->required();
    rama->add_option("k", rama_k)->required();
    rama->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

    // qpoly
    auto* qp = app.add_subcommand("qpoly", "inclusion-exclusion polynomial Q_rho");
    std::vector<std::uint64_t> qp_rho;
    qp->add_option("--rho", qp_rho, "comma-separated pairwise-coprime entries > 1")
        ->required()
        ->delimiter(',');
    qp->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

    // identify
    auto* ident = app.add_subcommand("identify", "classify a polynomial");
    std::string ident_poly;
    ident->add_option("--poly", ident_poly, "polynomial text")->required();
    ident->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

    // scan-heights
    auto* scan = app.add_subcommand("scan-heights", "height survey over smooth n");
    std::vector<std::uint64_t> scan_primes{2, 3, 5};
    std::uint64_t scan_limit = 0, scan_budget = 0;
    unsigned scan_threads = 0;
    bool scan_require_all = false, scan_resume = false;
    std::string scan_output;
    scan->add_option("--primes", scan_primes, "allowed primes")->delimiter(',');
    scan->add_option("--limit", scan_limit, "upper bound (exclusive)")->required();
    scan->add_flag("--require-all-primes", scan_require_all, "every prime must appear");
    scan->add_option("--threads", scan_threads, "worker count (UCP_THREADS fallback)");
    scan->add_option("--memory-budget", scan_budget, "coefficient buffer budget in bytes");
    scan->add_option("--output", scan_output, "file for n<TAB>height records");
    scan->add_flag("--resume", scan_resume, "skip n already present in --output");
    scan->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

    // witness
    auto* wit = app.add_subcommand("witness", "search for a coefficient value");
    std::string wit_value;
    std::uint64_t wit_nmax = 200;
    std::uint64_t wit_jmax_val = 0;
    bool wit_has_jmax = false;
    wit->add_option("--value", wit_value, "target coefficient")->required();
    wit->add_option("--nmax", wit_nmax, "largest n scanned");
    auto* jopt = wit->add_option("--jmax", wit_jmax_val, "largest coefficient index");
    wit->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

    // verify
    auto* ver = app.add_subcommand("verify", "run identity suites");
    std::string ver_suite = "all";
    std::uint64_t ver_nmax = 200;
    ver->add_option("--suite", ver_suite)
        ->check(CLI::IsMember({"identities", "trig", "dft", "series", "kron", "heights", "all"}));
    ver->add_option("--nmax", ver_nmax, "size knob for the suites");
    ver->add_option("--format", opt.format)->check(CLI::IsMember({"text", "json"}));

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        err << app.help();
        return kExitUsage;
    }
    wit_has_jmax = jopt->count() > 0;

    try {
        if (*phi) {
            if (!phi_unitary && !phi_algorithm.empty()) {
                err << "error: --algorithm requires --unitary\n";
                return kExitUsage;
            }
            return cmd_phi(phi_n, phi_unitary, phi_algorithm, opt, out);
        }
        if (*eval) {
            if (eval_poly.empty() == (eval_n == 0)) {
                err << "error: eval needs exactly one of --poly or --n\n";
                return kExitUsage;
            }
            return cmd_eval(eval_poly, eval_n, eval_unitary, eval_at, opt, out);
        }
        if (*rama) return cmd_ramanujan(rama_n, rama_k, opt, out);
        if (*qp) return cmd_qpoly(qp_rho, opt, out);
        if (*ident) return cmd_identify(ident_poly, opt, out);
        if (*scan)
            return cmd_scan_heights(scan_primes, scan_limit, scan_require_all, scan_threads,
                                    scan_budget, scan_output, scan_resume, opt, out);
        if (*wit)
            return cmd_witness(wit_value, wit_nmax,
                               wit_has_jmax ? std::optional<std::uint64_t>(wit_jmax_val)
                                            : std::nullopt,
                               opt, out);
        if (*ver) return cmd_verify(ver_suite, ver_nmax, opt, out);
        err << "error: no subcommand\n";
        return kExitUsage;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const VerificationError& e) {
        err << "verification failure: " << e.what() << '\n';
        return kExitVerification;
    } catch (const PolyParseError& e) {
        err << "parse error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const DivisibilityError& e) {
        err << "divisibility error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const ResourceError& e) {
        err << "resource error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::domain_error& e) {
        err << "domain error: " << e.what() << '\n';
        return kExitDomain;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << '\n';
        return kExitDomain;
    }
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run_cli(args, out, err);
}

} // namespace ucp
