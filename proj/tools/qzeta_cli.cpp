#include "qzeta/json_io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace qzeta;

namespace {

enum Exit { kOk = 0, kIdentityFailure = 1, kConfigError = 2, kDomainError = 3 };

struct Common {
    std::string q = "1/2";
    long digits = 50;
    long K = 10;
    std::string tol;
    std::string format = "json";
    std::string out;
    long threads = 1;
};

void add_common(CLI::App* cmd, Common& c, const std::string& default_format) {
    c.format = default_format;
    cmd->add_option("--digits", c.digits, "working decimal digits")->capture_default_str();
    cmd->add_option("--K", c.K, "initial number of zeros")->capture_default_str();
    cmd->add_option("--tol", c.tol, "tolerance (default depends on the command)");
    cmd->add_option("--format", c.format, "json or csv")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    cmd->add_option("--out", c.out, "output path (default stdout)");
    cmd->add_option("--threads", c.threads, "parallel grid points")->check(CLI::Range(1L, 64L))->capture_default_str();
}

void emit(const Common& c, const std::string& text) {
    if (c.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw Error(ErrorKind::Config, "cannot open output file " + c.out);
    f << text;
}

PrecisionContext make_ctx(const Common& c) { return PrecisionContext::parse(c.q, c.digits, c.tol); }

// ---------------------------------------------------------------- zeros

struct ZerosArgs {
    std::string kind = "sin";
    std::string nu = "1/2";
};

int cmd_zeros(const Common& c, const ZerosArgs& z) {
    PrecisionContext ctx = make_ctx(c);
    WorkingScope ws(ctx);
    if (c.K < 1) throw Error(ErrorKind::Config, "--K must be >= 1");
    ZeroKind kind = parse_zero_kind(z.kind);
    Real nu(parse_rational(z.nu));
    ZeroTable t = locate_zeros(kind, c.K, ctx, nu);

    std::ostringstream diag;
    if (kind != ZeroKind::Bessel) {
        ZeroTable partner = locate_zeros(kind == ZeroKind::Sin ? ZeroKind::Cos : ZeroKind::Sin, c.K, ctx);
        bool inter = kind == ZeroKind::Sin ? interlaced(partner, t) : interlaced(t, partner);
        diag << "interlaces " << to_string(partner.kind) << ": " << (inter ? "yes" : "no") << "\n";
        if (t.size() >= 4) {
            AsymptoticReport rep = asymptotic_diagnostics(t, ctx, &partner);
            diag << "x_k q^2k / A: first " << rep.scaled.front().str(8) << ", last " << rep.limit_estimate.str(8)
                 << "\n";
            diag << "deviation decreasing from k=4: " << (rep.deviation_decreasing ? "yes" : "no")
                 << ", quotient signs: " << (rep.quotient_signs_ok ? "ok" : "wrong")
                 << ", bounded: " << (rep.bounded ? "yes" : "no") << "\n";
        }
    }
    std::cerr << diag.str();

    if (c.format == "csv") {
        std::ostringstream os;
        write_csv(os, t);
        emit(c, os.str());
    } else {
        emit(c, zero_table_json(t, c.digits).dump(2) + "\n");
    }
    return kOk;
}

// ---------------------------------------------------------------- numbers

struct NumbersArgs {
    long N = 6;
    std::string what = "bernoulli";
};

int cmd_numbers(const Common& c, const NumbersArgs& a) {
    if (a.N < 0 || a.N > 32) throw Error(ErrorKind::Config, "--N must be in 0..32");
    std::vector<RF> numbers;
    if (a.what == "bernoulli") {
        numbers = q_bernoulli_numbers(a.N);
    } else {
        EulerFamily fam = q_euler_polys_and_numbers(a.N);
        numbers = a.what == "euler" ? fam.tilde : fam.genocchi;
    }
    if (c.format == "csv") {
        std::ostringstream os;
        os << "n,value\n";
        for (size_t n = 0; n < numbers.size(); ++n) os << n << ",\"" << numbers[n].str() << "\"\n";
        emit(c, os.str());
        return kOk;
    }
    Json j;
    j["what"] = a.what;
    j["N"] = a.N;
    Json rows = Json::array();
    for (size_t n = 0; n < numbers.size(); ++n) {
        Json r = rf_json(numbers[n]);
        r["n"] = n;
        rows.push_back(r);
    }
    j["numbers"] = rows;
    emit(c, j.dump(2) + "\n");
    return kOk;
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
    std::string function;
    std::string s = "2";
    std::string s_im = "0";
    std::string a;
    long n = 1;
    std::string nu = "1/2";
    std::string route = "series";
};

int cmd_eval(const Common& c, const EvalArgs& e) {
    PrecisionContext ctx = make_ctx(c);
    WorkingScope ws(ctx);
    SpectralContext sc(ctx, c.K);
    Complex s(Real(parse_rational(e.s)), Real(parse_rational(e.s_im)));
    std::optional<BigRational> a;
    if (!e.a.empty()) a = parse_rational(e.a);
    auto need_a = [&]() -> const BigRational& {
        if (!a) throw Error(ErrorKind::Config, e.function + " needs --a");
        return *a;
    };
    auto need_integer_s = [&]() -> long {
        Real re = s.real();
        if (!s.imag().is_zero() || floor(re) != re) throw Error(ErrorKind::Domain, "contour route needs integer s");
        return re.to_long();
    };

    EvalRecord rec;
    rec.function = e.function;
    rec.s = s;
    rec.a = a;
    rec.q = ctx.q_exact();
    rec.digits = c.digits;
    rec.route = e.route;
    auto take = [&](const SeriesValue& v) {
        rec.value = v.value;
        rec.tail_bound = v.tail_bound;
        rec.K_used = v.K_used;
    };
    const std::string& f = e.function;
    const std::string& route = e.route;
    if (f != "H_q" && f != "I_q" && f != "sigma" && route != "series")
        throw Error(ErrorKind::Config, "--route applies to H_q, I_q and sigma only");
    if (f == "zeta_q") take(zeta_q(s, sc));
    else if (f == "zeta_q_star") take(zeta_q_star(s, sc));
    else if (f == "eta_q") take(eta_q(s, sc));
    else if (f == "eta_q_star") take(eta_q_star(s, sc));
    else if (f == "continued_zeta_q") rec.value = continued_zeta_q(s, sc), rec.route = "continued";
    else if (f == "continued_zeta_q_star") rec.value = continued_zeta_q_star(s, sc), rec.route = "continued";
    else if (f == "F_q") take(F_q(s, need_a(), sc));
    else if (f == "R_q") take(R_q(s, need_a(), ctx));
    else if (f == "hurwitz") rec.value = hurwitz_zeta_q(s, need_a(), sc);
    else if (f == "H_q" || f == "I_q") {
        bool h = f == "H_q";
        if (route == "series") take(h ? H_q_series(s, need_a(), sc) : I_q_series(s, need_a(), sc));
        else if (route == "integral") rec.value = h ? H_q_integral(s, need_a(), ctx) : I_q_integral(s, need_a(), ctx);
        else if (route == "contour") {
            BigRational av = a ? *a : BigRational(0);
            long n = need_integer_s();
            rec.value = h ? H_q_contour_integer(n, av, sc) : I_q_contour_integer(n, av, sc);
        } else {
            throw Error(ErrorKind::Config, "--route must be series, integral or contour for " + f);
        }
    } else if (f == "sigma") {
        Real nu(parse_rational(e.nu));
        rec.s = Complex(2 * e.n);
        if (route == "taylor") rec.value = Complex(rayleigh_sigma_taylor(e.n, nu, ctx).back());
        else if (route == "series") take(rayleigh_sigma(e.n, nu, sc));
        else throw Error(ErrorKind::Config, "--route must be series or taylor for sigma");
    } else {
        throw Error(ErrorKind::Config, "unknown function " + f);
    }
    if (c.format == "csv") {
        std::ostringstream os;
        os << "function,route,q,s_re,s_im,a,value_re,value_im,tail_bound,K_used,digits\n"
           << rec.function << "," << rec.route << "," << to_string(rec.q) << "," << decimal(rec.s.real(), c.digits)
           << "," << decimal(rec.s.imag(), c.digits) << "," << (rec.a ? to_string(*rec.a) : "") << ","
           << decimal(rec.value.real(), c.digits) << "," << decimal(rec.value.imag(), c.digits) << ","
           << (rec.tail_bound ? rec.tail_bound->str(3) : "") << ","
           << (rec.K_used ? std::to_string(*rec.K_used) : "") << "," << rec.digits << "\n";
        emit(c, os.str());
        return kOk;
    }
    emit(c, eval_json(rec).dump(2) + "\n");
    return kOk;
}

// ---------------------------------------------------------------- verify / limits

struct VerifyArgs {
    std::vector<std::string> q_grid;
    std::vector<std::string> groups;
    long n_max = 3;
};

int finish_summary(const Common& c, const VerifySummary& s) {
    emit(c, summary_json(s, std::min<long>(c.digits, 30)).dump(2) + "\n");
    long disputed = 0;
    for (const auto& r : s.reports) disputed += r.disputed;
    std::cerr << s.reports.size() << " reports, " << s.failures << " undisputed failures, " << disputed
              << " disputed-candidate reports\n";
    for (const auto& a : s.adjudications)
        std::cerr << "  " << a.family << ": " << (a.winner.empty() ? "no winner" : a.winner)
                  << (a.consistent ? "" : " (inconsistent)") << "\n";
    for (const auto& r : s.reports)
        if (!r.disputed && !r.pass)
            std::cerr << "  FAIL " << r.id << " q=" << to_string(r.q) << " " << r.param << " abs_err "
                      << r.abs_err.str(3) << "\n";
    return s.undisputed_pass ? kOk : kIdentityFailure;
}

int cmd_verify(const Common& c, const VerifyArgs& v, bool q_given) {
    VerifyConfig cfg;
    if (q_given) {
        cfg.q_grid.clear();
        for (const auto& q : v.q_grid) {
            BigRational qv = parse_rational(q);
            PrecisionContext check(qv, c.digits);  // validates q and digits
            cfg.q_grid.push_back(qv);
        }
    }
    cfg.digits = c.digits;
    cfg.K = c.K;
    cfg.n_max = v.n_max;
    cfg.threads = c.threads;
    cfg.groups = v.groups;
    PrecisionScope ps(bits_for_digits(c.digits + kGuardDigits));
    if (!c.tol.empty()) {
        Real t(parse_rational(c.tol));
        if (t.sign() <= 0) throw Error(ErrorKind::Config, "tol must be positive");
        cfg.tol = t;
    }
    return finish_summary(c, run_verification(cfg));
}

int cmd_limits(const Common& c) {
    VerifyConfig cfg;
    cfg.q_grid.clear();
    cfg.groups = {"limits"};
    cfg.digits = c.digits;
    if (cfg.digits < 20) throw Error(ErrorKind::Config, "digits must be at least 20");
    return finish_summary(c, run_verification(cfg));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-analogs of zeta and eta from the zeros of q-trigonometric functions"};
    app.require_subcommand(1);

    Common zc, nc, ec, vc, lc;
    ZerosArgs zargs;
    NumbersArgs nargs;
    EvalArgs eargs;
    VerifyArgs vargs;

    auto* zeros = app.add_subcommand("zeros", "zero table of Sin_q, Cos_q or J_nu^(2)(.; q^2)");
    zeros->add_option("--q", zc.q, "q in (0,1), decimal or rational")->capture_default_str();
    add_common(zeros, zc, "csv");
    zeros->add_option("--kind", zargs.kind, "sin, cos or bessel")->capture_default_str();
    zeros->add_option("--nu", zargs.nu, "Bessel order")->capture_default_str();

    auto* numbers = app.add_subcommand("numbers", "exact q-Bernoulli, q-Euler or q-Genocchi numbers");
    add_common(numbers, nc, "json");
    numbers->add_option("--N", nargs.N, "largest index (<= 32)")->capture_default_str();
    numbers->add_option("--what", nargs.what, "bernoulli, euler or genocchi")
        ->check(CLI::IsMember({"bernoulli", "euler", "genocchi"}))
        ->capture_default_str();

    auto* eval = app.add_subcommand("eval", "evaluate one function");
    eval->add_option("function", eargs.function,
                     "zeta_q, zeta_q_star, eta_q, eta_q_star, continued_zeta_q, continued_zeta_q_star, F_q, R_q, "
                     "H_q, I_q, hurwitz, sigma")
        ->required();
    eval->add_option("--q", ec.q, "q in (0,1), decimal or rational")->capture_default_str();
    add_common(eval, ec, "json");
    eval->add_option("--s", eargs.s, "real part of s")->capture_default_str();
    eval->add_option("--s-im", eargs.s_im, "imaginary part of s")->capture_default_str();
    eval->add_option("--a", eargs.a, "shift parameter a");
    eval->add_option("--n", eargs.n, "Rayleigh index (sigma)")->capture_default_str();
    eval->add_option("--nu", eargs.nu, "Bessel order (sigma)")->capture_default_str();
    eval->add_option("--route", eargs.route, "series, integral, contour or taylor")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "evaluate both sides of every identity over a q grid");
    auto* qopt = verify->add_option("--q", vargs.q_grid, "grid values of q (default 0.3 0.5 0.7)");
    add_common(verify, vc, "json");
    verify->add_option("--groups", vargs.groups, "even, eta, recurrences, contour, bessel, limits")->delimiter(',');
    verify->add_option("--n-max", vargs.n_max, "largest n on the grid")->capture_default_str();

    auto* limits = app.add_subcommand("limits", "classical-limit trends along q = 0.9, 0.99, 0.999");
    add_common(limits, lc, "json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kConfigError;
    }

    try {
        if (*zeros) return cmd_zeros(zc, zargs);
        if (*numbers) return cmd_numbers(nc, nargs);
        if (*eval) return cmd_eval(ec, eargs);
        if (*verify) return cmd_verify(vc, vargs, qopt->count() > 0);
        if (*limits) return cmd_limits(lc);
    } catch (const Error& e) {
        std::cerr << "error (" << to_string(e.kind()) << "): " << e.what() << "\n";
        return e.kind() == ErrorKind::Config ? kConfigError : kDomainError;
    }
    return kConfigError;
}
