#include "lpadic/cli.hpp"

#include "lpadic/certify.hpp"
#include "lpadic/irrat.hpp"
#include "lpadic/lvalues.hpp"
#include "lpadic/pade.hpp"
#include "lpadic/report_json.hpp"

#include "CLI11.hpp"

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <sstream>

namespace lpadic::cli {

namespace {

using nlohmann::json;

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct Defaults {
    long N = 128;
    int M = 40;
    long nmax = 50;
};

Defaults load_defaults(const std::string& path) {
    Defaults d;
    if (path.empty()) return d;
    boost::property_tree::ptree tree;
    try {
        boost::property_tree::read_ini(path, tree);
    } catch (const boost::property_tree::ini_parser_error& e) {
        throw UsageError(std::string("cannot read config: ") + e.what());
    }
    if (auto sec = tree.get_child_optional("defaults")) {
        try {
            d.N = sec->get<long>("N", d.N);
            d.M = sec->get<int>("M", d.M);
            d.nmax = sec->get<long>("nmax", d.nmax);
        } catch (const boost::property_tree::ptree_error& e) {
            throw UsageError(std::string("bad [defaults] entry: ") + e.what());
        }
    }
    return d;
}

json envelope(const std::string& command) { return {{"schemaVersion", kSchemaVersion}, {"command", command}}; }

unsigned long require_prime(long p) {
    if (p < 2 || !is_prime(static_cast<unsigned long>(p))) throw UsageError("not a prime: " + std::to_string(p));
    return static_cast<unsigned long>(p);
}

long require_positive(long v, const char* name) {
    if (v < 1) throw UsageError(std::string(name) + " must be positive");
    return v;
}

// Accepts --x a/F or --a with --F; both end up in lowest terms.
struct PointInput {
    std::string x;
    std::optional<long> a;
    std::optional<long> F;

    void add_to(CLI::App* app) {
        app->add_option("--x", x, "rational point a/F");
        app->add_option("--a", a, "numerator of the point");
        app->add_option("--F", F, "denominator of the point");
    }
    bool given() const { return !x.empty() || a || F; }
    BigRational value() const {
        if (!x.empty()) {
            if (a || F) throw UsageError("give either --x or --a/--F, not both");
            return BigRational::parse(x);
        }
        if (!a || !F) throw UsageError("a point needs --x a/F or both --a and --F");
        if (*F == 0) throw UsageError("--F must be nonzero");
        return {BigInt(*a), BigInt(*F)};
    }
    EvalPoint point(unsigned long p) const {
        const BigRational v = value();
        if (!v.num().fits_slong_p() || !v.den().fits_slong_p()) throw UsageError("point too large");
        return EvalPoint::make(v.num().get_si(), v.den().get_si(), p);
    }
};

struct Context {
    std::string config;
    Defaults defaults;
    std::map<std::string, CharacterSpec> characters;

    long N(const std::optional<long>& v) const { return require_positive(v.value_or(defaults.N), "N"); }
    long nmax(const std::optional<long>& v) const {
        const long n = v.value_or(defaults.nmax);
        if (n < 0) throw UsageError("nmax must be nonnegative");
        return n;
    }
    CharacterSpec character(const std::string& name) const {
        auto it = characters.find(name);
        if (it != characters.end()) return it->second;
        const auto names = CharacterSpec::builtin_names();
        if (std::find(names.begin(), names.end(), name) == names.end())
            throw UsageError("unknown character '" + name + "'");
        return CharacterSpec::builtin(name);
    }
};

struct Output {
    std::string text;
    int code = kSuccess;
};

Output json_output(const json& j, int code = kSuccess) { return {j.dump(2) + "\n", code}; }

bool all_quoted_pass(const std::vector<CheckResult>& v) {
    return std::all_of(v.begin(), v.end(), [](const CheckResult& r) { return !r.quoted || r.passed; });
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"p-adic L-values, Pade approximations and irrationality diagnostics", "lpadic"};
    app.require_subcommand(1);
    Context ctx;
    std::string output_path;
    std::string metadata_path;
    app.add_option("--config", ctx.config, "INI file with character tables and a [defaults] section");
    app.add_option("-o,--output", output_path, "write the report to this file instead of stdout");
    app.add_option("--metadata", metadata_path, "write a sidecar JSON with timestamp and arguments");

    std::function<Output()> action;

    // compute ------------------------------------------------------------------------------------
    auto* compute = app.add_subcommand("compute", "evaluate a p-adic value");
    compute->require_subcommand(1);
    struct {
        long p = 0;
        long s = 0;
        std::optional<long> N;
        std::string chr;
        long period_multiple = 1;
        std::string kind;
        bool fc = false;
        PointInput pt;
    } cv;

    auto* zeta = compute->add_subcommand("zeta", "zeta_p(s)");
    zeta->add_option("-p,--p", cv.p, "prime")->required();
    zeta->add_option("-s,--s", cv.s, "integer argument")->required();
    zeta->add_option("-N,--N", cv.N, "p-adic digits");
    zeta->callback([&] {
        action = [&] {
            return Output{zeta_p(cv.s, require_prime(cv.p), ctx.N(cv.N)).render() + "\n"};
        };
    });

    auto* lval = compute->add_subcommand("lvalue", "L_p(s, chi)");
    lval->add_option("--char", cv.chr, "character: chi4, chi5, chi8, chi12, trivial or one from --config")->required();
    lval->add_option("-p,--p", cv.p, "prime")->required();
    lval->add_option("-s,--s", cv.s, "integer argument")->required();
    lval->add_option("-N,--N", cv.N, "p-adic digits");
    lval->add_option("--period-multiple", cv.period_multiple, "sum over this multiple of the base period");
    lval->callback([&] {
        action = [&] {
            return Output{
                lp(cv.s, ctx.character(cv.chr), require_prime(cv.p), ctx.N(cv.N), cv.period_multiple).render() + "\n"};
        };
    });

    auto* hur = compute->add_subcommand("hurwitz", "H_p(s, a, F)");
    hur->add_option("-p,--p", cv.p, "prime")->required();
    hur->add_option("-s,--s", cv.s, "integer argument")->required();
    hur->add_option("-N,--N", cv.N, "p-adic digits");
    cv.pt.add_to(hur);
    hur->callback([&] {
        action = [&] {
            const unsigned long p = require_prime(cv.p);
            if (!cv.pt.a || !cv.pt.F || !cv.pt.x.empty()) throw UsageError("hurwitz needs --a and --F");
            return Output{hurwitz_p(cv.s, *cv.pt.a, *cv.pt.F, p, ctx.N(cv.N)).render() + "\n"};
        };
    });

    auto* series = compute->add_subcommand("series", "Theta, R, T or theta at a/F");
    series->add_option("--kind", cv.kind, "Theta, R, T or theta")->required();
    series->add_option("-p,--p", cv.p, "prime")->required();
    series->add_option("-N,--N", cv.N, "p-adic digits");
    series->add_flag("--fc", cv.fc, "use the factorial-coefficient sums");
    cv.pt.add_to(series);
    series->callback([&] {
        action = [&] {
            const SeriesKind kind = [&] {
                try {
                    return parse_series_kind(cv.kind);
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
            }();
            const EvalPoint pt = cv.pt.point(require_prime(cv.p));
            const long N = ctx.N(cv.N);
            return Output{(cv.fc ? eval_series_fc(kind, pt, N) : eval_series(kind, pt, N)).render() + "\n"};
        };
    });

    // verify -------------------------------------------------------------------------------------
    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->require_subcommand(1);
    struct {
        std::optional<long> N;
        std::optional<int> M;
        std::vector<std::string> ids;
        int pade_nmax = 12;
    } vv;

    auto* ident = verify->add_subcommand("identities", "the p-adic identity suite");
    ident->add_option("-N,--N", vv.N, "p-adic digits (at least 16)");
    ident->add_option("--id", vv.ids, "restrict to these identity ids");
    ident->callback([&] {
        action = [&] {
            const long N = ctx.N(vv.N);
            if (N < 16) throw UsageError("N must be at least 16");
            std::vector<std::string> ids = vv.ids.empty() ? identity_ids() : vv.ids;
            const auto known = identity_ids();
            for (const auto& id : ids)
                if (std::find(known.begin(), known.end(), id) == known.end()) throw UsageError("unknown identity '" + id + "'");
            json j = envelope("verify identities");
            j["N"] = N;
            j["identities"] = json::array();
            bool ok = true;
            for (const auto& id : ids) {
                const auto rep = verify_identity(id, N);
                ok = ok && rep.passed;
                j["identities"].push_back(to_json(rep));
            }
            j["passed"] = ok;
            return json_output(j, ok ? kSuccess : kVerificationFailed);
        };
    });

    auto* symb = verify->add_subcommand("symbolic", "functional equations, factorial sums, Pade orders");
    symb->add_option("-M,--M", vv.M, "Laurent truncation order (at least 8)");
    symb->add_option("--pade-nmax", vv.pade_nmax, "largest n for the Pade order checks");
    symb->callback([&] {
        action = [&] {
            const int M = vv.M.value_or(ctx.defaults.M);
            if (M < 8) throw UsageError("M must be at least 8");
            if (vv.pade_nmax < 0) throw UsageError("pade-nmax must be nonnegative");
            json j = envelope("verify symbolic");
            j["M"] = M;
            const auto fe = check_functional_equations(M);
            const auto fc = check_fc_identities(std::min(M, 20), std::min(M, 20) + 10);
            bool ok = all_quoted_pass(fe) && all_quoted_pass(fc);
            j["functionalEquations"] = json::array();
            for (const auto& r : fe) j["functionalEquations"].push_back(to_json(r));
            j["fcIdentities"] = json::array();
            for (const auto& r : fc) j["fcIdentities"].push_back(to_json(r));
            j["padeOrder"] = json::array();
            for (Family f : {Family::I, Family::II, Family::III, Family::IV}) {
                for (int n = 0; n <= vv.pade_nmax; ++n) {
                    const auto r = check_pade_order(f, n, pade_order(f, n) + 6);
                    json e = to_json(r);
                    if (!r.passed) e["negatedTargetStatus"] = check_pade_order(f, n, pade_order(f, n) + 6, -1).passed ? "pass" : "fail";
                    ok = ok && r.passed;
                    j["padeOrder"].push_back(e);
                }
            }
            j["passed"] = ok;
            return json_output(j, ok ? kSuccess : kVerificationFailed);
        };
    });

    auto* certs = verify->add_subcommand("certificates", "telescoping certificates and base cases");
    certs->callback([&] {
        action = [&] {
            json j = envelope("verify certificates");
            bool ok = true;
            j["certificates"] = json::array();
            for (const auto& c : certificate_catalog()) {
                const auto o = check_certificate(c);
                ok = ok && o.verified;
                j["certificates"].push_back(to_json(o));
            }
            j["mutants"] = json::array();
            for (const auto& c : mutated_certificates()) {
                const bool v = verify_certificate(c);
                ok = ok && !v;
                j["mutants"].push_back({{"id", c.id}, {"verifies", v}, {"status", v ? "fail" : "pass"}});
            }
            const auto base = check_base_cases();
            ok = ok && all_quoted_pass(base);
            j["baseCases"] = json::array();
            for (const auto& r : base) j["baseCases"].push_back(to_json(r));
            j["passed"] = ok;
            return json_output(j, ok ? kSuccess : kVerificationFailed);
        };
    });

    // convergents --------------------------------------------------------------------------------
    auto* conv = app.add_subcommand("convergents", "convergent table of a family at a rational point");
    struct {
        std::string family;
        std::optional<long> nmax;
        std::string format = "csv";
        std::optional<long> p;
        std::optional<long> N;
        int sign = 1;
        PointInput pt;
    } ov;
    conv->add_option("--family", ov.family, "I, II, III or IV")->required();
    conv->add_option("--nmax", ov.nmax, "last index");
    conv->add_option("--format", ov.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    conv->add_option("-p,--p", ov.p, "prime for the remainder valuation column");
    conv->add_option("-N,--N", ov.N, "p-adic digits for the remainder column");
    conv->add_option("--sign", ov.sign, "compare against sign * series value (1 or -1)");
    ov.pt.add_to(conv);
    conv->callback([&] {
        action = [&] {
            const Family f = [&] {
                try {
                    return parse_family(ov.family);
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
            }();
            if (ov.sign != 1 && ov.sign != -1) throw UsageError("--sign must be 1 or -1");
            const BigRational x = ov.pt.value();
            const long nmax = ctx.nmax(ov.nmax);
            CsvOptions opts;
            if (ov.p) {
                opts.point = ov.pt.point(require_prime(*ov.p));
                opts.N = ctx.N(ov.N);
                opts.target_sign = ov.sign;
            }
            if (ov.format == "csv") {
                std::ostringstream os;
                write_convergents_csv(os, f, x, nmax, opts);
                return Output{os.str()};
            }
            json j = envelope("convergents");
            j["family"] = to_string(f);
            j["x"] = x.to_string();
            json rows = json::array();
            for (const auto& r : convergent_seq(f, x, nmax))
                rows.push_back({{"n", r.n}, {"p", r.p.to_string()}, {"q", r.q.to_string()}});
            j["rows"] = rows;
            if (opts.point) {
                j["p"] = opts.point->p;
                j["N"] = opts.N;
                j["targetSign"] = opts.target_sign;
                j["remainders"] = to_json(remainder_valuation(f, *opts.point, opts.N, nmax, {opts.target_sign}));
            }
            return json_output(j);
        };
    });

    // irrationality ------------------------------------------------------------------------------
    auto* irr = app.add_subcommand("irrationality", "conditions, corollary table, audits and gap diagnostic");
    struct {
        std::string which;
        std::optional<long> p;
        std::optional<long> F;
        long digits = 60;
        bool table = false;
        std::string audit;
        std::string gap;
        std::string x;
        std::optional<long> a;
        std::optional<long> N;
        std::optional<long> nmax;
        int sign = 1;
        std::size_t window = 25;
    } iv;
    irr->add_option("--which", iv.which, "condition A, B or C");
    irr->add_option("-p,--p", iv.p, "prime");
    irr->add_option("--F", iv.F, "F (the condition's modulus, or the point's denominator)");
    irr->add_option("--digits", iv.digits, "decimal digits for the interval evaluation (at least 50)");
    irr->add_flag("--corollaries", iv.table, "emit the corollary table");
    irr->add_option("--audit", iv.audit, "denominator audit for family I, II or III");
    irr->add_option("--gap", iv.gap, "gap diagnostic for family I, II or III");
    irr->add_option("--x", iv.x, "rational point a/F");
    irr->add_option("--a", iv.a, "numerator of the point");
    irr->add_option("-N,--N", iv.N, "p-adic digits for the gap diagnostic");
    irr->add_option("--nmax", iv.nmax, "last index");
    irr->add_option("--sign", iv.sign, "compare against sign * series value (1 or -1)");
    irr->add_option("--window", iv.window, "tail window for the gap diagnostic");
    irr->callback([&] {
        action = [&] {
            const int modes = (!iv.which.empty()) + iv.table + (!iv.audit.empty()) + (!iv.gap.empty());
            if (modes != 1) throw UsageError("choose exactly one of --which, --corollaries, --audit, --gap");
            json j = envelope("irrationality");
            auto family = [](const std::string& s) {
                try {
                    return parse_family(s);
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
            };
            PointInput pt;
            pt.x = iv.x;
            pt.a = iv.a;
            pt.F = iv.F;
            if (!iv.which.empty()) {
                Condition c;
                try {
                    c = parse_condition(iv.which);
                } catch (const std::invalid_argument& e) {
                    throw UsageError(e.what());
                }
                if (!iv.p || !iv.F) throw UsageError("--which needs --p and --F");
                j["condition"] = to_json(condition(c, require_prime(*iv.p), *iv.F, iv.digits));
                j["condition"]["stableUnderDoubling"] = condition_stable(c, require_prime(*iv.p), *iv.F, iv.digits);
            } else if (iv.table) {
                j["corollaries"] = json::array();
                for (const auto& e : corollary_table()) j["corollaries"].push_back(to_json(e));
            } else if (!iv.audit.empty()) {
                const BigRational x = pt.value();
                if (!x.num().fits_slong_p() || !x.den().fits_slong_p()) throw UsageError("point too large");
                j["audit"] = to_json(denominator_audit(family(iv.audit), x.num().get_si(), x.den().get_si(), ctx.nmax(iv.nmax)));
            } else {
                if (!iv.p) throw UsageError("--gap needs --p");
                if (iv.sign != 1 && iv.sign != -1) throw UsageError("--sign must be 1 or -1");
                const EvalPoint ep = pt.point(require_prime(*iv.p));
                j["gap"] = to_json(gap_diagnostic(family(iv.gap), ep, ctx.N(iv.N), ctx.nmax(iv.nmax), iv.sign), iv.window);
            }
            return json_output(j);
        };
    });

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return kSuccess;
        }
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        ctx.defaults = load_defaults(ctx.config);
        if (!ctx.config.empty()) ctx.characters = load_characters(ctx.config);
        if (!action) throw UsageError("no command given");
        const Output o = action();
        if (output_path.empty()) {
            out << o.text;
        } else {
            std::ofstream f(output_path);
            if (!f) throw UsageError("cannot write " + output_path);
            f << o.text;
        }
        if (!metadata_path.empty()) {
            std::ofstream f(metadata_path);
            if (!f) throw UsageError("cannot write " + metadata_path);
            const auto now = std::chrono::system_clock::now().time_since_epoch();
            f << json{{"schemaVersion", kSchemaVersion},
                      {"arguments", args},
                      {"unixTime", std::chrono::duration_cast<std::chrono::seconds>(now).count()},
                      {"exitCode", o.code}}
                     .dump(2)
              << "\n";
        }
        return o.code;
    } catch (const PrecisionError& e) {
        err << "precision error: " << e.what() << "\n";
        return kPrecision;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        err << "computation failed: " << e.what() << "\n";
        return kPrecision;
    }
}

}  // namespace lpadic::cli
