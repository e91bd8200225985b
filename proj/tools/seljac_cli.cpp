#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>

#include <unistd.h>

#include "seljac/asymptotics.hpp"
#include "seljac/mc.hpp"
#include "seljac/schur_moments.hpp"
#include "seljac/verify.hpp"

using json = nlohmann::ordered_json;
using namespace seljac;

namespace {

// exit codes: 0 ok, 1 verification failure, 2 usage, 3 domain, 4 consistency
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitDomain = 3;
constexpr int kExitConsistency = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_rational_flag(const std::string& name, const std::string& text) {
    try {
        return Rational::parse(text);
    } catch (const DomainError& e) {
        throw UsageError("option " + name + ": " + e.what());
    }
}

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

void emit(const json& record, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << record.dump(2) << "\n";
    } else {
        std::ofstream os(out_path);
        if (!os) throw UsageError("cannot open --out file '" + out_path + "'");
        os << record.dump(2) << "\n";
    }
}

json make_record(const std::string& command, json inputs, const Rational& value,
                 const std::string& provenance) {
    json rec;
    rec["command"] = command;
    rec["inputs"] = std::move(inputs);
    rec["value"] = value.to_fraction_string();
    rec["decimal"] = value.to_decimal_string();
    rec["provenance"] = provenance;
    return rec;
}

// ------------------------------------------------------------------------ ik

struct IkArgs {
    long k = 0, n = 0;
    std::string a, b, out;
};

int run_ik(const IkArgs& args) {
    if (args.k < 1) throw UsageError("--k must be a positive integer");
    if (args.n < 1) throw UsageError("--n must be a positive integer");
    Rational a = parse_rational_flag("--a", args.a);
    Rational b = parse_rational_flag("--b", args.b);
    Rational value = ik_closed(args.k, a, b, args.n);
    json inputs;
    inputs["k"] = std::to_string(args.k);
    inputs["n"] = std::to_string(args.n);
    inputs["a"] = a.to_fraction_string();
    inputs["b"] = b.to_fraction_string();
    emit(make_record("ik", inputs, value, "power-sum closed form (alternating hook sum)"), args.out);
    return 0;
}

// --------------------------------------------------------------------- limit

struct LimitArgs {
    long k = 0;
    std::string a1, b1, form = "general", out;
};

int run_limit(const LimitArgs& args) {
    if (args.k < 1) throw UsageError("--k must be a positive integer");
    Rational a1 = parse_rational_flag("--a1", args.a1);
    Rational b1 = parse_rational_flag("--b1", args.b1);
    if (args.form != "general" && args.form != "l1l2" && args.form != "auto-special")
        throw UsageError("--form must be general, l1l2 or auto-special");

    Rational general = ik_limit(args.k, a1, b1);
    Rational l1 = Rational(1) + a1;
    Rational l2 = Rational(1) / (Rational(2) + a1 + b1);
    Rational via_l1l2 = ik_limit_l1l2(args.k, l1, l2);
    if (via_l1l2 != general)
        throw ConsistencyError("limit forms disagree: general " + general.to_fraction_string() +
                               " vs l1l2 " + via_l1l2.to_fraction_string());
    Rational regrouped = ik_limit_regrouped(args.k, a1, b1);
    if (regrouped != general)
        throw ConsistencyError("limit forms disagree: general " + general.to_fraction_string() +
                               " vs regrouped " + regrouped.to_fraction_string());

    std::string special_name;
    std::optional<Rational> special_value;
    if (auto branch = limit_special_zero_one(args.k, a1, b1)) {
        special_name = (*branch == Rational(0)) ? "a1=-1" : "b1=-1";
        special_value = *branch;
    } else if (a1 == Rational(0) && b1 == Rational(0)) {
        special_name = "central-binomial";
        special_value = limit_central_binomial(args.k);
    } else if (a1 == Rational(0)) {
        special_name = "catalan";
        special_value = limit_catalan(args.k, b1 + Rational(1));
    } else if (b1 == Rational(0)) {
        special_name = "dyck";
        special_value = limit_dyck(args.k, a1 + Rational(1));
    }
    if (special_value && *special_value != general)
        throw ConsistencyError("special case '" + special_name + "' disagrees: " +
                               special_value->to_fraction_string() + " vs general " +
                               general.to_fraction_string());

    std::string provenance = "limit double sum";
    if (args.form == "l1l2") provenance = "limit single sum in (l1, l2)";
    if (args.form == "auto-special" && special_value) provenance = "special case " + special_name;

    json inputs;
    inputs["k"] = std::to_string(args.k);
    inputs["a1"] = a1.to_fraction_string();
    inputs["b1"] = b1.to_fraction_string();
    inputs["form"] = args.form;
    json rec = make_record("limit", inputs, general, provenance);
    rec["special"] = special_name.empty() ? json(nullptr) : json(special_name);
    emit(rec, args.out);
    return 0;
}

// --------------------------------------------------------------------- table

struct TableArgs {
    long k_max = 0;
    std::string a1, b1, a0 = "1", b0 = "1", n_list, out;
    bool skip_degenerate = false;
};

int run_table(const TableArgs& args) {
    if (args.k_max < 1) throw UsageError("--k-max must be a positive integer");
    ScalingParams params{parse_rational_flag("--a1", args.a1), parse_rational_flag("--a0", args.a0),
                         parse_rational_flag("--b1", args.b1), parse_rational_flag("--b0", args.b0)};

    std::set<long> ns;
    std::string token;
    std::istringstream stream(args.n_list);
    while (std::getline(stream, token, ',')) {
        if (token.empty()) continue;
        try {
            size_t pos = 0;
            long n = std::stol(token, &pos);
            if (pos != token.size() || n < 1) throw std::invalid_argument(token);
            ns.insert(n);
        } catch (const std::exception&) {
            throw UsageError("--n-list: '" + token + "' is not a positive integer");
        }
    }
    if (ns.empty()) throw UsageError("--n-list must contain at least one positive integer");

    std::ostringstream csv;
    csv << "k,N,ik_over_n,limit,abs_err,ik_over_n_exact,limit_exact,abs_err_exact\n";
    for (long k = 1; k <= args.k_max; ++k) {
        Rational limit = ik_limit(k, params.a1, params.b1);
        for (long n : ns) {
            Rational ik_over_n;
            try {
                ik_over_n = ik_closed(k, params.a_at(n), params.b_at(n), n) / Rational(n);
            } catch (const DomainError& e) {
                if (args.skip_degenerate) {
                    std::cerr << "skipping degenerate cell k=" << k << " N=" << n << ": "
                              << e.what() << "\n";
                    continue;
                }
                throw;
            }
            Rational err = (ik_over_n - limit).abs();
            csv << k << "," << n << "," << ik_over_n.to_decimal_string() << ","
                << limit.to_decimal_string() << "," << err.to_decimal_string() << ","
                << ik_over_n.to_fraction_string() << "," << limit.to_fraction_string() << ","
                << err.to_fraction_string() << "\n";
        }
    }
    if (args.out.empty()) {
        std::cout << csv.str();
    } else {
        std::ofstream os(args.out);
        if (!os) throw UsageError("cannot open --out file '" + args.out + "'");
        os << csv.str();
    }
    return 0;
}

// -------------------------------------------------------------------- verify

struct VerifyArgs {
    std::string suite = "all";
    bool as_json = false;
};

int run_verify(const VerifyArgs& args) {
    if (args.suite != "all" && args.suite != "identities" && args.suite != "oracles" &&
        args.suite != "limits" && args.suite != "conjecture")
        throw UsageError("--suite must be all, identities, oracles, limits or conjecture");

    std::vector<CheckResult> results = verify_suite(args.suite);
    bool all_pass = true;
    for (const auto& r : results) all_pass = all_pass && r.pass;

    if (args.as_json) {
        json rec;
        rec["command"] = "verify";
        rec["suite"] = args.suite;
        rec["all_pass"] = all_pass;
        rec["results"] = json::array();
        for (const auto& r : results)
            rec["results"].push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        std::cout << rec.dump(2) << "\n";
    } else {
        const bool color = isatty(fileno(stdout)) != 0 && std::getenv("NO_COLOR") == nullptr;
        const char* green = color ? "\033[32m" : "";
        const char* red = color ? "\033[31m" : "";
        const char* reset = color ? "\033[0m" : "";
        for (const auto& r : results) {
            if (r.pass)
                std::cout << green << "PASS" << reset << "  " << r.name << " (" << r.detail << ")\n";
            else
                std::cout << red << "FAIL" << reset << "  " << r.name << ": " << r.detail << "\n";
        }
        std::cout << (all_pass ? "all checks passed" : "some checks FAILED") << " ["
                  << results.size() << " checks]\n";
    }
    return all_pass ? 0 : kExitVerifyFail;
}

// ------------------------------------------------------------------------ mc

struct McArgs {
    long k = 0, n = 0;
    std::string a, b, out;
    uint64_t seed = 1;
    long samples = 100000, burn_in = 1000, thinning = 2;
    double step_width = 0.1;
};

int run_mc(const McArgs& args) {
    if (args.k < 1) throw UsageError("--k must be a positive integer");
    if (args.n < 1) throw UsageError("--n must be a positive integer");
    Rational a = parse_rational_flag("--a", args.a);
    Rational b = parse_rational_flag("--b", args.b);
    if (args.samples < 1 || args.burn_in < 1 || args.thinning < 1)
        throw UsageError("--samples, --burn-in and --thinning must be >= 1");
    if (!(args.step_width > 0.0) || !(args.step_width < 1.0))
        throw UsageError("--step-width must lie in (0, 1)");
    if (a.sign() <= 0 || b.sign() <= 0)
        throw DomainError("mc: need a > 0 and b > 0");

    ChainConfig cfg;
    cfg.seed = args.seed;
    cfg.samples = args.samples;
    cfg.burn_in = args.burn_in;
    cfg.thinning = args.thinning;
    cfg.step_width = args.step_width;

    McResult r = mc_sample_pk(args.k, args.n, a.to_double(), b.to_double(), cfg);
    Rational exact = ik_closed(args.k, a, b, args.n);
    double z = r.std_error > 0.0 ? (r.mean - exact.to_double()) / r.std_error : 0.0;

    if (r.acceptance_warning)
        std::cerr << "warning: acceptance rate " << fmt_double(r.acceptance_rate)
                  << " outside [0.05, 0.95]\n";

    json rec;
    rec["command"] = "mc";
    rec["inputs"] = {{"k", std::to_string(args.k)},
                     {"n", std::to_string(args.n)},
                     {"a", a.to_fraction_string()},
                     {"b", b.to_fraction_string()},
                     {"seed", std::to_string(args.seed)},
                     {"samples", std::to_string(args.samples)},
                     {"burn_in", std::to_string(args.burn_in)},
                     {"thinning", std::to_string(args.thinning)},
                     {"step_width", fmt_double(args.step_width)}};
    rec["estimate"] = fmt_double(r.mean);
    rec["std_error"] = fmt_double(r.std_error);
    rec["exact"] = exact.to_fraction_string();
    rec["exact_decimal"] = exact.to_decimal_string();
    rec["z_score"] = fmt_double(z);
    rec["acceptance_rate"] = fmt_double(r.acceptance_rate);
    rec["acceptance_warning"] = r.acceptance_warning;
    rec["provenance"] = "metropolis chain (mt19937_64, 53-bit uniforms)";
    emit(rec, args.out);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact finite-N Jacobi-ensemble averages, their large-N limits, and oracles"};
    app.require_subcommand(1);

    IkArgs ik_args;
    auto* ik_cmd = app.add_subcommand("ik", "average of the power sum p_k at finite N");
    ik_cmd->add_option("--k", ik_args.k, "power-sum order (>= 1)")->required();
    ik_cmd->add_option("--n", ik_args.n, "number of eigenvalues N (>= 1)")->required();
    ik_cmd->add_option("--a", ik_args.a, "weight exponent a, integer or p/q")->required();
    ik_cmd->add_option("--b", ik_args.b, "weight exponent b, integer or p/q")->required();
    ik_cmd->add_option("--out", ik_args.out, "write the JSON record to a file");

    LimitArgs limit_args;
    auto* limit_cmd = app.add_subcommand("limit", "limit of I_k/N under linear scalings");
    limit_cmd->add_option("--k", limit_args.k, "power-sum order (>= 1)")->required();
    limit_cmd->add_option("--a1", limit_args.a1, "slope of a(N), integer or p/q")->required();
    limit_cmd->add_option("--b1", limit_args.b1, "slope of b(N), integer or p/q")->required();
    limit_cmd->add_option("--form", limit_args.form, "general | l1l2 | auto-special");
    limit_cmd->add_option("--out", limit_args.out, "write the JSON record to a file");

    TableArgs table_args;
    auto* table_cmd = app.add_subcommand("table", "finite-N convergence table (CSV)");
    table_cmd->add_option("--k-max", table_args.k_max, "largest power-sum order")->required();
    table_cmd->add_option("--a1", table_args.a1, "slope of a(N)")->required();
    table_cmd->add_option("--b1", table_args.b1, "slope of b(N)")->required();
    table_cmd->add_option("--a0", table_args.a0, "offset of a(N), default 1");
    table_cmd->add_option("--b0", table_args.b0, "offset of b(N), default 1");
    table_cmd->add_option("--n-list", table_args.n_list, "comma-separated N values")->required();
    table_cmd->add_option("--out", table_args.out, "write the CSV to a file");
    table_cmd->add_flag("--skip-degenerate", table_args.skip_degenerate,
                        "skip degenerate cells with a note on stderr instead of failing");

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "run the exact cross-check suites");
    verify_cmd->add_option("--suite", verify_args.suite,
                           "all | identities | oracles | limits | conjecture");
    verify_cmd->add_flag("--json", verify_args.as_json, "machine-readable report");

    McArgs mc_args;
    auto* mc_cmd = app.add_subcommand("mc", "Metropolis estimate of p_k with exact reference");
    mc_cmd->add_option("--k", mc_args.k, "power-sum order (>= 1)")->required();
    mc_cmd->add_option("--n", mc_args.n, "number of eigenvalues (>= 1)")->required();
    mc_cmd->add_option("--a", mc_args.a, "weight exponent a > 0")->required();
    mc_cmd->add_option("--b", mc_args.b, "weight exponent b > 0")->required();
    mc_cmd->add_option("--seed", mc_args.seed, "64-bit generator seed (default 1)");
    mc_cmd->add_option("--samples", mc_args.samples, "kept samples (default 100000)");
    mc_cmd->add_option("--burn-in", mc_args.burn_in, "discarded sweeps (default 1000)");
    mc_cmd->add_option("--thinning", mc_args.thinning, "sweeps per kept sample (default 2)");
    mc_cmd->add_option("--step-width", mc_args.step_width, "proposal half-width in (0,1)");
    mc_cmd->add_option("--out", mc_args.out, "write the JSON record to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (ik_cmd->parsed()) return run_ik(ik_args);
        if (limit_cmd->parsed()) return run_limit(limit_args);
        if (table_cmd->parsed()) return run_table(table_args);
        if (verify_cmd->parsed()) return run_verify(verify_args);
        if (mc_cmd->parsed()) return run_mc(mc_args);
        std::cerr << "no subcommand selected\n";
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const DomainError& e) {
        std::cerr << "domain error: " << e.what() << "\n";
        return kExitDomain;
    } catch (const ConsistencyError& e) {
        std::cerr << "internal consistency error: " << e.what() << "\n";
        return kExitConsistency;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitConsistency;
    }
}
