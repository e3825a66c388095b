// qhahn: batch verification of the q-series identity suite, and direct
// evaluation of the polynomial families, from the command line.
//
// Exit codes: 0 every selected verifier passed; 1 verification failure;
// 2 usage or input error.

#include <qhahn/catalogue.hpp>
#include <qhahn/errors.hpp>
#include <qhahn/polynomials.hpp>
#include <qhahn/suite.hpp>

#include <CLI11.hpp>

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<std::string> split_csv(const std::string& csv) {
    std::vector<std::string> out;
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

bool looks_like_decimal(const std::string& text) {
    return text.find('.') != std::string::npos ||
           text.find('e') != std::string::npos ||
           text.find('E') != std::string::npos;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

int run_verify(const std::string& identities_csv, const std::string& mode,
               bool mode_explicit, int order, int points, std::uint64_t seed,
               const std::string& tolerances_csv, const std::string& output,
               const std::string& out_file) {
    qhahn::RunConfig config;
    config.mode_explicit = mode_explicit;
    config.order = order;
    config.points_per_identity = points;
    config.seed = seed;

    if (mode == "exact") {
        config.mode = qhahn::NumericMode::ExactRational;
    } else if (mode == "float") {
        config.mode = qhahn::NumericMode::Float;
    } else {
        throw UsageError("--mode must be 'exact' or 'float'");
    }

    if (identities_csv == "all") {
        config.all_identities = true;
    } else {
        config.all_identities = false;
        for (const auto& name : split_csv(identities_csv)) {
            auto id = qhahn::identity_from_name(name);
            if (!id) throw UsageError("unknown identity '" + name + "'");
            config.identities.push_back(*id);
        }
        if (config.identities.empty())
            throw UsageError("--identities selected nothing");
    }

    for (const auto& item : split_csv(tolerances_csv)) {
        auto eq = item.find('=');
        if (eq == std::string::npos)
            throw UsageError("--tolerance entries are ID=value, got '" + item + "'");
        auto id = qhahn::identity_from_name(item.substr(0, eq));
        if (!id) throw UsageError("unknown identity in --tolerance: '" + item + "'");
        config.tolerance_overrides[*id] = std::stod(item.substr(eq + 1));
    }

    if (output == "json") {
        config.output = qhahn::OutputFormat::Json;
    } else if (output == "text") {
        config.output = qhahn::OutputFormat::Text;
    } else {
        throw UsageError("--output must be 'text' or 'json'");
    }

    qhahn::SuiteResult result;
    try {
        result = qhahn::run_suite(config);
    } catch (const qhahn::ModeError& e) {
        throw UsageError(e.what());
    }

    std::string report = config.output == qhahn::OutputFormat::Json
                             ? qhahn::suite_to_json(result)
                             : qhahn::suite_to_text(result);
    if (out_file.empty()) {
        std::cout << report << (report.ends_with('\n') ? "" : "\n");
    } else {
        std::ofstream out(out_file);
        if (!out) throw UsageError("cannot open --out file '" + out_file + "'");
        out << report << (report.ends_with('\n') ? "" : "\n");
    }
    return result.n_fail == 0 ? kExitPass : kExitFail;
}

// ---------------------------------------------------------------------------
// eval
// ---------------------------------------------------------------------------

struct EvalArgs {
    int n = 0;
    std::string q, a, x, y, z;
    std::string mode = "infer";
};

const std::string& require_arg(const std::string& value, const char* name) {
    if (value.empty())
        throw UsageError(std::string("this family requires --") + name);
    return value;
}

void forbid_arg(const std::string& value, const char* name) {
    if (!value.empty())
        throw UsageError(std::string("this family does not take --") + name);
}

template <typename T>
T parse_scalar(const std::string& text);

template <>
qhahn::Rational parse_scalar<qhahn::Rational>(const std::string& text) {
    try {
        return qhahn::parse_rational(text);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

template <>
double parse_scalar<double>(const std::string& text) {
    try {
        size_t used = 0;
        double v = std::stod(text, &used);
        if (used != text.size()) {
            // allow p/q in float mode too
            return qhahn::parse_rational(text).get_d();
        }
        return v;
    } catch (const std::exception&) {
        try {
            return qhahn::parse_rational(text).get_d();
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
}

template <typename T>
std::string eval_family(const std::string& family, const EvalArgs& args) {
    T q = parse_scalar<T>(require_arg(args.q, "q"));
    qhahn::QContext<T> ctx(q);
    T value(0);
    if (family == "cauchy") {
        forbid_arg(args.a, "a");
        forbid_arg(args.z, "z");
        value = qhahn::cauchy_p(args.n, parse_scalar<T>(require_arg(args.x, "x")),
                                parse_scalar<T>(require_arg(args.y, "y")), ctx);
    } else if (family == "psi") {
        value = qhahn::psi_trivariate(
            args.n, parse_scalar<T>(require_arg(args.a, "a")),
            parse_scalar<T>(require_arg(args.x, "x")),
            parse_scalar<T>(require_arg(args.y, "y")),
            parse_scalar<T>(require_arg(args.z, "z")), ctx);
    } else if (family == "f") {
        forbid_arg(args.a, "a");
        value = qhahn::f_trivariate(args.n,
                                    parse_scalar<T>(require_arg(args.x, "x")),
                                    parse_scalar<T>(require_arg(args.y, "y")),
                                    parse_scalar<T>(require_arg(args.z, "z")), ctx);
    } else if (family == "hahn2") {
        forbid_arg(args.z, "z");
        value = qhahn::hahn2(args.n, parse_scalar<T>(require_arg(args.a, "a")),
                             parse_scalar<T>(require_arg(args.x, "x")),
                             parse_scalar<T>(require_arg(args.y, "y")), ctx);
    } else if (family == "hahn1") {
        forbid_arg(args.y, "y");
        forbid_arg(args.z, "z");
        value = qhahn::hahn1(args.n, parse_scalar<T>(require_arg(args.a, "a")),
                             parse_scalar<T>(require_arg(args.x, "x")), ctx);
    } else if (family == "asc") {
        forbid_arg(args.y, "y");
        forbid_arg(args.z, "z");
        value = qhahn::al_salam_carlitz(
            args.n, parse_scalar<T>(require_arg(args.a, "a")),
            parse_scalar<T>(require_arg(args.x, "x")), ctx);
    } else {
        throw UsageError("unknown family '" + family +
                         "' (expected cauchy|psi|f|hahn2|hahn1|asc)");
    }
    if constexpr (qhahn::is_exact_scalar_v<T>) {
        return value.get_str();
    } else {
        char buf[64];
        auto [end, ec] = std::to_chars(buf, buf + sizeof buf, value);
        return std::string(buf, end);
    }
}

int run_eval(const std::string& family, const EvalArgs& args) {
    if (args.n < 0) throw UsageError("--n must be >= 0");
    bool any_decimal = false;
    for (const auto* v : {&args.q, &args.a, &args.x, &args.y, &args.z})
        any_decimal = any_decimal || looks_like_decimal(*v);

    bool use_exact;
    if (args.mode == "exact") {
        if (any_decimal)
            throw UsageError("exact mode takes rational literals like 1/2, "
                             "not decimals");
        use_exact = true;
    } else if (args.mode == "float") {
        use_exact = false;
    } else if (args.mode == "infer") {
        use_exact = !any_decimal;
    } else {
        throw UsageError("--mode must be 'exact', 'float', or 'infer'");
    }

    std::cout << (use_exact ? eval_family<qhahn::Rational>(family, args)
                            : eval_family<double>(family, args))
              << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"q-series identity verification and polynomial evaluation"};
    app.require_subcommand(1);

    // verify
    auto* verify = app.add_subcommand("verify", "run identity verifiers");
    std::string identities = "all";
    std::string mode = "exact";
    int order = 12;
    int points = 5;
    std::uint64_t seed = 0;
    std::string tolerances;
    std::string output = "text";
    std::string out_file;
    verify->add_option("--identities", identities,
                       "comma-separated identity ids, or 'all'");
    verify->add_option("--mode", mode, "exact|float (coefficient arithmetic)");
    verify->add_option("--order", order, "truncation order for series checks")
        ->check(CLI::Range(1, 64));
    verify->add_option("--points", points, "sampled parameter points per identity")
        ->check(CLI::Range(1, 1000));
    verify->add_option("--seed", seed, "sampling seed (full determinism)");
    verify->add_option("--tolerance", tolerances,
                       "per-identity overrides, ID=value[,ID=value...]");
    verify->add_option("--output", output, "text|json");
    verify->add_option("--out", out_file, "write the report to a file");

    // eval
    auto* eval = app.add_subcommand("eval", "evaluate a polynomial family");
    std::string family;
    EvalArgs eargs;
    eval->add_option("family", family, "cauchy|psi|f|hahn2|hahn1|asc")
        ->required();
    eval->add_option("--n", eargs.n, "degree")->required();
    eval->add_option("--q", eargs.q, "base q (rational p/q or decimal)");
    eval->add_option("--a", eargs.a, "parameter a");
    eval->add_option("--x", eargs.x, "argument x");
    eval->add_option("--y", eargs.y, "argument y");
    eval->add_option("--z", eargs.z, "argument z");
    eval->add_option("--mode", eargs.mode, "exact|float|infer");

    // list
    auto* list = app.add_subcommand("list", "print the identity catalogue");
    std::string list_output = "text";
    list->add_option("--output", list_output, "text|json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (verify->parsed())
            return run_verify(identities, mode, verify->count("--mode") > 0,
                              order, points, seed, tolerances, output, out_file);
        if (eval->parsed()) return run_eval(family, eargs);
        if (list->parsed()) {
            if (list_output == "json") {
                std::cout << qhahn::catalogue_to_json() << "\n";
            } else if (list_output == "text") {
                std::cout << qhahn::catalogue_to_text();
            } else {
                throw UsageError("--output must be 'text' or 'json'");
            }
            return kExitPass;
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qhahn::DomainViolation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const qhahn::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
