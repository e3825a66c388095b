#include <qhahn/suite.hpp>

#include <qhahn/rogers.hpp>
#include <qhahn/sampling.hpp>

#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <sstream>

namespace qhahn {

namespace {

using ordered_json = nlohmann::ordered_json;

constexpr int kPropCondsMaxN = 10;
constexpr int kChuMaxN = 8;
constexpr int kExtGenMaxK = 3;
constexpr int kQdeFMaxK = 2;
constexpr int kSaOrder = 8;
constexpr int kRogersOrder = 8;
constexpr int kExtRogersOrderT = 6;
constexpr int kExtRogersOrderS = 4;
constexpr int kExtRogersCapK = 512;

QContext<Rational> exact_context(const Rational& q) {
    return QContext<Rational>(q, 256, 1e-12);
}

QContext<double> float_context(const Rational& q) {
    return QContext<double>(q.get_d(), 512, default_tail_tol());
}

/// Runs the verifier for one identity at one sampled point. `exact`
/// selects the arithmetic for dual-mode identities.
IdentityReport dispatch(IdentityId id, const SampledPoint& sp, bool exact,
                        int order, double tol) {
    const ParameterPoint& pt = sp.point;

    auto coefficient = [&](auto&& fn) {
        if (exact) {
            auto ctx = exact_context(sp.q);
            return fn(ctx);
        }
        auto ctx = float_context(sp.q);
        return fn(ctx);
    };

    switch (id) {
        case IdentityId::GEN:
            return coefficient([&](auto& ctx) {
                return verify_generating(pt, order, ctx, tol);
            });
        case IdentityId::EXT_GEN:
            return coefficient([&](auto& ctx) {
                IdentityReport worst;
                for (int k = 0; k <= kExtGenMaxK; ++k) {
                    auto rep = verify_extended_generating(pt, k, order, ctx, tol);
                    if (k == 0 || rep.max_deviation > worst.max_deviation)
                        worst = rep;
                }
                worst.pass = worst.max_deviation <= tol;
                return worst;
            });
        case IdentityId::CAUCHY_GEN:
            return coefficient([&](auto& ctx) {
                return verify_cauchy_gen(pt, order, ctx, tol);
            });
        case IdentityId::QBINOMIAL_THM:
            return coefficient([&](auto& ctx) {
                return verify_qbinomial_theorem(pt, order, ctx, tol);
            });
        case IdentityId::EULER_PAIR:
            return coefficient([&](auto& ctx) {
                return verify_euler_pair(pt, order, ctx, tol);
            });
        case IdentityId::SRIVAS:
            return coefficient([&](auto& ctx) {
                return verify_srivas(pt, order, ctx, tol);
            });
        case IdentityId::ASC_GEN:
            return coefficient([&](auto& ctx) {
                return verify_asc_genfun(pt, order, ctx, tol);
            });
        case IdentityId::CHU_VANDERMONDE:
            return coefficient([&](auto& ctx) {
                IdentityReport worst;
                for (int n = 0; n <= kChuMaxN; ++n) {
                    auto rep = verify_chu_vandermonde(n, pt, ctx, tol);
                    if (n == 0 || rep.max_deviation > worst.max_deviation)
                        worst = rep;
                }
                worst.pass = worst.max_deviation <= tol;
                worst.order_or_points = kChuMaxN;
                return worst;
            });
        case IdentityId::PROP_CONDS:
            return coefficient([&](auto& ctx) {
                return verify_prop_conds(pt, kPropCondsMaxN, ctx, tol);
            });
        case IdentityId::SA: {
            auto ctx = float_context(sp.q);
            return verify_srivastava_agarwal(pt, std::min(order, kSaOrder), ctx, tol);
        }
        case IdentityId::SA_1CSUMS: {
            auto ctx = float_context(sp.q);
            return verify_sa_1csums(pt, std::min(order, kSaOrder), ctx, tol);
        }
        case IdentityId::LUMS: {
            auto ctx = float_context(sp.q);
            return verify_lums(pt, std::min(order, kSaOrder), ctx, tol);
        }
        case IdentityId::DD1SUMS: {
            auto ctx = float_context(sp.q);
            return verify_dd1sums(pt, std::min(order, kSaOrder), ctx, tol);
        }
        case IdentityId::HEINE: {
            auto ctx = float_context(sp.q);
            return verify_heine(pt, ctx, tol);
        }
        case IdentityId::ROGERS:
            return verify_rogers(pt, kRogersOrder, sp.q, tol);
        case IdentityId::EXT_ROGERS:
            return verify_extended_rogers(pt, kExtRogersOrderT, kExtRogersOrderS,
                                          kExtRogersCapK, sp.q, tol);
        case IdentityId::QDE_F: {
            auto ctx = float_context(sp.q);
            IdentityReport worst;
            for (long k = 0; k <= kQdeFMaxK; ++k) {
                ParameterPoint with_k = pt;
                with_k.k = k;
                auto rep = verify_qde_solutions(QdeKernel::ExtendedGenerating,
                                                with_k, ctx, tol);
                if (k == 0 || rep.max_deviation > worst.max_deviation)
                    worst = rep;
            }
            worst.pass = worst.max_deviation <= tol;
            return worst;
        }
        case IdentityId::QDE_G: {
            auto ctx = float_context(sp.q);
            return verify_qde_solutions(QdeKernel::Rogers, pt, ctx, tol);
        }
        case IdentityId::QDE_H: {
            auto ctx = float_context(sp.q);
            return verify_qde_solutions(QdeKernel::ExtendedRogers, pt, ctx, tol);
        }
        case IdentityId::QDE_HP: {
            auto ctx = float_context(sp.q);
            return verify_qde_solutions(QdeKernel::SrivastavaAgarwal, pt, ctx, tol);
        }
    }
    throw DomainViolation("dispatch: unknown identity id");
}

}  // namespace

bool identity_requires_float(IdentityId id) {
    return !identity_info(id).supports_exact;
}

double default_tail_tol() {
    static const double value = [] {
        if (const char* env = std::getenv("QHAHN_TAIL_TOL")) {
            char* end = nullptr;
            double v = std::strtod(env, &end);
            if (end != env && v > 0 && v < 1e-3) return v;
        }
        return 1e-12;
    }();
    return value;
}

IdentityOutcome run_identity(IdentityId id, NumericMode mode, int order,
                             int count, std::uint64_t seed, double tolerance) {
    const IdentityInfo& info = identity_info(id);
    const bool exact_requested = mode == NumericMode::ExactRational;
    const bool exact =
        (exact_requested && info.supports_exact) || !info.supports_float;

    IdentityOutcome outcome;
    outcome.id = id;
    outcome.mode = info.mode;
    outcome.arithmetic = exact ? NumericMode::ExactRational : NumericMode::Float;
    outcome.tolerance = exact ? 0.0 : tolerance;

    auto t0 = std::chrono::steady_clock::now();
    auto points = sample_points(info, seed, count);
    outcome.pass = true;
    for (const auto& sp : points) {
        auto p0 = std::chrono::steady_clock::now();
        IdentityReport rep = dispatch(id, sp, exact, order, outcome.tolerance);
        rep.elapsed_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - p0)
                .count();
        PointOutcome po;
        po.q = sp.q;
        po.params = rep.params;
        po.deviation = rep.max_deviation;
        po.pass = rep.pass;
        outcome.max_deviation = std::max(outcome.max_deviation, po.deviation);
        outcome.pass = outcome.pass && po.pass;
        outcome.points.push_back(std::move(po));
    }
    auto t1 = std::chrono::steady_clock::now();
    outcome.elapsed_ms =
        std::chrono::duration<double, std::milli>(t1 - t0).count();
    return outcome;
}

SuiteResult run_suite(const RunConfig& config) {
    SuiteResult result;
    result.config = config;
    for (const auto& info : catalogue()) {
        bool selected = config.all_identities;
        if (!selected)
            for (auto id : config.identities) selected = selected || id == info.id;
        if (!selected) continue;

        // An explicitly forced --mode cannot run an explicitly selected
        // identity whose only arithmetic is the other one; under 'all'
        // (or the default mode) such identities run in their native
        // arithmetic instead.
        if (!config.all_identities && config.mode_explicit) {
            if (config.mode == NumericMode::ExactRational &&
                identity_requires_float(info.id))
                throw ModeError(std::string(info.name) +
                                " supports only Float/PointNumeric "
                                "verification; run it without --mode exact");
            if (config.mode == NumericMode::Float && !info.supports_float)
                throw ModeError(std::string(info.name) +
                                " is verified exactly; run it without "
                                "--mode float");
        }

        double tol = info.float_tolerance;
        if (auto it = config.tolerance_overrides.find(info.id);
            it != config.tolerance_overrides.end())
            tol = it->second;

        auto outcome = run_identity(info.id, config.mode, config.order,
                                    config.points_per_identity, config.seed, tol);
        (outcome.pass ? result.n_pass : result.n_fail) += 1;
        result.results.push_back(std::move(outcome));
    }
    return result;
}

namespace {

const char* mode_name(VerifyMode m) {
    return m == VerifyMode::Coefficient ? "coefficient" : "point_numeric";
}

const char* arithmetic_name(NumericMode m) {
    return m == NumericMode::ExactRational ? "exact" : "float";
}

std::string format_deviation(double d) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3e", d);
    return buf;
}

ordered_json params_json(const PointOutcome& po) {
    ordered_json params = ordered_json::object();
    params["q"] = po.q.get_str();
    for (const auto& [name, value] : po.params.named_fields())
        params[name] = value;
    return params;
}

}  // namespace

std::string suite_to_json(const SuiteResult& result, bool include_elapsed) {
    ordered_json root;
    ordered_json cfg;
    cfg["mode"] = arithmetic_name(result.config.mode);
    cfg["order"] = result.config.order;
    cfg["points_per_identity"] = result.config.points_per_identity;
    cfg["seed"] = result.config.seed;
    if (result.config.all_identities) {
        cfg["identities"] = "all";
    } else {
        ordered_json ids = ordered_json::array();
        for (auto id : result.config.identities)
            ids.push_back(std::string(identity_name(id)));
        cfg["identities"] = ids;
    }
    if (!result.config.tolerance_overrides.empty()) {
        ordered_json tols = ordered_json::object();
        for (const auto& [id, tol] : result.config.tolerance_overrides)
            tols[std::string(identity_name(id))] = tol;
        cfg["tolerance_overrides"] = tols;
    }
    root["config"] = cfg;

    ordered_json results = ordered_json::array();
    for (const auto& outcome : result.results) {
        ordered_json entry;
        entry["id"] = std::string(identity_name(outcome.id));
        entry["mode"] = mode_name(outcome.mode);
        entry["arithmetic"] = arithmetic_name(outcome.arithmetic);
        entry["tolerance"] = outcome.tolerance;
        ordered_json points = ordered_json::array();
        for (const auto& po : outcome.points) {
            ordered_json p;
            p["params"] = params_json(po);
            p["deviation"] = po.deviation;
            p["verdict"] = po.pass ? "pass" : "fail";
            points.push_back(std::move(p));
        }
        entry["points"] = std::move(points);
        entry["max_deviation"] = outcome.max_deviation;
        entry["verdict"] = outcome.pass ? "pass" : "fail";
        if (include_elapsed) entry["elapsed_ms"] = outcome.elapsed_ms;
        results.push_back(std::move(entry));
    }
    root["results"] = std::move(results);
    root["summary"] = {{"pass", result.n_pass}, {"fail", result.n_fail}};
    return root.dump(2);
}

std::string suite_to_text(const SuiteResult& result) {
    std::ostringstream out;
    for (const auto& outcome : result.results) {
        out << (outcome.pass ? "PASS " : "FAIL ") << identity_name(outcome.id)
            << "  mode=" << mode_name(outcome.mode)
            << " arithmetic=" << arithmetic_name(outcome.arithmetic)
            << " points=" << outcome.points.size()
            << " max_deviation=" << format_deviation(outcome.max_deviation)
            << " elapsed_ms=" << format_deviation(outcome.elapsed_ms) << "\n";
    }
    out << "summary: " << result.n_pass << " pass, " << result.n_fail
        << " fail\n";
    return out.str();
}

std::string catalogue_to_json() {
    ordered_json root = ordered_json::array();
    for (const auto& info : catalogue()) {
        ordered_json entry;
        entry["id"] = std::string(info.name);
        entry["description"] = std::string(info.description);
        entry["constraints"] = std::string(info.constraints);
        entry["fields"] = std::string(info.fields);
        entry["mode"] = mode_name(info.mode);
        entry["supports_exact"] = info.supports_exact;
        entry["supports_float"] = info.supports_float;
        entry["float_tolerance"] = info.float_tolerance;
        root.push_back(std::move(entry));
    }
    return root.dump(2);
}

std::string catalogue_to_text() {
    std::ostringstream out;
    for (const auto& info : catalogue()) {
        const char* arith = info.supports_exact
                                ? (info.supports_float ? " (exact or float)"
                                                       : " (exact only)")
                                : " (float only)";
        out << info.name << "\n  " << info.description << "\n  mode: "
            << mode_name(info.mode) << arith << "\n  constraints: "
            << info.constraints << "\n  fields: " << info.fields << "\n";
    }
    return out.str();
}

}  // namespace qhahn
