#ifndef QHAHN_SUITE_HPP
#define QHAHN_SUITE_HPP

// Batch verification runner behind the CLI: samples deterministic
// parameter points per identity, dispatches to the verifiers, and
// aggregates machine- and human-readable reports.

#include <qhahn/catalogue.hpp>
#include <qhahn/identities.hpp>
#include <qhahn/parameter_point.hpp>

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace qhahn {

enum class OutputFormat { Text, Json };

struct RunConfig {
    NumericMode mode = NumericMode::ExactRational;
    bool mode_explicit = false;  // true when the user forced --mode
    int order = 12;
    int points_per_identity = 5;
    std::uint64_t seed = 0;
    bool all_identities = true;
    std::vector<IdentityId> identities;  // used when !all_identities
    std::map<IdentityId, double> tolerance_overrides;
    OutputFormat output = OutputFormat::Text;
};

struct PointOutcome {
    Rational q;
    ParameterPoint params;
    double deviation = 0.0;
    bool pass = false;
};

struct IdentityOutcome {
    IdentityId id;
    VerifyMode mode;
    NumericMode arithmetic;
    double tolerance = 0.0;
    std::vector<PointOutcome> points;
    double max_deviation = 0.0;
    bool pass = false;
    double elapsed_ms = 0.0;
};

struct SuiteResult {
    RunConfig config;
    std::vector<IdentityOutcome> results;
    int n_pass = 0;
    int n_fail = 0;
};

/// Identities an explicit --mode exact request must reject (their only
/// arithmetic is Float); with --identities all they run in their native
/// arithmetic instead.
bool identity_requires_float(IdentityId id);

/// Float-mode tail tolerance for the suite's contexts. Read once at
/// startup from QHAHN_TAIL_TOL; defaults to 1e-12.
double default_tail_tol();

/// Runs one identity at `count` deterministic points. Throws
/// DomainViolation on exhausted sampling; ModeError when `mode` is
/// ExactRational and the identity is Float-only.
IdentityOutcome run_identity(IdentityId id, NumericMode mode, int order,
                             int count, std::uint64_t seed, double tolerance);

/// Runs the configured selection in catalogue order.
SuiteResult run_suite(const RunConfig& config);

/// Report serialization. JSON follows the schema
///   {config, results:[{id, mode, points:[{params, deviation, verdict}],
///    elapsed_ms}], summary:{pass, fail}};
/// with include_elapsed = false the elapsed fields are omitted (reports
/// are otherwise deterministic for a fixed config).
std::string suite_to_json(const SuiteResult& result, bool include_elapsed = true);
std::string suite_to_text(const SuiteResult& result);

/// Identity catalogue listings for the CLI.
std::string catalogue_to_json();
std::string catalogue_to_text();

}  // namespace qhahn

#endif  // QHAHN_SUITE_HPP
