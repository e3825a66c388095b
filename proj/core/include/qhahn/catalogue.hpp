#ifndef QHAHN_CATALOGUE_HPP
#define QHAHN_CATALOGUE_HPP

#include <qhahn/identities.hpp>
#include <qhahn/parameter_point.hpp>
#include <qhahn/scalar.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qhahn {

/// Static metadata for one identity: CLI token, human description, the
/// fields its verifier reads, display/constraint information, supported
/// arithmetic, and the default Float-mode tolerance.
struct IdentityInfo {
    IdentityId id;
    std::string_view name;
    std::string_view description;
    std::string_view constraints;  // display string, e.g. "|y*nu*t| < 1"
    std::string_view fields;       // comma-separated sampled fields
    VerifyMode mode;
    bool supports_exact;
    bool supports_float;
    double float_tolerance;
    /// Constraint predicate used by the sampler (slack already applied).
    bool (*valid)(const ParameterPoint&, const Rational& q);
};

const std::vector<IdentityInfo>& catalogue();

const IdentityInfo& identity_info(IdentityId id);
std::string_view identity_name(IdentityId id);
std::optional<IdentityId> identity_from_name(std::string_view name);

}  // namespace qhahn

#endif  // QHAHN_CATALOGUE_HPP
