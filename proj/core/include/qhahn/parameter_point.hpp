#ifndef QHAHN_PARAMETER_POINT_HPP
#define QHAHN_PARAMETER_POINT_HPP

#include <qhahn/errors.hpp>
#include <qhahn/scalar.hpp>

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qhahn {

/// One sampled (or user-given) parameter tuple. Fields are identity
/// specific; unused entries stay absent. Values are kept as exact
/// rationals and converted to the working scalar type by each verifier.
struct ParameterPoint {
    std::optional<Rational> a, b, c, x, y, z, t, s, omega, mu, nu, lambda;
    std::optional<long> k;

    /// Field view in a fixed order, for reports and diagnostics.
    std::vector<std::pair<std::string, std::string>> named_fields() const {
        std::vector<std::pair<std::string, std::string>> out;
        auto put = [&](const char* name, const std::optional<Rational>& v) {
            if (v) out.emplace_back(name, v->get_str());
        };
        put("a", a);
        put("b", b);
        put("c", c);
        put("x", x);
        put("y", y);
        put("z", z);
        put("t", t);
        put("s", s);
        put("omega", omega);
        put("mu", mu);
        put("nu", nu);
        put("lambda", lambda);
        if (k) out.emplace_back("k", std::to_string(*k));
        return out;
    }
};

/// Access to a field an identity declared it reads; absence is a usage bug.
inline const Rational& point_field(const std::optional<Rational>& field,
                                   const char* name) {
    if (!field)
        throw DomainViolation(std::string("parameter point is missing field '") +
                              name + "'");
    return *field;
}

template <typename T>
T scalar_cast(const Rational& r) {
    if constexpr (std::is_same_v<T, Rational>) {
        return r;
    } else if constexpr (std::is_same_v<T, double>) {
        return r.get_d();
    } else {
        return T(r);
    }
}

}  // namespace qhahn

#endif  // QHAHN_PARAMETER_POINT_HPP
