#ifndef QHAHN_SAMPLING_HPP
#define QHAHN_SAMPLING_HPP

#include <qhahn/catalogue.hpp>
#include <qhahn/parameter_point.hpp>
#include <qhahn/scalar.hpp>

#include <cstdint>
#include <vector>

namespace qhahn {

/// A sampled parameter point together with the base q it was drawn for.
struct SampledPoint {
    Rational q;
    ParameterPoint point;
};

/// Deterministic rejection sampler. The same (identity, seed, count)
/// always produces the same points: q is drawn from {3/10, 1/2, 7/10} and
/// every other field from {+-1/2, ..., +-1/7}, rejecting draws that
/// violate the identity's constraints (which carry slack 0.1, i.e. all
/// |.| < 1 domains are sampled with |.| <= 0.9).
///
/// Throws DomainViolation if the rejection loop exhausts its attempt
/// budget (an identity whose constraints the pool cannot satisfy).
std::vector<SampledPoint> sample_points(const IdentityInfo& info,
                                        std::uint64_t seed, int count);

/// True if t == s * q^(m+1) for some m >= 0 (a pole of 1/(s q/t;q)_k).
bool collides_with_q_shift(const Rational& t, const Rational& s,
                           const Rational& q);

}  // namespace qhahn

#endif  // QHAHN_SAMPLING_HPP
