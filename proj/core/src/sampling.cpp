#include <qhahn/sampling.hpp>

#include <qhahn/errors.hpp>

#include <random>
#include <sstream>
#include <string>
#include <string_view>

namespace qhahn {

namespace {

// q and scalar pools from the default sampling box.
const std::vector<Rational>& q_pool() {
    static const std::vector<Rational> pool = {Rational(3, 10), Rational(1, 2),
                                               Rational(7, 10)};
    return pool;
}

const std::vector<Rational>& scalar_pool() {
    static const std::vector<Rational> pool = [] {
        std::vector<Rational> p;
        for (int den = 2; den <= 7; ++den) {
            p.emplace_back(1, den);
            p.emplace_back(-1, den);
        }
        return p;
    }();
    return pool;
}

std::vector<std::string> split_fields(std::string_view csv) {
    std::vector<std::string> out;
    std::string item;
    std::istringstream in{std::string(csv)};
    while (std::getline(in, item, ','))
        if (!item.empty()) out.push_back(item);
    return out;
}

std::optional<Rational>& field_slot(ParameterPoint& pt, const std::string& name) {
    if (name == "a") return pt.a;
    if (name == "b") return pt.b;
    if (name == "c") return pt.c;
    if (name == "x") return pt.x;
    if (name == "y") return pt.y;
    if (name == "z") return pt.z;
    if (name == "t") return pt.t;
    if (name == "s") return pt.s;
    if (name == "omega") return pt.omega;
    if (name == "mu") return pt.mu;
    if (name == "nu") return pt.nu;
    if (name == "lambda") return pt.lambda;
    throw DomainViolation("sampler: unknown field '" + name + "'");
}

}  // namespace

bool collides_with_q_shift(const Rational& t, const Rational& s,
                           const Rational& q) {
    if (sgn(s) == 0 || sgn(t) == 0) return false;
    Rational shifted(s * q);  // s q^(m+1)
    Rational abs_t(abs(t));
    for (int m = 0; m <= 256; ++m) {
        if (shifted == t) return true;
        if (abs(shifted) < abs_t) return false;  // strictly shrinking from here
        shifted = Rational(shifted * q);
    }
    return false;
}

std::vector<SampledPoint> sample_points(const IdentityInfo& info,
                                        std::uint64_t seed, int count) {
    // engine() % n keeps the draw sequence implementation-independent.
    std::mt19937_64 engine(seed * 0x9e3779b97f4a7c15ULL +
                           static_cast<std::uint64_t>(info.id) + 1);
    const auto fields = split_fields(info.fields);
    std::vector<SampledPoint> out;
    out.reserve(static_cast<size_t>(count));
    constexpr int kMaxAttempts = 20000;
    int attempts = 0;
    while (static_cast<int>(out.size()) < count) {
        if (++attempts > kMaxAttempts)
            throw DomainViolation(
                std::string("sampling exhausted for identity ") +
                std::string(info.name));
        SampledPoint sp;
        sp.q = q_pool()[engine() % q_pool().size()];
        for (const auto& f : fields)
            field_slot(sp.point, f) =
                scalar_pool()[engine() % scalar_pool().size()];
        if (info.valid(sp.point, sp.q)) out.push_back(std::move(sp));
    }
    return out;
}

}  // namespace qhahn
