#include <qhahn/catalogue.hpp>
#include <qhahn/sampling.hpp>

#include <algorithm>

namespace qhahn {

namespace {

const Rational& kMargin() {
    // Declared constraints are |.| < 1; sampling applies slack 0.1.
    static const Rational m(9, 10);
    return m;
}

bool within(const Rational& v) { return abs(v) <= kMargin(); }

bool always_valid(const ParameterPoint&, const Rational&) { return true; }

bool srivas_valid(const ParameterPoint& pt, const Rational&) {
    return pt.x && sgn(*pt.x) != 0;
}

bool chu_valid(const ParameterPoint& pt, const Rational&) {
    return pt.a && sgn(*pt.a) != 0;
}

bool sa_valid(const ParameterPoint& pt, const Rational&) {
    if (!pt.mu || !pt.nu || sgn(*pt.nu) == 0 || *pt.mu == *pt.nu) return false;
    return within(Rational(*pt.mu / *pt.nu));
}

bool lambda_valid(const ParameterPoint& pt, const Rational&) {
    return pt.lambda && *pt.lambda != Rational(1) && within(*pt.lambda);
}

bool heine_valid(const ParameterPoint& pt, const Rational&) {
    return pt.b && pt.c && pt.z && sgn(*pt.b) != 0 && within(*pt.b) &&
           within(*pt.c) && within(*pt.z);
}

bool rogers_valid(const ParameterPoint& pt, const Rational&) {
    return pt.s && pt.x && pt.y && sgn(*pt.s) != 0 &&
           within(Rational(*pt.y * *pt.s)) && within(Rational(*pt.x * *pt.s));
}

bool ext_rogers_valid(const ParameterPoint& pt, const Rational&) {
    return pt.omega && pt.x && pt.y && sgn(*pt.omega) != 0 &&
           within(Rational(*pt.y * *pt.omega)) &&
           within(Rational(*pt.x * *pt.omega));
}

bool theta_point_valid(const ParameterPoint& pt, const Rational& q) {
    // q^-1 x != y at the residual's base point.
    return pt.x && pt.y && Rational(*pt.x / q) != *pt.y;
}

bool qde_f_valid(const ParameterPoint& pt, const Rational& q) {
    return theta_point_valid(pt, q) && pt.t && sgn(*pt.t) != 0 &&
           within(Rational(*pt.y * *pt.t));
}

bool qde_g_valid(const ParameterPoint& pt, const Rational& q) {
    if (!theta_point_valid(pt, q) || !pt.t || !pt.s) return false;
    if (sgn(*pt.t) == 0 || sgn(*pt.s) == 0) return false;
    if (!within(Rational(*pt.t / *pt.s)) || !within(Rational(*pt.y * *pt.s)))
        return false;
    return !collides_with_q_shift(*pt.t, *pt.s, q);
}

bool qde_h_valid(const ParameterPoint& pt, const Rational& q) {
    if (!theta_point_valid(pt, q) || !pt.t || !pt.s || !pt.omega) return false;
    if (sgn(*pt.t) == 0 || sgn(*pt.omega) == 0) return false;
    if (!within(Rational(*pt.s / *pt.t)) ||
        !within(Rational(*pt.t / *pt.omega)) ||
        !within(Rational(*pt.y * *pt.omega)))
        return false;
    return !collides_with_q_shift(*pt.t, *pt.omega, q);
}

bool qde_hp_valid(const ParameterPoint& pt, const Rational& q) {
    if (!theta_point_valid(pt, q) || !pt.t || sgn(*pt.t) == 0) return false;
    if (!pt.mu || !pt.nu || sgn(*pt.nu) == 0 || *pt.mu == *pt.nu) return false;
    return within(Rational(*pt.mu / *pt.nu)) &&
           within(Rational(Rational(*pt.y * *pt.nu) * *pt.t));
}

}  // namespace

const std::vector<IdentityInfo>& catalogue() {
    static const std::vector<IdentityInfo> entries = {
        {IdentityId::GEN, "GEN",
         "generating function for the generalized trivariate polynomials",
         "|y*t| < 1 (t is the expansion variable)", "a,x,y,z",
         VerifyMode::Coefficient, true, true, 1e-9, always_valid},
        {IdentityId::EXT_GEN, "EXT_GEN",
         "extended generating function with index shift k in {0,1,2,3}",
         "|y*t| < 1; k >= 0", "a,x,y,z", VerifyMode::Coefficient, true, true, 1e-9,
         always_valid},
        {IdentityId::CAUCHY_GEN, "CAUCHY_GEN",
         "Cauchy-polynomial generating function",
         "|x*t| < 1 (t is the expansion variable)", "x,y",
         VerifyMode::Coefficient, true, true, 1e-9, always_valid},
        {IdentityId::QBINOMIAL_THM, "QBINOMIAL_THM",
         "q-binomial theorem as a power series", "|z*t| < 1", "a,z",
         VerifyMode::Coefficient, true, true, 1e-9, always_valid},
        {IdentityId::EULER_PAIR, "EULER_PAIR",
         "Euler series and its inverse multiply to 1", "|z*t| < 1", "z",
         VerifyMode::Coefficient, true, true, 1e-9, always_valid},
        {IdentityId::SRIVAS, "SRIVAS",
         "Cauchy-polynomial generating function with Pochhammer weight",
         "x != 0", "lambda,x,y", VerifyMode::Coefficient, true, true, 1e-9,
         srivas_valid},
        {IdentityId::ASC_GEN, "ASC_GEN",
         "Al-Salam--Carlitz generating function with Pochhammer weight",
         "max{|t|, |x*t|} < 1 (t is the expansion variable)", "a,lambda,x",
         VerifyMode::Coefficient, true, true, 1e-9, always_valid},
        {IdentityId::CHU_VANDERMONDE, "CHU_VANDERMONDE",
         "q-Chu--Vandermonde terminating sum, n <= 8",
         "c not in {q^-m}; a != 0", "a,c", VerifyMode::Coefficient, true, false, 1e-12,
         chu_valid},
        {IdentityId::PROP_CONDS, "PROP_CONDS",
         "operator route equals the definitional double sum, n <= 10",
         "none", "a,x,y,z", VerifyMode::Coefficient, true, true, 1e-9, always_valid},
        {IdentityId::SA, "SA",
         "Srivastava-Agarwal type generating function with Cauchy weight",
         "|y*nu*t| < 1; mu != nu; |mu/nu| < 1", "a,x,y,z,mu,nu",
         VerifyMode::Coefficient, false, true, 1e-9, sa_valid},
        {IdentityId::SA_1CSUMS, "SA_1CSUMS",
         "Srivastava-Agarwal type generating function, Pochhammer weight",
         "|y*t| < 1; lambda != 1; |lambda| < 1", "a,x,y,z,lambda",
         VerifyMode::Coefficient, false, true, 1e-9, lambda_valid},
        {IdentityId::LUMS, "LUMS",
         "two-variable Hahn polynomial generating function",
         "|a*x*t| < 1; |lambda| < 1", "a,x,y,lambda", VerifyMode::Coefficient,
         false, true, 1e-9, lambda_valid},
        {IdentityId::DD1SUMS, "DD1SUMS",
         "one-variable Hahn polynomial generating function",
         "|a*x*t| < 1; |lambda| < 1", "a,x,lambda", VerifyMode::Coefficient,
         false, true, 1e-9, lambda_valid},
        {IdentityId::HEINE, "HEINE", "Heine transformation of 2phi1",
         "|b| < 1; |c| < 1; |z| < 1; b != 0", "a,b,c,z",
         VerifyMode::PointNumeric, false, true, 1e-10, heine_valid},
        {IdentityId::ROGERS, "ROGERS",
         "Rogers-type double generating function (formal in t, s fixed)",
         "max{|t/s|, |y*s|} < 1; s != 0", "a,x,y,z,s",
         VerifyMode::PointNumeric, false, true, 1e-8, rogers_valid},
        {IdentityId::EXT_ROGERS, "EXT_ROGERS",
         "extended Rogers-type triple generating function (formal in t and "
         "s, omega fixed)",
         "max{|s/t|, |t/omega|, |y*omega|} < 1; omega != 0", "a,x,y,z,omega",
         VerifyMode::PointNumeric, false, true, 1e-8, ext_rogers_valid},
        {IdentityId::QDE_F, "QDE_F",
         "q-difference-equation residual of the extended-generating kernel",
         "|y*t| < 1; t != 0; q^-1 x != y", "a,x,y,z,t",
         VerifyMode::PointNumeric, false, true, 1e-8, qde_f_valid},
        {IdentityId::QDE_G, "QDE_G",
         "q-difference-equation residual of the Rogers kernel",
         "|t/s| < 1; |y*s| < 1; t not in {s q^(m+1)}; q^-1 x != y",
         "a,x,y,z,t,s", VerifyMode::PointNumeric, false, true, 1e-8, qde_g_valid},
        {IdentityId::QDE_H, "QDE_H",
         "q-difference-equation residual of the extended-Rogers kernel",
         "|s/t| < 1; |t/omega| < 1; |y*omega| < 1; t not in {omega q^(m+1)}; "
         "q^-1 x != y",
         "a,x,y,z,t,s,omega", VerifyMode::PointNumeric, false, true, 1e-8,
         qde_h_valid},
        {IdentityId::QDE_HP, "QDE_HP",
         "q-difference-equation residual of the Srivastava-Agarwal kernel",
         "|y*nu*t| < 1; mu != nu; |mu/nu| < 1; q^-1 x != y", "a,x,y,z,t,mu,nu",
         VerifyMode::PointNumeric, false, true, 1e-8, qde_hp_valid},
    };
    return entries;
}

const IdentityInfo& identity_info(IdentityId id) {
    for (const auto& info : catalogue())
        if (info.id == id) return info;
    throw DomainViolation("unknown identity id");
}

std::string_view identity_name(IdentityId id) { return identity_info(id).name; }

std::optional<IdentityId> identity_from_name(std::string_view name) {
    std::string upper(name);
    std::transform(upper.begin(), upper.end(), upper.begin(),
                   [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
    for (const auto& info : catalogue())
        if (info.name == upper) return info.id;
    return std::nullopt;
}

}  // namespace qhahn
