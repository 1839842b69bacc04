#include "cauchyvor/cauchy.hpp"

#include <cmath>
#include <numbers>

#include "cauchyvor/oracle.hpp"

namespace cauchyvor {

namespace {
constexpr double kPi = std::numbers::pi;

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw std::invalid_argument(std::string(what) + ": non-finite value");
}
}  // namespace

CauchyParam::CauchyParam(double location, double scale) : l(location), s(scale) {
    require_finite(l, "CauchyParam.l");
    require_finite(s, "CauchyParam.s");
    if (!(s > 0.0)) throw std::invalid_argument("CauchyParam: scale must be > 0");
}

NaturalParam::NaturalParam(double t1_, double t2_) : t1(t1_), t2(t2_) {
    require_finite(t1, "NaturalParam.t1");
    require_finite(t2, "NaturalParam.t2");
    if (!(t2 < 0.0)) throw std::invalid_argument("NaturalParam: t2 must be < 0");
}

DualParam::DualParam(double e1_, double e2_) : e1(e1_), e2(e2_) {
    require_finite(e1, "DualParam.e1");
    require_finite(e2, "DualParam.e2");
    if (!(e2 - e1 * e1 > 0.0)) throw std::invalid_argument("DualParam: e2 - e1^2 must be > 0");
}

const char* to_string(DivergenceKind k) {
    switch (k) {
        case DivergenceKind::FisherRao: return "fisher-rao";
        case DivergenceKind::KL: return "kl";
        case DivergenceKind::SqrtKL: return "sqrt-kl";
        case DivergenceKind::ChiSquare: return "chi-square";
        case DivergenceKind::FlatForward: return "flat";
        case DivergenceKind::FlatReverse: return "flat-reverse";
    }
    return "?";
}

DivergenceKind divergence_kind_from_string(const std::string& name) {
    if (name == "fisher-rao") return DivergenceKind::FisherRao;
    if (name == "kl") return DivergenceKind::KL;
    if (name == "sqrt-kl") return DivergenceKind::SqrtKL;
    if (name == "chi-square") return DivergenceKind::ChiSquare;
    if (name == "flat") return DivergenceKind::FlatForward;
    if (name == "flat-reverse") return DivergenceKind::FlatReverse;
    throw std::invalid_argument("unknown divergence kind: " + name);
}

Matrix2 Matrix2::operator*(const Matrix2& o) const {
    return {m00 * o.m00 + m01 * o.m10, m00 * o.m01 + m01 * o.m11,
            m10 * o.m00 + m11 * o.m10, m10 * o.m01 + m11 * o.m11};
}

double Matrix2::max_abs_diff(const Matrix2& o) const {
    return std::max({std::abs(m00 - o.m00), std::abs(m01 - o.m01),
                     std::abs(m10 - o.m10), std::abs(m11 - o.m11)});
}

double safe_arccosh(double x) {
    if (x < 1.0 + 1e-14) return 0.0;
    return std::log(x + std::sqrt(x * x - 1.0));
}

double chi_square(const CauchyParam& a, const CauchyParam& b) {
    const double dl = b.l - a.l;
    const double ds = b.s - a.s;
    return (dl * dl + ds * ds) / (2.0 * a.s * b.s);
}

double fisher_rao(const CauchyParam& a, const CauchyParam& b) {
    return convert_chi_to_fr(chi_square(a, b));
}

double kl(const CauchyParam& a, const CauchyParam& b) {
    return std::log1p(0.5 * chi_square(a, b));
}

double sqrt_kl(const CauchyParam& a, const CauchyParam& b) {
    return std::sqrt(kl(a, b));
}

double flat_divergence(const CauchyParam& a, const CauchyParam& b) {
    const double dl = b.l - a.l;
    const double ds = b.s - a.s;
    return (kPi / a.s) * (dl * dl + ds * ds);
}

double flat_divergence_reverse(const CauchyParam& a, const CauchyParam& b) {
    return flat_divergence(b, a);
}

double chernoff_coefficient_3(const CauchyParam& a, const CauchyParam& b) {
    const double s1 = a.s, s2 = b.s;
    const double dl2 = (b.l - a.l) * (b.l - a.l);
    const double num = 3.0 * (s1 * s1 * s1 * s1 + s2 * s2 * s2 * s2) + 2.0 * s1 * s1 * s2 * s2 +
                       6.0 * dl2 * (s1 * s1 + s2 * s2) + 3.0 * dl2 * dl2;
    return num / (8.0 * s1 * s1 * s2 * s2);
}

double alpha_divergence(double alpha, const CauchyParam& a, const CauchyParam& b) {
    if (alpha == 0.0 || alpha == 1.0)
        throw std::invalid_argument("alpha_divergence: alpha in {0,1} (use kl / reverse kl)");
    double c;
    if (alpha == 3.0) {
        c = chernoff_coefficient_3(a, b);
    } else if (alpha == 2.0) {
        // C_2 = integral p_a^2 / p_b = 1 + chi_square.
        c = 1.0 + chi_square(a, b);
    } else {
        c = integrate_chernoff(alpha, a, b).value;
    }
    return (1.0 - c) / (alpha * (1.0 - alpha));
}

double convert_chi_to_fr(double u) {
    if (!(u >= 0.0)) throw std::invalid_argument("convert_chi_to_fr: u must be >= 0");
    return safe_arccosh(1.0 + u) / std::numbers::sqrt2;
}

double convert_fr_to_kl(double u) {
    if (!(u >= 0.0)) throw std::invalid_argument("convert_fr_to_kl: u must be >= 0");
    return std::log(0.5 + 0.5 * std::cosh(std::numbers::sqrt2 * u));
}

double jensen_bregman_burg(double s1, double s2) {
    if (!(s1 > 0.0) || !(s2 > 0.0))
        throw std::invalid_argument("jensen_bregman_burg: scales must be > 0");
    return std::log(0.5 * (s1 + s2) / std::sqrt(s1 * s2));
}

NaturalParam to_natural(const CauchyParam& a) {
    return NaturalParam(2.0 * kPi * a.l / a.s, -kPi / a.s);
}

CauchyParam from_natural(const NaturalParam& t) {
    if (!(t.t2 < 0.0)) throw std::invalid_argument("from_natural: t2 must be < 0");
    return CauchyParam(-t.t1 / (2.0 * t.t2), -kPi / t.t2);
}

DualParam to_dual(const CauchyParam& a) {
    return DualParam(a.l, a.l * a.l + a.s * a.s);
}

CauchyParam from_dual(const DualParam& e) {
    const double v = e.e2 - e.e1 * e.e1;
    if (!(v > 0.0)) throw std::invalid_argument("from_dual: e2 - e1^2 must be > 0");
    return CauchyParam(e.e1, std::sqrt(v));
}

double free_energy(const NaturalParam& t) {
    if (!(t.t2 < 0.0)) throw std::invalid_argument("free_energy: t2 must be < 0");
    return -kPi * kPi / t.t2 - t.t1 * t.t1 / (4.0 * t.t2) - 1.0;
}

double conjugate_energy(const DualParam& e) {
    const double v = e.e2 - e.e1 * e.e1;
    if (!(v > 0.0)) throw std::invalid_argument("conjugate_energy: e2 - e1^2 must be > 0");
    return 1.0 - 2.0 * kPi * std::sqrt(v);
}

DualParam grad_free_energy(const NaturalParam& t) {
    if (!(t.t2 < 0.0)) throw std::invalid_argument("grad_free_energy: t2 must be < 0");
    const double q = t.t2 * t.t2;
    return DualParam(-t.t1 / (2.0 * t.t2), kPi * kPi / q + t.t1 * t.t1 / (4.0 * q));
}

NaturalParam grad_conjugate_energy(const DualParam& e) {
    const double v = e.e2 - e.e1 * e.e1;
    if (!(v > 0.0)) throw std::invalid_argument("grad_conjugate_energy: e2 - e1^2 must be > 0");
    const double r = std::sqrt(v);
    return NaturalParam(2.0 * kPi * e.e1 / r, -kPi / r);
}

Matrix2 hessian_free_energy(const NaturalParam& t) {
    if (!(t.t2 < 0.0)) throw std::invalid_argument("hessian_free_energy: t2 must be < 0");
    const double t2sq = t.t2 * t.t2;
    const double t2cu = t2sq * t.t2;
    return {-1.0 / (2.0 * t.t2), t.t1 / (2.0 * t2sq),
            t.t1 / (2.0 * t2sq), -(2.0 * kPi * kPi + 0.5 * t.t1 * t.t1) / t2cu};
}

Matrix2 hessian_conjugate_energy(const DualParam& e) {
    const double v = e.e2 - e.e1 * e.e1;
    if (!(v > 0.0)) throw std::invalid_argument("hessian_conjugate_energy: e2 - e1^2 must be > 0");
    const double r = std::sqrt(v);
    const double r3 = r * v;
    return {2.0 * kPi / r + 2.0 * kPi * e.e1 * e.e1 / r3, -kPi * e.e1 / r3,
            -kPi * e.e1 / r3, 0.5 * kPi / r3};
}

double bregman_free_energy(const NaturalParam& t1, const NaturalParam& t2) {
    const DualParam g = grad_free_energy(t2);
    return free_energy(t1) - free_energy(t2) - (t1.t1 - t2.t1) * g.e1 - (t1.t2 - t2.t2) * g.e2;
}

double fenchel_young_gap(const NaturalParam& t, const DualParam& e) {
    return free_energy(t) + conjugate_energy(e) - t.t1 * e.e1 - t.t2 * e.e2;
}

Matrix2 fisher_metric(const CauchyParam& a) {
    const double g = 1.0 / (2.0 * a.s * a.s);
    return {g, 0.0, 0.0, g};
}

Matrix2 dtheta_dlambda(const CauchyParam& a) {
    const double s2 = a.s * a.s;
    return {2.0 * kPi / a.s, -2.0 * kPi * a.l / s2,
            0.0, kPi / s2};
}

Matrix2 dlambda_dtheta(const NaturalParam& t) {
    if (!(t.t2 < 0.0)) throw std::invalid_argument("dlambda_dtheta: t2 must be < 0");
    const double t2sq = t.t2 * t.t2;
    return {-1.0 / (2.0 * t.t2), t.t1 / (2.0 * t2sq),
            0.0, kPi / t2sq};
}

double evaluate(DivergenceKind kind, const CauchyParam& a, const CauchyParam& b) {
    switch (kind) {
        case DivergenceKind::FisherRao: return fisher_rao(a, b);
        case DivergenceKind::KL: return kl(a, b);
        case DivergenceKind::SqrtKL: return sqrt_kl(a, b);
        case DivergenceKind::ChiSquare: return chi_square(a, b);
        case DivergenceKind::FlatForward: return flat_divergence(a, b);
        case DivergenceKind::FlatReverse: return flat_divergence_reverse(a, b);
    }
    throw std::invalid_argument("evaluate: bad kind");
}

}  // namespace cauchyvor
