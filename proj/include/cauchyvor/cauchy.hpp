#pragma once

#include <stdexcept>
#include <string>

namespace cauchyvor {

// Location-scale parameters (l, s) of a Cauchy density
//   p_{l,s}(x) = s / (pi * (s^2 + (x - l)^2)),  s > 0.
struct CauchyParam {
    double l = 0.0;
    double s = 1.0;

    CauchyParam() = default;
    CauchyParam(double location, double scale);

    bool operator==(const CauchyParam&) const = default;
};

// Natural coordinates theta = (2*pi*l/s, -pi/s) of the dually flat structure;
// the domain is R x R_- .
struct NaturalParam {
    double t1 = 0.0;
    double t2 = -1.0;

    NaturalParam() = default;
    NaturalParam(double t1_, double t2_);
};

// Dual (expectation) coordinates eta = (l, l^2 + s^2); valid iff e2 - e1^2 > 0.
struct DualParam {
    double e1 = 0.0;
    double e2 = 1.0;

    DualParam() = default;
    DualParam(double e1_, double e2_);
};

enum class DivergenceKind { FisherRao, KL, SqrtKL, ChiSquare, FlatForward, FlatReverse };

const char* to_string(DivergenceKind k);
DivergenceKind divergence_kind_from_string(const std::string& name);

struct Matrix2 {
    // Row-major entries.
    double m00 = 0.0, m01 = 0.0, m10 = 0.0, m11 = 0.0;

    static Matrix2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
    Matrix2 operator*(const Matrix2& o) const;
    Matrix2 transpose() const { return {m00, m10, m01, m11}; }
    double max_abs_diff(const Matrix2& o) const;
};

// arccosh(x) = log(x + sqrt(x^2 - 1)) with arguments below 1 + 1e-14 clamped
// to 0, absorbing rounding at coincident points.
double safe_arccosh(double x);

// ---- closed-form dissimilarities ------------------------------------------

// delta term ((l2-l1)^2 + (s2-s1)^2) / (2 s1 s2); equals both the Pearson and
// Neyman chi-square divergences on Cauchy densities.
double chi_square(const CauchyParam& a, const CauchyParam& b);

// (1/sqrt(2)) * arccosh(1 + chi_square); the geodesic metric distance.
double fisher_rao(const CauchyParam& a, const CauchyParam& b);

// log(1 + chi_square/2); symmetric on the Cauchy family.
double kl(const CauchyParam& a, const CauchyParam& b);

// sqrt(kl); a metric distance.
double sqrt_kl(const CauchyParam& a, const CauchyParam& b);

// 2*pi*s2 * chi_square = (pi/s1) * ||lambda1 - lambda2||^2; asymmetric, equals
// the Bregman divergence of the free energy on natural coordinates.
double flat_divergence(const CauchyParam& a, const CauchyParam& b);
double flat_divergence_reverse(const CauchyParam& a, const CauchyParam& b);

// Chernoff coefficient C_3 = integral p_a^3 p_b^-2; degree-4 rational in the
// parameters, symmetric, equal to 1 iff a == b.
double chernoff_coefficient_3(const CauchyParam& a, const CauchyParam& b);

// I_alpha = (1 - C_alpha) / (alpha (1 - alpha)). Closed form for alpha in
// {2, 3}; other alpha are evaluated by adaptive quadrature. alpha in {0, 1}
// is rejected (those limits are the reverse KL / KL divergences).
double alpha_divergence(double alpha, const CauchyParam& a, const CauchyParam& b);

// Monotone conversion functions between the dissimilarities.
double convert_chi_to_fr(double u);   // (1/sqrt(2)) arccosh(1+u)
double convert_fr_to_kl(double u);    // log(1/2 + cosh(sqrt(2) u)/2)

// log(A(s1,s2)/G(s1,s2)); kl between same-location Cauchys is twice this.
double jensen_bregman_burg(double s1, double s2);

// ---- dually flat coordinate and potential machinery ------------------------

NaturalParam to_natural(const CauchyParam& a);
CauchyParam from_natural(const NaturalParam& t);
DualParam to_dual(const CauchyParam& a);
CauchyParam from_dual(const DualParam& e);

// F(theta) = -pi^2/t2 - t1^2/(4 t2) - 1, strictly convex on R x R_-.
double free_energy(const NaturalParam& t);
// F*(eta) = 1 - 2 pi sqrt(e2 - e1^2), the Legendre-Fenchel conjugate.
double conjugate_energy(const DualParam& e);

DualParam grad_free_energy(const NaturalParam& t);
NaturalParam grad_conjugate_energy(const DualParam& e);

Matrix2 hessian_free_energy(const NaturalParam& t);
Matrix2 hessian_conjugate_energy(const DualParam& e);

// B_F(t1 : t2) = F(t1) - F(t2) - (t1 - t2) . grad F(t2).
double bregman_free_energy(const NaturalParam& t1, const NaturalParam& t2);

// A_F(t : e) = F(t) + F*(e) - t . e  >= 0, with equality iff e = grad F(t).
double fenchel_young_gap(const NaturalParam& t, const DualParam& e);

// Fisher information matrix (1/(2 s^2)) I in (l, s) coordinates.
Matrix2 fisher_metric(const CauchyParam& a);

// Jacobians of the coordinate changes, d theta / d lambda and its inverse.
Matrix2 dtheta_dlambda(const CauchyParam& a);
Matrix2 dlambda_dtheta(const NaturalParam& t);

// Dispatch by kind (FlatReverse evaluates flat_divergence(b, a)).
double evaluate(DivergenceKind kind, const CauchyParam& a, const CauchyParam& b);

}  // namespace cauchyvor
