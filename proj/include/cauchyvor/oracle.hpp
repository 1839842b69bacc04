#pragma once

#include <cstdint>
#include <vector>

#include "cauchyvor/cauchy.hpp"

namespace cauchyvor {

struct QuadratureResult {
    double value = 0.0;
    double error_estimate = 0.0;
    long evaluations = 0;
};

// f-divergence generators int p_a f(p_b / p_a).
enum class FGenerator { KL, ReverseKL, ChiSquare, Alpha };

// Adaptive quadrature of the f-divergence integral over the real line.
// The substitution x = l1 + s1 tan(t) maps the line to (-pi/2, pi/2) and
// turns p_a(x) dx into dt/pi, so the integrand is bounded. When the modes
// are separated by more than 50 scales the domain is pre-split at both
// modes before adapting. Throws std::runtime_error if the evaluation
// budget (1e6) is exhausted before reaching the tolerance.
QuadratureResult integrate_f_divergence(FGenerator f, const CauchyParam& a, const CauchyParam& b,
                                        double tol = 1e-9, double alpha = 0.0);

// Chernoff coefficient integral C_alpha = int p_a^alpha p_b^(1-alpha).
QuadratureResult integrate_chernoff(double alpha, const CauchyParam& a, const CauchyParam& b,
                                    double tol = 1e-9);

// Flat divergence from its integral definition,
// (1 / int p_b^2) (int p_b^2 / p_a - 1), both integrals by quadrature.
QuadratureResult integrate_flat_divergence(const CauchyParam& a, const CauchyParam& b,
                                           double tol = 1e-9);

// |I_f[a:b] - I_f[(0,1):((l2-l1)/s1, s2/s1)]|, the location-scale reduction
// residual, both sides by quadrature.
double location_scale_reduction_residual(FGenerator f, const CauchyParam& a, const CauchyParam& b,
                                         double alpha = 0.0);

// ---- brute-force diagram labelings -----------------------------------------

struct GridSpec {
    double lmin = -6.0, lmax = 6.0;
    double smin = 0.05, smax = 6.0;
    int nl = 200, ns = 200;

    int count() const { return nl * ns; }
    CauchyParam point(int idx) const;
};

struct GridLabeling {
    GridSpec grid;
    std::vector<int> labels;           // argmin generator index per grid point
    std::vector<std::uint8_t> excluded;  // near-tie points, unreliable labels

    double excluded_fraction() const;
};

// Per-point argmin of the selected divergence (generator in the first slot,
// except FlatReverse which puts the generator second). Points whose two best
// values differ by less than 1e-7 * (1 + |best|) are flagged excluded.
GridLabeling brute_force_labels(const std::vector<CauchyParam>& generators, DivergenceKind kind,
                                const GridSpec& grid, bool parallel = true);

// Serial reference for the parallel kernel above.
GridLabeling brute_force_labels_serial(const std::vector<CauchyParam>& generators,
                                       DivergenceKind kind, const GridSpec& grid);

// ---- metric-axiom samplers --------------------------------------------------

// Worst triangle-inequality violation d(a,c) - d(a,b) - d(b,c) over random
// triples with l in [-10,10], s in [0.05,20]. metric must be SqrtKL or
// FisherRao.
double triangle_inequality_trials(DivergenceKind metric, long trials, std::uint64_t seed,
                                  bool parallel = true);
double triangle_inequality_trials_serial(DivergenceKind metric, long trials, std::uint64_t seed);

// ---- finite-difference calculus checks --------------------------------------

enum class CalcTarget { GradF, GradFstar, HessF, HessFstar };

// Central-difference check of the analytic gradients/Hessians of the dual
// potentials at theta(at) / eta(at). Returns the max entry error relative to
// 1 + |analytic entry|.
double finite_difference_check(CalcTarget target, const CauchyParam& at, double step);

}  // namespace cauchyvor
