#include "cauchyvor/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <stdexcept>

#include "cauchyvor/rng.hpp"

namespace cauchyvor {

namespace {

constexpr double kPi = std::numbers::pi;

// 15-point Gauss-Legendre nodes/weights on [-1, 1]; nodes are strictly
// interior, so the transformed integrand is never evaluated at the
// endpoints of the tan substitution.
constexpr int kGL = 15;
constexpr double kGLNode[kGL] = {
    -0.9879925180204854, -0.9372733924007060, -0.8482065834104272,
    -0.7244177313601701, -0.5709721726085388, -0.3941513470775634,
    -0.2011940939974345, 0.0,                 0.2011940939974345,
    0.3941513470775634,  0.5709721726085388,  0.7244177313601701,
    0.8482065834104272,  0.9372733924007060,  0.9879925180204854};
constexpr double kGLWeight[kGL] = {
    0.0307532419961173, 0.0703660474881081, 0.1071592204671719,
    0.1395706779261543, 0.1662692058169939, 0.1861610000155622,
    0.1984314853271116, 0.2025782419255613, 0.1984314853271116,
    0.1861610000155622, 0.1662692058169939, 0.1395706779261543,
    0.1071592204671719, 0.0703660474881081, 0.0307532419961173};

constexpr long kBudget = 1000000;

struct Interval {
    double a, b, value, tol;
};

double gl15(const std::function<double(double)>& f, double a, double b, long& evals) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < kGL; ++i) sum += kGLWeight[i] * f(mid + half * kGLNode[i]);
    evals += kGL;
    return half * sum;
}

// Adaptive bisection: accept a subinterval when refining it changes the
// estimate by less than its share of the tolerance.
QuadratureResult adaptive(const std::function<double(double)>& f,
                          const std::vector<double>& breakpoints, double tol) {
    QuadratureResult out;
    std::vector<Interval> stack;
    const int nseg = static_cast<int>(breakpoints.size()) - 1;
    for (int i = 0; i < nseg; ++i) {
        const double a = breakpoints[i], b = breakpoints[i + 1];
        stack.push_back({a, b, gl15(f, a, b, out.evaluations), tol / nseg});
    }
    while (!stack.empty()) {
        Interval iv = stack.back();
        stack.pop_back();
        if (out.evaluations > kBudget)
            throw std::runtime_error("quadrature: evaluation budget exhausted before convergence");
        const double mid = 0.5 * (iv.a + iv.b);
        const double left = gl15(f, iv.a, mid, out.evaluations);
        const double right = gl15(f, mid, iv.b, out.evaluations);
        const double err = std::abs(left + right - iv.value);
        if (err <= iv.tol || (iv.b - iv.a) < 1e-13) {
            out.value += left + right;
            out.error_estimate += err;
        } else {
            stack.push_back({iv.a, mid, left, 0.5 * iv.tol});
            stack.push_back({mid, iv.b, right, 0.5 * iv.tol});
        }
    }
    return out;
}

double density(const CauchyParam& p, double x) {
    const double d = x - p.l;
    return p.s / (kPi * (p.s * p.s + d * d));
}

// Breakpoints in t for the substitution x = l1 + s1 tan(t): split at both
// modes when they are far apart, otherwise the full interval.
std::vector<double> t_breakpoints(const CauchyParam& a, const CauchyParam& b) {
    const double sep = std::abs(a.l - b.l) / std::max(a.s, b.s);
    std::vector<double> pts = {-0.5 * kPi, 0.5 * kPi};
    if (sep > 50.0) {
        pts.push_back(0.0);  // mode of a
        pts.push_back(std::atan((b.l - a.l) / a.s));
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    return pts;
}

// Integral of p_a * g(p_b / p_a) over the line; p_a dx = dt / pi.
QuadratureResult integrate_weighted(const CauchyParam& a, const CauchyParam& b,
                                    const std::function<double(double)>& g, double tol) {
    auto integrand = [&](double t) {
        const double x = a.l + a.s * std::tan(t);
        const double ratio = density(b, x) / density(a, x);
        return g(ratio) / kPi;
    };
    return adaptive(integrand, t_breakpoints(a, b), tol);
}

}  // namespace

QuadratureResult integrate_f_divergence(FGenerator f, const CauchyParam& a, const CauchyParam& b,
                                        double tol, double alpha) {
    switch (f) {
        case FGenerator::KL:
            return integrate_weighted(a, b, [](double u) { return -std::log(u); }, tol);
        case FGenerator::ReverseKL:
            return integrate_weighted(a, b, [](double u) { return u * std::log(u); }, tol);
        case FGenerator::ChiSquare:
            return integrate_weighted(a, b, [](double u) { return (u - 1.0) * (u - 1.0); }, tol);
        case FGenerator::Alpha: {
            if (alpha == 0.0 || alpha == 1.0)
                throw std::invalid_argument("integrate_f_divergence: alpha in {0,1}");
            const double norm = alpha * (alpha - 1.0);
            return integrate_weighted(
                a, b, [=](double u) { return (std::pow(u, 1.0 - alpha) - u) / norm; }, tol);
        }
    }
    throw std::invalid_argument("integrate_f_divergence: bad generator");
}

QuadratureResult integrate_chernoff(double alpha, const CauchyParam& a, const CauchyParam& b,
                                    double tol) {
    // int p_a^alpha p_b^(1-alpha) = int p_a (p_b/p_a)^(1-alpha).
    return integrate_weighted(a, b, [=](double u) { return std::pow(u, 1.0 - alpha); }, tol);
}

QuadratureResult integrate_flat_divergence(const CauchyParam& a, const CauchyParam& b,
                                           double tol) {
    // int p_b^2 / p_a = int p_a (p_b/p_a)^2.
    QuadratureResult top = integrate_weighted(a, b, [](double u) { return u * u; }, tol);
    // int p_b^2 = int p_b (p_b/p_b') with the substitution centered on b.
    auto sq = [&](double t) {
        const double x = b.l + b.s * std::tan(t);
        return density(b, x) / kPi;
    };
    QuadratureResult bottom = adaptive(sq, {-0.5 * kPi, 0.5 * kPi}, tol);
    QuadratureResult out;
    out.value = (top.value - 1.0) / bottom.value;
    out.error_estimate = top.error_estimate / bottom.value +
                         std::abs(out.value) * bottom.error_estimate / bottom.value;
    out.evaluations = top.evaluations + bottom.evaluations;
    return out;
}

double location_scale_reduction_residual(FGenerator f, const CauchyParam& a, const CauchyParam& b,
                                         double alpha) {
    const QuadratureResult lhs = integrate_f_divergence(f, a, b, 1e-9, alpha);
    const CauchyParam reduced((b.l - a.l) / a.s, b.s / a.s);
    const QuadratureResult rhs =
        integrate_f_divergence(f, CauchyParam(0.0, 1.0), reduced, 1e-9, alpha);
    return std::abs(lhs.value - rhs.value);
}

CauchyParam GridSpec::point(int idx) const {
    const int i = idx % nl;
    const int j = idx / nl;
    const double l = nl == 1 ? lmin : lmin + (lmax - lmin) * i / (nl - 1);
    const double s = ns == 1 ? smin : smin + (smax - smin) * j / (ns - 1);
    return CauchyParam(l, s);
}

double GridLabeling::excluded_fraction() const {
    if (excluded.empty()) return 0.0;
    long n = 0;
    for (auto e : excluded) n += e;
    return static_cast<double>(n) / static_cast<double>(excluded.size());
}

namespace {

void label_point(const std::vector<CauchyParam>& gens, DivergenceKind kind, const CauchyParam& x,
                 int& label, std::uint8_t& excl) {
    double best = 0.0, second = 0.0;
    int arg = 0;
    for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
        const double v = kind == DivergenceKind::FlatReverse ? flat_divergence(x, gens[g])
                                                             : evaluate(kind, gens[g], x);
        if (g == 0) {
            best = v;
        } else if (v < best) {
            second = best;
            best = v;
            arg = g;
        } else if (g == 1 || v < second) {
            second = v;
        }
    }
    label = arg;
    excl = gens.size() > 1 && (second - best) < 1e-7 * (1.0 + std::abs(best)) ? 1 : 0;
}

}  // namespace

GridLabeling brute_force_labels(const std::vector<CauchyParam>& generators, DivergenceKind kind,
                                const GridSpec& grid, bool parallel) {
    if (generators.empty()) throw std::invalid_argument("brute_force_labels: no generators");
    GridLabeling out;
    out.grid = grid;
    const int n = grid.count();
    out.labels.resize(n);
    out.excluded.resize(n);
#pragma omp parallel for schedule(static) if (parallel)
    for (int idx = 0; idx < n; ++idx)
        label_point(generators, kind, grid.point(idx), out.labels[idx], out.excluded[idx]);
    return out;
}

GridLabeling brute_force_labels_serial(const std::vector<CauchyParam>& generators,
                                       DivergenceKind kind, const GridSpec& grid) {
    return brute_force_labels(generators, kind, grid, false);
}

namespace {

CauchyParam random_param(Rng& rng) {
    return CauchyParam(rng.uniform(-10.0, 10.0), rng.uniform(0.05, 20.0));
}

}  // namespace

double triangle_inequality_trials(DivergenceKind metric, long trials, std::uint64_t seed,
                                  bool parallel) {
    if (metric != DivergenceKind::SqrtKL && metric != DivergenceKind::FisherRao)
        throw std::invalid_argument("triangle_inequality_trials: metric must be SqrtKL or FisherRao");
    if (trials < 1) throw std::invalid_argument("triangle_inequality_trials: trials >= 1");
    double worst = -std::numeric_limits<double>::infinity();
#pragma omp parallel for schedule(static) reduction(max : worst) if (parallel)
    for (long i = 0; i < trials; ++i) {
        // Per-trial stream keyed by (seed, i) so the result does not depend
        // on the thread schedule.
        Rng rng(seed * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(i));
        const CauchyParam a = random_param(rng), b = random_param(rng), c = random_param(rng);
        const double v = evaluate(metric, a, c) - evaluate(metric, a, b) - evaluate(metric, b, c);
        worst = std::max(worst, v);
    }
    return worst;
}

double triangle_inequality_trials_serial(DivergenceKind metric, long trials, std::uint64_t seed) {
    return triangle_inequality_trials(metric, trials, seed, false);
}

namespace {

double hybrid_err(double got, double want) {
    return std::abs(got - want) / (1.0 + std::abs(want));
}

}  // namespace

double finite_difference_check(CalcTarget target, const CauchyParam& at, double step) {
    if (!(step > 0.0)) throw std::invalid_argument("finite_difference_check: step must be > 0");
    const double h = step;
    switch (target) {
        case CalcTarget::GradF: {
            const NaturalParam t = to_natural(at);
            const DualParam g = grad_free_energy(t);
            auto F = [](double t1, double t2) { return free_energy(NaturalParam(t1, t2)); };
            const double g1 = (F(t.t1 + h, t.t2) - F(t.t1 - h, t.t2)) / (2 * h);
            const double g2 = (F(t.t1, t.t2 + h) - F(t.t1, t.t2 - h)) / (2 * h);
            return std::max(hybrid_err(g1, g.e1), hybrid_err(g2, g.e2));
        }
        case CalcTarget::GradFstar: {
            const DualParam e = to_dual(at);
            const NaturalParam g = grad_conjugate_energy(e);
            auto F = [](double e1, double e2) { return conjugate_energy(DualParam(e1, e2)); };
            const double g1 = (F(e.e1 + h, e.e2) - F(e.e1 - h, e.e2)) / (2 * h);
            const double g2 = (F(e.e1, e.e2 + h) - F(e.e1, e.e2 - h)) / (2 * h);
            return std::max(hybrid_err(g1, g.t1), hybrid_err(g2, g.t2));
        }
        case CalcTarget::HessF: {
            const NaturalParam t = to_natural(at);
            const Matrix2 hm = hessian_free_energy(t);
            auto F = [](double t1, double t2) { return free_energy(NaturalParam(t1, t2)); };
            const double f0 = F(t.t1, t.t2);
            const double h11 = (F(t.t1 + h, t.t2) - 2 * f0 + F(t.t1 - h, t.t2)) / (h * h);
            const double h22 = (F(t.t1, t.t2 + h) - 2 * f0 + F(t.t1, t.t2 - h)) / (h * h);
            const double h12 = (F(t.t1 + h, t.t2 + h) - F(t.t1 + h, t.t2 - h) -
                                F(t.t1 - h, t.t2 + h) + F(t.t1 - h, t.t2 - h)) /
                               (4 * h * h);
            return std::max({hybrid_err(h11, hm.m00), hybrid_err(h12, hm.m01),
                             hybrid_err(h22, hm.m11)});
        }
        case CalcTarget::HessFstar: {
            const DualParam e = to_dual(at);
            const Matrix2 hm = hessian_conjugate_energy(e);
            auto F = [](double e1, double e2) { return conjugate_energy(DualParam(e1, e2)); };
            const double f0 = F(e.e1, e.e2);
            const double h11 = (F(e.e1 + h, e.e2) - 2 * f0 + F(e.e1 - h, e.e2)) / (h * h);
            const double h22 = (F(e.e1, e.e2 + h) - 2 * f0 + F(e.e1, e.e2 - h)) / (h * h);
            const double h12 = (F(e.e1 + h, e.e2 + h) - F(e.e1 + h, e.e2 - h) -
                                F(e.e1 - h, e.e2 + h) + F(e.e1 - h, e.e2 - h)) /
                               (4 * h * h);
            return std::max({hybrid_err(h11, hm.m00), hybrid_err(h12, hm.m01),
                             hybrid_err(h22, hm.m11)});
        }
    }
    throw std::invalid_argument("finite_difference_check: bad target");
}

}  // namespace cauchyvor
