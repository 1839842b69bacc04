#include "cauchyvor/voronoi.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <set>
#include <stdexcept>

#include "cauchyvor/oracle.hpp"

namespace cauchyvor {

namespace {

// Raw conversions on bare coordinates; the typed wrappers validate domains,
// which is unhelpful for points constructed on (or rounded onto) the circle.
Vec2 klein_to_uhp_raw(Vec2 k) {
    const double n2 = std::min(k.x * k.x + k.y * k.y, 1.0 - 1e-15);
    const double f = 1.0 / (1.0 + std::sqrt(1.0 - n2));
    const double u = f * k.x, v = f * k.y;
    const double dre = 1.0 - u, dim = -v;
    const double den = dre * dre + dim * dim;
    const double re = ((1.0 + u) * dre + v * dim) / den;
    const double im = (v * dre - (1.0 + u) * dim) / den;
    return Vec2(-im, re);
}

double dist_klein_raw(Vec2 p, Vec2 q) {
    const double np = 1.0 - norm2(p);
    const double nq = 1.0 - norm2(q);
    const double ip = 1.0 - dot(p, q);
    return safe_arccosh(ip / std::sqrt(std::max(np * nq, 1e-300)));
}

}  // namespace

CauchyVoronoiDiagram cauchy_voronoi(const std::vector<CauchyParam>& generators,
                                    DivergenceKind kind, const BuildOptions& opt) {
    if (generators.empty()) throw std::invalid_argument("cauchy_voronoi: no generators");
    for (size_t i = 0; i < generators.size(); ++i)
        for (size_t j = i + 1; j < generators.size(); ++j)
            if (generators[i] == generators[j])
                throw std::invalid_argument("cauchy_voronoi: duplicate generators");

    CauchyVoronoiDiagram d;
    d.generators = generators;
    d.kind = kind;

    if (kind != DivergenceKind::FlatReverse) {
        d.klein_sites.reserve(generators.size());
        d.sites.reserve(generators.size());
        for (size_t i = 0; i < generators.size(); ++i) {
            d.klein_sites.push_back(param_to_klein(generators[i]));
            d.sites.push_back(site_to_sphere(d.klein_sites.back(), static_cast<int>(i)));
        }
        d.subdivision = clipped_power_diagram(d.sites, opt);
        return d;
    }

    // Euclidean diagram of the lambda points: zero weights, box clip twice
    // the generator extent (floored above s = 0).
    double lmin = generators[0].l, lmax = lmin, smin = generators[0].s, smax = smin;
    for (const CauchyParam& g : generators) {
        lmin = std::min(lmin, g.l);
        lmax = std::max(lmax, g.l);
        smin = std::min(smin, g.s);
        smax = std::max(smax, g.s);
    }
    const double hx = std::max(lmax - lmin, 1.0);
    const double hy = std::max(smax - smin, 1.0);
    const double cx = 0.5 * (lmin + lmax), cy = 0.5 * (smin + smax);
    const double ymin = std::max(cy - hy, 0.5 * smin);
    const ClipShape box = ClipShape::box(cx - hx, cx + hx, ymin, cy + hy);
    d.sites.reserve(generators.size());
    for (size_t i = 0; i < generators.size(); ++i)
        d.sites.push_back({Vec2(generators[i].l, generators[i].s), 0.0, static_cast<int>(i)});
    d.subdivision = build_power_diagram(d.sites, box, opt);
    return d;
}

namespace {

GeodesicSegment dual_edge_geometry(const CauchyVoronoiDiagram& d, int i, int j, Model model,
                                   bool euclidean_dual) {
    const CauchyParam &a = d.generators[i], &b = d.generators[j];
    if (euclidean_dual) {
        GeodesicSegment g;
        g.model = Model::UpperHalfPlane;
        g.a = Vec2(a.l, a.s);
        g.b = Vec2(b.l, b.s);
        g.straight = true;
        return g;
    }
    switch (model) {
        case Model::UpperHalfPlane: return geodesic(UHPPoint(a.l, a.s), UHPPoint(b.l, b.s));
        case Model::PoincareDisk:
            return geodesic(uhp_to_disk(UHPPoint(a.l, a.s)), uhp_to_disk(UHPPoint(b.l, b.s)));
        case Model::Klein: return geodesic(param_to_klein(a), param_to_klein(b));
    }
    throw std::invalid_argument("dual_edge_geometry: bad model");
}

}  // namespace

DelaunayComplex delaunay_complex(const CauchyVoronoiDiagram& d, Model model,
                                 bool euclidean_dual) {
    if (!d.hyperbolic() && !euclidean_dual)
        throw std::invalid_argument(
            "delaunay_complex: FlatReverse diagram requires euclidean_dual");
    if (d.hyperbolic() && euclidean_dual)
        throw std::invalid_argument("delaunay_complex: euclidean_dual needs a FlatReverse diagram");

    DelaunayComplex c;
    c.model = model;
    c.euclidean_dual = euclidean_dual;
    const PlanarSubdivision& sub = d.subdivision;
    for (int i = 0; i < static_cast<int>(sub.cells.size()); ++i)
        if (!sub.cells[i].empty()) c.sites.push_back(i);

    std::set<std::array<int, 2>> edge_set;
    for (const SubdivisionEdge& e : sub.edges) {
        if (e.left_cell < 0 || e.right_cell < 0) continue;
        edge_set.insert({std::min(e.left_cell, e.right_cell), std::max(e.left_cell, e.right_cell)});
    }

    // Triangles: all three cells meet at an interior vertex and each pair
    // shares an edge.
    std::vector<std::set<int>> vertex_cells(sub.vertices.size());
    for (const SubdivisionEdge& e : sub.edges) {
        for (int cell : {e.left_cell, e.right_cell}) {
            if (cell < 0) continue;
            vertex_cells[e.v0].insert(cell);
            vertex_cells[e.v1].insert(cell);
        }
    }
    std::set<std::array<int, 3>> tri_set;
    for (size_t v = 0; v < sub.vertices.size(); ++v) {
        if (sub.vertices[v].on_clip_boundary) continue;
        const std::vector<int> around(vertex_cells[v].begin(), vertex_cells[v].end());
        for (size_t x = 0; x < around.size(); ++x)
            for (size_t y = x + 1; y < around.size(); ++y)
                for (size_t z = y + 1; z < around.size(); ++z) {
                    const std::array<int, 2> xy = {around[x], around[y]};
                    const std::array<int, 2> xz = {around[x], around[z]};
                    const std::array<int, 2> yz = {around[y], around[z]};
                    if (edge_set.count(xy) && edge_set.count(xz) && edge_set.count(yz))
                        tri_set.insert({around[x], around[y], around[z]});
                }
    }

    c.edges.assign(edge_set.begin(), edge_set.end());
    c.triangles.assign(tri_set.begin(), tri_set.end());
    c.edge_geodesics.reserve(c.edges.size());
    for (const auto& e : c.edges)
        c.edge_geodesics.push_back(dual_edge_geometry(d, e[0], e[1], model, euclidean_dual));
    return c;
}

EmptySphereReport verify_empty_sphere(const CauchyVoronoiDiagram& d, const DelaunayComplex&) {
    if (!d.hyperbolic())
        throw std::invalid_argument("verify_empty_sphere: hyperbolic diagram required");
    const PlanarSubdivision& sub = d.subdivision;
    std::vector<std::set<int>> vertex_cells(sub.vertices.size());
    for (const SubdivisionEdge& e : sub.edges)
        for (int cell : {e.left_cell, e.right_cell}) {
            if (cell < 0) continue;
            vertex_cells[e.v0].insert(cell);
            vertex_cells[e.v1].insert(cell);
        }

    EmptySphereReport rep;
    const int n = static_cast<int>(d.klein_sites.size());
    for (size_t v = 0; v < sub.vertices.size(); ++v) {
        if (sub.vertices[v].on_clip_boundary || vertex_cells[v].size() < 3) continue;
        const Vec2 p = sub.vertices[v].p;
        double r_min = std::numeric_limits<double>::infinity(), r_max = 0.0;
        for (int cell : vertex_cells[v]) {
            const double r = dist_klein_raw(p, Vec2(d.klein_sites[cell].u, d.klein_sites[cell].v));
            r_min = std::min(r_min, r);
            r_max = std::max(r_max, r);
        }
        double nearest_other = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) {
            if (vertex_cells[v].count(i)) continue;
            nearest_other = std::min(
                nearest_other, dist_klein_raw(p, Vec2(d.klein_sites[i].u, d.klein_sites[i].v)));
        }
        rep.max_radius_spread = std::max(rep.max_radius_spread, r_max - r_min);
        if (n > static_cast<int>(vertex_cells[v].size()))
            rep.max_slack = std::max(rep.max_slack, r_max - nearest_other);
        else
            rep.max_slack = std::max(rep.max_slack, 0.0);
        ++rep.vertices_checked;
    }
    return rep;
}

namespace {

struct UHPGeodesic {
    bool vertical;
    double x;       // vertical line abscissa
    double cx, r2;  // semicircle center and squared radius
};

UHPGeodesic uhp_geodesic_between(const CauchyParam& a, const CauchyParam& b) {
    if (std::abs(a.l - b.l) <= 1e-9 * (a.s + b.s + std::abs(a.l) + std::abs(b.l)))
        return {true, 0.5 * (a.l + b.l), 0.0, 0.0};
    const double c =
        (b.l * b.l + b.s * b.s - a.l * a.l - a.s * a.s) / (2.0 * (b.l - a.l));
    return {false, 0.0, c, (a.l - c) * (a.l - c) + a.s * a.s};
}

double geodesic_residual(const UHPGeodesic& g, Vec2 u) {
    if (g.vertical) return u.x - g.x;
    return (u.x - g.cx) * (u.x - g.cx) + u.y * u.y - g.r2;
}

}  // namespace

OrthogonalityReport verify_fisher_orthogonality(const CauchyVoronoiDiagram& d,
                                                const DelaunayComplex&) {
    if (!d.hyperbolic())
        throw std::invalid_argument("verify_fisher_orthogonality: hyperbolic diagram required");
    const PlanarSubdivision& sub = d.subdivision;
    OrthogonalityReport rep;

    for (const SubdivisionEdge& e : sub.edges) {
        if (e.left_cell < 0 || e.right_cell < 0) continue;
        const Vec2 A = sub.vertices[e.v0].p, B = sub.vertices[e.v1].p;
        const UHPGeodesic geo =
            uhp_geodesic_between(d.generators[e.left_cell], d.generators[e.right_cell]);
        auto bis = [&](double t) { return klein_to_uhp_raw(A + t * (B - A)); };

        // Keep the parameter strictly inside the disk when an endpoint sits
        // on the circle.
        double t_lo = sub.vertices[e.v0].on_clip_boundary ? 1e-7 : 0.0;
        double t_hi = sub.vertices[e.v1].on_clip_boundary ? 1.0 - 1e-7 : 1.0;
        double f_lo = geodesic_residual(geo, bis(t_lo));
        double f_hi = geodesic_residual(geo, bis(t_hi));
        if (f_lo == 0.0 && f_hi == 0.0) {
            ++rep.skipped;
            continue;
        }
        if (f_lo * f_hi > 0.0) {
            ++rep.skipped;
            continue;
        }
        for (int it = 0; it < 100; ++it) {
            const double mid = 0.5 * (t_lo + t_hi);
            const double fm = geodesic_residual(geo, bis(mid));
            if ((fm <= 0.0) == (f_lo <= 0.0)) {
                t_lo = mid;
                f_lo = fm;
            } else {
                t_hi = mid;
                f_hi = fm;
            }
        }
        const double t = 0.5 * (t_lo + t_hi);
        const double h = 1e-6;
        const double ta = std::max(0.0, t - h), tb = std::min(1.0, t + h);
        const Vec2 u = bis(t);
        const Vec2 tangent_bis = bis(tb) - bis(ta);
        const Vec2 tangent_geo = geo.vertical ? Vec2(0.0, 1.0) : Vec2(-u.y, u.x - geo.cx);
        const double denom = norm(tangent_bis) * norm(tangent_geo);
        if (denom < 1e-300) {
            ++rep.skipped;
            continue;
        }
        rep.max_abs_cos = std::max(rep.max_abs_cos, std::abs(dot(tangent_bis, tangent_geo)) / denom);
        ++rep.crossings;
    }
    return rep;
}

ClassifyResult classify_nearest(const std::vector<CauchyParam>& generators,
                                const std::vector<double>& samples) {
    if (generators.empty()) throw std::invalid_argument("classify_nearest: no generators");
    if (samples.size() < 2)
        throw std::invalid_argument("classify_nearest: at least two samples required");
    std::vector<double> x(samples);
    std::sort(x.begin(), x.end());
    const size_t n = x.size();
    const double median = n % 2 == 1 ? x[n / 2] : 0.5 * (x[n / 2 - 1] + x[n / 2]);
    // Nearest-rank quartiles: exact on quantile templates, consistent as an
    // estimator (standard Cauchy quartiles are -1 and 1).
    auto nearest_rank = [&](double q) {
        const size_t k = static_cast<size_t>(std::ceil(q * static_cast<double>(n)));
        return x[std::min(n - 1, std::max<size_t>(1, k) - 1)];
    };
    const double iqr = nearest_rank(0.75) - nearest_rank(0.25);
    if (!(iqr > 0.0)) throw std::invalid_argument("classify_nearest: zero interquartile range");

    ClassifyResult res;
    res.estimate = CauchyParam(median, 0.5 * iqr);
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < static_cast<int>(generators.size()); ++i) {
        const double v = fisher_rao(generators[i], res.estimate);
        if (v < best) {
            best = v;
            res.index = i;
        }
    }
    return res;
}

std::vector<int> subdivision_grid_labels(const CauchyVoronoiDiagram& d, const GridSpec& grid,
                                         bool parallel) {
    const int n = grid.count();
    std::vector<int> labels(n, -1);
#pragma omp parallel for schedule(static) if (parallel)
    for (int idx = 0; idx < n; ++idx) {
        const CauchyParam lambda = grid.point(idx);
        Vec2 p;
        if (d.hyperbolic()) {
            const KleinPoint k = param_to_klein(lambda);
            p = Vec2(k.u, k.v);
        } else {
            p = Vec2(lambda.l, lambda.s);
        }
        labels[idx] = locate_cell(d.subdivision, d.sites, p);
    }
    return labels;
}

}  // namespace cauchyvor
