#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "cauchyvor/oracle.hpp"
#include "cauchyvor/rng.hpp"
#include "cauchyvor/voronoi.hpp"

using namespace cauchyvor;

namespace {

std::vector<CauchyParam> random_generators(Rng& rng, int n) {
    std::vector<CauchyParam> gens;
    while (static_cast<int>(gens.size()) < n) {
        const CauchyParam g(rng.uniform(-5.0, 5.0), rng.uniform(0.2, 5.0));
        if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
    }
    return gens;
}

// Inverse-CDF sampling of a Cauchy variate.
double cauchy_sample(const CauchyParam& p, Rng& rng) {
    return p.l + p.s * std::tan(std::numbers::pi * (rng.next_double() - 0.5));
}

}  // namespace

TEST_SUITE_BEGIN("voronoi");

TEST_CASE("input validation") {
    CHECK_THROWS_AS(cauchy_voronoi({}, DivergenceKind::FisherRao), std::invalid_argument);
    CHECK_THROWS_AS(cauchy_voronoi({{0, 1}, {0, 1}}, DivergenceKind::KL), std::invalid_argument);
}

TEST_CASE("single generator covers the domain") {
    const auto d = cauchy_voronoi({{1, 2}}, DivergenceKind::FisherRao);
    REQUIRE(d.subdivision.cells.size() == 1);
    CHECK(!d.subdivision.cells[0].empty());
    const GridSpec grid{-3, 3, 0.2, 3, 25, 25};
    for (int lab : subdivision_grid_labels(d, grid)) CHECK(lab == 0);
}

TEST_CASE("two-generator bisector is fisher-rao equidistant") {
    const std::vector<CauchyParam> gens = {{0, 1}, {1, 1}};
    const auto d = cauchy_voronoi(gens, DivergenceKind::FisherRao);
    int shared = 0;
    for (const auto& e : d.subdivision.edges) {
        if (e.left_cell < 0 || e.right_cell < 0) continue;
        ++shared;
        const Vec2 A = d.subdivision.vertices[e.v0].p, B = d.subdivision.vertices[e.v1].p;
        for (double t : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            const Vec2 k = A + t * (B - A);
            if (norm2(k) > 0.9999) continue;
            const CauchyParam lambda = klein_to_param(KleinPoint(k.x, k.y));
            CHECK(std::abs(fisher_rao(lambda, gens[0]) - fisher_rao(lambda, gens[1])) <= 1e-9);
        }
    }
    CHECK(shared >= 1);
}

TEST_CASE("hyperbolic kinds share one subdivision; labels agree with argmin") {
    Rng rng(52);
    const auto gens = random_generators(rng, 18);
    const GridSpec grid{-6, 6, 0.05, 6, 60, 60};
    const auto d = cauchy_voronoi(gens, DivergenceKind::FisherRao);
    const std::vector<int> cell_labels = subdivision_grid_labels(d, grid);

    const DivergenceKind kinds[] = {DivergenceKind::FisherRao, DivergenceKind::KL,
                                    DivergenceKind::SqrtKL, DivergenceKind::ChiSquare,
                                    DivergenceKind::FlatForward};
    std::vector<GridLabeling> labelings;
    for (DivergenceKind k : kinds) labelings.push_back(brute_force_labels(gens, k, grid));
    for (int idx = 0; idx < grid.count(); ++idx) {
        bool excluded = false;
        for (const auto& lab : labelings) excluded = excluded || lab.excluded[idx];
        if (excluded) continue;
        for (const auto& lab : labelings) CHECK(lab.labels[idx] == labelings[0].labels[idx]);
        CHECK(cell_labels[idx] == labelings[0].labels[idx]);
    }
    CHECK(labelings[0].excluded_fraction() < 0.05);
}

TEST_CASE("monotone transforms leave argmin labels unchanged") {
    Rng rng(53);
    const auto gens = random_generators(rng, 10);
    const GridSpec grid{-5, 5, 0.1, 5, 40, 40};
    const auto base = brute_force_labels(gens, DivergenceKind::ChiSquare, grid);
    for (int idx = 0; idx < grid.count(); ++idx) {
        if (base.excluded[idx]) continue;
        const CauchyParam x = grid.point(idx);
        int best_sq = 0, best_log = 0;
        double vs = 1e300, vl = 1e300;
        for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
            const double u = chi_square(gens[g], x);
            if (u * u < vs) vs = u * u, best_sq = g;
            if (std::log1p(u) < vl) vl = std::log1p(u), best_log = g;
        }
        CHECK(best_sq == base.labels[idx]);
        CHECK(best_log == base.labels[idx]);
    }
}

TEST_CASE("flat-reverse diagram is the euclidean voronoi of the parameters") {
    Rng rng(54);
    const auto gens = random_generators(rng, 16);
    const auto d = cauchy_voronoi(gens, DivergenceKind::FlatReverse);
    REQUIRE(!d.hyperbolic());
    const GridSpec grid{-5, 5, 0.25, 5, 50, 50};
    const auto brute = brute_force_labels(gens, DivergenceKind::FlatReverse, grid);
    const auto cell_labels = subdivision_grid_labels(d, grid);
    int compared = 0;
    for (int idx = 0; idx < grid.count(); ++idx) {
        if (brute.excluded[idx]) continue;
        const CauchyParam x = grid.point(idx);
        if (!d.subdivision.clip.contains(Vec2(x.l, x.s), -1e-9)) continue;
        int nearest = 0;
        double bd = 1e300;
        for (int g = 0; g < static_cast<int>(gens.size()); ++g) {
            const double dx = gens[g].l - x.l, dy = gens[g].s - x.s;
            if (dx * dx + dy * dy < bd) bd = dx * dx + dy * dy, nearest = g;
        }
        CHECK(brute.labels[idx] == nearest);
        CHECK(cell_labels[idx] == nearest);
        ++compared;
    }
    CHECK(compared > 1000);
}

TEST_CASE("delaunay complex structure") {
    SUBCASE("two adjacent cells give a single edge") {
        const auto d = cauchy_voronoi({{0, 1}, {1, 1}}, DivergenceKind::FisherRao);
        const auto c = delaunay_complex(d);
        CHECK(c.sites.size() == 2);
        REQUIRE(c.edges.size() == 1);
        CHECK(c.edges[0] == std::array<int, 2>{0, 1});
        CHECK(c.triangles.empty());
        CHECK(c.edge_geodesics.size() == 1);
    }
    SUBCASE("three generic sites give one triangle iff cells share a vertex") {
        const std::vector<CauchyParam> gens = {{-1, 1}, {1, 1}, {0, 2.5}};
        const auto d = cauchy_voronoi(gens, DivergenceKind::FisherRao);
        const auto c = delaunay_complex(d);
        int junctions = 0;
        for (size_t v = 0; v < d.subdivision.vertices.size(); ++v)
            if (!d.subdivision.vertices[v].on_clip_boundary) ++junctions;
        if (junctions > 0) {
            CHECK(c.triangles.size() == 1);
        } else {
            CHECK(c.triangles.empty());
        }
    }
    SUBCASE("flat-reverse rejected without the euclidean flag") {
        const auto d = cauchy_voronoi({{0, 1}, {1, 1}}, DivergenceKind::FlatReverse);
        CHECK_THROWS_AS(delaunay_complex(d), std::invalid_argument);
        const auto c = delaunay_complex(d, Model::Klein, true);
        CHECK(c.euclidean_dual);
        CHECK(c.edges.size() == 1);
        CHECK(c.edge_geodesics[0].straight);
    }
    SUBCASE("duality: edges match shared positive-length cell boundaries") {
        Rng rng(55);
        const auto gens = random_generators(rng, 20);
        const auto d = cauchy_voronoi(gens, DivergenceKind::KL);
        const auto c = delaunay_complex(d);
        std::set<std::array<int, 2>> from_sub;
        for (const auto& e : d.subdivision.edges)
            if (e.left_cell >= 0 && e.right_cell >= 0)
                from_sub.insert({std::min(e.left_cell, e.right_cell),
                                 std::max(e.left_cell, e.right_cell)});
        CHECK(from_sub == std::set<std::array<int, 2>>(c.edges.begin(), c.edges.end()));
        for (const auto& t : c.triangles) {
            CHECK(from_sub.count({t[0], t[1]}) == 1);
            CHECK(from_sub.count({t[0], t[2]}) == 1);
            CHECK(from_sub.count({t[1], t[2]}) == 1);
        }
    }
}

TEST_CASE("klein-chord delaunay drawing is planar") {
    Rng rng(56);
    const auto gens = random_generators(rng, 24);
    const auto d = cauchy_voronoi(gens, DivergenceKind::FisherRao);
    const auto c = delaunay_complex(d, Model::Klein);
    auto crosses = [&](const std::array<int, 2>& e1, const std::array<int, 2>& e2) {
        if (e1[0] == e2[0] || e1[0] == e2[1] || e1[1] == e2[0] || e1[1] == e2[1]) return false;
        const Vec2 a(d.klein_sites[e1[0]].u, d.klein_sites[e1[0]].v);
        const Vec2 b(d.klein_sites[e1[1]].u, d.klein_sites[e1[1]].v);
        const Vec2 c2(d.klein_sites[e2[0]].u, d.klein_sites[e2[0]].v);
        const Vec2 dd(d.klein_sites[e2[1]].u, d.klein_sites[e2[1]].v);
        const double d1 = cross(b - a, c2 - a), d2 = cross(b - a, dd - a);
        const double d3 = cross(dd - c2, a - c2), d4 = cross(dd - c2, b - c2);
        return d1 * d2 < -1e-15 && d3 * d4 < -1e-15;
    };
    for (size_t i = 0; i < c.edges.size(); ++i)
        for (size_t j = i + 1; j < c.edges.size(); ++j) CHECK(!crosses(c.edges[i], c.edges[j]));
}

TEST_CASE("nested-scale configuration stays a valid complex") {
    // nine nearby sites plus one very wide one; the dual need not
    // triangulate the hull, only stay structurally sound
    std::vector<CauchyParam> gens;
    for (int k = 0; k < 9; ++k) gens.push_back({0.05 * k, 1.0});
    gens.push_back({0, 100});
    const auto d = cauchy_voronoi(gens, DivergenceKind::FisherRao);
    const auto c = delaunay_complex(d);
    CHECK(c.sites.size() == gens.size());
    std::set<std::array<int, 2>> edge_set(c.edges.begin(), c.edges.end());
    for (const auto& t : c.triangles) {
        CHECK(edge_set.count({t[0], t[1]}) == 1);
        CHECK(edge_set.count({t[0], t[2]}) == 1);
        CHECK(edge_set.count({t[1], t[2]}) == 1);
    }
    // the edge graph is connected
    std::vector<int> comp(gens.size(), -1);
    std::vector<int> stack = {0};
    comp[0] = 0;
    while (!stack.empty()) {
        const int u = stack.back();
        stack.pop_back();
        for (const auto& e : c.edges) {
            int v = -1;
            if (e[0] == u) v = e[1];
            if (e[1] == u) v = e[0];
            if (v >= 0 && comp[v] < 0) comp[v] = 0, stack.push_back(v);
        }
    }
    for (int i = 0; i < static_cast<int>(gens.size()); ++i) CHECK(comp[i] == 0);
}

TEST_CASE("empty sphere property") {
    SUBCASE("three sites, single junction, zero slack") {
        const std::vector<CauchyParam> gens = {{-1, 1}, {1, 1}, {0, 2.5}};
        const auto d = cauchy_voronoi(gens, DivergenceKind::FisherRao);
        const auto c = delaunay_complex(d);
        const auto rep = verify_empty_sphere(d, c);
        if (rep.vertices_checked > 0) {
            CHECK(rep.max_slack <= 1e-9);
            CHECK(rep.max_radius_spread <= 1e-9);
        }
    }
    SUBCASE("random instances pass; tampering flips the verdict") {
        Rng rng(57);
        const auto gens = random_generators(rng, 40);
        auto d = cauchy_voronoi(gens, DivergenceKind::FisherRao);
        const auto c = delaunay_complex(d);
        const auto rep = verify_empty_sphere(d, c);
        CHECK(rep.vertices_checked > 0);
        CHECK(rep.max_slack <= 1e-9);
        CHECK(rep.max_radius_spread <= 1e-9);
        CHECK(rep.pass());

        // move one non-defining site onto a junction of the stale diagram
        std::vector<std::set<int>> vertex_cells(d.subdivision.vertices.size());
        for (const auto& e : d.subdivision.edges)
            for (int cell : {e.left_cell, e.right_cell}) {
                if (cell < 0) continue;
                vertex_cells[e.v0].insert(cell);
                vertex_cells[e.v1].insert(cell);
            }
        bool tampered = false;
        for (size_t v = 0; v < d.subdivision.vertices.size() && !tampered; ++v) {
            if (d.subdivision.vertices[v].on_clip_boundary || vertex_cells[v].size() < 3) continue;
            for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
                if (vertex_cells[v].count(i)) continue;
                const Vec2 p = d.subdivision.vertices[v].p;
                d.klein_sites[i] = KleinPoint(p.x, p.y);
                tampered = true;
                break;
            }
        }
        REQUIRE(tampered);
        const auto bad = verify_empty_sphere(d, c);
        CHECK(!bad.pass());
    }
}

TEST_CASE("fisher orthogonality") {
    SUBCASE("symmetric pair: vertical bisector, horizontal geodesic tangent") {
        const auto d = cauchy_voronoi({{-1, 1}, {1, 1}}, DivergenceKind::FisherRao);
        const auto c = delaunay_complex(d);
        const auto rep = verify_fisher_orthogonality(d, c);
        CHECK(rep.crossings == 1);
        CHECK(rep.max_abs_cos <= 1e-6);
    }
    SUBCASE("scale pair: vertical geodesic, equidistance curve through (0,2)") {
        const auto d = cauchy_voronoi({{0, 1}, {0, 4}}, DivergenceKind::FisherRao);
        const auto c = delaunay_complex(d);
        const auto rep = verify_fisher_orthogonality(d, c);
        CHECK(rep.crossings == 1);
        CHECK(rep.max_abs_cos <= 1e-6);
    }
    SUBCASE("random instances") {
        Rng rng(58);
        const auto gens = random_generators(rng, 30);
        const auto d = cauchy_voronoi(gens, DivergenceKind::FisherRao);
        const auto c = delaunay_complex(d);
        const auto rep = verify_fisher_orthogonality(d, c);
        CHECK(rep.crossings > 0);
        CHECK(rep.max_abs_cos <= 1e-6);
    }
    SUBCASE("flat-reverse rejected") {
        const auto d = cauchy_voronoi({{0, 1}, {1, 1}}, DivergenceKind::FlatReverse);
        const auto c = delaunay_complex(d, Model::Klein, true);
        CHECK_THROWS_AS(verify_fisher_orthogonality(d, c), std::invalid_argument);
    }
}

TEST_CASE("classify_nearest") {
    SUBCASE("exact on the quartile template") {
        const std::vector<double> samples = {3.0, 5.0, 7.0};  // {-1,0,1} scaled by (5,2)
        const auto res = classify_nearest({{0, 1}, {5, 2}, {9, 1}}, samples);
        CHECK(res.estimate.l == doctest::Approx(5.0));
        CHECK(res.estimate.s == doctest::Approx(2.0));
        CHECK(res.index == 1);
    }
    SUBCASE("single generator always wins") {
        const auto res = classify_nearest({{2, 2}}, {0.0, 1.0, 4.0});
        CHECK(res.index == 0);
    }
    SUBCASE("ties break to the lowest index") {
        const auto res = classify_nearest({{5, 2}, {5, 2.0000000001}}, {3.0, 5.0, 7.0});
        CHECK(res.index == 0);
    }
    SUBCASE("estimator consistency on 10k samples") {
        Rng rng(59);
        std::vector<double> samples;
        for (int i = 0; i < 10000; ++i) samples.push_back(cauchy_sample({0, 1}, rng));
        const auto res = classify_nearest({{0, 1}, {3, 1}, {0, 4}}, samples);
        CHECK(res.index == 0);
        CHECK(res.estimate.l == doctest::Approx(0.0).epsilon(0.1));
        CHECK(res.estimate.s == doctest::Approx(1.0).epsilon(0.1));
    }
    SUBCASE("errors") {
        CHECK_THROWS_AS(classify_nearest({{0, 1}}, {1.0}), std::invalid_argument);
        CHECK_THROWS_AS(classify_nearest({{0, 1}}, {1.0, 1.0, 1.0}), std::invalid_argument);
        CHECK_THROWS_AS(classify_nearest({}, {1.0, 2.0}), std::invalid_argument);
    }
}

TEST_SUITE_END();
