#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cauchyvor/hyperbolic.hpp"
#include "cauchyvor/power_diagram.hpp"
#include "cauchyvor/rng.hpp"

using namespace cauchyvor;

namespace {

KleinPoint random_klein(Rng& rng) {
    for (;;) {
        const double u = rng.uniform(-0.95, 0.95), v = rng.uniform(-0.95, 0.95);
        if (u * u + v * v < 0.9) return KleinPoint(u, v);
    }
}

std::vector<WeightedSite> random_sites(Rng& rng, int n) {
    std::vector<WeightedSite> sites;
    for (int i = 0; i < n; ++i) sites.push_back(site_to_sphere(random_klein(rng), i));
    return sites;
}

}  // namespace

TEST_SUITE_BEGIN("power_diagram");

TEST_CASE("site_to_sphere hand values") {
    const WeightedSite o = site_to_sphere(KleinPoint(0, 0), 0);
    CHECK(o.c.x == 0.0);
    CHECK(o.c.y == 0.0);
    CHECK(o.w == doctest::Approx(-1.0));

    const WeightedSite s = site_to_sphere(KleinPoint(1.0 / 3.0, -2.0 / 3.0), 1);
    CHECK(s.c.x == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(s.c.y == doctest::Approx(-0.5).epsilon(1e-14));
    CHECK(s.w == doctest::Approx(-19.0 / 16.0).epsilon(1e-14));
}

TEST_CASE("power distance") {
    CHECK(power_distance({{0, 0}, -1.0, 0}, Vec2(0, 0)) == doctest::Approx(1.0));
    CHECK(power_distance({{0, 0}, 4.0, 0}, Vec2(2, 0)) == doctest::Approx(0.0));
    Rng rng(41);
    for (int i = 0; i < 100; ++i) {
        const Vec2 c(rng.uniform(-1, 1), rng.uniform(-1, 1));
        const double w = rng.uniform(0.01, 2.0);  // positive weight = real circle
        const Vec2 x(rng.uniform(-2, 2), rng.uniform(-2, 2));
        const bool inside = norm2(x - c) < w;
        CHECK((power_distance({c, w, 0}, x) < 0.0) == inside);
    }
}

TEST_CASE("power bisector") {
    const LineCoeffs mid = power_bisector({{-1, 0}, 0.7, 0}, {{1, 0}, 0.7, 1});
    CHECK(std::abs(mid.eval(Vec2(0.0, 3.0))) <= 1e-12);
    CHECK(std::abs(mid.b) <= 1e-15);

    // keystone: spheres of the mapped Klein points reproduce the Klein bisector
    const WeightedSite s0 = site_to_sphere(KleinPoint(0, 0), 0);
    const WeightedSite s1 = site_to_sphere(KleinPoint(1.0 / 3.0, -2.0 / 3.0), 1);
    const LineCoeffs pb = power_bisector(s0, s1);
    const LineCoeffs want = LineCoeffs::normalized(1.0, -2.0, -1.0);
    CHECK(line_max_abs_diff(pb, want) <= 1e-12);

    SUBCASE("weight shifting leaves the bisector unchanged") {
        WeightedSite a = s0, b = s1;
        a.w += 2.5;
        b.w += 2.5;
        CHECK(line_max_abs_diff(power_bisector(a, b), pb) <= 1e-12);
    }
    SUBCASE("identical spheres rejected") {
        CHECK_THROWS_AS(power_bisector(s0, s0), std::invalid_argument);
    }
}

TEST_CASE("keystone equivalence on random pairs") {
    Rng rng(42);
    for (int i = 0; i < 300; ++i) {
        const KleinPoint p = random_klein(rng), q = random_klein(rng);
        if (p == q) continue;
        const LineCoeffs kb = klein_bisector(p, q);
        const LineCoeffs pb = power_bisector(site_to_sphere(p, 0), site_to_sphere(q, 1));
        CHECK(line_max_abs_diff(kb, pb) <= 1e-9);
    }
}

TEST_CASE("polar plane") {
    const PolarPlane unitw = polar_plane({{0, 0}, -1.0, 0});
    CHECK(unitw.a.x == 0.0);
    CHECK(unitw.b == doctest::Approx(-1.0));
    const PolarPlane clip = polar_plane({{0, 0}, 1.0, 0});
    CHECK(clip.b == doctest::Approx(1.0));

    Rng rng(43);
    for (int i = 0; i < 100; ++i) {
        const Vec2 c(rng.uniform(-1, 1), rng.uniform(-1, 1));
        const double w = rng.uniform(0.01, 2.0);
        const double ang = rng.uniform(0, 2 * std::numbers::pi);
        const Vec2 x = c + std::sqrt(w) * Vec2(std::cos(ang), std::sin(ang));  // on the sphere
        const PolarPlane pl = polar_plane({c, w, 0});
        CHECK(std::abs(norm2(x) - (dot(pl.a, x) + pl.b)) <= 1e-12);
    }
}

TEST_CASE("clipped diagram: single site covers the disk") {
    const auto sub = clipped_power_diagram({site_to_sphere(KleinPoint(0.2, 0.1), 0)});
    REQUIRE(sub.cells.size() == 1);
    CHECK(!sub.cells[0].empty());
    for (const auto& e : sub.edges) {
        CHECK(e.arc);
        CHECK(e.right_cell == kClipBoundary);
    }
    CHECK(locate_cell(sub, {site_to_sphere(KleinPoint(0.2, 0.1), 0)}, Vec2(0.5, -0.3)) == 0);
}

TEST_CASE("clipped diagram: keystone pair") {
    const std::vector<WeightedSite> sites = {site_to_sphere(KleinPoint(0, 0), 0),
                                             site_to_sphere(KleinPoint(1.0 / 3.0, -2.0 / 3.0), 1)};
    const auto sub = clipped_power_diagram(sites);
    REQUIRE(sub.cells.size() == 2);
    CHECK(!sub.cells[0].empty());
    CHECK(!sub.cells[1].empty());
    // the shared edge lies on u - 2v - 1 = 0
    const LineCoeffs want = LineCoeffs::normalized(1.0, -2.0, -1.0);
    int shared = 0;
    for (const auto& e : sub.edges) {
        if (e.left_cell >= 0 && e.right_cell >= 0) {
            ++shared;
            CHECK(std::abs(want.eval(sub.vertices[e.v0].p)) <= 1e-9);
            CHECK(std::abs(want.eval(sub.vertices[e.v1].p)) <= 1e-9);
        }
    }
    CHECK(shared == 1);
    CHECK(locate_cell(sub, sites, Vec2(-0.2, 0.0)) == 0);
    CHECK(locate_cell(sub, sites, Vec2(0.5, -0.6)) == 1);
}

TEST_CASE("construction errors") {
    CHECK_THROWS_AS(clipped_power_diagram({}), std::invalid_argument);
    const WeightedSite s = site_to_sphere(KleinPoint(0.1, 0.2), 0);
    CHECK_THROWS_AS(clipped_power_diagram({s, s}), std::invalid_argument);
}

TEST_CASE("lifting route equals half-plane route") {
    Rng rng(44);
    for (int trial = 0; trial < 6; ++trial) {
        const int n = 5 + static_cast<int>(rng.next_u64() % 40);
        const auto sites = random_sites(rng, n);
        BuildOptions lift;
        lift.method = ConstructionMethod::Lifting;
        BuildOptions half;
        half.method = ConstructionMethod::HalfPlane;
        const auto a = build_power_diagram(sites, ClipShape::unit_disk(), lift);
        const auto b = build_power_diagram(sites, ClipShape::unit_disk(), half);
        CHECK(subdivisions_equal(a, b, 1e-9));
    }
}

TEST_CASE("collinear sites fall back cleanly") {
    // all sites on a diameter: the lifted points are coplanar
    std::vector<WeightedSite> sites;
    for (int i = 0; i < 7; ++i)
        sites.push_back(site_to_sphere(KleinPoint(-0.8 + 0.25 * i, 0.0), i));
    BuildOptions lift;
    lift.method = ConstructionMethod::Lifting;
    BuildOptions half;
    half.method = ConstructionMethod::HalfPlane;
    const auto a = build_power_diagram(sites, ClipShape::unit_disk(), lift);
    const auto b = build_power_diagram(sites, ClipShape::unit_disk(), half);
    CHECK(subdivisions_equal(a, b, 1e-9));
    for (const auto& cell : a.cells) CHECK(!cell.empty());
}

TEST_CASE("weight-shift invariance of the whole subdivision") {
    Rng rng(45);
    auto sites = random_sites(rng, 24);
    const auto base = clipped_power_diagram(sites);
    auto shifted = sites;
    for (auto& s : shifted) s.w += 3.75;
    const auto moved = clipped_power_diagram(shifted);
    CHECK(subdivisions_equal(base, moved, 1e-10));
}

TEST_CASE("vertices are power-equidistant to their defining sites") {
    Rng rng(46);
    const auto sites = random_sites(rng, 30);
    const auto sub = clipped_power_diagram(sites);
    std::vector<std::vector<int>> vertex_cells(sub.vertices.size());
    for (const auto& e : sub.edges)
        for (int cell : {e.left_cell, e.right_cell}) {
            if (cell < 0) continue;
            for (int v : {e.v0, e.v1}) {
                auto& lst = vertex_cells[v];
                if (std::find(lst.begin(), lst.end(), cell) == lst.end()) lst.push_back(cell);
            }
        }
    int interior = 0;
    for (size_t v = 0; v < sub.vertices.size(); ++v) {
        if (sub.vertices[v].on_clip_boundary || vertex_cells[v].size() < 3) continue;
        ++interior;
        double lo = 1e300, hi = -1e300;
        for (int c : vertex_cells[v]) {
            const double pd = power_distance(sites[c], sub.vertices[v].p);
            lo = std::min(lo, pd);
            hi = std::max(hi, pd);
        }
        CHECK(hi - lo <= 1e-9);
    }
    CHECK(interior > 0);
}

TEST_CASE("cell convexity: segments between interior points stay inside") {
    Rng rng(47);
    const auto sites = random_sites(rng, 20);
    const auto sub = clipped_power_diagram(sites);
    int checked = 0;
    for (int trial = 0; trial < 4000 && checked < 400; ++trial) {
        const double ang1 = rng.uniform(0, 2 * std::numbers::pi);
        const double r1 = std::sqrt(rng.next_double()) * 0.98;
        const double ang2 = rng.uniform(0, 2 * std::numbers::pi);
        const double r2 = std::sqrt(rng.next_double()) * 0.98;
        const Vec2 p(r1 * std::cos(ang1), r1 * std::sin(ang1));
        const Vec2 q(r2 * std::cos(ang2), r2 * std::sin(ang2));
        const int cp = locate_cell(sub, sites, p, 1e-12);
        if (cp < 0 || cp != locate_cell(sub, sites, q, 1e-12)) continue;
        ++checked;
        for (double t : {0.25, 0.5, 0.75}) {
            const int cm = locate_cell(sub, sites, p + t * (q - p), 1e-9);
            CHECK(cm == cp);
        }
    }
    CHECK(checked > 0);
}

TEST_CASE("grid argmin agreement with constructed cells") {
    Rng rng(48);
    const auto sites = random_sites(rng, 50);
    const auto sub = clipped_power_diagram(sites);
    const int res = 120;
    int mismatches = 0, tested = 0;
    for (int i = 0; i < res; ++i)
        for (int j = 0; j < res; ++j) {
            const Vec2 x(-1.0 + 2.0 * (i + 0.5) / res, -1.0 + 2.0 * (j + 0.5) / res);
            if (norm2(x) >= 0.98) continue;
            int best = 0;
            double bd = power_distance(sites[0], x), second = 1e300;
            for (int k = 1; k < static_cast<int>(sites.size()); ++k) {
                const double d = power_distance(sites[k], x);
                if (d < bd) {
                    second = bd;
                    bd = d;
                    best = k;
                } else {
                    second = std::min(second, d);
                }
            }
            if (second - bd < 1e-7 * (1.0 + std::abs(bd))) continue;  // near a bisector
            ++tested;
            if (locate_cell(sub, sites, x) != best) ++mismatches;
        }
    CHECK(tested > 5000);
    CHECK(mismatches == 0);
}

TEST_CASE("box-clipped diagram with equal weights is the euclidean voronoi") {
    Rng rng(49);
    std::vector<WeightedSite> sites;
    for (int i = 0; i < 15; ++i)
        sites.push_back({Vec2(rng.uniform(-3, 3), rng.uniform(0.5, 4)), 0.0, i});
    const ClipShape box = ClipShape::box(-4, 4, 0.1, 5);
    const auto sub = build_power_diagram(sites, box, {});
    for (int trial = 0; trial < 2000; ++trial) {
        const Vec2 x(rng.uniform(-4, 4), rng.uniform(0.1, 5));
        int best = 0;
        double bd = norm2(x - sites[0].c), second = 1e300;
        for (int k = 1; k < static_cast<int>(sites.size()); ++k) {
            const double d = norm2(x - sites[k].c);
            if (d < bd) {
                second = bd;
                bd = d;
                best = k;
            } else {
                second = std::min(second, d);
            }
        }
        if (second - bd < 1e-6) continue;
        CHECK(locate_cell(sub, sites, x) == best);
    }
}

TEST_SUITE_END();
