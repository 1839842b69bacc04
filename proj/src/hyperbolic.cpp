#include "cauchyvor/hyperbolic.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace cauchyvor {

namespace {

constexpr double kDomainMargin = 1e-12;

void check_disk(double u, double v, const char* what) {
    if (!std::isfinite(u) || !std::isfinite(v))
        throw std::invalid_argument(std::string(what) + ": non-finite coordinates");
    if (u * u + v * v >= (1.0 - kDomainMargin) * (1.0 - kDomainMargin))
        throw std::invalid_argument(std::string(what) + ": point out of the open unit disk");
}

}  // namespace

UHPPoint::UHPPoint(double x_, double y_) : x(x_), y(y_) {
    if (!std::isfinite(x) || !std::isfinite(y))
        throw std::invalid_argument("UHPPoint: non-finite coordinates");
    if (!(y > 0.0)) throw std::invalid_argument("UHPPoint: y must be > 0");
}

DiskPoint::DiskPoint(double u_, double v_) : u(u_), v(v_) { check_disk(u, v, "DiskPoint"); }

KleinPoint::KleinPoint(double u_, double v_) : u(u_), v(v_) { check_disk(u, v, "KleinPoint"); }

const char* to_string(Model m) {
    switch (m) {
        case Model::UpperHalfPlane: return "uhp";
        case Model::PoincareDisk: return "poincare";
        case Model::Klein: return "klein";
    }
    return "?";
}

Model model_from_string(const std::string& name) {
    if (name == "uhp") return Model::UpperHalfPlane;
    if (name == "poincare") return Model::PoincareDisk;
    if (name == "klein") return Model::Klein;
    throw std::invalid_argument("unknown model: " + name);
}

DiskPoint uhp_to_disk(const UHPPoint& p) {
    // (x + iy - i) / (x + iy + i)
    const double nre = p.x, nim = p.y - 1.0;
    const double dre = p.x, dim = p.y + 1.0;
    const double den = dre * dre + dim * dim;
    return DiskPoint((nre * dre + nim * dim) / den, (nim * dre - nre * dim) / den);
}

UHPPoint disk_to_uhp(const DiskPoint& p) {
    // i (1 + w) / (1 - w)
    const double nre = 1.0 + p.u, nim = p.v;
    const double dre = 1.0 - p.u, dim = -p.v;
    const double den = dre * dre + dim * dim;
    const double re = (nre * dre + nim * dim) / den;
    const double im = (nim * dre - nre * dim) / den;
    return UHPPoint(-im, re);
}

KleinPoint disk_to_klein(const DiskPoint& p) {
    const double f = 2.0 / (1.0 + p.u * p.u + p.v * p.v);
    return KleinPoint(f * p.u, f * p.v);
}

DiskPoint klein_to_disk(const KleinPoint& k) {
    const double n2 = k.u * k.u + k.v * k.v;
    const double f = 1.0 / (1.0 + std::sqrt(1.0 - n2));
    return DiskPoint(f * k.u, f * k.v);
}

KleinPoint uhp_to_klein(const UHPPoint& p) { return disk_to_klein(uhp_to_disk(p)); }
UHPPoint klein_to_uhp(const KleinPoint& k) { return disk_to_uhp(klein_to_disk(k)); }

KleinPoint param_to_klein(const CauchyParam& a) { return uhp_to_klein(UHPPoint(a.l, a.s)); }

CauchyParam klein_to_param(const KleinPoint& k) {
    const UHPPoint p = klein_to_uhp(k);
    return CauchyParam(p.x, p.y);
}

double dist_uhp(const UHPPoint& p, const UHPPoint& q) {
    const double dx = q.x - p.x, dy = q.y - p.y;
    return safe_arccosh(1.0 + (dx * dx + dy * dy) / (2.0 * p.y * q.y));
}

double dist_klein(const KleinPoint& p, const KleinPoint& q) {
    const double np = 1.0 - (p.u * p.u + p.v * p.v);
    const double nq = 1.0 - (q.u * q.u + q.v * q.v);
    const double ip = 1.0 - (p.u * q.u + p.v * q.v);
    return safe_arccosh(ip / std::sqrt(np * nq));
}

LineCoeffs klein_bisector(const KleinPoint& p, const KleinPoint& q) {
    if (p == q) throw std::invalid_argument("klein_bisector: coincident points");
    const double gp = std::sqrt(1.0 - (p.u * p.u + p.v * p.v));
    const double gq = std::sqrt(1.0 - (q.u * q.u + q.v * q.v));
    return LineCoeffs::normalized(gp * q.u - gq * p.u, gp * q.v - gq * p.v, gq - gp);
}

Vec2 GeodesicSegment::point_at(double t) const {
    if (straight) return a + t * (b - a);
    const double ang = angle_a + t * (angle_b - angle_a);
    return center + radius * Vec2(std::cos(ang), std::sin(ang));
}

namespace {

GeodesicSegment straight_segment(Model m, Vec2 a, Vec2 b) {
    GeodesicSegment g;
    g.model = m;
    g.a = a;
    g.b = b;
    g.straight = true;
    return g;
}

GeodesicSegment arc_segment(Model m, Vec2 a, Vec2 b, Vec2 center, double radius) {
    GeodesicSegment g;
    g.model = m;
    g.a = a;
    g.b = b;
    g.straight = false;
    g.center = center;
    g.radius = radius;
    g.angle_a = std::atan2(a.y - center.y, a.x - center.x);
    g.angle_b = std::atan2(b.y - center.y, b.x - center.x);
    // Sweep the short way; for UHP and orthogonal-circle arcs this is the
    // portion inside the domain.
    if (g.angle_b - g.angle_a > std::numbers::pi) g.angle_b -= 2.0 * std::numbers::pi;
    if (g.angle_a - g.angle_b > std::numbers::pi) g.angle_a -= 2.0 * std::numbers::pi;
    return g;
}

}  // namespace

GeodesicSegment geodesic(const UHPPoint& a, const UHPPoint& b) {
    if (a.x == b.x && a.y == b.y) throw std::invalid_argument("geodesic: coincident points");
    const Vec2 va(a.x, a.y), vb(b.x, b.y);
    // Nearly stacked points get the vertical line; the true semicircle would
    // have a huge radius and lose precision, while its tangent direction
    // differs from vertical by O(y / radius).
    if (std::abs(a.x - b.x) <= 1e-9 * (a.y + b.y + std::abs(a.x) + std::abs(b.x)))
        return straight_segment(Model::UpperHalfPlane, va, vb);
    // Semicircle centered on the real axis: c solves |a-c|^2 = |b-c|^2 on y=0.
    const double c = (norm2(vb) - norm2(va)) / (2.0 * (b.x - a.x));
    const double r = std::hypot(a.x - c, a.y);
    return arc_segment(Model::UpperHalfPlane, va, vb, Vec2(c, 0.0), r);
}

GeodesicSegment geodesic(const DiskPoint& a, const DiskPoint& b) {
    if (a.u == b.u && a.v == b.v) throw std::invalid_argument("geodesic: coincident points");
    const Vec2 va(a.u, a.v), vb(b.u, b.v);
    // Diameter when (nearly) collinear with the origin; below the threshold
    // the orthogonal circle's radius exceeds ~1e6 and the chord is closer to
    // the true geodesic than the representable arc.
    if (std::abs(cross(va, vb)) < 1e-6) return straight_segment(Model::PoincareDisk, va, vb);
    // Circle through a and b orthogonal to the unit circle: 2 p . c = ||p||^2 + 1
    // for p in {a, b}, radius^2 = ||c||^2 - 1.
    const double ra = norm2(va) + 1.0, rb = norm2(vb) + 1.0;
    const double det = 4.0 * cross(va, vb);
    const Vec2 center((ra * 2.0 * vb.y - rb * 2.0 * va.y) / det,
                      (rb * 2.0 * va.x - ra * 2.0 * vb.x) / det);
    const double r = std::sqrt(norm2(center) - 1.0);
    return arc_segment(Model::PoincareDisk, va, vb, center, r);
}

GeodesicSegment geodesic(const KleinPoint& a, const KleinPoint& b) {
    if (a == b) throw std::invalid_argument("geodesic: coincident points");
    return straight_segment(Model::Klein, Vec2(a.u, a.v), Vec2(b.u, b.v));
}

}  // namespace cauchyvor
