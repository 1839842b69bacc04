#pragma once

#include "cauchyvor/cauchy.hpp"
#include "cauchyvor/geom.hpp"

namespace cauchyvor {

// Poincare upper half-plane point (y > 0). Identified with CauchyParam
// coordinates (l, s).
struct UHPPoint {
    double x = 0.0;
    double y = 1.0;

    UHPPoint() = default;
    UHPPoint(double x_, double y_);
};

// Poincare disk point, ||p|| < 1 - 1e-12.
struct DiskPoint {
    double u = 0.0;
    double v = 0.0;

    DiskPoint() = default;
    DiskPoint(double u_, double v_);
};

// Klein disk point, ||p|| < 1 - 1e-12.
struct KleinPoint {
    double u = 0.0;
    double v = 0.0;

    KleinPoint() = default;
    KleinPoint(double u_, double v_);

    bool operator==(const KleinPoint&) const = default;
};

enum class Model { UpperHalfPlane, PoincareDisk, Klein };

const char* to_string(Model m);
Model model_from_string(const std::string& name);

// Geodesic between two points of one model: either a straight chord
// (Klein always; degenerate diameters/vertical lines elsewhere) or a
// circular arc with center on the model's ideal boundary condition.
struct GeodesicSegment {
    Model model = Model::Klein;
    Vec2 a, b;            // endpoints
    bool straight = true;
    Vec2 center;          // arc data, valid when !straight
    double radius = 0.0;
    double angle_a = 0.0;  // angle of endpoint a seen from center
    double angle_b = 0.0;  // angle of endpoint b; sweep from a to b is the arc

    // Point at parameter t in [0, 1] along the segment/arc.
    Vec2 point_at(double t) const;
};

// Model conversions. The Cayley map z -> (z - i)/(z + i) carries the upper
// half-plane onto the Poincare disk with (0, 1) at the origin; the two disk
// models exchange by k = 2p/(1 + ||p||^2).
DiskPoint uhp_to_disk(const UHPPoint& p);
UHPPoint disk_to_uhp(const DiskPoint& p);
KleinPoint disk_to_klein(const DiskPoint& p);
DiskPoint klein_to_disk(const KleinPoint& k);
KleinPoint uhp_to_klein(const UHPPoint& p);
UHPPoint klein_to_uhp(const KleinPoint& k);

KleinPoint param_to_klein(const CauchyParam& a);
CauchyParam klein_to_param(const KleinPoint& k);

// Hyperbolic distances; dist_uhp = sqrt(2) * fisher_rao on the identified
// parameters.
double dist_uhp(const UHPPoint& p, const UHPPoint& q);
double dist_klein(const KleinPoint& p, const KleinPoint& q);

// Hyperbolic bisector in the Klein model: the affine line
// x . (sqrt(1-||p||^2) q - sqrt(1-||q||^2) p) + sqrt(1-||q||^2) - sqrt(1-||p||^2) = 0
// clipped to the disk.
LineCoeffs klein_bisector(const KleinPoint& p, const KleinPoint& q);

GeodesicSegment geodesic(const UHPPoint& a, const UHPPoint& b);
GeodesicSegment geodesic(const DiskPoint& a, const DiskPoint& b);
GeodesicSegment geodesic(const KleinPoint& a, const KleinPoint& b);

}  // namespace cauchyvor
