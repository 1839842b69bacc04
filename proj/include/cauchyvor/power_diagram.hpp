#pragma once

#include <vector>

#include "cauchyvor/geom.hpp"
#include "cauchyvor/hyperbolic.hpp"

namespace cauchyvor {

// Sphere sigma = (c, w) of the power-diagram lifting; w may be negative.
struct WeightedSite {
    Vec2 c;
    double w = 0.0;
    int origin_index = -1;
};

// Plane z = a . x + b in the lifted space.
struct PolarPlane {
    Vec2 a;
    double b = 0.0;
};

// Maps a Klein point to the sphere whose power bisectors realize the Klein
// bisectors: c = k / (2 sqrt(1-||k||^2)), w = ||k||^2/(4(1-||k||^2)) - 1/sqrt(1-||k||^2).
WeightedSite site_to_sphere(const KleinPoint& k, int index);

// ||x - c||^2 - w; negative iff x lies strictly inside the sphere.
double power_distance(const WeightedSite& s, Vec2 x);

// Locus of equal power distance:
// 2 x.(c2 - c1) + ||c1||^2 - ||c2||^2 - w1 + w2 = 0, normalized.
LineCoeffs power_bisector(const WeightedSite& s1, const WeightedSite& s2);

// Polar hyperplane z = 2 c.x - c.c + w of the lifted sphere.
PolarPlane polar_plane(const WeightedSite& s);

struct ClipShape {
    enum class Kind { Disk, Box };
    Kind kind = Kind::Disk;
    double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;  // Box only

    static ClipShape unit_disk() { return {}; }
    static ClipShape box(double xmin, double xmax, double ymin, double ymax);
    bool contains(Vec2 p, double tol = 0.0) const;
};

constexpr int kClipBoundary = -1;

struct SubdivisionVertex {
    Vec2 p;
    bool on_clip_boundary = false;
};

// Directed so that left_cell lies on the left of v0 -> v1. Edges with
// right_cell == kClipBoundary lie on the clip boundary; for the disk clip
// they are arcs of the unit circle traversed counterclockwise.
struct SubdivisionEdge {
    int v0 = -1, v1 = -1;
    int left_cell = -1;
    int right_cell = kClipBoundary;
    bool arc = false;
};

struct PlanarSubdivision {
    ClipShape clip;
    std::vector<SubdivisionVertex> vertices;
    std::vector<SubdivisionEdge> edges;
    // Per cell: edge indices in counterclockwise boundary order. An empty
    // list means the cell is empty.
    std::vector<std::vector<int>> cells;

    // Vertex ids of cell i's boundary walk, in order.
    std::vector<int> cell_vertex_cycle(int cell) const;
    // Indices of the cells sharing a bisector edge with cell i.
    std::vector<int> cell_neighbor_ids(int cell) const;
};

enum class ConstructionMethod { Auto, Lifting, HalfPlane };

struct BuildOptions {
    ConstructionMethod method = ConstructionMethod::Auto;
    bool parallel = true;
};

// Power diagram of the sites clipped to the unit disk. The lifting route
// computes the lower convex hull of (c, ||c||^2 - w) to find the regular
// triangulation neighbors of each site and then cuts each cell with its
// neighbors' bisectors only; the half-plane route cuts against every other
// site and doubles as the reference implementation.
PlanarSubdivision clipped_power_diagram(const std::vector<WeightedSite>& sites,
                                        const BuildOptions& opt = {});

// Same construction against an arbitrary clip shape (used with a box for
// Euclidean diagrams).
PlanarSubdivision build_power_diagram(const std::vector<WeightedSite>& sites,
                                      const ClipShape& clip, const BuildOptions& opt = {});

// Cell containing x according to the constructed geometry: inside the clip
// and on the near side of every stored bisector of the cell. Returns -1 if
// no cell matches within tolerance.
int locate_cell(const PlanarSubdivision& sub, const std::vector<WeightedSite>& sites, Vec2 x,
                double tol = 1e-9);

// True when both subdivisions have the same cell structure with vertex
// positions within tol.
bool subdivisions_equal(const PlanarSubdivision& a, const PlanarSubdivision& b, double tol);

}  // namespace cauchyvor
