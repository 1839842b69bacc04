#pragma once

#include <array>
#include <vector>

#include "cauchyvor/cauchy.hpp"
#include "cauchyvor/hyperbolic.hpp"
#include "cauchyvor/power_diagram.hpp"

namespace cauchyvor {

// Voronoi diagram of Cauchy generators. All hyperbolic kinds (FisherRao, KL,
// SqrtKL, ChiSquare, FlatForward) induce the same bisectors, so they share
// one subdivision built in Klein coordinates; the kind is metadata.
// FlatReverse instead stores the Euclidean diagram of the (l, s) points
// clipped to a box twice the generator extent.
struct CauchyVoronoiDiagram {
    std::vector<CauchyParam> generators;
    DivergenceKind kind = DivergenceKind::FisherRao;
    std::vector<KleinPoint> klein_sites;  // hyperbolic kinds only
    std::vector<WeightedSite> sites;      // power sites backing the subdivision
    PlanarSubdivision subdivision;

    bool hyperbolic() const { return kind != DivergenceKind::FlatReverse; }
};

CauchyVoronoiDiagram cauchy_voronoi(const std::vector<CauchyParam>& generators,
                                    DivergenceKind kind, const BuildOptions& opt = {});

// Dual complex: an edge joins generators whose cells share a positive-length
// subdivision edge; a triangle needs all three cells around a common vertex
// and all three pairwise edges.
struct DelaunayComplex {
    std::vector<int> sites;  // generators with nonempty cells
    std::vector<std::array<int, 2>> edges;
    std::vector<std::array<int, 3>> triangles;
    std::vector<GeodesicSegment> edge_geodesics;
    Model model = Model::Klein;
    bool euclidean_dual = false;  // straight duals of a FlatReverse diagram
};

// Hyperbolic diagrams only, unless euclidean_dual is set for a FlatReverse
// diagram (its dual is the ordinary Delaunay triangulation).
DelaunayComplex delaunay_complex(const CauchyVoronoiDiagram& d, Model model = Model::Klein,
                                 bool euclidean_dual = false);

// For every interior Voronoi vertex: hyperbolic circumradius r to its
// defining sites versus the distance to the nearest other site. slack > 0
// means some foreign site invades the circumscribing disk.
struct EmptySphereReport {
    double max_slack = -std::numeric_limits<double>::infinity();
    double max_radius_spread = 0.0;  // disagreement among defining distances
    int vertices_checked = 0;

    bool pass(double tol = 1e-9) const { return max_slack <= tol; }
};

EmptySphereReport verify_empty_sphere(const CauchyVoronoiDiagram& d, const DelaunayComplex& c);

// Crossing angle between each Delaunay edge's geodesic and its Voronoi
// bisector, measured in upper half-plane coordinates where the Fisher metric
// is conformal to the Euclidean one. max |cos angle| should vanish.
struct OrthogonalityReport {
    double max_abs_cos = 0.0;
    int crossings = 0;
    int skipped = 0;  // edges whose bisector was clipped away
};

OrthogonalityReport verify_fisher_orthogonality(const CauchyVoronoiDiagram& d,
                                                const DelaunayComplex& c);

// Nearest-generator classification of a sample set: the parameter estimate
// is (median, half interquartile range) - the standard Cauchy has quartiles
// at -1 and +1 - followed by a Fisher-Rao nearest-neighbor query.
struct ClassifyResult {
    int index = -1;
    CauchyParam estimate;
};

ClassifyResult classify_nearest(const std::vector<CauchyParam>& generators,
                                const std::vector<double>& samples);

// Grid labels read off the constructed subdivision (point location against
// the stored cell geometry); -1 marks points the subdivision cannot place.
std::vector<int> subdivision_grid_labels(const CauchyVoronoiDiagram& d,
                                         const struct GridSpec& grid, bool parallel = true);

}  // namespace cauchyvor
