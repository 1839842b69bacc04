#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cauchyvor/cauchy.hpp"
#include "cauchyvor/voronoi.hpp"

namespace cauchyvor {

inline constexpr const char* kFormatTag = "cauchy-voronoi/1";
inline constexpr const char* kToolVersion = "cauchyvor 1.0.0";

// Thrown on malformed input files; the CLI maps it to exit code 2.
struct InputError : std::runtime_error {
    explicit InputError(const std::string& what) : std::runtime_error(what) {}
};

struct SiteFile {
    std::vector<CauchyParam> sites;
    std::vector<std::string> labels;  // empty or one per site
};

struct GenBounds {
    double lmin = -5.0, lmax = 5.0;
    double smin = 0.2, smax = 5.0;
};

// n distinct sites uniform in the bounds box, deterministic per seed.
SiteFile generate_sites(int n, std::uint64_t seed, const GenBounds& bounds = {});

std::string site_file_to_json(const SiteFile& f);
SiteFile site_file_from_json(const std::string& text);

struct Provenance {
    std::uint64_t seed = 0;
    std::string tool = kToolVersion;
};

std::string diagram_to_json(const CauchyVoronoiDiagram& d, const DelaunayComplex* complex,
                            const Provenance& prov);

struct DiagramFile {
    CauchyVoronoiDiagram diagram;
    std::optional<DelaunayComplex> complex;
    Provenance provenance;
};

DiagramFile diagram_from_json(const std::string& text);

struct SamplesFile {
    std::vector<double> samples;
};

std::string samples_to_json(const SamplesFile& f);
SamplesFile samples_from_json(const std::string& text);

std::string read_file(const std::string& path);
// Writes via a temp file in the same directory plus rename.
void write_file_atomic(const std::string& path, const std::string& content);

struct RenderSpec {
    Model model = Model::Klein;
    int canvas_px = 800;
    bool layer_cells = true;
    bool layer_edges = true;
    bool layer_sites = true;
    bool layer_delaunay = false;
    bool layer_empty_circles = false;
    std::uint64_t color_seed = 0;

    bool any_layer() const {
        return layer_cells || layer_edges || layer_sites || layer_delaunay || layer_empty_circles;
    }
};

// Renders the diagram (and optionally its dual complex) in the requested
// model. Klein edges are straight; curves in the other models are polylines
// sampled to at most half a pixel of chord error.
std::string render_svg(const CauchyVoronoiDiagram& d, const DelaunayComplex* complex,
                       const RenderSpec& spec);

// The two conversion-function curves: u -> arccosh(1+u)/sqrt(2) on [0,10]
// and u -> sqrt(log(1/2 + cosh(sqrt(2) u)/2))/u on (0,10].
std::string render_transform_plots(int canvas_px = 900);

}  // namespace cauchyvor
