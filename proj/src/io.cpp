#include "cauchyvor/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>

#include <json.hpp>

#include "cauchyvor/rng.hpp"

namespace cauchyvor {

using nlohmann::json;

SiteFile generate_sites(int n, std::uint64_t seed, const GenBounds& b) {
    if (n < 1) throw InputError("generate_sites: n must be >= 1");
    if (!(b.lmin < b.lmax) || !(b.smin < b.smax) || !(b.smin > 0.0))
        throw InputError("generate_sites: invalid bounds");
    Rng rng(seed);
    SiteFile f;
    while (static_cast<int>(f.sites.size()) < n) {
        const CauchyParam g(rng.uniform(b.lmin, b.lmax), rng.uniform(b.smin, b.smax));
        if (std::find(f.sites.begin(), f.sites.end(), g) == f.sites.end()) f.sites.push_back(g);
    }
    return f;
}

std::string site_file_to_json(const SiteFile& f) {
    json j;
    j["format"] = kFormatTag;
    j["sites"] = json::array();
    for (const CauchyParam& s : f.sites) j["sites"].push_back({{"l", s.l}, {"s", s.s}});
    if (!f.labels.empty()) j["labels"] = f.labels;
    return j.dump(2) + "\n";
}

namespace {

json parse_checked(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw InputError(std::string(what) + ": not valid JSON");
    if (!j.is_object() || j.value("format", "") != kFormatTag)
        throw InputError(std::string(what) + ": missing or wrong \"format\" header");
    return j;
}

double field_number(const json& j, const char* field, const std::string& ctx) {
    if (!j.contains(field) || !j[field].is_number())
        throw InputError(ctx + ": missing numeric field \"" + field + "\"");
    return j[field].get<double>();
}

}  // namespace

SiteFile site_file_from_json(const std::string& text) {
    const json j = parse_checked(text, "site file");
    if (!j.contains("sites") || !j["sites"].is_array() || j["sites"].empty())
        throw InputError("site file: \"sites\" must be a nonempty array");
    SiteFile f;
    int idx = 0;
    for (const json& e : j["sites"]) {
        const std::string ctx = "site file: sites[" + std::to_string(idx) + "]";
        const double l = field_number(e, "l", ctx);
        const double s = field_number(e, "s", ctx);
        if (!(s > 0.0)) throw InputError(ctx + ": scale must be > 0");
        try {
            f.sites.emplace_back(l, s);
        } catch (const std::invalid_argument& ex) {
            throw InputError(ctx + ": " + ex.what());
        }
        ++idx;
    }
    if (j.contains("labels")) {
        if (!j["labels"].is_array() || j["labels"].size() != f.sites.size())
            throw InputError("site file: \"labels\" must match the number of sites");
        for (const json& e : j["labels"]) f.labels.push_back(e.get<std::string>());
    }
    return f;
}

namespace {

json clip_to_json(const ClipShape& c) {
    if (c.kind == ClipShape::Kind::Disk) return json{{"type", "disk"}};
    return json{{"type", "box"}, {"xmin", c.xmin}, {"xmax", c.xmax},
                {"ymin", c.ymin}, {"ymax", c.ymax}};
}

ClipShape clip_from_json(const json& j) {
    const std::string type = j.value("type", "");
    if (type == "disk") return ClipShape::unit_disk();
    if (type == "box")
        return ClipShape::box(field_number(j, "xmin", "clip"), field_number(j, "xmax", "clip"),
                              field_number(j, "ymin", "clip"), field_number(j, "ymax", "clip"));
    throw InputError("diagram file: unknown clip type \"" + type + "\"");
}

GeodesicSegment rebuild_dual_edge(const CauchyVoronoiDiagram& d, int i, int j, Model model,
                                  bool euclidean_dual) {
    const CauchyParam &ga = d.generators[i], &gb = d.generators[j];
    if (euclidean_dual) {
        GeodesicSegment g;
        g.model = Model::UpperHalfPlane;
        g.a = Vec2(ga.l, ga.s);
        g.b = Vec2(gb.l, gb.s);
        return g;
    }
    switch (model) {
        case Model::UpperHalfPlane: return geodesic(UHPPoint(ga.l, ga.s), UHPPoint(gb.l, gb.s));
        case Model::PoincareDisk:
            return geodesic(uhp_to_disk(UHPPoint(ga.l, ga.s)), uhp_to_disk(UHPPoint(gb.l, gb.s)));
        case Model::Klein: return geodesic(param_to_klein(ga), param_to_klein(gb));
    }
    throw InputError("diagram file: bad model");
}

}  // namespace

std::string diagram_to_json(const CauchyVoronoiDiagram& d, const DelaunayComplex* complex,
                            const Provenance& prov) {
    json j;
    j["format"] = kFormatTag;
    j["kind"] = to_string(d.kind);
    j["generators"] = json::array();
    for (const CauchyParam& g : d.generators) j["generators"].push_back({{"l", g.l}, {"s", g.s}});

    json sub;
    sub["clip"] = clip_to_json(d.subdivision.clip);
    sub["vertices"] = json::array();
    for (const SubdivisionVertex& v : d.subdivision.vertices)
        sub["vertices"].push_back({{"x", v.p.x}, {"y", v.p.y}, {"boundary", v.on_clip_boundary}});
    sub["edges"] = json::array();
    for (const SubdivisionEdge& e : d.subdivision.edges)
        sub["edges"].push_back({{"v0", e.v0},
                                {"v1", e.v1},
                                {"left", e.left_cell},
                                {"right", e.right_cell},
                                {"arc", e.arc}});
    sub["cells"] = d.subdivision.cells;
    j["subdivision"] = std::move(sub);

    if (complex) {
        json c;
        c["sites"] = complex->sites;
        c["edges"] = complex->edges;
        c["triangles"] = complex->triangles;
        c["model"] = to_string(complex->model);
        c["euclidean"] = complex->euclidean_dual;
        j["delaunay"] = std::move(c);
    }

    j["provenance"] = {{"seed", prov.seed},
                       {"tool", prov.tool},
                       {"tolerances",
                        {{"vertex_merge", 1e-10}, {"bisector", 1e-9}, {"quadrature", 1e-9}}}};
    return j.dump(2) + "\n";
}

DiagramFile diagram_from_json(const std::string& text) {
    const json j = parse_checked(text, "diagram file");
    DiagramFile out;

    if (!j.contains("generators") || !j["generators"].is_array() || j["generators"].empty())
        throw InputError("diagram file: \"generators\" must be a nonempty array");
    std::vector<CauchyParam> gens;
    int gi = 0;
    for (const json& e : j["generators"]) {
        const std::string ctx = "diagram file: generators[" + std::to_string(gi++) + "]";
        try {
            gens.emplace_back(field_number(e, "l", ctx), field_number(e, "s", ctx));
        } catch (const std::invalid_argument& ex) {
            throw InputError(ctx + ": " + ex.what());
        }
    }

    CauchyVoronoiDiagram& d = out.diagram;
    d.generators = std::move(gens);
    try {
        d.kind = divergence_kind_from_string(j.value("kind", ""));
    } catch (const std::invalid_argument& ex) {
        throw InputError(std::string("diagram file: ") + ex.what());
    }

    // Power sites are deterministic functions of the generators; rebuild
    // them instead of storing them.
    if (d.kind != DivergenceKind::FlatReverse) {
        for (size_t i = 0; i < d.generators.size(); ++i) {
            d.klein_sites.push_back(param_to_klein(d.generators[i]));
            d.sites.push_back(site_to_sphere(d.klein_sites.back(), static_cast<int>(i)));
        }
    } else {
        for (size_t i = 0; i < d.generators.size(); ++i)
            d.sites.push_back(
                {Vec2(d.generators[i].l, d.generators[i].s), 0.0, static_cast<int>(i)});
    }

    if (!j.contains("subdivision")) throw InputError("diagram file: missing \"subdivision\"");
    const json& sub = j["subdivision"];
    d.subdivision.clip = clip_from_json(sub.value("clip", json::object()));
    for (const json& e : sub.value("vertices", json::array()))
        d.subdivision.vertices.push_back(
            {Vec2(field_number(e, "x", "vertices"), field_number(e, "y", "vertices")),
             e.value("boundary", false)});
    const int nv = static_cast<int>(d.subdivision.vertices.size());
    const int nc = static_cast<int>(d.generators.size());
    for (const json& e : sub.value("edges", json::array())) {
        SubdivisionEdge ed;
        ed.v0 = e.value("v0", -1);
        ed.v1 = e.value("v1", -1);
        ed.left_cell = e.value("left", -1);
        ed.right_cell = e.value("right", -1);
        ed.arc = e.value("arc", false);
        if (ed.v0 < 0 || ed.v0 >= nv || ed.v1 < 0 || ed.v1 >= nv || ed.left_cell < -1 ||
            ed.left_cell >= nc || ed.right_cell < -1 || ed.right_cell >= nc)
            throw InputError("diagram file: edge index out of range");
        d.subdivision.edges.push_back(ed);
    }
    const int ne = static_cast<int>(d.subdivision.edges.size());
    for (const json& cell : sub.value("cells", json::array())) {
        std::vector<int> ids;
        for (const json& e : cell) {
            const int id = e.get<int>();
            if (id < 0 || id >= ne) throw InputError("diagram file: cell edge index out of range");
            ids.push_back(id);
        }
        d.subdivision.cells.push_back(std::move(ids));
    }
    if (d.subdivision.cells.size() != d.generators.size())
        throw InputError("diagram file: one cell list per generator required");

    if (j.contains("delaunay")) {
        DelaunayComplex c;
        const json& dc = j["delaunay"];
        c.sites = dc.value("sites", std::vector<int>{});
        for (const json& e : dc.value("edges", json::array()))
            c.edges.push_back({e[0].get<int>(), e[1].get<int>()});
        for (const json& e : dc.value("triangles", json::array()))
            c.triangles.push_back({e[0].get<int>(), e[1].get<int>(), e[2].get<int>()});
        try {
            c.model = model_from_string(dc.value("model", "klein"));
        } catch (const std::invalid_argument& ex) {
            throw InputError(std::string("diagram file: ") + ex.what());
        }
        c.euclidean_dual = dc.value("euclidean", false);
        for (const auto& e : c.edges) {
            if (e[0] < 0 || e[0] >= nc || e[1] < 0 || e[1] >= nc)
                throw InputError("diagram file: delaunay edge index out of range");
            c.edge_geodesics.push_back(rebuild_dual_edge(d, e[0], e[1], c.model, c.euclidean_dual));
        }
        out.complex = std::move(c);
    }

    if (j.contains("provenance")) {
        out.provenance.seed = j["provenance"].value("seed", std::uint64_t{0});
        out.provenance.tool = j["provenance"].value("tool", "");
    }
    return out;
}

std::string samples_to_json(const SamplesFile& f) {
    json j;
    j["format"] = kFormatTag;
    j["samples"] = f.samples;
    return j.dump(2) + "\n";
}

SamplesFile samples_from_json(const std::string& text) {
    const json j = parse_checked(text, "samples file");
    if (!j.contains("samples") || !j["samples"].is_array())
        throw InputError("samples file: \"samples\" array required");
    SamplesFile f;
    for (const json& e : j["samples"]) {
        if (!e.is_number()) throw InputError("samples file: non-numeric sample");
        f.samples.push_back(e.get<double>());
    }
    return f;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file_atomic(const std::string& path, const std::string& content) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw std::runtime_error("cannot write " + tmp.string());
        out << content;
    }
    fs::rename(tmp, target);
}

// ---- SVG rendering -----------------------------------------------------------

namespace {

struct Viewport {
    double xmin, xmax, ymin, ymax;
    double px;

    double scale() const { return px / std::max(xmax - xmin, ymax - ymin); }
    double width() const { return (xmax - xmin) * scale(); }
    double height() const { return (ymax - ymin) * scale(); }
    Vec2 to_px(Vec2 w) const {
        return Vec2((w.x - xmin) * scale(), (ymax - w.y) * scale());  // y grows downward
    }
    bool inside(Vec2 w) const {
        return w.x >= xmin && w.x <= xmax && w.y >= ymin && w.y <= ymax;
    }
};

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.3f", v);
    return buf;
}

std::string color_for(int cell, std::uint64_t seed) {
    // golden-ratio hue walk with a seeded offset
    const double h = std::fmod(0.61803398875 * (cell + 13.0 * (seed % 89)), 1.0) * 360.0;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "hsl(%.0f,62%%,64%%)", h);
    return buf;
}

struct Svg {
    std::ostringstream body;

    void polyline(const Viewport& vp, const std::vector<Vec2>& pts, const std::string& stroke,
                  double width, const std::string& fill, double fill_opacity, bool close) {
        if (pts.size() < 2) return;
        body << "<path d=\"";
        for (size_t i = 0; i < pts.size(); ++i) {
            const Vec2 p = vp.to_px(pts[i]);
            body << (i == 0 ? "M" : "L") << fmt(p.x) << " " << fmt(p.y);
        }
        if (close) body << "Z";
        body << "\" fill=\"" << fill << "\"";
        if (fill != "none") body << " fill-opacity=\"" << fmt(fill_opacity) << "\"";
        body << " stroke=\"" << stroke << "\" stroke-width=\"" << fmt(width) << "\"/>\n";
    }

    void dot(const Viewport& vp, Vec2 w, double r_px, const std::string& fill) {
        const Vec2 p = vp.to_px(w);
        body << "<circle cx=\"" << fmt(p.x) << "\" cy=\"" << fmt(p.y) << "\" r=\"" << fmt(r_px)
             << "\" fill=\"" << fill << "\"/>\n";
    }
};

// Flatten a mapped parametric curve: subdivide until the midpoint sits
// within tol of the chord.
void sample_curve(const std::function<Vec2(double)>& f, double t0, double t1, double tol,
                  int depth, std::vector<Vec2>& out) {
    const Vec2 a = f(t0), b = f(t1), m = f(0.5 * (t0 + t1));
    if (depth >= 12 || dist(m, 0.5 * (a + b)) <= tol) {
        out.push_back(b);
        return;
    }
    sample_curve(f, t0, 0.5 * (t0 + t1), tol, depth + 1, out);
    sample_curve(f, 0.5 * (t0 + t1), t1, tol, depth + 1, out);
}

std::vector<Vec2> sampled(const std::function<Vec2(double)>& f, double tol) {
    std::vector<Vec2> pts;
    pts.push_back(f(0.0));
    sample_curve(f, 0.0, 1.0, tol, 0, pts);
    return pts;
}

// Maps a point of the diagram plane (Klein coordinates for hyperbolic
// diagrams, lambda coordinates for Euclidean ones) into the render model.
struct ModelMap {
    bool hyperbolic;
    Model model;

    Vec2 operator()(Vec2 p) const {
        if (!hyperbolic || model == Model::Klein) return p;
        const double n2 = std::min(norm2(p), 1.0 - 1e-13);
        const double g = 1.0 / (1.0 + std::sqrt(1.0 - n2));
        const Vec2 dp(g * p.x, g * p.y);  // Poincare disk
        if (model == Model::PoincareDisk) return dp;
        const double dre = 1.0 - dp.x, dim = -dp.y;
        const double den = dre * dre + dim * dim;
        const double re = ((1.0 + dp.x) * dre + dp.y * dim) / den;
        const double im = (dp.y * dre - (1.0 + dp.x) * dim) / den;
        return Vec2(-im, re);
    }
};

Vec2 arc_point(Vec2 a, Vec2 b, double t) {
    double a0 = std::atan2(a.y, a.x);
    double a1 = std::atan2(b.y, b.x);
    if (a1 <= a0) a1 += 2.0 * std::numbers::pi;
    const double ang = a0 + t * (a1 - a0);
    return Vec2(std::cos(ang), std::sin(ang));
}

// Keep points inside the viewport, walking segment crossings onto the
// border; good enough for boundary curves that run off to infinity in the
// half-plane view.
std::vector<Vec2> clip_polyline_to_box(const std::vector<Vec2>& pts, const Viewport& vp) {
    std::vector<Vec2> out;
    auto toward = [&](Vec2 in, Vec2 outp) {
        Vec2 lo = in, hi = outp;
        for (int k = 0; k < 40; ++k) {
            const Vec2 mid = 0.5 * (lo + hi);
            (vp.inside(mid) ? lo : hi) = mid;
        }
        return lo;
    };
    for (size_t i = 0; i < pts.size(); ++i) {
        if (vp.inside(pts[i])) {
            if (i > 0 && !vp.inside(pts[i - 1])) out.push_back(toward(pts[i], pts[i - 1]));
            out.push_back(pts[i]);
        } else if (i > 0 && vp.inside(pts[i - 1])) {
            out.push_back(toward(pts[i - 1], pts[i]));
        }
    }
    return out;
}

}  // namespace

std::string render_svg(const CauchyVoronoiDiagram& d, const DelaunayComplex* complex,
                       const RenderSpec& spec) {
    if (spec.canvas_px < 32) throw InputError("render: canvas too small");
    if (!spec.any_layer()) throw InputError("render: at least one layer required");
    const Model model = d.hyperbolic() ? spec.model : Model::UpperHalfPlane;
    const ModelMap map{d.hyperbolic(), model};
    const PlanarSubdivision& sub = d.subdivision;

    Viewport vp;
    vp.px = spec.canvas_px;
    if (d.hyperbolic() && model != Model::UpperHalfPlane) {
        vp.xmin = vp.ymin = -1.05;
        vp.xmax = vp.ymax = 1.05;
    } else {
        double xmin = 1e300, xmax = -1e300, ymax = -1e300;
        auto grow = [&](Vec2 p) {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymax = std::max(ymax, p.y);
        };
        for (const CauchyParam& g : d.generators) grow(Vec2(g.l, g.s));
        for (const SubdivisionVertex& v : sub.vertices)
            if (!v.on_clip_boundary) grow(map(v.p));
        if (!d.hyperbolic()) {
            xmin = sub.clip.xmin;
            xmax = sub.clip.xmax;
            ymax = sub.clip.ymax;
        }
        const double padx = 0.08 * (xmax - xmin + 1.0), pady = 0.08 * (ymax + 1.0);
        vp.xmin = xmin - padx;
        vp.xmax = xmax + padx;
        vp.ymin = 0.0;
        vp.ymax = ymax + pady;
    }
    const double tol = 0.5 / vp.scale();

    Svg svg;
    if (d.hyperbolic() && model != Model::UpperHalfPlane) {
        std::vector<Vec2> circle;
        for (int i = 0; i <= 256; ++i) {
            const double a = 2.0 * std::numbers::pi * i / 256;
            circle.emplace_back(std::cos(a), std::sin(a));
        }
        svg.polyline(vp, circle, "#888888", 1.0, "none", 0.0, false);
    }

    auto edge_samples = [&](const SubdivisionEdge& e) {
        const Vec2 A = sub.vertices[e.v0].p, B = sub.vertices[e.v1].p;
        if (e.arc) return sampled([&](double t) { return map(arc_point(A, B, t)); }, tol);
        if (!d.hyperbolic() || model == Model::Klein) return std::vector<Vec2>{A, B};
        return sampled([&](double t) { return map(A + t * (B - A)); }, tol);
    };

    if (spec.layer_cells) {
        for (int cell = 0; cell < static_cast<int>(sub.cells.size()); ++cell) {
            if (sub.cells[cell].empty()) continue;
            std::vector<Vec2> boundary;
            for (int eid : sub.cells[cell]) {
                const SubdivisionEdge& e = sub.edges[eid];
                std::vector<Vec2> pts = edge_samples(e);
                if (e.left_cell != cell) std::reverse(pts.begin(), pts.end());
                boundary.insert(boundary.end(), pts.begin(), pts.end());
            }
            if (model == Model::UpperHalfPlane) boundary = clip_polyline_to_box(boundary, vp);
            svg.polyline(vp, boundary, "none", 0.0, color_for(cell, spec.color_seed), 0.55, true);
        }
    }

    if (spec.layer_edges) {
        for (const SubdivisionEdge& e : sub.edges) {
            std::vector<Vec2> pts = edge_samples(e);
            if (model == Model::UpperHalfPlane) pts = clip_polyline_to_box(pts, vp);
            const bool boundary = e.right_cell == kClipBoundary;
            svg.polyline(vp, pts, boundary ? "#999999" : "#222222", boundary ? 0.8 : 1.4, "none",
                         0.0, false);
        }
    }

    if (spec.layer_delaunay && complex) {
        for (const GeodesicSegment& g : complex->edge_geodesics) {
            std::vector<Vec2> pts = sampled([&](double t) { return g.point_at(t); }, tol);
            if (model == Model::UpperHalfPlane) pts = clip_polyline_to_box(pts, vp);
            svg.polyline(vp, pts, "#1f4fd0", 1.6, "none", 0.0, false);
        }
    }

    if (spec.layer_empty_circles && d.hyperbolic()) {
        // circumscribing circles centered at interior junctions: in the
        // half-plane the hyperbolic circle of radius r about (x, y) is the
        // euclidean circle with center (x, y cosh r) and radius y sinh r
        std::vector<std::set<int>> vertex_cells(sub.vertices.size());
        for (const SubdivisionEdge& e : sub.edges)
            for (int cell : {e.left_cell, e.right_cell}) {
                if (cell < 0) continue;
                vertex_cells[e.v0].insert(cell);
                vertex_cells[e.v1].insert(cell);
            }
        for (size_t v = 0; v < sub.vertices.size(); ++v) {
            if (sub.vertices[v].on_clip_boundary || vertex_cells[v].size() < 3) continue;
            const Vec2 ck = sub.vertices[v].p;
            const KleinPoint center(ck.x, ck.y);
            const double r = dist_klein(center, d.klein_sites[*vertex_cells[v].begin()]);
            const UHPPoint cu = klein_to_uhp(center);
            const Vec2 ec(cu.x, cu.y * std::cosh(r));
            const double er = cu.y * std::sinh(r);
            std::vector<Vec2> pts;
            for (int i = 0; i <= 128; ++i) {
                const double a = 2.0 * std::numbers::pi * i / 128;
                const Vec2 up = ec + er * Vec2(std::cos(a), std::sin(a));
                if (model == Model::UpperHalfPlane) {
                    pts.push_back(up);
                } else {
                    const DiskPoint dp = uhp_to_disk(UHPPoint(up.x, up.y));
                    pts.push_back(model == Model::PoincareDisk
                                      ? Vec2(dp.u, dp.v)
                                      : Vec2(disk_to_klein(dp).u, disk_to_klein(dp).v));
                }
            }
            if (model == Model::UpperHalfPlane) pts = clip_polyline_to_box(pts, vp);
            svg.polyline(vp, pts, "#c02020", 1.0, "none", 0.0, false);
        }
    }

    if (spec.layer_sites) {
        for (size_t i = 0; i < d.generators.size(); ++i) {
            const Vec2 p = d.hyperbolic() ? map(Vec2(d.klein_sites[i].u, d.klein_sites[i].v))
                                          : Vec2(d.generators[i].l, d.generators[i].s);
            svg.dot(vp, p, 3.0, "#000000");
        }
    }

    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<!-- " << kToolVersion << " -->\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(vp.width())
        << "\" height=\"" << fmt(vp.height()) << "\" viewBox=\"0 0 " << fmt(vp.width()) << " "
        << fmt(vp.height()) << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";
    out << svg.body.str();
    out << "</svg>\n";
    return out.str();
}

std::string render_transform_plots(int canvas_px) {
    const int W = canvas_px, H = canvas_px * 7 / 15;
    const int panelW = W / 2 - 60, panelH = H - 70;
    std::ostringstream out;
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out << "<!-- " << kToolVersion << " -->\n";
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
        << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    out << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

    auto panel = [&](int x0, const std::function<double(double)>& f, double u0, double u1,
                     const std::string& label) {
        const int n = 400;
        double fmax = -1e300, fmin = 1e300;
        std::vector<Vec2> pts;
        for (int i = 0; i <= n; ++i) {
            const double u = u0 + (u1 - u0) * i / n;
            const double v = f(u);
            fmax = std::max(fmax, v);
            fmin = std::min(fmin, v);
            pts.emplace_back(u, v);
        }
        const double pad = 0.05 * (fmax - fmin + 1e-9);
        fmin -= pad;
        fmax += pad;
        out << "<rect x=\"" << x0 << "\" y=\"30\" width=\"" << panelW << "\" height=\"" << panelH
            << "\" fill=\"none\" stroke=\"#444444\"/>\n";
        out << "<text x=\"" << x0 + panelW / 2 << "\" y=\"20\" text-anchor=\"middle\" "
            << "font-family=\"sans-serif\" font-size=\"13\">" << label << "</text>\n";
        out << "<polyline fill=\"none\" stroke=\"#1f4fd0\" stroke-width=\"1.6\" points=\"";
        for (const Vec2& p : pts) {
            const double px = x0 + (p.x - u0) / (u1 - u0) * panelW;
            const double py = 30 + panelH - (p.y - fmin) / (fmax - fmin) * panelH;
            out << fmt(px) << "," << fmt(py) << " ";
        }
        out << "\"/>\n";
    };

    panel(40, [](double u) { return convert_chi_to_fr(u); }, 0.0, 10.0,
          "chi-square to Fisher-Rao conversion");
    panel(W / 2 + 20, [](double u) { return std::sqrt(convert_fr_to_kl(u)) / u; }, 1e-4, 10.0,
          "sqrt of the Fisher-Rao to KL conversion over u");

    out << "</svg>\n";
    return out.str();
}

}  // namespace cauchyvor
