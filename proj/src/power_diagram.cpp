#include "cauchyvor/power_diagram.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <stdexcept>
#include <unordered_map>

namespace cauchyvor {

WeightedSite site_to_sphere(const KleinPoint& k, int index) {
    const double n2 = k.u * k.u + k.v * k.v;
    const double g = std::sqrt(1.0 - n2);
    WeightedSite s;
    s.c = Vec2(k.u, k.v) / (2.0 * g);
    s.w = n2 / (4.0 * (1.0 - n2)) - 1.0 / g;
    s.origin_index = index;
    return s;
}

double power_distance(const WeightedSite& s, Vec2 x) { return norm2(x - s.c) - s.w; }

LineCoeffs power_bisector(const WeightedSite& s1, const WeightedSite& s2) {
    if (s1.c.x == s2.c.x && s1.c.y == s2.c.y && s1.w == s2.w)
        throw std::invalid_argument("power_bisector: identical spheres");
    const Vec2 d = 2.0 * (s2.c - s1.c);
    return LineCoeffs::normalized(d.x, d.y, norm2(s1.c) - norm2(s2.c) - s1.w + s2.w);
}

PolarPlane polar_plane(const WeightedSite& s) {
    return PolarPlane{2.0 * s.c, -norm2(s.c) + s.w};
}

ClipShape ClipShape::box(double xmin, double xmax, double ymin, double ymax) {
    if (!(xmin < xmax) || !(ymin < ymax)) throw std::invalid_argument("ClipShape: empty box");
    ClipShape s;
    s.kind = Kind::Box;
    s.xmin = xmin;
    s.xmax = xmax;
    s.ymin = ymin;
    s.ymax = ymax;
    return s;
}

bool ClipShape::contains(Vec2 p, double tol) const {
    if (kind == Kind::Disk) return norm2(p) < 1.0 + tol;
    return p.x >= xmin - tol && p.x <= xmax + tol && p.y >= ymin - tol && p.y <= ymax + tol;
}

namespace {

constexpr double kMergeRadius = 1e-10;

// Convex cell boundary under construction: vertex k starts the edge to
// vertex k+1; src[k] is the neighbor site cutting that edge, or
// kClipBoundary for a clip-shape edge.
struct Poly {
    std::vector<Vec2> v;
    std::vector<int> src;

    bool empty() const { return v.size() < 3; }
};

Poly initial_square(double half, int boundary_tag) {
    Poly p;
    p.v = {{-half, -half}, {half, -half}, {half, half}, {-half, half}};
    p.src.assign(4, boundary_tag);
    return p;
}

Poly initial_box(const ClipShape& b) {
    Poly p;
    p.v = {{b.xmin, b.ymin}, {b.xmax, b.ymin}, {b.xmax, b.ymax}, {b.xmin, b.ymax}};
    p.src.assign(4, kClipBoundary);
    return p;
}

// Keep the side f <= 0 of the line; new boundary pieces are tagged with
// `tag`. Sutherland-Hodgman on a convex polygon.
void clip_halfplane(Poly& p, const LineCoeffs& line, int tag) {
    const size_t n = p.v.size();
    if (n < 3) return;
    std::vector<double> d(n);
    bool any_in = false, any_out = false;
    for (size_t i = 0; i < n; ++i) {
        d[i] = line.eval(p.v[i]);
        (d[i] <= 0.0 ? any_in : any_out) = true;
    }
    if (!any_out) return;
    if (!any_in) {
        p.v.clear();
        p.src.clear();
        return;
    }
    Poly out;
    out.v.reserve(n + 2);
    out.src.reserve(n + 2);
    for (size_t i = 0; i < n; ++i) {
        const size_t j = (i + 1) % n;
        const Vec2 a = p.v[i], b = p.v[j];
        const double da = d[i], db = d[j];
        if (da <= 0.0) {
            out.v.push_back(a);
            if (db <= 0.0) {
                out.src.push_back(p.src[i]);
            } else {
                out.src.push_back(p.src[i]);
                const double t = da / (da - db);
                out.v.push_back(a + t * (b - a));
                out.src.push_back(tag);  // runs along the cutting line
            }
        } else if (db <= 0.0) {
            const double t = da / (da - db);
            out.v.push_back(a + t * (b - a));
            out.src.push_back(p.src[i]);
        }
    }
    // Drop duplicate consecutive vertices from grazing cuts.
    Poly clean;
    for (size_t i = 0; i < out.v.size(); ++i) {
        const size_t j = (i + 1) % out.v.size();
        if (dist(out.v[i], out.v[j]) > 1e-14)
            clean.v.push_back(out.v[i]), clean.src.push_back(out.src[i]);
    }
    p = std::move(clean);
}

// One boundary piece of the clipped cell: straight bisector/box segment or a
// counterclockwise unit-circle arc.
struct CellEdge {
    Vec2 a, b;
    int neighbor = kClipBoundary;
    bool arc = false;
    bool a_on_circle = false, b_on_circle = false;
};

Vec2 snap_to_circle(Vec2 p) { return p / norm(p); }

// Intersect the convex polygon with the open unit disk. Straight pieces keep
// their tags; circle arcs between an exit and the following entry are added
// with the boundary tag.
std::vector<CellEdge> clip_to_disk(const Poly& p) {
    std::vector<CellEdge> out;
    if (p.empty()) return out;
    const size_t n = p.v.size();

    struct Piece {
        Vec2 a, b;
        int src;
        bool a_cut, b_cut;  // endpoint produced by a circle crossing
    };
    std::vector<Piece> pieces;
    bool any_outside = false;
    for (size_t i = 0; i < n; ++i) {
        const size_t j = (i + 1) % n;
        const Vec2 a = p.v[i], d = p.v[j] - p.v[i];
        // ||a + t d||^2 = 1 on t in [0,1]
        const double qa = norm2(d), qb = 2.0 * dot(a, d), qc = norm2(a) - 1.0;
        if (qa < 1e-300) continue;
        double t0 = 0.0, t1 = 1.0;
        bool a_in = qc <= 0.0, b_in = norm2(p.v[j]) <= 1.0;
        if (!a_in || !b_in) any_outside = true;
        if (a_in && b_in) {
            pieces.push_back({a, p.v[j], p.src[i], false, false});
            continue;
        }
        const double disc = qb * qb - 4.0 * qa * qc;
        if (disc <= 0.0) continue;  // edge misses the disk
        const double sq = std::sqrt(disc);
        const double r0 = (-qb - sq) / (2.0 * qa), r1 = (-qb + sq) / (2.0 * qa);
        t0 = std::max(0.0, r0);
        t1 = std::min(1.0, r1);
        if (t1 - t0 < 1e-14) continue;
        const bool acut = t0 > 0.0, bcut = t1 < 1.0;
        Vec2 pa = acut ? snap_to_circle(a + t0 * d) : a;
        Vec2 pb = bcut ? snap_to_circle(a + t1 * d) : p.v[j];
        pieces.push_back({pa, pb, p.src[i], acut, bcut});
    }

    if (pieces.empty()) {
        // Either the polygon contains the whole disk or misses it entirely.
        bool contains_disk = true;
        for (size_t i = 0; i < n && contains_disk; ++i) {
            const size_t j = (i + 1) % n;
            const Vec2 d = p.v[j] - p.v[i];
            const double len = norm(d);
            if (len < 1e-300) continue;
            // interior is on the left; signed distance of the origin
            const double sd = cross(d, Vec2(0, 0) - p.v[i]) / len;
            if (sd < 1.0 - 1e-12) contains_disk = false;
        }
        if (!contains_disk) return out;
        const Vec2 east(1.0, 0.0), west(-1.0, 0.0);
        CellEdge upper{east, west, kClipBoundary, true, true, true};
        CellEdge lower{west, east, kClipBoundary, true, true, true};
        out.push_back(upper);
        out.push_back(lower);
        return out;
    }

    if (!any_outside) {
        for (const Piece& q : pieces) out.push_back({q.a, q.b, q.src, false, false, false});
        return out;
    }

    // Chain pieces, inserting circle arcs between an exit point and the next
    // piece's entry point.
    for (size_t i = 0; i < pieces.size(); ++i) {
        const Piece& cur = pieces[i];
        out.push_back({cur.a, cur.b, cur.src, false, cur.a_cut, cur.b_cut});
        const Piece& nxt = pieces[(i + 1) % pieces.size()];
        if (cur.b_cut) {
            // walk along the circle to the next entry
            if (dist(cur.b, nxt.a) > 1e-14)
                out.push_back({cur.b, nxt.a, kClipBoundary, true, true, true});
        }
    }
    return out;
}

std::vector<CellEdge> finish_cell(Poly&& p, const ClipShape& clip) {
    std::vector<CellEdge> out;
    if (clip.kind == ClipShape::Kind::Disk) return clip_to_disk(p);
    if (p.empty()) return out;
    for (size_t i = 0; i < p.v.size(); ++i) {
        const size_t j = (i + 1) % p.v.size();
        out.push_back({p.v[i], p.v[j], p.src[i], false, false, false});
    }
    return out;
}

// ---- lifted lower hull -------------------------------------------------------

struct Vec3 {
    double x = 0, y = 0, z = 0;
};
Vec3 sub(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
Vec3 cross3(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
double dot3(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
double norm3(Vec3 a) { return std::sqrt(dot3(a, a)); }

// Incremental convex hull; visibility scan over all faces per insertion.
// Adequate for the site counts here, and the construction that consumes it
// re-verifies every dropped site against the full constraint set.
class Hull3 {
public:
    struct Face {
        int a, b, c;
        Vec3 n;  // outward unit normal
        double d;
        bool alive = true;
    };

    bool build(const std::vector<Vec3>& pts) {
        pts_ = &pts;
        const int n = static_cast<int>(pts.size());
        if (n < 4) return false;
        double scale = 1.0;
        for (const Vec3& p : pts)
            scale = std::max({scale, std::abs(p.x), std::abs(p.y), std::abs(p.z)});
        eps_ = 1e-10 * scale;

        int i0 = 0;
        for (int i = 1; i < n; ++i)
            if (pts[i].x < pts[i0].x) i0 = i;
        int i1 = -1;
        double best = eps_;
        for (int i = 0; i < n; ++i) {
            const double v = norm3(sub(pts[i], pts[i0]));
            if (i != i0 && v > best) best = v, i1 = i;
        }
        if (i1 < 0) return false;
        int i2 = -1;
        best = eps_;
        for (int i = 0; i < n; ++i) {
            const double v = norm3(cross3(sub(pts[i], pts[i0]), sub(pts[i1], pts[i0])));
            if (i != i0 && i != i1 && v > best) best = v, i2 = i;
        }
        if (i2 < 0) return false;
        Vec3 nrm = cross3(sub(pts[i1], pts[i0]), sub(pts[i2], pts[i0]));
        nrm = {nrm.x / norm3(nrm), nrm.y / norm3(nrm), nrm.z / norm3(nrm)};
        const double d0 = dot3(nrm, pts[i0]);
        int i3 = -1;
        best = eps_;
        for (int i = 0; i < n; ++i) {
            const double v = std::abs(dot3(nrm, pts[i]) - d0);
            if (i != i0 && i != i1 && i != i2 && v > best) best = v, i3 = i;
        }
        if (i3 < 0) return false;

        if (dot3(nrm, pts[i3]) - d0 > 0.0) std::swap(i1, i2);  // i3 below (a,b,c)
        add_face(i0, i1, i2);
        add_face(i0, i2, i3);
        add_face(i2, i1, i3);
        add_face(i1, i0, i3);

        std::vector<char> used(n, 0);
        used[i0] = used[i1] = used[i2] = used[i3] = 1;
        for (int i = 0; i < n; ++i) {
            if (used[i]) continue;
            insert(i);
        }
        return true;
    }

    const std::vector<Face>& faces() const { return faces_; }
    double eps() const { return eps_; }

private:
    void add_face(int a, int b, int c) {
        const std::vector<Vec3>& p = *pts_;
        Vec3 nn = cross3(sub(p[b], p[a]), sub(p[c], p[a]));
        const double ln = norm3(nn);
        nn = {nn.x / ln, nn.y / ln, nn.z / ln};
        faces_.push_back({a, b, c, nn, dot3(nn, p[a]), true});
    }

    void insert(int ip) {
        const std::vector<Vec3>& p = *pts_;
        std::vector<int> visible;
        for (int f = 0; f < static_cast<int>(faces_.size()); ++f) {
            if (!faces_[f].alive) continue;
            if (dot3(faces_[f].n, p[ip]) - faces_[f].d > eps_) visible.push_back(f);
        }
        if (visible.empty()) return;  // interior or on a face plane
        // horizon = directed edges of visible faces whose twin is hidden
        std::map<std::pair<int, int>, int> dir_edges;
        for (int f : visible) {
            const Face& fc = faces_[f];
            const std::array<std::pair<int, int>, 3> es = {
                std::make_pair(fc.a, fc.b), std::make_pair(fc.b, fc.c),
                std::make_pair(fc.c, fc.a)};
            for (auto e : es) dir_edges[e] = f;
        }
        std::vector<std::pair<int, int>> horizon;
        for (const auto& [e, f] : dir_edges)
            if (!dir_edges.count({e.second, e.first})) horizon.push_back(e);
        for (int f : visible) faces_[f].alive = false;
        for (auto [u, v] : horizon) add_face(u, v, ip);
    }

    const std::vector<Vec3>* pts_ = nullptr;
    std::vector<Face> faces_;
    double eps_ = 1e-10;
};

// ---- subdivision assembly ----------------------------------------------------

class VertexPool {
public:
    int canonical(Vec2 p, bool on_boundary) {
        const long long kx = static_cast<long long>(std::floor(p.x * 1e9));
        const long long ky = static_cast<long long>(std::floor(p.y * 1e9));
        for (long long dx = -1; dx <= 1; ++dx)
            for (long long dy = -1; dy <= 1; ++dy) {
                auto it = grid_.find(key(kx + dx, ky + dy));
                if (it == grid_.end()) continue;
                for (int id : it->second)
                    if (dist(verts_[id].p, p) <= kMergeRadius) {
                        verts_[id].on_clip_boundary |= on_boundary;
                        return id;
                    }
            }
        const int id = static_cast<int>(verts_.size());
        verts_.push_back({p, on_boundary});
        grid_[key(kx, ky)].push_back(id);
        return id;
    }

    std::vector<SubdivisionVertex> take() { return std::move(verts_); }

private:
    static std::uint64_t key(long long kx, long long ky) {
        return static_cast<std::uint64_t>(kx) * 0x9e3779b97f4a7c15ull ^
               static_cast<std::uint64_t>(ky);
    }
    std::vector<SubdivisionVertex> verts_;
    std::unordered_map<std::uint64_t, std::vector<int>> grid_;
};

PlanarSubdivision assemble(std::vector<std::vector<CellEdge>>&& cell_edges,
                           const std::vector<WeightedSite>& sites, const ClipShape& clip) {
    const int ncells = static_cast<int>(cell_edges.size());
    PlanarSubdivision sub;
    sub.clip = clip;
    sub.cells.resize(ncells);

    VertexPool pool;
    struct PendingEdge {
        int v0, v1, cell, neighbor;
        bool arc;
    };
    std::vector<std::vector<PendingEdge>> pending(ncells);
    for (int i = 0; i < ncells; ++i)
        for (const CellEdge& e : cell_edges[i]) {
            // Drop degenerate pieces; an arc's extent is its sweep angle, not
            // the chord (a grazing cut leaves a near-full-circle arc with a
            // tiny chord).
            double extent;
            if (e.arc) {
                double sweep = std::atan2(e.b.y, e.b.x) - std::atan2(e.a.y, e.a.x);
                if (sweep <= 0.0) sweep += 2.0 * std::numbers::pi;
                extent = sweep;
            } else {
                extent = dist(e.a, e.b);
            }
            if (extent <= kMergeRadius) continue;
            const int v0 = pool.canonical(e.a, e.a_on_circle || e.neighbor == kClipBoundary);
            const int v1 = pool.canonical(e.b, e.b_on_circle || e.neighbor == kClipBoundary);
            if (v0 == v1 && !e.arc) continue;
            pending[i].push_back({v0, v1, i, e.neighbor, e.arc});
        }

    sub.vertices = pool.take();

    // Refine interior junctions: a vertex where >= 3 cells meet is the
    // radical center of any three of their sites; recomputing it from the
    // sites removes the drift accumulated through successive clips.
    std::vector<std::vector<int>> vertex_cells(sub.vertices.size());
    for (int i = 0; i < ncells; ++i)
        for (const PendingEdge& e : pending[i])
            for (int v : {e.v0, e.v1}) {
                auto& lst = vertex_cells[v];
                if (std::find(lst.begin(), lst.end(), i) == lst.end()) lst.push_back(i);
            }
    for (size_t v = 0; v < sub.vertices.size(); ++v) {
        if (sub.vertices[v].on_clip_boundary || vertex_cells[v].size() < 3) continue;
        const WeightedSite& s0 = sites[vertex_cells[v][0]];
        const WeightedSite& s1 = sites[vertex_cells[v][1]];
        const WeightedSite& s2 = sites[vertex_cells[v][2]];
        const LineCoeffs l1 = power_bisector(s0, s1);
        const LineCoeffs l2 = power_bisector(s0, s2);
        const double det = l1.a * l2.b - l1.b * l2.a;
        if (std::abs(det) < 1e-12) continue;
        const Vec2 rc((-l1.c * l2.b + l2.c * l1.b) / det, (-l1.a * l2.c + l2.a * l1.c) / det);
        if (dist(rc, sub.vertices[v].p) < 10.0 * kMergeRadius) sub.vertices[v].p = rc;
    }

    // Deduplicate bisector edges between cell pairs; boundary edges belong to
    // a single cell.
    std::map<std::array<int, 4>, int> bisector_ids;
    for (int i = 0; i < ncells; ++i) {
        for (const PendingEdge& e : pending[i]) {
            int id;
            if (e.neighbor == kClipBoundary) {
                id = static_cast<int>(sub.edges.size());
                sub.edges.push_back({e.v0, e.v1, i, kClipBoundary, e.arc});
            } else {
                const std::array<int, 4> key = {std::min(i, e.neighbor), std::max(i, e.neighbor),
                                                std::min(e.v0, e.v1), std::max(e.v0, e.v1)};
                auto it = bisector_ids.find(key);
                if (it == bisector_ids.end()) {
                    id = static_cast<int>(sub.edges.size());
                    sub.edges.push_back({e.v0, e.v1, i, e.neighbor, false});
                    bisector_ids.emplace(key, id);
                } else {
                    id = it->second;
                }
            }
            sub.cells[i].push_back(id);
        }
    }
    return sub;
}

void check_sites(const std::vector<WeightedSite>& sites) {
    if (sites.empty()) throw std::invalid_argument("power diagram: no sites");
    for (size_t i = 0; i < sites.size(); ++i)
        for (size_t j = i + 1; j < sites.size(); ++j)
            if (sites[i].c.x == sites[j].c.x && sites[i].c.y == sites[j].c.y &&
                sites[i].w == sites[j].w)
                throw std::invalid_argument("power diagram: duplicate spheres");
}

std::vector<CellEdge> build_cell(const std::vector<WeightedSite>& sites, int i,
                                 const std::vector<int>& against, const ClipShape& clip) {
    Poly poly;
    if (clip.kind == ClipShape::Kind::Disk) {
        poly = initial_square(2.0, kClipBoundary);
    } else {
        poly = initial_box(clip);
    }
    for (int j : against) {
        if (j == i || poly.empty()) continue;
        const Vec2 d = 2.0 * (sites[j].c - sites[i].c);
        const double c0 = norm2(sites[i].c) - norm2(sites[j].c) - sites[i].w + sites[j].w;
        if (norm(d) < 1e-300) {
            // concentric spheres: one side wins everywhere
            if (c0 > 0.0) {
                poly.v.clear();
                poly.src.clear();
            }
            continue;
        }
        // Scale without the sign normalization: eval(x) <= 0 must stay
        // equivalent to power_i(x) <= power_j(x).
        const double inv = 1.0 / norm(d);
        clip_halfplane(poly, LineCoeffs{d.x * inv, d.y * inv, c0 * inv}, j);
    }
    return finish_cell(std::move(poly), clip);
}

}  // namespace

PlanarSubdivision build_power_diagram(const std::vector<WeightedSite>& sites,
                                      const ClipShape& clip, const BuildOptions& opt) {
    check_sites(sites);
    const int n = static_cast<int>(sites.size());

    std::vector<int> everyone(n);
    for (int i = 0; i < n; ++i) everyone[i] = i;

    // Neighbor lists from the lifted lower hull; empty list means "cut
    // against everyone" (fallback and the half-plane route).
    std::vector<std::vector<int>> neighbors(n);
    bool use_hull = opt.method != ConstructionMethod::HalfPlane && n >= 5;
    if (use_hull) {
        std::vector<Vec3> lifted(n);
        for (int i = 0; i < n; ++i)
            lifted[i] = {sites[i].c.x, sites[i].c.y, norm2(sites[i].c) - sites[i].w};
        Hull3 hull;
        if (hull.build(lifted)) {
            std::vector<char> on_lower(n, 0);
            for (const auto& f : hull.faces()) {
                if (!f.alive || f.n.z >= -1e-12) continue;
                on_lower[f.a] = on_lower[f.b] = on_lower[f.c] = 1;
                const std::array<std::pair<int, int>, 3> es = {
                    std::make_pair(f.a, f.b), std::make_pair(f.b, f.c), std::make_pair(f.c, f.a)};
                for (auto [u, v] : es) {
                    if (std::find(neighbors[u].begin(), neighbors[u].end(), v) ==
                        neighbors[u].end())
                        neighbors[u].push_back(v);
                    if (std::find(neighbors[v].begin(), neighbors[v].end(), u) ==
                        neighbors[v].end())
                        neighbors[v].push_back(u);
                }
            }
            // Sites absent from the lower hull are usually hidden (empty
            // cells), but may also be degenerate drops; both are settled by
            // cutting them against the full set.
            for (int i = 0; i < n; ++i)
                if (!on_lower[i]) neighbors[i] = everyone;
        } else {
            use_hull = false;
        }
    }
    if (!use_hull)
        for (int i = 0; i < n; ++i) neighbors[i] = everyone;

    std::vector<std::vector<CellEdge>> cell_edges(n);
#pragma omp parallel for schedule(dynamic, 8) if (opt.parallel)
    for (int i = 0; i < n; ++i) cell_edges[i] = build_cell(sites, i, neighbors[i], clip);

    return assemble(std::move(cell_edges), sites, clip);
}

PlanarSubdivision clipped_power_diagram(const std::vector<WeightedSite>& sites,
                                        const BuildOptions& opt) {
    return build_power_diagram(sites, ClipShape::unit_disk(), opt);
}

std::vector<int> PlanarSubdivision::cell_vertex_cycle(int cell) const {
    std::vector<int> cycle;
    for (int e : cells[cell]) {
        const SubdivisionEdge& ed = edges[e];
        cycle.push_back(ed.left_cell == cell ? ed.v0 : ed.v1);
    }
    return cycle;
}

std::vector<int> PlanarSubdivision::cell_neighbor_ids(int cell) const {
    std::vector<int> out;
    for (int e : cells[cell]) {
        const SubdivisionEdge& ed = edges[e];
        const int other = ed.left_cell == cell ? ed.right_cell : ed.left_cell;
        if (other >= 0 && std::find(out.begin(), out.end(), other) == out.end())
            out.push_back(other);
    }
    return out;
}

int locate_cell(const PlanarSubdivision& sub, const std::vector<WeightedSite>& sites, Vec2 x,
                double tol) {
    if (!sub.clip.contains(x, tol)) return -1;
    for (int i = 0; i < static_cast<int>(sub.cells.size()); ++i) {
        if (sub.cells[i].empty()) continue;
        const double pi = power_distance(sites[i], x);
        bool ok = true;
        for (int j : sub.cell_neighbor_ids(i))
            if (pi > power_distance(sites[j], x) + tol) {
                ok = false;
                break;
            }
        if (ok) return i;
    }
    return -1;
}

bool subdivisions_equal(const PlanarSubdivision& a, const PlanarSubdivision& b, double tol) {
    if (a.cells.size() != b.cells.size()) return false;
    for (size_t i = 0; i < a.cells.size(); ++i) {
        auto na = a.cell_neighbor_ids(static_cast<int>(i));
        auto nb = b.cell_neighbor_ids(static_cast<int>(i));
        std::sort(na.begin(), na.end());
        std::sort(nb.begin(), nb.end());
        if (na != nb) return false;
        const auto ca = a.cell_vertex_cycle(static_cast<int>(i));
        const auto cb = b.cell_vertex_cycle(static_cast<int>(i));
        if (ca.size() != cb.size()) return false;
        if (ca.empty()) continue;
        // align the cycles on the vertex nearest to a's first vertex
        const Vec2 p0 = a.vertices[ca[0]].p;
        size_t off = 0;
        double best = std::numeric_limits<double>::infinity();
        for (size_t k = 0; k < cb.size(); ++k) {
            const double d = dist(p0, b.vertices[cb[k]].p);
            if (d < best) best = d, off = k;
        }
        for (size_t k = 0; k < ca.size(); ++k)
            if (dist(a.vertices[ca[k]].p, b.vertices[cb[(k + off) % cb.size()]].p) > tol)
                return false;
    }
    return true;
}

}  // namespace cauchyvor
