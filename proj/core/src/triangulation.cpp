#include "delpotts/triangulation.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace delpotts {

namespace {

// Directed-edge key for adjacency stitching. kGhost participates like a
// normal vertex id.
std::uint64_t edge_key(VertexId a, VertexId b) {
    return (std::uint64_t(a) << 32) | std::uint64_t(b);
}

bool on_open_segment(const Point& a, const Point& b, const Point& x) {
    // Precondition: a, b, x exactly collinear. Coordinate comparison along
    // the dominant axis is exact.
    if (std::abs(b.x - a.x) >= std::abs(b.y - a.y)) {
        return (a.x < x.x && x.x < b.x) || (b.x < x.x && x.x < a.x);
    }
    return (a.y < x.y && x.y < b.y) || (b.y < x.y && x.y < a.y);
}

} // namespace

Triangulation::Triangulation() = default;

std::uint32_t Triangulation::new_tri_slot() {
    if (!free_tris_.empty()) {
        const std::uint32_t t = free_tris_.back();
        free_tris_.pop_back();
        return t;
    }
    tris_.emplace_back();
    visit_.push_back(0);
    return static_cast<std::uint32_t>(tris_.size() - 1);
}

void Triangulation::kill_tri(std::uint32_t t) {
    if (is_ghost(t)) --n_ghost_; else --n_real_;
    tris_[t].alive = false;
    free_tris_.push_back(t);
}

std::uint32_t Triangulation::make_triangle(VertexId a, VertexId b, VertexId c) {
    const std::uint32_t t = new_tri_slot();
    TriSlot& s = tris_[t];
    s.v = {a, b, c};
    s.nbr = {kNone, kNone, kNone};
    s.alive = true;
    if (c == kGhost) {
        ++n_ghost_;
    } else {
        ++n_real_;
        s.m = triangle_metrics(verts_[a].p, verts_[b].p, verts_[c].p);
    }
    for (VertexId v : s.v) {
        if (v != kGhost) verts_[v].incident = t;
    }
    return t;
}

int Triangulation::edge_index(std::uint32_t t, VertexId from, VertexId to) const {
    const auto& v = tris_[t].v;
    for (int j = 0; j < 3; ++j) {
        if (v[(j + 1) % 3] == from && v[(j + 2) % 3] == to) return j;
    }
    return -1;
}

void Triangulation::set_neighbors(std::uint32_t t, std::uint32_t j, std::uint32_t u) {
    tris_[t].nbr[j] = u;
}

bool Triangulation::tri_bad(std::uint32_t t, const Point& x, VertexId idx) const {
    const TriSlot& s = tris_[t];
    if (s.v[2] == kGhost) {
        // Ghost (b, a, G) stands for hull edge a->b; its "circumball" is the
        // open half plane strictly right of a->b, plus the open edge itself.
        const Point& pb = verts_[s.v[0]].p;
        const Point& pa = verts_[s.v[1]].p;
        const int o = orientation(pa, pb, x);
        if (o < 0) return true;
        if (o == 0) return on_open_segment(pa, pb, x);
        return false;
    }
    return incircle_perturbed(verts_[s.v[0]].p, s.v[0],
                              verts_[s.v[1]].p, s.v[1],
                              verts_[s.v[2]].p, s.v[2], x, idx) > 0;
}

std::uint64_t Triangulation::locate_bucket(const Point& p) const {
    const auto qx = static_cast<std::int64_t>(std::floor(p.x / locate_cell_));
    const auto qy = static_cast<std::int64_t>(std::floor(p.y / locate_cell_));
    return (static_cast<std::uint64_t>(qx) * 0x9E3779B97F4A7C15ULL)
         ^ static_cast<std::uint64_t>(qy);
}

void Triangulation::grid_note_vertex(VertexId v) {
    if (locate_cell_ > 0.0) locate_grid_[locate_bucket(verts_[v].p)] = v;
}

std::uint32_t Triangulation::grid_seed_triangle(const Point& p) const {
    if (locate_cell_ <= 0.0) return kNone;
    auto it = locate_grid_.find(locate_bucket(p));
    if (it == locate_grid_.end()) return kNone;
    const VertexId v = it->second;
    if (!contains_vertex(v)) return kNone;
    const std::uint32_t t = verts_[v].incident;
    if (t == kNone || !tris_[t].alive) return kNone;
    return t;
}

void Triangulation::set_locate_cell(double cell) {
    locate_cell_ = cell;
    locate_grid_.clear();
    if (cell > 0.0) {
        for (VertexId v = 0; v < verts_.size(); ++v) {
            if (verts_[v].alive) grid_note_vertex(v);
        }
    }
}

std::uint32_t Triangulation::locate(const Point& x) const {
    std::uint32_t t = grid_seed_triangle(x);
    if (t == kNone) t = (hint_ != kNone && tris_[hint_].alive) ? hint_ : kNone;
    if (t == kNone) {
        for (std::uint32_t i = 0; i < tris_.size(); ++i) {
            if (tris_[i].alive && !is_ghost(i)) { t = i; break; }
        }
    }
    if (t == kNone) throw std::logic_error("locate: empty triangulation");
    if (is_ghost(t)) t = tris_[t].nbr[2];  // step to the real triangle inside

    const std::size_t max_steps = 4 * tris_.size() + 16;
    for (std::size_t step = 0; step < max_steps; ++step) {
        if (is_ghost(t)) return t;  // x is outside the hull
        const TriSlot& s = tris_[t];
        bool moved = false;
        for (int j = 0; j < 3; ++j) {
            const VertexId a = s.v[(j + 1) % 3], b = s.v[(j + 2) % 3];
            if (orientation(verts_[a].p, verts_[b].p, x) < 0) {
                t = s.nbr[j];
                moved = true;
                break;
            }
        }
        if (!moved) return t;
    }
    throw std::logic_error("locate: walk did not terminate");
}

void Triangulation::check_duplicate(std::uint32_t located, const Point& x) const {
    for (VertexId v : tris_[located].v) {
        if (v != kGhost && verts_[v].p == x)
            throw std::invalid_argument("insert: duplicate point");
    }
}

std::uint32_t Triangulation::find_seed(const Point& x, VertexId idx) const {
    const std::uint32_t t = locate(x);
    check_duplicate(t, x);
    if (tri_bad(t, x, idx)) return t;
    if (is_ghost(t)) {
        // x lies exactly on the hull's supporting line outside this edge;
        // a neighboring ghost must see it. Scan the ghost ring.
        std::uint32_t g = tris_[t].nbr[1];
        while (g != t) {
            if (tri_bad(g, x, idx)) return g;
            g = tris_[g].nbr[1];
        }
    }
    // Extremely defensive fallback; not expected to be reached.
    for (std::uint32_t i = 0; i < tris_.size(); ++i) {
        if (tris_[i].alive && tri_bad(i, x, idx)) return i;
    }
    throw std::logic_error("insert: no cavity triangle found");
}

VertexId Triangulation::insert(const Point& p, CavityDiff* diff) {
    const VertexId id = next_id_;
    insert_impl(p, id, diff);
    return id;
}

VertexId Triangulation::insert_with_id(const Point& p, VertexId id, CavityDiff* diff) {
    if (contains_vertex(id)) throw std::invalid_argument("insert_with_id: id in use");
    insert_impl(p, id, diff);
    return id;
}

void Triangulation::insert_impl(const Point& p, VertexId id, CavityDiff* diff) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y))
        throw std::invalid_argument("insert: non-finite coordinates");
    if (n_vertices_ < 3)
        throw std::logic_error("insert: triangulation not initialized");

    const std::uint32_t seed = find_seed(p, id);

    // Flood the cavity: the connected set of triangles whose (perturbed)
    // circumball contains p.
    ++epoch_;
    std::vector<std::uint32_t> cavity;
    std::vector<std::uint32_t> stack{seed};
    visit_[seed] = epoch_;
    while (!stack.empty()) {
        const std::uint32_t t = stack.back();
        stack.pop_back();
        cavity.push_back(t);
        for (int j = 0; j < 3; ++j) {
            const std::uint32_t u = tris_[t].nbr[j];
            if (u == kNone || visit_[u] == epoch_ || !tris_[u].alive) continue;
            if (tri_bad(u, p, id)) {
                visit_[u] = epoch_;
                stack.push_back(u);
            }
        }
    }

    // Boundary: directed edges of cavity triangles whose neighbor survives.
    struct Boundary { VertexId a, b; std::uint32_t outside; };
    std::vector<Boundary> boundary;
    boundary.reserve(cavity.size() + 2);
    for (const std::uint32_t t : cavity) {
        for (int j = 0; j < 3; ++j) {
            const std::uint32_t u = tris_[t].nbr[j];
            if (u != kNone && visit_[u] == epoch_) continue;
            boundary.push_back({tris_[t].v[(j + 1) % 3], tris_[t].v[(j + 2) % 3], u});
        }
    }

    if (diff) {
        diff->site = p;
        diff->site_id = id;
        diff->created.clear();
        diff->destroyed.clear();
        for (const std::uint32_t t : cavity) {
            if (!is_ghost(t)) diff->destroyed.push_back({tris_[t].v, tris_[t].m});
        }
    }

    for (const std::uint32_t t : cavity) kill_tri(t);

    if (id >= verts_.size()) verts_.resize(id + 1);
    verts_[id] = {p, kNone, true};
    ++n_vertices_;
    if (id >= next_id_) next_id_ = id + 1;

    // Retriangulate: one triangle per boundary edge, all sharing p. Ghost
    // triples are normalized so the sentinel sits in slot 2.
    std::unordered_map<std::uint64_t, std::pair<std::uint32_t, int>> open_edges;
    open_edges.reserve(boundary.size() * 2);
    for (const Boundary& e : boundary) {
        std::array<VertexId, 3> nv = {e.a, e.b, id};
        if (e.a == kGhost) nv = {e.b, id, kGhost};
        else if (e.b == kGhost) nv = {id, e.a, kGhost};
        const std::uint32_t t = make_triangle(nv[0], nv[1], nv[2]);

        const int j = edge_index(t, e.a, e.b);
        set_neighbors(t, j, e.outside);
        if (e.outside != kNone) {
            const int jo = edge_index(e.outside, e.b, e.a);
            set_neighbors(e.outside, jo, t);
        }
        for (int k = 0; k < 3; ++k) {
            if (k == j) continue;
            const VertexId fa = tris_[t].v[(k + 1) % 3], fb = tris_[t].v[(k + 2) % 3];
            const auto rev = open_edges.find(edge_key(fb, fa));
            if (rev != open_edges.end()) {
                set_neighbors(t, k, rev->second.first);
                set_neighbors(rev->second.first, rev->second.second, t);
                open_edges.erase(rev);
            } else {
                open_edges.emplace(edge_key(fa, fb), std::make_pair(t, k));
            }
        }
        if (!is_ghost(t)) {
            hint_ = t;
            if (diff) diff->created.push_back({tris_[t].v, tris_[t].m});
        }
    }
    if (!open_edges.empty())
        throw std::logic_error("insert: cavity boundary did not close");

    grid_note_vertex(id);
    ++stamp_;
    if (diff) diff->stamp = stamp_;
}

void Triangulation::bootstrap(const std::vector<Point>& pts,
                              const std::vector<VertexId>& ids) {
    // First triangle from points 0, 1 and the first non-collinear point.
    std::size_t k = 2;
    int orient = 0;
    if (pts[0] == pts[1]) throw std::invalid_argument("build: duplicate point");
    while (k < pts.size()) {
        orient = orientation(pts[0], pts[1], pts[k]);
        if (orient != 0) break;
        ++k;
    }
    if (orient == 0) throw std::invalid_argument("build: all points collinear");

    const VertexId maxid = *std::max_element(ids.begin(), ids.end());
    verts_.resize(std::size_t(maxid) + 1);
    next_id_ = maxid + 1;

    VertexId a = ids[0], b = ids[1], c = ids[k];
    verts_[a] = {pts[0], kNone, true};
    verts_[b] = {pts[1], kNone, true};
    verts_[c] = {pts[k], kNone, true};
    n_vertices_ = 3;
    if (orient < 0) std::swap(b, c);

    const std::uint32_t t = make_triangle(a, b, c);
    const std::uint32_t gab = make_triangle(b, a, kGhost);
    const std::uint32_t gbc = make_triangle(c, b, kGhost);
    const std::uint32_t gca = make_triangle(a, c, kGhost);
    tris_[t].nbr = {gbc, gca, gab};
    tris_[gab].nbr = {gca, gbc, t};
    tris_[gbc].nbr = {gab, gca, t};
    tris_[gca].nbr = {gbc, gab, t};
    hint_ = t;
    grid_note_vertex(a);
    grid_note_vertex(b);
    grid_note_vertex(c);
    ++stamp_;

    for (std::size_t i = 2; i < pts.size(); ++i) {
        if (i == k) continue;
        insert_impl(pts[i], ids[i], nullptr);
    }
}

Triangulation Triangulation::build(const std::vector<Point>& points) {
    if (points.size() < 3)
        throw std::invalid_argument("build: need at least 3 points");
    Triangulation tri;
    std::vector<VertexId> ids(points.size());
    for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = static_cast<VertexId>(i);
    tri.bootstrap(points, ids);
    return tri;
}

CavityDiff Triangulation::remove(VertexId v) {
    if (!contains_vertex(v)) throw std::invalid_argument("remove: unknown vertex");
    if (n_vertices_ <= 3)
        throw std::invalid_argument("remove: at least 3 vertices must remain");

    // Walk the star; a ghost in it means v is on the hull.
    bool on_hull = false;
    {
        const std::uint32_t t0 = verts_[v].incident;
        std::uint32_t t = t0;
        do {
            if (is_ghost(t)) { on_hull = true; break; }
            const auto& vv = tris_[t].v;
            const int iv = (vv[0] == v) ? 0 : (vv[1] == v ? 1 : 2);
            t = tris_[t].nbr[(iv + 1) % 3];
        } while (t != t0);
    }
    return on_hull ? remove_rebuild(v) : remove_interior(v);
}

CavityDiff Triangulation::remove_interior(VertexId v) {
    CavityDiff diff;
    diff.site = verts_[v].p;
    diff.site_id = v;

    // Star triangles CCW around v; link[i] is the vertex opposite the edge
    // from v in star[i], so star[i] = (v, link[i], link[i+1]).
    std::vector<std::uint32_t> star;
    std::vector<VertexId> link;
    std::vector<std::uint32_t> outer;
    const std::uint32_t t0 = verts_[v].incident;
    std::uint32_t t = t0;
    do {
        const auto& vv = tris_[t].v;
        const int iv = (vv[0] == v) ? 0 : (vv[1] == v ? 1 : 2);
        star.push_back(t);
        link.push_back(vv[(iv + 1) % 3]);
        outer.push_back(tris_[t].nbr[iv]);
        t = tris_[t].nbr[(iv + 1) % 3];
    } while (t != t0);
    const std::size_t k = link.size();

    // Delaunay triangulation of the link vertices by brute force with the
    // global perturbation ids; the hole fill is exactly its restriction to
    // the star polygon.
    std::vector<std::array<VertexId, 3>> mini;
    for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = i + 1; j < k; ++j) {
            for (std::size_t l = j + 1; l < k; ++l) {
                VertexId a = link[i], b = link[j], c = link[l];
                const int o = orientation(verts_[a].p, verts_[b].p, verts_[c].p);
                if (o == 0) continue;
                if (o < 0) std::swap(b, c);
                bool empty = true;
                for (std::size_t m = 0; m < k && empty; ++m) {
                    const VertexId w = link[m];
                    if (w == a || w == b || w == c) continue;
                    if (incircle_perturbed(verts_[a].p, a, verts_[b].p, b,
                                           verts_[c].p, c, verts_[w].p, w) > 0)
                        empty = false;
                }
                if (empty) mini.push_back({a, b, c});
            }
        }
    }

    // Select the triangles filling the star polygon: seed from directed
    // polygon edges and flood without crossing polygon edges.
    std::unordered_map<std::uint64_t, std::uint32_t> mini_edge;
    for (std::uint32_t m = 0; m < mini.size(); ++m) {
        for (int j = 0; j < 3; ++j)
            mini_edge[edge_key(mini[m][(j + 1) % 3], mini[m][(j + 2) % 3])] = m;
    }
    std::vector<std::uint64_t> polygon_edges;
    for (std::size_t i = 0; i < k; ++i) {
        const VertexId a = link[i], b = link[(i + 1) % k];
        polygon_edges.push_back(edge_key(a, b));
        polygon_edges.push_back(edge_key(b, a));
    }
    auto is_polygon_edge = [&](VertexId a, VertexId b) {
        const std::uint64_t key = edge_key(a, b);
        return std::find(polygon_edges.begin(), polygon_edges.end(), key)
               != polygon_edges.end();
    };
    std::vector<char> in_hole(mini.size(), 0);
    std::vector<std::uint32_t> stack;
    for (std::size_t i = 0; i < k; ++i) {
        const auto it = mini_edge.find(edge_key(link[i], link[(i + 1) % k]));
        if (it != mini_edge.end() && !in_hole[it->second]) {
            in_hole[it->second] = 1;
            stack.push_back(it->second);
        }
    }
    while (!stack.empty()) {
        const std::uint32_t m = stack.back();
        stack.pop_back();
        for (int j = 0; j < 3; ++j) {
            const VertexId a = mini[m][(j + 1) % 3], b = mini[m][(j + 2) % 3];
            if (is_polygon_edge(a, b)) continue;
            const auto it = mini_edge.find(edge_key(b, a));
            if (it != mini_edge.end() && !in_hole[it->second]) {
                in_hole[it->second] = 1;
                stack.push_back(it->second);
            }
        }
    }
    std::vector<std::array<VertexId, 3>> fill;
    for (std::uint32_t m = 0; m < mini.size(); ++m) {
        if (in_hole[m]) fill.push_back(mini[m]);
    }
    if (fill.size() != k - 2) {
        // The local reconstruction failed a sanity check (should not
        // happen); fall back to the always-correct rebuild path.
        return remove_rebuild(v);
    }

    for (std::size_t i = 0; i < k; ++i)
        diff.destroyed.push_back({tris_[star[i]].v, tris_[star[i]].m});
    for (const std::uint32_t s : star) kill_tri(s);
    verts_[v].alive = false;
    verts_[v].incident = kNone;
    --n_vertices_;

    std::unordered_map<std::uint64_t, std::pair<std::uint32_t, int>> open_edges;
    for (const auto& f : fill) {
        const std::uint32_t nt = make_triangle(f[0], f[1], f[2]);
        diff.created.push_back({tris_[nt].v, tris_[nt].m});
        for (int j = 0; j < 3; ++j) {
            const VertexId a = tris_[nt].v[(j + 1) % 3], b = tris_[nt].v[(j + 2) % 3];
            const auto rev = open_edges.find(edge_key(b, a));
            if (rev != open_edges.end()) {
                set_neighbors(nt, j, rev->second.first);
                set_neighbors(rev->second.first, rev->second.second, nt);
                open_edges.erase(rev);
            } else {
                open_edges.emplace(edge_key(a, b), std::make_pair(nt, j));
            }
        }
        hint_ = nt;
    }
    // Remaining open edges are the polygon edges, directed as in the fill
    // triangles; hook them to the old outer neighbors.
    for (std::size_t i = 0; i < k; ++i) {
        const VertexId a = link[i], b = link[(i + 1) % k];
        const auto it = open_edges.find(edge_key(a, b));
        if (it == open_edges.end())
            throw std::logic_error("remove: polygon edge missing from fill");
        const std::uint32_t u = outer[i];
        set_neighbors(it->second.first, it->second.second, u);
        if (u != kNone) {
            const int jo = edge_index(u, b, a);
            set_neighbors(u, jo, it->second.first);
        }
        open_edges.erase(it);
    }
    if (!open_edges.empty())
        throw std::logic_error("remove: fill boundary mismatch");

    ++stamp_;
    diff.stamp = stamp_;
    return diff;
}

CavityDiff Triangulation::remove_rebuild(VertexId v) {
    CavityDiff diff;
    diff.site = verts_[v].p;
    diff.site_id = v;

    std::map<std::array<VertexId, 3>, TriangleRecord> old_records;
    for (std::uint32_t t = 0; t < tris_.size(); ++t) {
        if (!tris_[t].alive || is_ghost(t)) continue;
        std::array<VertexId, 3> key = tris_[t].v;
        std::sort(key.begin(), key.end());
        old_records.emplace(key, TriangleRecord{tris_[t].v, tris_[t].m});
    }

    std::vector<Point> pts;
    std::vector<VertexId> ids;
    for (VertexId u = 0; u < verts_.size(); ++u) {
        if (verts_[u].alive && u != v) {
            pts.push_back(verts_[u].p);
            ids.push_back(u);
        }
    }
    Triangulation fresh;
    fresh.bootstrap(pts, ids);

    fresh.next_id_ = next_id_;
    if (locate_cell_ > 0.0) fresh.set_locate_cell(locate_cell_);
    fresh.stamp_ = stamp_ + 1;
    *this = std::move(fresh);

    std::set<std::array<VertexId, 3>> after_keys;
    for_each_triangle([&](std::uint32_t, const std::array<VertexId, 3>& vv,
                          const TriangleMetrics& m) {
        std::array<VertexId, 3> key = vv;
        std::sort(key.begin(), key.end());
        after_keys.insert(key);
        if (!old_records.count(key)) diff.created.push_back({vv, m});
    });
    for (const auto& [key, rec] : old_records) {
        if (!after_keys.count(key)) diff.destroyed.push_back(rec);
    }
    diff.stamp = stamp_;
    return diff;
}

std::vector<VertexId> Triangulation::vertex_ids() const {
    std::vector<VertexId> out;
    out.reserve(n_vertices_);
    for (VertexId v = 0; v < verts_.size(); ++v) {
        if (verts_[v].alive) out.push_back(v);
    }
    return out;
}

std::vector<VertexId> Triangulation::hull() const {
    std::vector<VertexId> cycle;
    std::uint32_t g0 = kNone;
    for (std::uint32_t t = 0; t < tris_.size(); ++t) {
        if (tris_[t].alive && is_ghost(t)) { g0 = t; break; }
    }
    if (g0 == kNone) return cycle;
    std::uint32_t g = g0;
    do {
        cycle.push_back(tris_[g].v[1]);  // hull edge v[1] -> v[0]
        g = tris_[g].nbr[1];
    } while (g != g0);
    return cycle;
}

std::vector<std::array<VertexId, 3>> Triangulation::triangle_set() const {
    std::vector<std::array<VertexId, 3>> out;
    out.reserve(n_real_);
    for_each_triangle([&](std::uint32_t, const std::array<VertexId, 3>& vv,
                          const TriangleMetrics&) {
        std::array<VertexId, 3> key = vv;
        std::sort(key.begin(), key.end());
        out.push_back(key);
    });
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<VertexId> Triangulation::neighbors(VertexId v) const {
    std::vector<VertexId> out;
    const std::uint32_t t0 = verts_[v].incident;
    if (t0 == kNone) return out;
    std::uint32_t t = t0;
    do {
        const auto& vv = tris_[t].v;
        const int iv = (vv[0] == v) ? 0 : (vv[1] == v ? 1 : 2);
        const VertexId w = vv[(iv + 1) % 3];
        if (w != kGhost) out.push_back(w);
        t = tris_[t].nbr[(iv + 1) % 3];
    } while (t != t0);
    return out;
}

VertexId Triangulation::voronoi_owner(const Point& p) const {
    if (n_vertices_ == 0) throw std::logic_error("voronoi_owner: empty");
    // Start from a vertex of the triangle containing p, then hill-descend
    // on (squared distance, id) over the Delaunay graph.
    std::uint32_t t = locate(p);
    VertexId cur = kGhost;
    for (VertexId v : tris_[t].v) {
        if (v == kGhost) continue;
        if (cur == kGhost || std::make_pair(dist2(p, verts_[v].p), v)
                                 < std::make_pair(dist2(p, verts_[cur].p), cur))
            cur = v;
    }
    for (;;) {
        auto best = std::make_pair(dist2(p, verts_[cur].p), cur);
        for (VertexId w : neighbors(cur)) {
            best = std::min(best, std::make_pair(dist2(p, verts_[w].p), w));
        }
        if (best.second == cur) return cur;
        cur = best.second;
    }
}

void Triangulation::dump_points(std::ostream& os) const {
    os.precision(17);
    for (VertexId v = 0; v < verts_.size(); ++v) {
        if (verts_[v].alive)
            os << v << ", " << verts_[v].p.x << ", " << verts_[v].p.y << "\n";
    }
}

void Triangulation::dump_triangles(std::ostream& os) const {
    os.precision(17);
    std::map<std::array<VertexId, 3>, TriangleMetrics> rows;
    for_each_triangle([&](std::uint32_t, const std::array<VertexId, 3>& vv,
                          const TriangleMetrics& m) {
        std::array<VertexId, 3> key = vv;
        std::sort(key.begin(), key.end());
        rows.emplace(key, m);
    });
    for (const auto& [key, m] : rows) {
        os << key[0] << ", " << key[1] << ", " << key[2] << ", "
           << m.circumradius << ", " << m.area << ", " << m.min_angle << "\n";
    }
}

Triangulation Triangulation::load_points(std::istream& is) {
    std::vector<Point> pts;
    std::vector<VertexId> ids;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        std::replace(line.begin(), line.end(), ',', ' ');
        std::istringstream ls(line);
        VertexId id;
        Point p;
        if (ls >> id >> p.x >> p.y) {
            ids.push_back(id);
            pts.push_back(p);
        }
    }
    if (pts.size() < 3) throw std::invalid_argument("load: need at least 3 points");
    Triangulation tri;
    tri.bootstrap(pts, ids);
    return tri;
}

} // namespace delpotts
