#ifndef DELPOTTS_TRIANGULATION_HPP
#define DELPOTTS_TRIANGULATION_HPP

#include "delpotts/geometry.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <unordered_map>
#include <vector>

namespace delpotts {

using VertexId = std::uint32_t;

// Snapshot of a triangle, stable across later mutations.
struct TriangleRecord {
    std::array<VertexId, 3> vertices;  // CCW
    TriangleMetrics metrics;
};

// The diff of a single insertion or removal: the created triangles T+ and
// the destroyed triangles T- (real triangles only). For an interior-point
// insertion the two sets tile the same region, the Delaunay cavity.
struct CavityDiff {
    Point site;
    VertexId site_id = 0;
    std::vector<TriangleRecord> created;
    std::vector<TriangleRecord> destroyed;
    std::uint64_t stamp = 0;  // mutation counter after the operation
};

// Incremental Delaunay triangulation of a planar point set.
//
// Exact predicates throughout; exact cocircular ties are resolved by a
// symbolic perturbation keyed to vertex ids (insertion order), so the
// triangulation is unique: any insertion/removal sequence reaching the same
// id-to-point assignment yields the same triangle set as a fresh build.
//
// The unbounded face is represented by ghost triangles sharing a sentinel
// vertex; they are never exposed through the public triangle iteration and
// carry no metrics.
class Triangulation {
public:
    static constexpr VertexId kGhost = 0xFFFFFFFFu;
    static constexpr std::uint32_t kNone = 0xFFFFFFFFu;

    Triangulation();

    // Builds the triangulation of `points`; ids are assigned 0..n-1 in input
    // order. Throws std::invalid_argument for fewer than 3 points, all
    // collinear input, or duplicate points.
    static Triangulation build(const std::vector<Point>& points);

    // Inserts a point with the next free id (or a caller-chosen unused id)
    // and returns it. If `diff` is nonnull it receives the cavity diff.
    // Throws std::invalid_argument on duplicate points or reused ids.
    VertexId insert(const Point& p, CavityDiff* diff = nullptr);
    VertexId insert_with_id(const Point& p, VertexId id, CavityDiff* diff = nullptr);

    // Removes a vertex; the result equals a fresh build of the remaining
    // points. Interior vertices are handled by local cavity retriangulation;
    // hull vertices fall back to a rebuild. At least 3 vertices must remain.
    CavityDiff remove(VertexId v);

    bool contains_vertex(VertexId v) const {
        return v < verts_.size() && verts_[v].alive;
    }
    const Point& point(VertexId v) const { return verts_[v].p; }
    std::size_t num_vertices() const { return n_vertices_; }
    std::size_t num_triangles() const { return n_real_; }
    std::size_t num_hull_vertices() const { return n_ghost_; }
    std::uint64_t stamp() const { return stamp_; }
    VertexId max_id() const { return next_id_; }

    std::vector<VertexId> vertex_ids() const;

    // Hull cycle in CCW order.
    std::vector<VertexId> hull() const;

    // Visits every real triangle as (slot, vertices, metrics).
    template <typename Fn>
    void for_each_triangle(Fn&& fn) const {
        for (std::uint32_t t = 0; t < tris_.size(); ++t) {
            if (tris_[t].alive && !is_ghost(t)) fn(t, tris_[t].v, tris_[t].m);
        }
    }

    const std::array<VertexId, 3>& triangle_vertices(std::uint32_t slot) const {
        return tris_[slot].v;
    }
    const TriangleMetrics& triangle_metrics_of(std::uint32_t slot) const {
        return tris_[slot].m;
    }
    bool triangle_alive(std::uint32_t slot) const {
        return slot < tris_.size() && tris_[slot].alive && !is_ghost(slot);
    }

    // Canonical (sorted) vertex triples of all real triangles, sorted; two
    // triangulations are equal iff these agree.
    std::vector<std::array<VertexId, 3>> triangle_set() const;

    // Delaunay neighbors of a vertex (link), unsorted.
    std::vector<VertexId> neighbors(VertexId v) const;

    // Visits the real triangles incident to v.
    template <typename Fn>
    void for_each_incident(VertexId v, Fn&& fn) const {
        const std::uint32_t t0 = verts_[v].incident;
        if (t0 == kNone) return;
        std::uint32_t t = t0;
        do {
            const auto& vv = tris_[t].v;
            const int iv = (vv[0] == v) ? 0 : (vv[1] == v ? 1 : 2);
            if (vv[2] != kGhost) fn(vv, tris_[t].m);
            t = tris_[t].nbr[(iv + 1) % 3];
        } while (t != t0);
    }

    // The vertex nearest to p, ties broken by smaller id; equivalently the
    // owner of the Voronoi cell containing p.
    VertexId voronoi_owner(const Point& p) const;

    // Jump-start grid for point location; `cell` should be near the typical
    // point spacing. Zero disables the grid.
    void set_locate_cell(double cell);

    // id, x, y per line.
    void dump_points(std::ostream& os) const;
    // v0, v1, v2, circumradius, area, min_angle per line.
    void dump_triangles(std::ostream& os) const;
    // Rebuilds from dump_points output (insertion order = file order).
    static Triangulation load_points(std::istream& is);

private:
    struct VertexSlot {
        Point p;
        std::uint32_t incident = kNone;  // one alive triangle containing it
        bool alive = false;
    };
    struct TriSlot {
        std::array<VertexId, 3> v{};
        std::array<std::uint32_t, 3> nbr{};  // nbr[i] across edge opposite v[i]
        TriangleMetrics m;
        bool alive = false;
    };

    bool is_ghost(std::uint32_t t) const { return tris_[t].v[2] == kGhost; }
    std::uint32_t new_tri_slot();
    void kill_tri(std::uint32_t t);
    std::uint32_t make_triangle(VertexId a, VertexId b, VertexId c);
    int edge_index(std::uint32_t t, VertexId from, VertexId to) const;
    void set_neighbors(std::uint32_t t, std::uint32_t j, std::uint32_t u);

    bool tri_bad(std::uint32_t t, const Point& x, VertexId idx) const;
    std::uint32_t locate(const Point& x) const;
    std::uint32_t find_seed(const Point& x, VertexId idx) const;
    void check_duplicate(std::uint32_t located, const Point& x) const;

    void insert_impl(const Point& p, VertexId id, CavityDiff* diff);
    void bootstrap(const std::vector<Point>& pts, const std::vector<VertexId>& ids);
    CavityDiff remove_interior(VertexId v);
    CavityDiff remove_rebuild(VertexId v);

    std::uint64_t locate_bucket(const Point& p) const;
    void grid_note_vertex(VertexId v);
    std::uint32_t grid_seed_triangle(const Point& p) const;

    std::vector<VertexSlot> verts_;
    std::vector<TriSlot> tris_;
    std::vector<std::uint32_t> free_tris_;
    std::size_t n_vertices_ = 0;
    std::size_t n_real_ = 0;
    std::size_t n_ghost_ = 0;
    VertexId next_id_ = 0;
    std::uint64_t stamp_ = 0;

    mutable std::uint32_t hint_ = kNone;
    mutable std::vector<std::uint32_t> visit_;
    mutable std::uint32_t epoch_ = 0;

    double locate_cell_ = 0.0;
    std::unordered_map<std::uint64_t, VertexId> locate_grid_;
};

class Region;

// Del_{3,Lambda}: slots of the triangles whose closed circumball meets the
// region.
std::vector<std::uint32_t> del3_region(const Triangulation& tri, const Region& region);

} // namespace delpotts

#endif
