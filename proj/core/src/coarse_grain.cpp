#include "delpotts/coarse_grain.hpp"

#include <algorithm>
#include <deque>
#include <ostream>
#include <unordered_set>

namespace delpotts {

CellOccupancy::CellOccupancy(const Triangulation& tri, const MarkedConfiguration& cfg,
                             const CellGrid& grid)
    : grid_(grid) {
    for (VertexId v : tri.vertex_ids()) {
        const SubCellIndex sc = grid_.subcell_of(tri.point(v));
        CellData& data = cells_[pack_cell(sc.cell)];
        data.points.push_back(v);
        data.subcell_mask |= std::uint64_t(1) << (8 * sc.i + sc.j);
        if (cfg.mark(v) != 1) data.all_mark_one = false;
    }
}

bool CellOccupancy::f_event(CellIndex c) const {
    auto it = cells_.find(pack_cell(c));
    return it != cells_.end() && it->second.subcell_mask == ~std::uint64_t(0);
}

bool CellOccupancy::o_event(CellIndex c) const {
    auto it = cells_.find(pack_cell(c));
    return it == cells_.end() || it->second.all_mark_one;
}

const std::vector<VertexId>* CellOccupancy::cell_points(CellIndex c) const {
    auto it = cells_.find(pack_cell(c));
    return it == cells_.end() ? nullptr : &it->second.points;
}

CoarseField build_field(const CellOccupancy& occ, int n, int margin) {
    CoarseField field;
    field.n = n;
    field.margin = margin;
    for (int k = -n - margin; k <= n + margin; ++k) {
        for (int l = -n - margin; l <= n + margin; ++l) {
            const CellIndex c{k, l};
            const bool inside = std::abs(k) <= n && std::abs(l) <= n;
            const bool open = inside ? occ.f_event(c) && occ.o_event(c)
                                     : occ.o_event(c);
            field.bits[pack_cell(c)] = open ? 1 : 0;
        }
    }
    return field;
}

void dump_field(std::ostream& os, const CoarseField& field) {
    const int range = field.n + field.margin;
    for (int l = range; l >= -range; --l) {
        for (int k = -range; k <= range; ++k)
            os << (field.bit({k, l}) ? '1' : '0');
        os << "\n";
    }
}

std::size_t delta_connected(const Triangulation& tri, const MarkedConfiguration& cfg,
                            const CellGrid& grid, CellIndex delta,
                            const Region& lambda) {
    // Multi-source BFS over mark-1 vertices, seeded at every mark-1 vertex
    // outside lambda; adjacency is sharing a Delaunay triangle, which for
    // vertices is exactly Delaunay-graph adjacency.
    std::unordered_set<VertexId> reached;
    std::deque<VertexId> queue;
    for (VertexId v : tri.vertex_ids()) {
        if (cfg.mark(v) == 1 && !lambda.contains(tri.point(v))) {
            reached.insert(v);
            queue.push_back(v);
        }
    }
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        for (VertexId w : tri.neighbors(v)) {
            if (cfg.mark(w) == 1 && !reached.count(w)) {
                reached.insert(w);
                queue.push_back(w);
            }
        }
    }
    std::size_t count = 0;
    for (VertexId v : reached) {
        if (grid.cell_of(tri.point(v)) == delta) ++count;
    }
    return count;
}

namespace {

bool mark1_path(const Triangulation& tri, const MarkedConfiguration& cfg,
                VertexId from, VertexId to) {
    if (cfg.mark(from) != 1 || cfg.mark(to) != 1) return false;
    if (from == to) return true;
    std::unordered_set<VertexId> seen{from};
    std::deque<VertexId> queue{from};
    while (!queue.empty()) {
        const VertexId v = queue.front();
        queue.pop_front();
        for (VertexId w : tri.neighbors(v)) {
            if (cfg.mark(w) != 1 || seen.count(w)) continue;
            if (w == to) return true;
            seen.insert(w);
            queue.push_back(w);
        }
    }
    return false;
}

} // namespace

std::vector<std::pair<CellIndex, CellIndex>> path_consistency_check(
    const Triangulation& tri, const MarkedConfiguration& cfg,
    const CellGrid& grid, const CoarseField& field) {
    std::vector<std::pair<CellIndex, CellIndex>> violations;
    std::unordered_map<std::uint64_t, VertexId> owners;
    auto owner_of = [&](CellIndex c) {
        auto it = owners.find(pack_cell(c));
        if (it == owners.end())
            it = owners.emplace(pack_cell(c),
                                tri.voronoi_owner(grid.cell_center(c))).first;
        return it->second;
    };
    const int range = field.n + field.margin;
    for (int k = -range; k <= range; ++k) {
        for (int l = -range; l <= range; ++l) {
            const CellIndex c{k, l};
            if (!field.bit(c)) continue;
            const CellIndex right{k + 1, l}, up{k, l + 1};
            for (const CellIndex& d : {right, up}) {
                if (!field.stored(d) || !field.bit(d)) continue;
                if (!mark1_path(tri, cfg, owner_of(c), owner_of(d)))
                    violations.emplace_back(c, d);
            }
        }
    }
    return violations;
}

CellPercolation cell_percolation(const CoarseField& field) {
    CellPercolation out;
    std::unordered_set<std::uint64_t> seen;
    const int range = field.n + field.margin;
    for (int k = -range; k <= range; ++k) {
        for (int l = -range; l <= range; ++l) {
            const CellIndex c{k, l};
            if (!field.bit(c) || seen.count(pack_cell(c))) continue;
            // flood this cluster
            std::size_t size = 0;
            bool touches_inside = false, touches_ring = false;
            std::deque<CellIndex> queue{c};
            seen.insert(pack_cell(c));
            while (!queue.empty()) {
                const CellIndex u = queue.front();
                queue.pop_front();
                ++size;
                if (std::abs(u.k) <= field.n && std::abs(u.l) <= field.n)
                    touches_inside = true;
                else
                    touches_ring = true;
                const CellIndex nbrs[4] = {{u.k + 1, u.l}, {u.k - 1, u.l},
                                           {u.k, u.l + 1}, {u.k, u.l - 1}};
                for (const CellIndex& w : nbrs) {
                    if (!field.stored(w) || !field.bit(w) || seen.count(pack_cell(w)))
                        continue;
                    seen.insert(pack_cell(w));
                    queue.push_back(w);
                }
            }
            ++out.num_clusters;
            out.largest = std::max(out.largest, size);
            if (touches_inside && touches_ring) out.spanning = true;
        }
    }
    return out;
}

} // namespace delpotts
