#ifndef DELPOTTS_COARSE_GRAIN_HPP
#define DELPOTTS_COARSE_GRAIN_HPP

#include "delpotts/grid.hpp"
#include "delpotts/potentials.hpp"
#include "delpotts/triangulation.hpp"

#include <cstdint>
#include <iosfwd>
#include <unordered_map>
#include <vector>

namespace delpotts {

// Bucketed view of a marked configuration: per cell, the contained vertex
// ids and sub-cell occupation.
class CellOccupancy {
public:
    CellOccupancy(const Triangulation& tri, const MarkedConfiguration& cfg,
                  const CellGrid& grid);

    // F: at least one particle in each of the 64 sub-cells.
    bool f_event(CellIndex c) const;
    // O: every point of the cell has mark 1 (vacuously true when empty).
    bool o_event(CellIndex c) const;

    const std::vector<VertexId>* cell_points(CellIndex c) const;
    const CellGrid& grid() const { return grid_; }

private:
    struct CellData {
        std::vector<VertexId> points;
        std::uint64_t subcell_mask = 0;  // bit 8*i+j
        bool all_mark_one = true;
    };
    CellGrid grid_;
    std::unordered_map<std::uint64_t, CellData> cells_;
};

// The {0,1}-valued coarse field X_n: inside the window |k|,|m| <= n a cell
// is open iff F and O both hold, outside iff O holds. Bits are stored for
// the window plus a margin ring.
struct CoarseField {
    int n = 0;
    int margin = 1;
    std::unordered_map<std::uint64_t, char> bits;

    bool stored(CellIndex c) const {
        return std::abs(c.k) <= n + margin && std::abs(c.l) <= n + margin;
    }
    bool bit(CellIndex c) const {
        auto it = bits.find(pack_cell(c));
        return it != bits.end() && it->second != 0;
    }
};

CoarseField build_field(const CellOccupancy& occ, int n, int margin = 1);

// Text grid of 0/1 rows (l descending, k ascending) for golden tests.
void dump_field(std::ostream& os, const CoarseField& field);

// Number of points of the cell `delta` joined to the complement of
// `lambda` by a path of mark-1 points in which consecutive points share a
// Delaunay triangle.
std::size_t delta_connected(const Triangulation& tri, const MarkedConfiguration& cfg,
                            const CellGrid& grid, CellIndex delta,
                            const Region& lambda);

// For every 4-adjacent pair of open stored cells, checks that the Voronoi
// owners of the two cell centers are joined by a mark-1 path; returns the
// violating pairs (expected empty).
std::vector<std::pair<CellIndex, CellIndex>> path_consistency_check(
    const Triangulation& tri, const MarkedConfiguration& cfg,
    const CellGrid& grid, const CoarseField& field);

// Connected components of open cells under 4-adjacency.
struct CellPercolation {
    std::size_t num_clusters = 0;
    std::size_t largest = 0;
    bool spanning = false;  // some open cluster joins the window interior
                            // to the stored ring beyond it
};
CellPercolation cell_percolation(const CoarseField& field);

} // namespace delpotts

#endif
