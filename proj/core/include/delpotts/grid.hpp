#ifndef DELPOTTS_GRID_HPP
#define DELPOTTS_GRID_HPP

#include "delpotts/geometry.hpp"

#include <cmath>
#include <cstdint>
#include <unordered_set>
#include <vector>

namespace delpotts {

struct CellIndex {
    std::int32_t k = 0;
    std::int32_t l = 0;
    friend bool operator==(const CellIndex& a, const CellIndex& b) {
        return a.k == b.k && a.l == b.l;
    }
    friend bool operator<(const CellIndex& a, const CellIndex& b) {
        return a.k != b.k ? a.k < b.k : a.l < b.l;
    }
};

struct SubCellIndex {
    CellIndex cell;
    int i = 0;  // 0..7
    int j = 0;  // 0..7
};

inline std::uint64_t pack_cell(CellIndex c) {
    return (std::uint64_t(std::uint32_t(c.k)) << 32) | std::uint64_t(std::uint32_t(c.l));
}
inline CellIndex unpack_cell(std::uint64_t u) {
    return {std::int32_t(std::uint32_t(u >> 32)), std::int32_t(std::uint32_t(u))};
}

// Rhombic lattice of side ell: basis matrix M with columns (ell, 0) and
// (ell/2, sqrt(3) ell/2); cell (k,l) is M([-1/2,1/2)^2 + (k,l)), so the
// cells partition the plane and each has area sqrt(3)/2 ell^2.
class CellGrid {
public:
    explicit CellGrid(double ell) : ell_(ell) {}

    double ell() const { return ell_; }
    double cell_area() const { return std::sqrt(3.0) / 2.0 * ell_ * ell_; }

    Point to_plane(double u, double v) const {
        return {ell_ * (u + 0.5 * v), ell_ * (std::sqrt(3.0) / 2.0) * v};
    }
    // M^{-1} p
    void to_lattice(const Point& p, double& u, double& v) const {
        v = p.y / (ell_ * std::sqrt(3.0) / 2.0);
        u = p.x / ell_ - 0.5 * v;
    }

    CellIndex cell_of(const Point& p) const {
        double u, v;
        to_lattice(p, u, v);
        return {static_cast<std::int32_t>(std::floor(u + 0.5)),
                static_cast<std::int32_t>(std::floor(v + 0.5))};
    }

    // Sub-cell decomposition: each cell splits into 64 rhombi of side
    // ell/8; lattice residual in [(i-4)/8, (i-3)/8) x [(j-4)/8, (j-3)/8).
    SubCellIndex subcell_of(const Point& p) const {
        const CellIndex c = cell_of(p);
        double u, v;
        to_lattice(p, u, v);
        double ru = u - c.k, rv = v - c.l;  // in [-1/2, 1/2)
        int i = static_cast<int>(std::floor(8.0 * ru)) + 4;
        int j = static_cast<int>(std::floor(8.0 * rv)) + 4;
        i = std::min(std::max(i, 0), 7);
        j = std::min(std::max(j, 0), 7);
        return {c, i, j};
    }

    Point cell_center(CellIndex c) const {
        return to_plane(static_cast<double>(c.k), static_cast<double>(c.l));
    }

    std::vector<Point> cell_corners(CellIndex c) const {
        return {to_plane(c.k - 0.5, c.l - 0.5), to_plane(c.k + 0.5, c.l - 0.5),
                to_plane(c.k + 0.5, c.l + 0.5), to_plane(c.k - 0.5, c.l + 0.5)};
    }

private:
    double ell_;
};

// A finite union of grid cells, or an axis-aligned rectangle. Region
// membership and closed-ball intersection tests are the primitives the
// Hamiltonian needs for Del_{3,Lambda}.
class Region {
public:
    Region() = default;

    static Region rectangle(double xmin, double xmax, double ymin, double ymax) {
        Region r;
        r.is_rect_ = true;
        r.xmin_ = xmin; r.xmax_ = xmax; r.ymin_ = ymin; r.ymax_ = ymax;
        return r;
    }

    static Region cells(const CellGrid& grid, const std::vector<CellIndex>& idx) {
        Region r;
        r.is_rect_ = false;
        r.ell_ = grid.ell();
        for (const CellIndex& c : idx) r.cells_.insert(pack_cell(c));
        return r;
    }

    // The window Lambda_n: all cells with |k|,|l| <= n.
    static Region window(const CellGrid& grid, int n) {
        std::vector<CellIndex> idx;
        for (int k = -n; k <= n; ++k)
            for (int l = -n; l <= n; ++l) idx.push_back({k, l});
        return cells(grid, idx);
    }

    bool empty() const { return !is_rect_ && cells_.empty(); }
    bool is_rectangle() const { return is_rect_; }
    std::size_t num_cells() const { return cells_.size(); }

    std::vector<CellIndex> cell_list() const {
        std::vector<CellIndex> out;
        out.reserve(cells_.size());
        for (std::uint64_t u : cells_) out.push_back(unpack_cell(u));
        return out;
    }

    bool has_cell(CellIndex c) const { return cells_.count(pack_cell(c)) != 0; }

    double area() const {
        if (is_rect_) return (xmax_ - xmin_) * (ymax_ - ymin_);
        return static_cast<double>(cells_.size()) * std::sqrt(3.0) / 2.0 * ell_ * ell_;
    }

    bool contains(const Point& p) const {
        if (is_rect_)
            return p.x >= xmin_ && p.x < xmax_ && p.y >= ymin_ && p.y < ymax_;
        return cells_.count(pack_cell(CellGrid(ell_).cell_of(p))) != 0;
    }

    // Whether the closed disk B(center, radius) intersects the region.
    bool intersects_ball(const Point& center, double radius) const;

private:
    bool cell_intersects_ball(CellIndex c, const Point& center, double radius) const;

    bool is_rect_ = false;
    double xmin_ = 0, xmax_ = 0, ymin_ = 0, ymax_ = 0;
    double ell_ = 1.0;
    std::unordered_set<std::uint64_t> cells_;
};

} // namespace delpotts

#endif
