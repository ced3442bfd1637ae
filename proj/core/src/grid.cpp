#include "delpotts/grid.hpp"

#include "delpotts/triangulation.hpp"

#include <algorithm>

namespace delpotts {

std::vector<std::uint32_t> del3_region(const Triangulation& tri, const Region& region) {
    std::vector<std::uint32_t> out;
    tri.for_each_triangle([&](std::uint32_t slot, const std::array<VertexId, 3>&,
                              const TriangleMetrics& m) {
        if (region.intersects_ball(m.circumcenter, m.circumradius)) out.push_back(slot);
    });
    return out;
}

namespace {

double point_segment_dist2(const Point& p, const Point& a, const Point& b) {
    const double abx = b.x - a.x, aby = b.y - a.y;
    const double apx = p.x - a.x, apy = p.y - a.y;
    const double len2 = abx * abx + aby * aby;
    double t = len2 > 0.0 ? (apx * abx + apy * aby) / len2 : 0.0;
    t = std::min(1.0, std::max(0.0, t));
    const double dx = apx - t * abx, dy = apy - t * aby;
    return dx * dx + dy * dy;
}

bool point_in_convex_ccw(const Point& p, const std::vector<Point>& poly) {
    for (std::size_t i = 0; i < poly.size(); ++i) {
        const Point& a = poly[i];
        const Point& b = poly[(i + 1) % poly.size()];
        if ((b.x - a.x) * (p.y - a.y) - (b.y - a.y) * (p.x - a.x) < 0.0) return false;
    }
    return true;
}

} // namespace

bool Region::cell_intersects_ball(CellIndex c, const Point& center,
                                  double radius) const {
    const CellGrid grid(ell_);
    const std::vector<Point> corners = grid.cell_corners(c);
    if (point_in_convex_ccw(center, corners)) return true;
    const double r2 = radius * radius;
    for (std::size_t i = 0; i < 4; ++i) {
        if (point_segment_dist2(center, corners[i], corners[(i + 1) % 4]) <= r2)
            return true;
    }
    return false;
}

bool Region::intersects_ball(const Point& center, double radius) const {
    if (is_rect_) {
        const double cx = std::min(std::max(center.x, xmin_), xmax_);
        const double cy = std::min(std::max(center.y, ymin_), ymax_);
        const double dx = center.x - cx, dy = center.y - cy;
        return dx * dx + dy * dy <= radius * radius;
    }
    if (cells_.empty()) return false;

    // Candidate cells from the lattice image of the ball's bounding box;
    // the ball radius is O(cell size) in all model uses, so this is O(1).
    const CellGrid grid(ell_);
    double u0, v0, u1, v1, u2, v2, u3, v3;
    grid.to_lattice({center.x - radius, center.y - radius}, u0, v0);
    grid.to_lattice({center.x + radius, center.y - radius}, u1, v1);
    grid.to_lattice({center.x - radius, center.y + radius}, u2, v2);
    grid.to_lattice({center.x + radius, center.y + radius}, u3, v3);
    const double ulo = std::min({u0, u1, u2, u3}), uhi = std::max({u0, u1, u2, u3});
    const double vlo = std::min({v0, v1, v2, v3}), vhi = std::max({v0, v1, v2, v3});
    const auto klo = static_cast<std::int64_t>(std::floor(ulo + 0.5));
    const auto khi = static_cast<std::int64_t>(std::floor(uhi + 0.5));
    const auto llo = static_cast<std::int64_t>(std::floor(vlo + 0.5));
    const auto lhi = static_cast<std::int64_t>(std::floor(vhi + 0.5));

    const std::size_t box = static_cast<std::size_t>(khi - klo + 1)
                          * static_cast<std::size_t>(lhi - llo + 1);
    if (box > cells_.size()) {
        for (std::uint64_t u : cells_) {
            if (cell_intersects_ball(unpack_cell(u), center, radius)) return true;
        }
        return false;
    }
    for (std::int64_t k = klo; k <= khi; ++k) {
        for (std::int64_t l = llo; l <= lhi; ++l) {
            const CellIndex c{static_cast<std::int32_t>(k), static_cast<std::int32_t>(l)};
            if (cells_.count(pack_cell(c)) &&
                cell_intersects_ball(c, center, radius))
                return true;
        }
    }
    return false;
}

} // namespace delpotts
