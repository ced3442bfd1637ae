#ifndef DELPOTTS_GEOMETRY_HPP
#define DELPOTTS_GEOMETRY_HPP

#include <array>
#include <cstdint>

namespace delpotts {

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point& a, const Point& b) {
        return a.x == b.x && a.y == b.y;
    }
};

inline double dist2(const Point& a, const Point& b) {
    const double dx = a.x - b.x, dy = a.y - b.y;
    return dx * dx + dy * dy;
}

// Cached per-triangle quantities. Computed once at triangle creation.
struct TriangleMetrics {
    Point circumcenter;
    double circumradius = 0.0;             // delta(tau)
    double area = 0.0;                     // A(tau)
    double min_angle = 0.0;                // alpha(tau), in (0, pi/3]
    std::array<double, 3> edge_lengths{};  // opposite vertex 0, 1, 2
};

// Sign of twice the signed area of (a,b,c): +1 counter-clockwise,
// -1 clockwise, 0 exactly collinear. Filtered double evaluation with an
// exact rational fallback, so the sign is always exact.
int orientation(const Point& a, const Point& b, const Point& c);

// Empty-ball test. Preconditions: a,b,c non-collinear and counter-clockwise.
// Returns +1 if p lies strictly inside the open circumball of {a,b,c},
// 0 if exactly on the circumcircle, -1 outside. Exact sign.
// Throws std::invalid_argument if a,b,c are collinear or clockwise.
int in_circumball(const Point& a, const Point& b, const Point& c, const Point& p);

// Unchecked exact incircle sign; caller guarantees (a,b,c) CCW.
int incircle_sign(const Point& a, const Point& b, const Point& c, const Point& p);

// Incircle with symbolic perturbation keyed to point insertion order.
// Each point i is lifted to the paraboloid and lowered by eps^(id_i + 1),
// eps -> 0+. Exact cocircularity is resolved deterministically and
// consistently, so any four points give a nonzero answer. Returns +1 if p
// is inside the perturbed circumball of CCW (a,b,c), else -1.
int incircle_perturbed(const Point& a, std::uint32_t ida,
                       const Point& b, std::uint32_t idb,
                       const Point& c, std::uint32_t idc,
                       const Point& p, std::uint32_t idp);

// All derived metrics of a non-collinear triangle.
// Throws std::invalid_argument on exactly collinear input.
TriangleMetrics triangle_metrics(const Point& a, const Point& b, const Point& c);

} // namespace delpotts

#endif
