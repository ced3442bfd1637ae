#include "delpotts/geometry.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace delpotts {

namespace {

// Static filter constants after Shewchuk. epsilon = 2^-53.
constexpr double kEps = 1.1102230246251565e-16;
constexpr double kCcwErrBound = (3.0 + 16.0 * kEps) * kEps;
constexpr double kIccErrBound = (10.0 + 96.0 * kEps) * kEps;

int sign_of(const mpq_class& v) { return sgn(v); }

int orient_exact(const Point& a, const Point& b, const Point& c) {
    const mpq_class ax(a.x), ay(a.y), bx(b.x), by(b.y), cx(c.x), cy(c.y);
    const mpq_class det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax);
    return sign_of(det);
}

int incircle_exact(const Point& a, const Point& b, const Point& c, const Point& p) {
    const mpq_class adx = mpq_class(a.x) - mpq_class(p.x);
    const mpq_class ady = mpq_class(a.y) - mpq_class(p.y);
    const mpq_class bdx = mpq_class(b.x) - mpq_class(p.x);
    const mpq_class bdy = mpq_class(b.y) - mpq_class(p.y);
    const mpq_class cdx = mpq_class(c.x) - mpq_class(p.x);
    const mpq_class cdy = mpq_class(c.y) - mpq_class(p.y);
    const mpq_class alift = adx * adx + ady * ady;
    const mpq_class blift = bdx * bdx + bdy * bdy;
    const mpq_class clift = cdx * cdx + cdy * cdy;
    const mpq_class det = alift * (bdx * cdy - cdx * bdy)
                        + blift * (cdx * ady - adx * cdy)
                        + clift * (adx * bdy - bdx * ady);
    return sign_of(det);
}

} // namespace

int orientation(const Point& a, const Point& b, const Point& c) {
    const double detl = (b.x - a.x) * (c.y - a.y);
    const double detr = (b.y - a.y) * (c.x - a.x);
    const double det = detl - detr;
    double detsum;
    if (detl > 0.0) {
        if (detr <= 0.0) return det > 0.0 ? 1 : (det < 0.0 ? -1 : 0);
        detsum = detl + detr;
    } else if (detl < 0.0) {
        if (detr >= 0.0) return det > 0.0 ? 1 : (det < 0.0 ? -1 : 0);
        detsum = -detl - detr;
    } else {
        return det > 0.0 ? 1 : (det < 0.0 ? -1 : 0);
    }
    if (std::abs(det) > kCcwErrBound * detsum) return det > 0.0 ? 1 : -1;
    return orient_exact(a, b, c);
}

int incircle_sign(const Point& a, const Point& b, const Point& c, const Point& p) {
    const double adx = a.x - p.x, ady = a.y - p.y;
    const double bdx = b.x - p.x, bdy = b.y - p.y;
    const double cdx = c.x - p.x, cdy = c.y - p.y;

    const double bdxcdy = bdx * cdy, cdxbdy = cdx * bdy;
    const double cdxady = cdx * ady, adxcdy = adx * cdy;
    const double adxbdy = adx * bdy, bdxady = bdx * ady;
    const double alift = adx * adx + ady * ady;
    const double blift = bdx * bdx + bdy * bdy;
    const double clift = cdx * cdx + cdy * cdy;

    const double det = alift * (bdxcdy - cdxbdy)
                     + blift * (cdxady - adxcdy)
                     + clift * (adxbdy - bdxady);
    const double permanent = (std::abs(bdxcdy) + std::abs(cdxbdy)) * alift
                           + (std::abs(cdxady) + std::abs(adxcdy)) * blift
                           + (std::abs(adxbdy) + std::abs(bdxady)) * clift;
    if (std::abs(det) > kIccErrBound * permanent) return det > 0.0 ? 1 : -1;
    return incircle_exact(a, b, c, p);
}

int in_circumball(const Point& a, const Point& b, const Point& c, const Point& p) {
    const int orient = orientation(a, b, c);
    if (orient == 0) throw std::invalid_argument("in_circumball: collinear triangle");
    if (orient < 0) throw std::invalid_argument("in_circumball: triangle must be CCW");
    return incircle_sign(a, b, c, p);
}

int incircle_perturbed(const Point& a, std::uint32_t ida,
                       const Point& b, std::uint32_t idb,
                       const Point& c, std::uint32_t idc,
                       const Point& p, std::uint32_t idp) {
    const int base = incircle_sign(a, b, c, p);
    if (base != 0) return base;

    // Exactly cocircular. Expanding the lifted determinant in the weights
    // w_i = eps^(id_i+1), the coefficient of w for each point is an exact
    // orientation; the point with the smallest id dominates as eps -> 0.
    //   coeff(a) = -orient(p,b,c)   coeff(b) = +orient(p,a,c)
    //   coeff(c) = -orient(p,a,b)   coeff(p) = +orient(a,b,c)
    struct Term { std::uint32_t id; int coeff; };
    const Term terms[4] = {
        {ida, -orientation(p, b, c)},
        {idb, orientation(p, a, c)},
        {idc, -orientation(p, a, b)},
        {idp, orientation(a, b, c)},
    };
    Term sorted[4] = {terms[0], terms[1], terms[2], terms[3]};
    std::sort(std::begin(sorted), std::end(sorted),
              [](const Term& l, const Term& r) { return l.id < r.id; });
    for (const Term& t : sorted) {
        if (t.coeff != 0) return t.coeff > 0 ? 1 : -1;
    }
    // Unreachable: coeff(p) = orient(a,b,c) > 0 for a valid CCW triangle.
    throw std::logic_error("incircle_perturbed: degenerate base triangle");
}

TriangleMetrics triangle_metrics(const Point& a, const Point& b, const Point& c) {
    if (orientation(a, b, c) == 0)
        throw std::invalid_argument("triangle_metrics: collinear points");

    TriangleMetrics m;
    const double la = std::sqrt(dist2(b, c));
    const double lb = std::sqrt(dist2(a, c));
    const double lc = std::sqrt(dist2(a, b));
    m.edge_lengths = {la, lb, lc};

    const double abx = b.x - a.x, aby = b.y - a.y;
    const double acx = c.x - a.x, acy = c.y - a.y;
    const double cross = abx * acy - aby * acx;
    m.area = 0.5 * std::abs(cross);
    m.circumradius = (la * lb * lc) / (4.0 * m.area);

    const double d = 2.0 * cross;
    const double nab = abx * abx + aby * aby;
    const double nac = acx * acx + acy * acy;
    m.circumcenter = {a.x + (acy * nab - aby * nac) / d,
                      a.y + (abx * nac - acx * nab) / d};

    // Angle at each vertex via atan2(|cross|, dot); smallest is opposite
    // the shortest edge but computing all three is cheap and robust.
    auto angle = [](const Point& at, const Point& u, const Point& v) {
        const double ux = u.x - at.x, uy = u.y - at.y;
        const double vx = v.x - at.x, vy = v.y - at.y;
        return std::atan2(std::abs(ux * vy - uy * vx), ux * vx + uy * vy);
    };
    m.min_angle = std::min({angle(a, b, c), angle(b, c, a), angle(c, a, b)});
    return m;
}

} // namespace delpotts
