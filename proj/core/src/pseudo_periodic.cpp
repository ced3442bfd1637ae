#include "delpotts/pseudo_periodic.hpp"

#include "delpotts/rng.hpp"
#include "delpotts/thresholds.hpp"
#include "delpotts/triangulation.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace delpotts {

std::vector<GeneratedPoint> generate(const PseudoPeriodicSpec& spec,
                                     const IndexRange& range, std::uint64_t seed,
                                     std::int32_t key_shift_k,
                                     std::int32_t key_shift_l) {
    if (!(spec.rho > 0.0 && spec.rho < 1.0 / 6.0))
        throw std::invalid_argument("generate: rho must lie in (0, 1/6)");
    std::vector<GeneratedPoint> out;
    const double rmax = spec.rho * spec.grid.ell();
    for (std::int32_t k = range.k_lo; k <= range.k_hi; ++k) {
        for (std::int32_t l = range.l_lo; l <= range.l_hi; ++l) {
            RngStream rng = RngStream::from(
                seed, {signed_salt(k - key_shift_k), signed_salt(l - key_shift_l)});
            const double rad = rmax * std::sqrt(rng.next_double());
            const double ang = 2.0 * std::numbers::pi * rng.next_double();
            const Point c = spec.grid.cell_center({k, l});
            out.push_back({{c.x + rad * std::cos(ang), c.y + rad * std::sin(ang)},
                           {k, l}});
        }
    }
    return out;
}

HardcoreReport verify_hardcore(const std::vector<GeneratedPoint>& pts,
                               const PseudoPeriodicSpec& spec,
                               const ModelParams& params,
                               const IndexRange& range, int hull_margin) {
    HardcoreReport rep;
    const double ell = spec.grid.ell();
    const double rho = spec.rho;

    const double r0 = thresholds::rho0(params.r, params.R, params.alpha0);
    const thresholds::Interval i0 =
        thresholds::ell_interval(params.r, params.R, params.alpha0, rho);
    rep.hypotheses_ok = rho < r0 && !i0.empty && ell > i0.lo && ell < i0.hi;
    if (!rep.hypotheses_ok) rep.notes.push_back("hypotheses not satisfied");

    std::vector<Point> raw;
    raw.reserve(pts.size());
    for (const GeneratedPoint& g : pts) raw.push_back(g.p);
    const Triangulation tri = Triangulation::build(raw);

    auto interior_vertex = [&](VertexId v) {
        const CellIndex c = pts[v].cell;
        return c.k >= range.k_lo + hull_margin && c.k <= range.k_hi - hull_margin &&
               c.l >= range.l_lo + hull_margin && c.l <= range.l_hi - hull_margin;
    };

    const double lo_delta = ell * thresholds::L_of_rho(rho);
    const double hi_delta = ell * thresholds::U_of_rho(rho);
    const double lo_area =
        ell * ell * std::sqrt(3.0 * (1.0 - 2.0 * rho) * std::pow(1.0 - 6.0 * rho, 3));

    bool first = true;
    tri.for_each_triangle([&](std::uint32_t, const std::array<VertexId, 3>& v,
                              const TriangleMetrics& m) {
        if (!interior_vertex(v[0]) || !interior_vertex(v[1]) || !interior_vertex(v[2]))
            return;
        ++rep.interior_triangles;
        if (first) {
            rep.min_delta = rep.max_delta = m.circumradius;
            rep.min_alpha = m.min_angle;
            rep.min_area = rep.max_area = m.area;
            first = false;
        } else {
            rep.min_delta = std::min(rep.min_delta, m.circumradius);
            rep.max_delta = std::max(rep.max_delta, m.circumradius);
            rep.min_alpha = std::min(rep.min_alpha, m.min_angle);
            rep.min_area = std::min(rep.min_area, m.area);
            rep.max_area = std::max(rep.max_area, m.area);
        }
        auto flag = [&](const char* what) {
            ++rep.violations;
            std::ostringstream os;
            os << what << " at triangle (" << v[0] << "," << v[1] << "," << v[2]
               << "): delta=" << m.circumradius << " alpha=" << m.min_angle
               << " area=" << m.area;
            rep.notes.push_back(os.str());
        };
        if (!(m.circumradius > params.r && m.circumradius < params.R))
            flag("circumradius outside (r,R)");
        if (!(m.min_angle > params.alpha0)) flag("angle at most alpha0");
        if (!(m.circumradius >= lo_delta && m.circumradius <= hi_delta))
            flag("circumradius outside pseudo-periodic envelope");
        if (!(m.area >= lo_area)) flag("area below lower bound");
    });
    return rep;
}

std::string to_text(const HardcoreReport& rep) {
    std::ostringstream os;
    os.precision(12);
    os << "hypotheses_ok = " << (rep.hypotheses_ok ? "true" : "false") << "\n"
       << "interior_triangles = " << rep.interior_triangles << "\n"
       << "violations = " << rep.violations << "\n"
       << "min_delta = " << rep.min_delta << "\n"
       << "max_delta = " << rep.max_delta << "\n"
       << "min_alpha = " << rep.min_alpha << "\n"
       << "min_area = " << rep.min_area << "\n"
       << "max_area = " << rep.max_area << "\n";
    for (const std::string& n : rep.notes) os << "note: " << n << "\n";
    return os.str();
}

} // namespace delpotts
