#include "delpotts/potentials.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace delpotts {

void ModelParams::validate() const {
    if (!(z > 0.0)) throw std::invalid_argument("params: z must be positive");
    if (q < 1) throw std::invalid_argument("params: q must be at least 1");
    if (!(beta >= 0.0)) throw std::invalid_argument("params: beta must be nonnegative");
    if (!(gamma > 0.0)) throw std::invalid_argument("params: gamma must be positive");
    if (!(r > 0.0 && r < R)) throw std::invalid_argument("params: need 0 < r < R");
    if (!(alpha0 > 0.0 && alpha0 < std::numbers::pi / 3.0))
        throw std::invalid_argument("params: alpha0 must lie in (0, pi/3)");
}

bool psi_admissible(const TriangleMetrics& m, const ModelParams& p) {
    if (!p.psi_enabled) return true;
    return m.circumradius > p.r && m.circumradius < p.R && m.min_angle > p.alpha0;
}

double phi(double area, const ModelParams& p) {
    if (!(area > 0.0)) throw std::invalid_argument("phi: area must be positive");
    if (p.beta == 0.0) return 0.0;
    if (p.gamma == 1.0) return std::log1p(p.beta / area);
    return std::log1p(p.beta * std::pow(area, -p.gamma));
}

namespace {

bool monochromatic(const MarkedConfiguration& cfg, const std::array<VertexId, 3>& v,
                   VertexId override_id, int override_mark) {
    int m0 = -1;
    for (VertexId id : v) {
        const int m = (id == override_id) ? override_mark : cfg.mark(id);
        if (m0 < 0) m0 = m;
        else if (m != m0) return false;
    }
    return true;
}

void accumulate(const std::vector<TriangleRecord>& records,
                const MarkedConfiguration& cfg, VertexId override_id,
                int override_mark, const Region& region, const ModelParams& p,
                double sign, double& dphi, int& inadmissible) {
    for (const TriangleRecord& rec : records) {
        if (!region.intersects_ball(rec.metrics.circumcenter, rec.metrics.circumradius))
            continue;
        if (!psi_admissible(rec.metrics, p)) {
            ++inadmissible;
            continue;
        }
        if (!monochromatic(cfg, rec.vertices, override_id, override_mark))
            dphi += sign * phi(rec.metrics.area, p);
    }
}

} // namespace

EnergyValue hamiltonian(const Triangulation& tri, const MarkedConfiguration& cfg,
                        const Region& region, const ModelParams& p) {
    EnergyValue out;
    tri.for_each_triangle([&](std::uint32_t, const std::array<VertexId, 3>& v,
                              const TriangleMetrics& m) {
        for (VertexId id : v) {
            if (!cfg.has(id))
                throw std::invalid_argument("hamiltonian: vertex without a mark");
        }
        if (!region.intersects_ball(m.circumcenter, m.circumradius)) return;
        if (!psi_admissible(m, p)) {
            out.admissible = false;
            return;
        }
        if (!monochromatic(cfg, v, Triangulation::kGhost, 0))
            out.value += phi(m.area, p);
    });
    if (!out.admissible) out.value = 0.0;
    return out;
}

DeltaEnergy delta_hamiltonian_insert(const Triangulation& tri,
                                     const MarkedConfiguration& cfg,
                                     const CavityDiff& diff, int new_mark,
                                     const Region& region, const ModelParams& p) {
    if (diff.stamp != tri.stamp())
        throw std::invalid_argument("delta_hamiltonian: stale diff");
    DeltaEnergy d;
    accumulate(diff.destroyed, cfg, Triangulation::kGhost, 0, region, p, -1.0,
               d.dphi, d.destroyed_inadmissible);
    accumulate(diff.created, cfg, diff.site_id, new_mark, region, p, +1.0,
               d.dphi, d.created_inadmissible);
    return d;
}

DeltaEnergy delta_hamiltonian_remove(const Triangulation& tri,
                                     const MarkedConfiguration& cfg,
                                     const CavityDiff& diff,
                                     const Region& region, const ModelParams& p) {
    if (diff.stamp != tri.stamp())
        throw std::invalid_argument("delta_hamiltonian: stale diff");
    DeltaEnergy d;
    accumulate(diff.destroyed, cfg, Triangulation::kGhost, 0, region, p, -1.0,
               d.dphi, d.destroyed_inadmissible);
    accumulate(diff.created, cfg, Triangulation::kGhost, 0, region, p, +1.0,
               d.dphi, d.created_inadmissible);
    return d;
}

} // namespace delpotts
