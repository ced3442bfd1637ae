#ifndef DELPOTTS_PSEUDO_PERIODIC_HPP
#define DELPOTTS_PSEUDO_PERIODIC_HPP

#include "delpotts/grid.hpp"
#include "delpotts/potentials.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace delpotts {

// One point per rhombic cell, uniform in the ball of radius rho*ell around
// the cell center.
struct PseudoPeriodicSpec {
    CellGrid grid;
    double rho = 0.05;  // in (0, 1/6)
};

struct GeneratedPoint {
    Point p;
    CellIndex cell;
};

struct IndexRange {
    std::int32_t k_lo = 0, k_hi = 0;  // inclusive
    std::int32_t l_lo = 0, l_hi = 0;
};

// Per-cell displacement draws are keyed by (seed, k - key_shift_k,
// l - key_shift_l), so patches of different extents agree on shared cells,
// and a key shift realizes the lattice shift covariance as an exact
// coupling.
std::vector<GeneratedPoint> generate(const PseudoPeriodicSpec& spec,
                                     const IndexRange& range, std::uint64_t seed,
                                     std::int32_t key_shift_k = 0,
                                     std::int32_t key_shift_l = 0);

struct HardcoreReport {
    bool hypotheses_ok = false;
    std::size_t interior_triangles = 0;
    std::size_t violations = 0;
    double min_delta = 0.0, max_delta = 0.0;
    double min_alpha = 0.0;
    double min_area = 0.0, max_area = 0.0;
    std::vector<std::string> notes;
};

// Checks every triangle whose vertices all lie at least `hull_margin` cells
// inside the generated patch: delta in (r, R), alpha > alpha0, the
// pseudo-periodic envelope ell L(rho) <= delta <= ell U(rho), and the area
// lower bound ell^2 sqrt(3 (1-2 rho)(1-6 rho)^3).
HardcoreReport verify_hardcore(const std::vector<GeneratedPoint>& pts,
                               const PseudoPeriodicSpec& spec,
                               const ModelParams& params,
                               const IndexRange& range, int hull_margin = 2);

std::string to_text(const HardcoreReport& rep);

} // namespace delpotts

#endif
