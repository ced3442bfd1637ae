#ifndef DELPOTTS_POTENTIALS_HPP
#define DELPOTTS_POTENTIALS_HPP

#include "delpotts/grid.hpp"
#include "delpotts/triangulation.hpp"

#include <cstdint>
#include <vector>

namespace delpotts {

// Model parameters. z is the per-mark activity, so the total spatial
// activity of the reference process is z*q.
struct ModelParams {
    double z = 1.0;
    int q = 2;
    double beta = 1.0;
    double gamma = 1.0;
    double r = 0.04;
    double R = 1.0;
    double alpha0 = 0.03;
    bool psi_enabled = true;  // disable for the free (Poisson) reduction

    void validate() const;  // throws std::invalid_argument
};

// Marks and frozen flags keyed by vertex id. Frozen points are the boundary
// condition; samplers never touch them.
class MarkedConfiguration {
public:
    void set(VertexId id, int mark, bool frozen) {
        if (id >= marks_.size()) {
            marks_.resize(id + 1, 0);
            frozen_.resize(id + 1, 0);
        }
        marks_[id] = static_cast<std::uint8_t>(mark);
        frozen_[id] = frozen ? 1 : 0;
    }
    void set_mark(VertexId id, int mark) { marks_[id] = static_cast<std::uint8_t>(mark); }
    void erase(VertexId id) { if (id < marks_.size()) marks_[id] = 0; }

    bool has(VertexId id) const { return id < marks_.size() && marks_[id] != 0; }
    int mark(VertexId id) const { return marks_[id]; }
    bool is_frozen(VertexId id) const { return frozen_[id] != 0; }

private:
    std::vector<std::uint8_t> marks_;
    std::vector<std::uint8_t> frozen_;
};

// Background potential Psi: admissible iff the circumradius lies strictly in
// (r, R) and the smallest angle strictly exceeds alpha0.
bool psi_admissible(const TriangleMetrics& m, const ModelParams& p);

// Ferromagnetic type potential: log((A+beta)/A) for gamma = 1, and
// log(1 + beta A^-gamma) in general. Strictly decreasing in A.
double phi(double area, const ModelParams& p);

// A Hamiltonian value with the infinity represented as an explicit flag so
// that inadmissible-state is distinct from overflow.
struct EnergyValue {
    bool admissible = true;
    double value = 0.0;
};

// Hamiltonian over Del_{3,Lambda}: sum of phi(A)(1 - delta_sigma) over
// triangles whose closed circumball meets the region; inadmissible flag if
// any such triangle violates Psi. Throws if the configuration lacks a mark
// for some vertex of the triangulation.
EnergyValue hamiltonian(const Triangulation& tri, const MarkedConfiguration& cfg,
                        const Region& region, const ModelParams& p);

// Energy difference induced by a cavity diff, decomposed so that both
// "infinity -> finite" (repair) and "finite -> infinity" transitions are
// expressible: counts of Psi-inadmissible region triangles on each side
// plus the finite phi difference over the admissible remainder.
struct DeltaEnergy {
    double dphi = 0.0;
    int destroyed_inadmissible = 0;
    int created_inadmissible = 0;
};

// Insertion: created triangles contain the new vertex, whose mark is
// `new_mark`. Throws on a stale diff (triangulation mutated since).
DeltaEnergy delta_hamiltonian_insert(const Triangulation& tri,
                                     const MarkedConfiguration& cfg,
                                     const CavityDiff& diff, int new_mark,
                                     const Region& region, const ModelParams& p);

// Removal: destroyed triangles contain the removed vertex, whose mark must
// still be present in cfg.
DeltaEnergy delta_hamiltonian_remove(const Triangulation& tri,
                                     const MarkedConfiguration& cfg,
                                     const CavityDiff& diff,
                                     const Region& region, const ModelParams& p);

} // namespace delpotts

#endif
