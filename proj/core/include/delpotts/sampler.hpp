#ifndef DELPOTTS_SAMPLER_HPP
#define DELPOTTS_SAMPLER_HPP

#include "delpotts/grid.hpp"
#include "delpotts/potentials.hpp"
#include "delpotts/pseudo_periodic.hpp"
#include "delpotts/rng.hpp"
#include "delpotts/triangulation.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace delpotts {

struct Schedule {
    int bd_moves_per_sweep = 20;  // birth/death/move proposals per sweep
    double p_birth = 0.35;
    double p_death = 0.35;
    double p_move = 0.30;
    bool heatbath_pass = true;  // resample every free mark each sweep
    int cluster_every = 0;      // cluster sweep every k-th sweep; 0 = never
};

struct ObservableRecord {
    std::uint64_t sweep = 0;
    std::size_t n_free = 0;
    std::vector<std::size_t> n_by_mark;  // size q
    double energy = 0.0;
    double dominance = 0.0;  // q N_1 - N over the free points
    std::uint64_t accepted = 0;
};

// One grand-canonical chain targeting the finite-volume Gibbs distribution
// in the window Lambda with a frozen boundary. The chain never leaves the
// admissible set: proposals whose final state violates the hardcore are
// rejected outright.
class ChainState {
public:
    // Boundary points are frozen with mark 1. Initial free points get
    // uniform random marks. Throws if the boundary alone, or the initial
    // state, is inadmissible.
    ChainState(const ModelParams& params, const CellGrid& grid, Region lambda,
               const std::vector<Point>& boundary,
               const std::vector<Point>& initial_free, std::uint64_t seed,
               std::uint64_t chain_id = 0);

    bool step_birth();
    bool step_death();
    bool step_move();
    void step_mark_heatbath(VertexId v);  // throws on frozen vertex
    void cluster_sweep();

    ObservableRecord sweep(const Schedule& schedule);

    const Triangulation& triangulation() const { return tri_; }
    const MarkedConfiguration& configuration() const { return cfg_; }
    MarkedConfiguration& configuration() { return cfg_; }
    const Region& lambda() const { return lambda_; }
    const ModelParams& params() const { return params_; }
    const std::vector<VertexId>& free_ids() const { return free_; }
    double energy() const { return energy_; }
    std::uint64_t sweep_count() const { return sweep_count_; }
    RngStream& rng() { return rng_; }

    // Full recomputation of the Hamiltonian; used by the periodic energy
    // bookkeeping check.
    EnergyValue recompute_energy() const;
    // Relative drift between the incremental and recomputed energy.
    double energy_drift() const;
    // All triangles of Del_{3,Lambda} satisfy the hardcore.
    bool check_hardcore() const;
    // Shortest edge among Del_{3,Lambda} triangles (the minimum-spacing
    // invariant requires > 2 r sin alpha0 when the hardcore is on).
    double min_region_edge() const;

    // id, x, y, mark, frozen per line.
    void dump_checkpoint(std::ostream& os) const;

private:
    Point random_point_in_lambda();
    void heatbath_all();

    ModelParams params_;
    CellGrid grid_;
    Region lambda_;
    std::vector<CellIndex> lambda_cells_;
    Triangulation tri_;
    MarkedConfiguration cfg_;
    std::vector<VertexId> free_;
    std::vector<std::uint32_t> free_pos_;  // id -> index in free_
    RngStream rng_;
    double energy_ = 0.0;
    std::uint64_t sweep_count_ = 0;
    std::uint64_t accepted_ = 0;
    std::uint64_t accepted_since_check_ = 0;

    void add_free(VertexId v);
    void drop_free(VertexId v);
};

// Builds the frozen pseudo-periodic boundary for the window Lambda_n: one
// point per cell on all cells within `margin_cells` rings of the window but
// outside it. The margin is chosen by the caller to exceed 4R so the
// region's Delaunay neighborhood is independent of the far field.
std::vector<Point> pseudo_periodic_boundary(const CellGrid& grid, double rho,
                                            int window_n, int margin_cells,
                                            std::uint64_t seed);

// One pseudo-periodic point per window cell (the default initial state).
std::vector<Point> pseudo_periodic_initial(const CellGrid& grid, double rho,
                                           int window_n, std::uint64_t seed);

// Margin (in cell rings) that covers a plane distance of at least 4R.
int boundary_margin_cells(const CellGrid& grid, double R);

} // namespace delpotts

#endif
