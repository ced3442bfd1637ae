#include "delpotts/sampler.hpp"

#include "delpotts/random_cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace delpotts {

void ChainState::cluster_sweep() {
    delpotts::cluster_sweep(tri_, cfg_, lambda_, params_, rng_);
    energy_ = recompute_energy().value;
}

int boundary_margin_cells(const CellGrid& grid, double R) {
    // One index ring advances the plane distance by at least
    // (sqrt(3)/2) ell; two extra rings absorb the cell diameter.
    const double step = 0.866025 * grid.ell();
    return static_cast<int>(std::ceil(4.0 * R / step)) + 2;
}

std::vector<Point> pseudo_periodic_boundary(const CellGrid& grid, double rho,
                                            int window_n, int margin_cells,
                                            std::uint64_t seed) {
    PseudoPeriodicSpec spec{grid, rho};
    const IndexRange range{-window_n - margin_cells, window_n + margin_cells,
                           -window_n - margin_cells, window_n + margin_cells};
    std::vector<Point> out;
    for (const GeneratedPoint& g : generate(spec, range, seed)) {
        if (std::abs(g.cell.k) > window_n || std::abs(g.cell.l) > window_n)
            out.push_back(g.p);
    }
    return out;
}

std::vector<Point> pseudo_periodic_initial(const CellGrid& grid, double rho,
                                           int window_n, std::uint64_t seed) {
    PseudoPeriodicSpec spec{grid, rho};
    const IndexRange range{-window_n, window_n, -window_n, window_n};
    std::vector<Point> out;
    for (const GeneratedPoint& g : generate(spec, range, seed)) out.push_back(g.p);
    return out;
}

ChainState::ChainState(const ModelParams& params, const CellGrid& grid,
                       Region lambda, const std::vector<Point>& boundary,
                       const std::vector<Point>& initial_free, std::uint64_t seed,
                       std::uint64_t chain_id)
    : params_(params), grid_(grid), lambda_(std::move(lambda)),
      rng_(RngStream::from(seed, {0x636861696eULL, chain_id})) {
    params_.validate();
    lambda_cells_ = lambda_.cell_list();

    if (boundary.size() < 3)
        throw std::invalid_argument("init: boundary must triangulate");
    tri_ = Triangulation::build(boundary);
    for (VertexId v : tri_.vertex_ids()) cfg_.set(v, 1, true);
    if (!hamiltonian(tri_, cfg_, lambda_, params_).admissible)
        throw std::invalid_argument("init: boundary condition inadmissible");
    tri_.set_locate_cell(grid_.ell());

    for (const Point& p : initial_free) {
        const VertexId v = tri_.insert(p);
        const int mark = 1 + static_cast<int>(rng_.next_below(params_.q));
        cfg_.set(v, mark, false);
        add_free(v);
    }
    const EnergyValue e = recompute_energy();
    if (!e.admissible)
        throw std::invalid_argument("init: initial state inadmissible");
    energy_ = e.value;
}

void ChainState::add_free(VertexId v) {
    if (free_pos_.size() <= v) free_pos_.resize(v + 1, 0xFFFFFFFFu);
    free_pos_[v] = static_cast<std::uint32_t>(free_.size());
    free_.push_back(v);
}

void ChainState::drop_free(VertexId v) {
    const std::uint32_t pos = free_pos_[v];
    const VertexId last = free_.back();
    free_[pos] = last;
    free_pos_[last] = pos;
    free_.pop_back();
    free_pos_[v] = 0xFFFFFFFFu;
}

Point ChainState::random_point_in_lambda() {
    const CellIndex c = lambda_cells_[rng_.next_below(lambda_cells_.size())];
    const double u = rng_.next_double() - 0.5;
    const double v = rng_.next_double() - 0.5;
    return grid_.to_plane(c.k + u, c.l + v);
}

bool ChainState::step_birth() {
    if (lambda_cells_.empty()) return false;
    const Point x = random_point_in_lambda();
    const int mark = 1 + static_cast<int>(rng_.next_below(params_.q));
    const std::size_t n = free_.size();

    CavityDiff diff;
    VertexId v;
    try {
        v = tri_.insert(x, &diff);
    } catch (const std::invalid_argument&) {
        return false;  // exact duplicate proposal
    }
    const DeltaEnergy d =
        delta_hamiltonian_insert(tri_, cfg_, diff, mark, lambda_, params_);

    bool accept = d.created_inadmissible == 0;
    if (accept) {
        const double a = params_.z * params_.q * lambda_.area()
                         / static_cast<double>(n + 1) * std::exp(-d.dphi);
        accept = rng_.next_double() < a;
    }
    if (!accept) {
        tri_.remove(v);
        return false;
    }
    cfg_.set(v, mark, false);
    add_free(v);
    energy_ += d.dphi;
    ++accepted_;
    ++accepted_since_check_;
    return true;
}

bool ChainState::step_death() {
    if (free_.empty()) return false;
    const std::size_t n = free_.size();
    const VertexId v = free_[rng_.next_below(n)];
    const Point old = tri_.point(v);
    const int mark = cfg_.mark(v);

    const CavityDiff diff = tri_.remove(v);
    const DeltaEnergy d =
        delta_hamiltonian_remove(tri_, cfg_, diff, lambda_, params_);

    bool accept = d.created_inadmissible == 0;
    if (accept) {
        const double a = static_cast<double>(n)
                         / (params_.z * params_.q * lambda_.area())
                         * std::exp(-d.dphi);
        accept = rng_.next_double() < a;
    }
    if (!accept) {
        tri_.insert_with_id(old, v);
        return false;
    }
    cfg_.erase(v);
    drop_free(v);
    energy_ += d.dphi;
    ++accepted_;
    ++accepted_since_check_;
    return true;
}

bool ChainState::step_move() {
    if (free_.empty() || lambda_cells_.empty()) return false;
    const VertexId v = free_[rng_.next_below(free_.size())];
    const Point old = tri_.point(v);
    const Point fresh = random_point_in_lambda();

    const CavityDiff d1 = tri_.remove(v);
    const DeltaEnergy e1 =
        delta_hamiltonian_remove(tri_, cfg_, d1, lambda_, params_);

    CavityDiff d2;
    try {
        tri_.insert_with_id(fresh, v, &d2);
    } catch (const std::invalid_argument&) {
        tri_.insert_with_id(old, v);
        return false;
    }
    const DeltaEnergy e2 = delta_hamiltonian_insert(tri_, cfg_, d2, cfg_.mark(v),
                                                    lambda_, params_);

    // Inadmissible triangles created by the removal must all be destroyed
    // again by the insertion for the final state to be admissible; their
    // phi terms cancel exactly between the two deltas.
    const int inadmissible_final =
        e1.created_inadmissible - e2.destroyed_inadmissible + e2.created_inadmissible;
    const double dphi = e1.dphi + e2.dphi;

    bool accept = inadmissible_final == 0;
    if (accept) accept = rng_.next_double() < std::exp(-dphi);
    if (!accept) {
        tri_.remove(v);
        tri_.insert_with_id(old, v);
        return false;
    }
    energy_ += dphi;
    ++accepted_;
    ++accepted_since_check_;
    return true;
}

void ChainState::step_mark_heatbath(VertexId v) {
    if (cfg_.is_frozen(v))
        throw std::invalid_argument("heatbath: vertex is frozen");
    const int q = params_.q;

    // Incident region triangles whose other two vertices share a mark are
    // the only ones whose energy depends on the choice; collect (mark, phi)
    // pairs once. score[m] is the energy REMOVED by choosing mark m+1.
    std::vector<std::pair<int, double>> aligned;
    tri_.for_each_incident(v, [&](const std::array<VertexId, 3>& vv,
                                  const TriangleMetrics& m) {
        if (!lambda_.intersects_ball(m.circumcenter, m.circumradius)) return;
        VertexId o1 = 0, o2 = 0;
        int seen = 0;
        for (VertexId w : vv) {
            if (w != v) (seen++ == 0 ? o1 : o2) = w;
        }
        const int m1 = cfg_.mark(o1);
        if (m1 == cfg_.mark(o2)) aligned.emplace_back(m1, phi(m.area, params_));
    });

    int newmark;
    if (aligned.empty() || params_.beta == 0.0) {
        newmark = 1 + static_cast<int>(rng_.next_below(q));
    } else {
        std::vector<double> score(q, 0.0);
        for (const auto& [m1, f] : aligned) score[m1 - 1] += f;
        const double mx = *std::max_element(score.begin(), score.end());
        std::vector<double> w(q);
        double tot = 0.0;
        for (int m = 0; m < q; ++m) tot += (w[m] = std::exp(score[m] - mx));
        double u = rng_.next_double() * tot;
        newmark = q;
        for (int m = 0; m < q; ++m) {
            if (u < w[m]) { newmark = m + 1; break; }
            u -= w[m];
        }
    }
    const int oldmark = cfg_.mark(v);
    if (newmark != oldmark) {
        double delta = 0.0;
        for (const auto& [c, f] : aligned) {
            if (oldmark == c) delta += f;  // was monochromatic, now not
            if (newmark == c) delta -= f;  // becomes monochromatic
        }
        energy_ += delta;
        cfg_.set_mark(v, newmark);
    }
}

void ChainState::heatbath_all() {
    // Snapshot: mid-pass insertions never happen, order is by free index.
    for (std::size_t i = 0; i < free_.size(); ++i) step_mark_heatbath(free_[i]);
}

ObservableRecord ChainState::sweep(const Schedule& schedule) {
    for (int i = 0; i < schedule.bd_moves_per_sweep; ++i) {
        const double u = rng_.next_double();
        if (u < schedule.p_birth) step_birth();
        else if (u < schedule.p_birth + schedule.p_death) step_death();
        else if (u < schedule.p_birth + schedule.p_death + schedule.p_move) step_move();
    }
    if (schedule.heatbath_pass) heatbath_all();
    if (schedule.cluster_every > 0 &&
        (sweep_count_ + 1) % static_cast<std::uint64_t>(schedule.cluster_every) == 0)
        cluster_sweep();
    ++sweep_count_;

    if (accepted_since_check_ >= 1000) {
        accepted_since_check_ = 0;
        if (energy_drift() > 1e-6)
            throw std::logic_error("sweep: incremental energy drifted");
        energy_ = recompute_energy().value;
    }

    ObservableRecord rec;
    rec.sweep = sweep_count_;
    rec.n_free = free_.size();
    rec.n_by_mark.assign(params_.q, 0);
    for (VertexId v : free_) ++rec.n_by_mark[cfg_.mark(v) - 1];
    rec.energy = energy_;
    rec.dominance = static_cast<double>(params_.q)
                        * static_cast<double>(rec.n_by_mark[0])
                    - static_cast<double>(rec.n_free);
    rec.accepted = accepted_;
    return rec;
}

EnergyValue ChainState::recompute_energy() const {
    return hamiltonian(tri_, cfg_, lambda_, params_);
}

double ChainState::energy_drift() const {
    const EnergyValue e = recompute_energy();
    if (!e.admissible) return std::numeric_limits<double>::infinity();
    const double scale = std::max({1.0, std::abs(e.value), std::abs(energy_)});
    return std::abs(e.value - energy_) / scale;
}

bool ChainState::check_hardcore() const {
    return recompute_energy().admissible;
}

double ChainState::min_region_edge() const {
    double best = std::numeric_limits<double>::infinity();
    tri_.for_each_triangle([&](std::uint32_t, const std::array<VertexId, 3>&,
                               const TriangleMetrics& m) {
        if (!lambda_.intersects_ball(m.circumcenter, m.circumradius)) return;
        for (double e : m.edge_lengths) best = std::min(best, e);
    });
    return best;
}

void ChainState::dump_checkpoint(std::ostream& os) const {
    os.precision(17);
    for (VertexId v : tri_.vertex_ids()) {
        os << v << ", " << tri_.point(v).x << ", " << tri_.point(v).y << ", "
           << cfg_.mark(v) << ", " << (cfg_.is_frozen(v) ? 1 : 0) << "\n";
    }
}

} // namespace delpotts
