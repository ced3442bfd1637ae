#ifndef DELPOTTS_RANDOM_CLUSTER_HPP
#define DELPOTTS_RANDOM_CLUSTER_HPP

#include "delpotts/grid.hpp"
#include "delpotts/potentials.hpp"
#include "delpotts/rng.hpp"
#include "delpotts/triangulation.hpp"

#include <cstdint>
#include <iosfwd>
#include <vector>

namespace delpotts {

class UnionFind {
public:
    explicit UnionFind(std::size_t n) : parent_(n), size_(n, 1), count_(n) {
        for (std::size_t i = 0; i < n; ++i) parent_[i] = static_cast<std::uint32_t>(i);
    }
    std::uint32_t find(std::uint32_t x) {
        std::uint32_t root = x;
        while (parent_[root] != root) root = parent_[root];
        while (parent_[x] != root) {
            const std::uint32_t next = parent_[x];
            parent_[x] = root;
            x = next;
        }
        return root;
    }
    bool merge(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --count_;
        return true;
    }
    bool connected(std::uint32_t a, std::uint32_t b) { return find(a) == find(b); }
    std::size_t count() const { return count_; }

private:
    std::vector<std::uint32_t> parent_;
    std::vector<std::uint32_t> size_;
    std::size_t count_;
};

// Opening probability of the hyperedge drawing mechanism: 1 - e^{-phi(A)}
// inside Del_{3,Lambda} (= beta/(A+beta) for gamma = 1), and 1 on the wired
// outside.
double edge_prob(const TriangleMetrics& m, bool in_region, const ModelParams& p);

// The set E of open triangles, by triangulation slot.
struct HyperedgeConfig {
    std::vector<std::uint32_t> open;
};

// Independent per-triangle draws; deterministic per (seed, vertex triple).
HyperedgeConfig draw_edges(const Triangulation& tri, const Region& region,
                           const ModelParams& p, std::uint64_t seed);

// Number of connected components of the hypergraph (vertices, open
// triangles); isolated vertices count as singletons. With
// `wire_frozen` set, all frozen vertices are first merged into a single
// boundary component (the wired boundary condition).
std::size_t count_components(const Triangulation& tri,
                             const std::vector<std::uint32_t>& open_slots,
                             const MarkedConfiguration* cfg_for_wiring = nullptr);

// Exact enumeration of the joint representation measure m(.|B) on a fixed
// point set, together with the two claimed marginals computed along
// independent routes: the Potts conditional law (proportional to e^{-H})
// and the q^{N_cc}-weighted edge law. The total-variation distances are the
// coupling exactness metrics.
struct EnumerationResult {
    std::size_t n_free = 0;
    int q = 0;
    std::vector<VertexId> free_ids;           // enumeration digit order
    std::vector<std::uint32_t> region_slots;  // bit order of edge states
    std::vector<double> potts;                // size q^n
    std::vector<double> rc;                   // size 2^T
    std::vector<double> joint_mark_marginal;  // size q^n
    std::vector<double> joint_edge_marginal;  // size 2^T
    double tv_marks = 0.0;
    double tv_edges = 0.0;
};

EnumerationResult exact_joint_enumeration(const Triangulation& tri,
                                          const MarkedConfiguration& cfg,
                                          const Region& region,
                                          const ModelParams& p);

// state index, weight rows for audit.
void dump_table(std::ostream& os, const std::vector<double>& table);

// Edwards-Sokal style marks-only update: open monochromatic region
// triangles with edge_prob (wired ones always), then recolor every
// component uniformly; components touching a frozen vertex keep mark 1.
void cluster_sweep(const Triangulation& tri, MarkedConfiguration& cfg,
                   const Region& region, const ModelParams& p, RngStream& rng);

// Monte Carlo check of the Papangelou intensity bound: the ratio
// h(omega u x0)/h(omega) estimated with shared randomness on the intact
// triangles, against the analytic lower bound q^{1 - 2 pi / alpha0}.
struct PapangelouResult {
    double ratio = 0.0;
    double sigma = 0.0;
    double bound = 0.0;
    bool ok = false;
};
PapangelouResult papangelou_check(Triangulation& tri, const MarkedConfiguration& cfg,
                                  const Region& region, const Point& x0,
                                  const ModelParams& p, int samples,
                                  std::uint64_t seed);

} // namespace delpotts

#endif
