#include "delpotts/random_cluster.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

namespace delpotts {

double edge_prob(const TriangleMetrics& m, bool in_region, const ModelParams& p) {
    if (!in_region) return 1.0;
    return -std::expm1(-phi(m.area, p));
}

namespace {

double triangle_draw(std::uint64_t seed, const std::array<VertexId, 3>& v) {
    std::array<VertexId, 3> key = v;
    std::sort(key.begin(), key.end());
    return RngStream::from(seed, {key[0], key[1], key[2]}).next_double();
}

// Dense reindexing of the alive vertex ids.
struct DenseIds {
    explicit DenseIds(const Triangulation& tri) {
        ids = tri.vertex_ids();
        for (std::uint32_t i = 0; i < ids.size(); ++i) index[ids[i]] = i;
    }
    std::vector<VertexId> ids;
    std::unordered_map<VertexId, std::uint32_t> index;
};

} // namespace

HyperedgeConfig draw_edges(const Triangulation& tri, const Region& region,
                           const ModelParams& p, std::uint64_t seed) {
    HyperedgeConfig out;
    tri.for_each_triangle([&](std::uint32_t slot, const std::array<VertexId, 3>& v,
                              const TriangleMetrics& m) {
        const bool in_region = region.intersects_ball(m.circumcenter, m.circumradius);
        const double prob = edge_prob(m, in_region, p);
        if (prob >= 1.0 || triangle_draw(seed, v) < prob) out.open.push_back(slot);
    });
    return out;
}

std::size_t count_components(const Triangulation& tri,
                             const std::vector<std::uint32_t>& open_slots,
                             const MarkedConfiguration* cfg_for_wiring) {
    const DenseIds dense(tri);
    UnionFind uf(dense.ids.size());
    if (cfg_for_wiring) {
        std::uint32_t first_frozen = 0xFFFFFFFFu;
        for (std::uint32_t i = 0; i < dense.ids.size(); ++i) {
            if (cfg_for_wiring->is_frozen(dense.ids[i])) {
                if (first_frozen == 0xFFFFFFFFu) first_frozen = i;
                else uf.merge(first_frozen, i);
            }
        }
    }
    for (const std::uint32_t slot : open_slots) {
        const auto& v = tri.triangle_vertices(slot);
        const std::uint32_t a = dense.index.at(v[0]);
        uf.merge(a, dense.index.at(v[1]));
        uf.merge(a, dense.index.at(v[2]));
    }
    return uf.count();
}

EnumerationResult exact_joint_enumeration(const Triangulation& tri,
                                          const MarkedConfiguration& cfg,
                                          const Region& region,
                                          const ModelParams& p) {
    EnumerationResult res;
    res.q = p.q;

    for (VertexId v : tri.vertex_ids()) {
        if (!cfg.is_frozen(v)) {
            if (!region.contains(tri.point(v)))
                throw std::invalid_argument("enumeration: free point outside region");
            res.free_ids.push_back(v);
        }
    }
    res.n_free = res.free_ids.size();

    std::vector<TriangleMetrics> region_metrics;
    std::vector<std::array<VertexId, 3>> region_verts;
    std::vector<std::array<VertexId, 3>> wired_verts;
    tri.for_each_triangle([&](std::uint32_t slot, const std::array<VertexId, 3>& v,
                              const TriangleMetrics& m) {
        if (region.intersects_ball(m.circumcenter, m.circumradius)) {
            if (!psi_admissible(m, p))
                throw std::invalid_argument("enumeration: instance inadmissible");
            res.region_slots.push_back(slot);
            region_metrics.push_back(m);
            region_verts.push_back(v);
        } else {
            wired_verts.push_back(v);
        }
    });
    const std::size_t T = res.region_slots.size();
    const std::size_t n = res.n_free;
    if (n > 6 || p.q > 3 || T > 24)
        throw std::invalid_argument("enumeration: instance too large");
    double states = std::pow(double(p.q), double(n)) * std::pow(2.0, double(T));
    if (states > double(1 << 26))
        throw std::invalid_argument("enumeration: instance too large");

    const std::size_t QN = [&] {
        std::size_t s = 1;
        for (std::size_t i = 0; i < n; ++i) s *= std::size_t(p.q);
        return s;
    }();
    const std::size_t EN = std::size_t(1) << T;

    std::unordered_map<VertexId, std::uint32_t> free_index;
    for (std::uint32_t i = 0; i < res.free_ids.size(); ++i)
        free_index[res.free_ids[i]] = i;

    auto mark_of = [&](const std::vector<int>& marks, VertexId v) {
        return cfg.is_frozen(v) ? 1 : marks[free_index.at(v)];
    };

    // (a) Potts conditional law on the fixed points: proportional to
    // e^{-H_phi}; Psi is constant (admissible) and cancels.
    res.potts.assign(QN, 0.0);
    std::vector<std::uint64_t> nonmono_mask(QN, 0);  // bit t: triangle t not mono
    {
        std::vector<int> marks(n, 1);
        for (std::size_t mi = 0; mi < QN; ++mi) {
            std::size_t d = mi;
            for (std::size_t i = 0; i < n; ++i) {
                marks[i] = 1 + int(d % p.q);
                d /= p.q;
            }
            double h = 0.0;
            std::uint64_t mask = 0;
            for (std::size_t t = 0; t < T; ++t) {
                const auto& vv = region_verts[t];
                const int m0 = mark_of(marks, vv[0]);
                if (m0 != mark_of(marks, vv[1]) || m0 != mark_of(marks, vv[2])) {
                    h += phi(region_metrics[t].area, p);
                    mask |= std::uint64_t(1) << t;
                }
            }
            res.potts[mi] = std::exp(-h);
            nonmono_mask[mi] = mask;
        }
        double tot = 0.0;
        for (double w : res.potts) tot += w;
        for (double& w : res.potts) w /= tot;
    }

    // Edge probabilities of the drawing mechanism on the region triangles.
    std::vector<double> prob(T);
    for (std::size_t t = 0; t < T; ++t)
        prob[t] = edge_prob(region_metrics[t], true, p);

    // (b) Random-cluster law: q^{N_cc} weighted drawing mechanism, with the
    // frozen boundary wired into one component. The wired triangles merge
    // only frozen vertices, so with the pre-merge they contribute nothing.
    const DenseIds dense(tri);
    std::uint32_t frozen_rep = 0xFFFFFFFFu;
    std::vector<double> qncc(EN);
    res.rc.assign(EN, 0.0);
    for (std::size_t e = 0; e < EN; ++e) {
        UnionFind uf(dense.ids.size());
        for (std::uint32_t i = 0; i < dense.ids.size(); ++i) {
            if (cfg.is_frozen(dense.ids[i])) {
                if (frozen_rep == 0xFFFFFFFFu) frozen_rep = i;
                uf.merge(frozen_rep, i);
            }
        }
        double w = 1.0;
        for (std::size_t t = 0; t < T; ++t) {
            if (e & (std::size_t(1) << t)) {
                w *= prob[t];
                const auto& vv = region_verts[t];
                const std::uint32_t a = dense.index.at(vv[0]);
                uf.merge(a, dense.index.at(vv[1]));
                uf.merge(a, dense.index.at(vv[2]));
            } else {
                w *= 1.0 - prob[t];
            }
        }
        qncc[e] = double(uf.count());
        res.rc[e] = w * std::pow(double(p.q), qncc[e]);
    }
    {
        double tot = 0.0;
        for (double w : res.rc) tot += w;
        for (double& w : res.rc) w /= tot;
    }

    // (c) The joint m(.|B): marks uniform, edges from the drawing
    // mechanism, conditioned on no open bichromatic triangle. Enumerated
    // explicitly; its two marginals must reproduce (a) and (b).
    res.joint_mark_marginal.assign(QN, 0.0);
    res.joint_edge_marginal.assign(EN, 0.0);
    std::vector<double> mu(EN);
    for (std::size_t e = 0; e < EN; ++e) {
        double w = 1.0;
        for (std::size_t t = 0; t < T; ++t)
            w *= (e & (std::size_t(1) << t)) ? prob[t] : 1.0 - prob[t];
        mu[e] = w;
    }
    double joint_total = 0.0;
    for (std::size_t mi = 0; mi < QN; ++mi) {
        for (std::size_t e = 0; e < EN; ++e) {
            if ((e & nonmono_mask[mi]) != 0) continue;  // event B fails
            const double w = mu[e];
            res.joint_mark_marginal[mi] += w;
            res.joint_edge_marginal[e] += w;
            joint_total += w;
        }
    }
    for (double& w : res.joint_mark_marginal) w /= joint_total;
    for (double& w : res.joint_edge_marginal) w /= joint_total;

    for (std::size_t mi = 0; mi < QN; ++mi)
        res.tv_marks += std::abs(res.joint_mark_marginal[mi] - res.potts[mi]);
    for (std::size_t e = 0; e < EN; ++e)
        res.tv_edges += std::abs(res.joint_edge_marginal[e] - res.rc[e]);
    res.tv_marks *= 0.5;
    res.tv_edges *= 0.5;
    return res;
}

void dump_table(std::ostream& os, const std::vector<double>& table) {
    os.precision(17);
    for (std::size_t i = 0; i < table.size(); ++i)
        os << i << ", " << table[i] << "\n";
}

void cluster_sweep(const Triangulation& tri, MarkedConfiguration& cfg,
                   const Region& region, const ModelParams& p, RngStream& rng) {
    const DenseIds dense(tri);
    UnionFind uf(dense.ids.size());
    tri.for_each_triangle([&](std::uint32_t, const std::array<VertexId, 3>& v,
                              const TriangleMetrics& m) {
        const bool in_region = region.intersects_ball(m.circumcenter, m.circumradius);
        bool open;
        if (!in_region) {
            open = true;  // wired
        } else {
            const int m0 = cfg.mark(v[0]);
            const bool mono = m0 == cfg.mark(v[1]) && m0 == cfg.mark(v[2]);
            open = mono && rng.next_double() < edge_prob(m, true, p);
        }
        if (open) {
            const std::uint32_t a = dense.index.at(v[0]);
            uf.merge(a, dense.index.at(v[1]));
            uf.merge(a, dense.index.at(v[2]));
        }
    });

    // Recolor: one fresh uniform mark per component; components touching
    // the frozen boundary keep mark 1.
    std::unordered_map<std::uint32_t, int> color;
    for (std::uint32_t i = 0; i < dense.ids.size(); ++i) {
        if (cfg.is_frozen(dense.ids[i])) color[uf.find(i)] = 1;
    }
    for (std::uint32_t i = 0; i < dense.ids.size(); ++i) {
        if (cfg.is_frozen(dense.ids[i])) continue;
        const std::uint32_t root = uf.find(i);
        auto it = color.find(root);
        if (it == color.end())
            it = color.emplace(root, 1 + int(rng.next_below(p.q))).first;
        cfg.set_mark(dense.ids[i], it->second);
    }
}

PapangelouResult papangelou_check(Triangulation& tri, const MarkedConfiguration& cfg,
                                  const Region& region, const Point& x0,
                                  const ModelParams& p, int samples,
                                  std::uint64_t seed) {
    PapangelouResult out;
    out.bound = std::pow(double(p.q), 1.0 - 2.0 * std::numbers::pi / p.alpha0);

    if (!hamiltonian(tri, cfg, region, p).admissible)
        throw std::invalid_argument("papangelou: configuration inadmissible");

    CavityDiff diff;
    const VertexId xid = tri.insert(x0, &diff);

    // Records of the three triangle families. T_ext is everything alive
    // that was not just created.
    std::map<std::array<VertexId, 3>, TriangleRecord> created;
    for (const TriangleRecord& rec : diff.created) {
        std::array<VertexId, 3> key = rec.vertices;
        std::sort(key.begin(), key.end());
        created.emplace(key, rec);
        if (region.intersects_ball(rec.metrics.circumcenter, rec.metrics.circumradius)
            && !psi_admissible(rec.metrics, p)) {
            tri.remove(xid);
            throw std::invalid_argument("papangelou: augmented state inadmissible");
        }
    }
    std::vector<TriangleRecord> t_ext;
    tri.for_each_triangle([&](std::uint32_t, const std::array<VertexId, 3>& v,
                              const TriangleMetrics& m) {
        std::array<VertexId, 3> key = v;
        std::sort(key.begin(), key.end());
        if (!created.count(key)) t_ext.push_back({v, m});
    });
    const std::vector<TriangleRecord> t_plus = diff.created;
    const std::vector<TriangleRecord> t_minus = diff.destroyed;

    std::vector<VertexId> verts_with;
    for (VertexId v : tri.vertex_ids()) verts_with.push_back(v);
    tri.remove(xid);
    std::vector<VertexId> verts_without;
    for (VertexId v : tri.vertex_ids()) verts_without.push_back(v);

    std::unordered_map<VertexId, std::uint32_t> index_with, index_without;
    for (std::uint32_t i = 0; i < verts_with.size(); ++i)
        index_with[verts_with[i]] = i;
    for (std::uint32_t i = 0; i < verts_without.size(); ++i)
        index_without[verts_without[i]] = i;

    auto record_open = [&](const TriangleRecord& rec, std::uint64_t skey) {
        const bool in_region = region.intersects_ball(rec.metrics.circumcenter,
                                                      rec.metrics.circumradius);
        const double prob = edge_prob(rec.metrics, in_region, p);
        if (prob >= 1.0) return true;
        std::array<VertexId, 3> key = rec.vertices;
        std::sort(key.begin(), key.end());
        return RngStream::from(skey, {key[0], key[1], key[2]}).next_double() < prob;
    };
    auto wire_merge = [&](UnionFind& uf,
                          const std::unordered_map<VertexId, std::uint32_t>& index,
                          const std::vector<VertexId>& verts) {
        std::uint32_t rep = 0xFFFFFFFFu;
        for (std::uint32_t i = 0; i < verts.size(); ++i) {
            if (cfg.is_frozen(verts[i])) {
                if (rep == 0xFFFFFFFFu) rep = i;
                else uf.merge(rep, i);
            }
        }
        (void)index;
    };

    double sum_num = 0.0, sum_den = 0.0, sum_num2 = 0.0, sum_den2 = 0.0,
           sum_cross = 0.0;
    for (int s = 0; s < samples; ++s) {
        const std::uint64_t skey = derive_key(seed, std::uint64_t(s));
        // Numerator: omega + x0 with T_ext and T+ draws.
        UnionFind ufn(verts_with.size());
        wire_merge(ufn, index_with, verts_with);
        for (const TriangleRecord& rec : t_ext) {
            if (record_open(rec, skey)) {
                const std::uint32_t a = index_with.at(rec.vertices[0]);
                ufn.merge(a, index_with.at(rec.vertices[1]));
                ufn.merge(a, index_with.at(rec.vertices[2]));
            }
        }
        for (const TriangleRecord& rec : t_plus) {
            if (record_open(rec, skey)) {
                const std::uint32_t a = index_with.at(rec.vertices[0]);
                ufn.merge(a, index_with.at(rec.vertices[1]));
                ufn.merge(a, index_with.at(rec.vertices[2]));
            }
        }
        // Denominator: omega with the SAME T_ext draws and T- draws.
        UnionFind ufd(verts_without.size());
        wire_merge(ufd, index_without, verts_without);
        for (const TriangleRecord& rec : t_ext) {
            if (record_open(rec, skey)) {
                const std::uint32_t a = index_without.at(rec.vertices[0]);
                ufd.merge(a, index_without.at(rec.vertices[1]));
                ufd.merge(a, index_without.at(rec.vertices[2]));
            }
        }
        for (const TriangleRecord& rec : t_minus) {
            if (record_open(rec, skey)) {
                const std::uint32_t a = index_without.at(rec.vertices[0]);
                ufd.merge(a, index_without.at(rec.vertices[1]));
                ufd.merge(a, index_without.at(rec.vertices[2]));
            }
        }
        const double numer = std::pow(double(p.q), double(ufn.count()));
        const double denom = std::pow(double(p.q), double(ufd.count()));
        sum_num += numer;
        sum_den += denom;
        sum_num2 += numer * numer;
        sum_den2 += denom * denom;
        sum_cross += numer * denom;
    }
    const double S = double(samples);
    const double an = sum_num / S, ad = sum_den / S;
    out.ratio = an / ad;
    const double van = (sum_num2 / S - an * an) / S;
    const double vad = (sum_den2 / S - ad * ad) / S;
    const double cov = (sum_cross / S - an * ad) / S;
    const double rel = van / (an * an) + vad / (ad * ad) - 2.0 * cov / (an * ad);
    out.sigma = out.ratio * std::sqrt(std::max(0.0, rel));
    out.ok = out.ratio >= out.bound - 3.0 * out.sigma;
    return out;
}

} // namespace delpotts
