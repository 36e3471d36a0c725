#ifndef LIPACT_CKGRAPH_HPP
#define LIPACT_CKGRAPH_HPP

#include <unordered_map>

#include "lipact/axes.hpp"

namespace lipact {

// constants of the quasi-tree construction; the defaults are the desk-scale
// empirical choices, everything is overridable through the CLI config
struct QTConfig {
    long eps = 2;         // neighbourhood constant of the shadowing test
    long L = 8;           // initial-segment length / truncation threshold
    long K = 8;           // cross-edge length; must be >= 4 xi'
    int cand_radius = 2;  // net radius for candidate translates
    int net_radius = 0;   // extra net around the geodesic when seeding axes
    long t_slack = -1;    // arc slack per axis; default derived from L,K,eps
};

// a single family instance: cyclically reduced base c (axis through id,
// basepoint x0 = id on it) and the element F = c^M with translation >= L
struct QTInstance {
    AxisBase fam;
    QTConfig cfg;
    int M;
    Word F;
    QTInstance(Word base, QTConfig cfg_);

    long xi() const { return xi_; }

    // whether X and Z get a cross edge, and where it attaches; memoized per
    // unordered axis pair since the same pairs recur across local graphs
    struct CrossDecision {
        bool edge = false;
        long tX = 0, tZ = 0;
    };
    CrossDecision cross_decision(const Axis& X, const Axis& Z, int min_run) const;

private:
    long xi_ = 0;
    mutable std::unordered_map<std::string, CrossDecision> cross_cache_;
};

// finite induced subgraph of the true infinite C_K(A): chosen axes with an
// arc window each, intra-axis edges of weight 1, cross edges of weight K
// placed exactly (the "no blocking axis" rule is decided against the full
// family by scanning the bridge word for pattern runs, then checking the
// candidates exactly), so distances here dominate the true ones
class CKGraph {
public:
    struct AxisRec {
        Axis ax;
        long tlo, thi;
        int v0;           // vertex id of point(tlo)
    };

    long K = 8;
    std::vector<AxisRec> axes;
    std::vector<Word> pos;                                  // vertex -> position
    std::unordered_map<Word, std::vector<int>, WordHash> by_pos;
    std::vector<std::vector<std::pair<int, long>>> adj;     // (to, weight)

    int vertex(size_t axis_idx, long t) const {
        const AxisRec& r = axes[axis_idx];
        if (t < r.tlo || t > r.thi) return -1;
        return r.v0 + int(t - r.tlo);
    }

    // single-source (all vertices at the given position) shortest paths
    void dijkstra(const Word& src, std::vector<long>& dist, std::vector<int>& parent) const;

    long distance(const Word& from, const Word& to) const;
    std::vector<Word> path_positions(const Word& from, const Word& to) const;
};

// exact local truncation seeded by the geodesic [x0, g x0]
CKGraph build_local_graph(const QTInstance& inst, const Word& g);

struct WSets {
    std::vector<Word> plus, minus;
};

// the coarse counting sets: [h x0, h F x0] (its initial L-part, taken along
// the graph geodesic on the candidate's own axis) shadows the graph geodesic
// [x0, g x0] inside the tree eps-neighbourhood, with matching (resp.
// reversed) orientation.  Candidates h = p s over path positions p, |s| <=
// eps, which is complete for this membership test.
WSets w_sets_qt(const QTInstance& inst, const Word& g);
WSets w_sets_qt(const QTInstance& inst, const CKGraph& graph, const Word& g);

template <class S>
Vec<S> qt_sum(const WSets& w, const Vec<S>& e) {
    Vec<S> r;
    for (const Word& h : w.plus)
        for (auto& [x, c] : e.m) r.add(h * x, c);
    for (const Word& h : w.minus)
        for (auto& [x, c] : e.m) r.add(h * x, S(-c));
    return r;
}

// measured hyperbolicity of a truncation: four-point condition over sampled
// vertex quadruples
double measure_delta(const CKGraph& g, int samples, Rng& rng);

struct QTDiagnostics {
    uint64_t checked = 0;
    uint64_t disjoint_violations = 0;
    uint64_t formula_violations = 0;  // truncated sum > 4 d_CK
    double fitted_C = 0;              // smallest C with sum <= C (|W+|+|W-|) + C
    long xi = 0;
    double delta_meas = 0;
};

QTDiagnostics qt_diagnostics(const QTInstance& inst, int R);

} // namespace lipact

#endif
