#include "lipact/ckgraph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace lipact {

QTInstance::QTInstance(Word base, QTConfig cfg_) : fam(std::move(base)), cfg(cfg_) {
    xi_ = measure_xi(fam, 4);
    if (cfg.K < 4 * xi_) throw std::invalid_argument("K below 4 xi'");
    M = int((cfg.L + fam.m - 1) / fam.m);
    if (M < 1) M = 1;
    F = Word{};
    for (int i = 0; i < M; ++i) F = F * fam.c;
    if (cfg.t_slack < 0) cfg.t_slack = cfg.L + cfg.K + cfg.eps + 2 * fam.m + 4;
}

void CKGraph::dijkstra(const Word& src, std::vector<long>& dist, std::vector<int>& parent) const {
    dist.assign(pos.size(), -1);
    parent.assign(pos.size(), -1);
    using QE = std::pair<long, int>;
    std::priority_queue<QE, std::vector<QE>, std::greater<>> pq;
    auto it = by_pos.find(src);
    if (it == by_pos.end()) return;
    for (int v : it->second) {
        dist[v] = 0;
        pq.emplace(0, v);
    }
    while (!pq.empty()) {
        auto [d, v] = pq.top();
        pq.pop();
        if (d != dist[v]) continue;
        for (auto [w, len] : adj[v]) {
            long nd = d + len;
            if (dist[w] < 0 || nd < dist[w]) {
                dist[w] = nd;
                parent[w] = v;
                pq.emplace(nd, w);
            }
        }
    }
}

long CKGraph::distance(const Word& from, const Word& to) const {
    std::vector<long> dist;
    std::vector<int> parent;
    dijkstra(from, dist, parent);
    auto it = by_pos.find(to);
    if (it == by_pos.end()) return -1;
    long best = -1;
    for (int v : it->second)
        if (dist[v] >= 0 && (best < 0 || dist[v] < best)) best = dist[v];
    return best;
}

std::vector<Word> CKGraph::path_positions(const Word& from, const Word& to) const {
    std::vector<long> dist;
    std::vector<int> parent;
    dijkstra(from, dist, parent);
    auto it = by_pos.find(to);
    if (it == by_pos.end()) return {};
    int best = -1;
    for (int v : it->second)
        if (dist[v] >= 0 && (best < 0 || dist[v] < dist[best])) best = v;
    if (best < 0) return {};
    std::vector<Word> rev;
    for (int v = best; v >= 0; v = parent[v]) rev.push_back(pos[v]);
    std::reverse(rev.begin(), rev.end());
    // drop repeated positions (cross edges can join equal positions)
    std::vector<Word> out;
    for (Word& w : rev)
        if (out.empty() || !(out.back() == w)) out.push_back(std::move(w));
    return out;
}

// maximal runs inside word w matching the c^inf or c^-inf letter pattern;
// reports (start index, length, phase, backward?)
namespace {
struct Run {
    int start, len, phase;
    bool back;
};

std::vector<Run> pattern_runs(const Word& w, const AxisBase& fam, int min_len) {
    std::vector<Run> runs;
    for (int back = 0; back < 2; ++back) {
        for (int r = 0; r < fam.m; ++r) {
            int i = 0;
            while (i < w.size()) {
                int len = 0;
                while (i + len < w.size()) {
                    int want = back ? fam.bwd((r + len) % fam.m) : fam.fwd((r + len) % fam.m);
                    if (w.at(i + len) != want) break;
                    ++len;
                }
                if (len >= min_len) runs.push_back({i, len, r, bool(back)});
                i += len > 0 ? len : 1;
            }
        }
    }
    return runs;
}
} // namespace

CKGraph build_local_graph(const QTInstance& inst, const Word& g) {
    const AxisBase& fam = inst.fam;
    const QTConfig& cfg = inst.cfg;
    CKGraph gr;
    gr.K = cfg.K;

    // seed points: the geodesic [x0, g x0] plus an optional net around it
    Segment geo = geodesic(Word{}, g);
    std::vector<Word> seeds;
    if (cfg.net_radius <= 0) {
        seeds = geo.vertices;
    } else {
        std::set<Word> s;
        for (const Word& v : geo.vertices)
            for (const Word& n : ball(cfg.net_radius)) s.insert(v * n);
        seeds.assign(s.begin(), s.end());
    }

    // axes through each seed, one per pattern phase; windows merged per axis
    std::vector<Word> phase_pts(fam.m);
    {
        Axis unit = make_axis(&fam, Word{});
        for (int r = 0; r < fam.m; ++r) phase_pts[r] = unit.point(r).inverse();
    }
    std::unordered_map<Word, size_t, WordHash> idx_of;
    struct Win { long lo, hi; };
    std::vector<Win> wins;
    std::vector<Axis> axes;
    for (const Word& p : seeds) {
        for (int r = 0; r < fam.m; ++r) {
            Word rep = canonical_rep(p * phase_pts[r], fam);
            auto [it, fresh] = idx_of.try_emplace(rep, axes.size());
            if (fresh) {
                axes.push_back(make_axis(&fam, rep));
                wins.push_back({0, 0});
            }
            long t = proj_point(axes[it->second], p);
            Win& w = wins[it->second];
            if (fresh) {
                w = {t - cfg.t_slack, t + cfg.t_slack};
            } else {
                w.lo = std::min(w.lo, t - cfg.t_slack);
                w.hi = std::max(w.hi, t + cfg.t_slack);
            }
        }
    }

    // vertices and intra-axis edges
    for (size_t i = 0; i < axes.size(); ++i) {
        CKGraph::AxisRec rec{axes[i], wins[i].lo, wins[i].hi, int(gr.pos.size())};
        Word w = axes[i].point(rec.tlo);
        for (long t = rec.tlo; t <= rec.thi; ++t) {
            gr.by_pos[w].push_back(int(gr.pos.size()));
            gr.pos.push_back(w);
            if (t < rec.thi) {
                Word nx = w;
                nx.push(fam.fwd(int(((t % fam.m) + fam.m) % fam.m)));
                w = std::move(nx);
            }
        }
        gr.axes.push_back(std::move(rec));
    }
    gr.adj.assign(gr.pos.size(), {});
    for (const auto& rec : gr.axes)
        for (long t = rec.tlo; t < rec.thi; ++t) {
            int u = rec.v0 + int(t - rec.tlo), v = u + 1;
            gr.adj[u].emplace_back(v, 1);
            gr.adj[v].emplace_back(u, 1);
        }

    // cross edges: place one edge between the closest-point pair of X and Z
    // unless some other translate Y has d_Y(X,Z) >= K.  Potential blockers
    // are found by scanning the bridge word for pattern runs (a blocker must
    // run along the bridge for >= K - 2 xi'), then each is checked exactly.
    int min_run = std::max<long>(1, cfg.K - 2 * inst.xi() - 2);
    for (size_t i = 0; i < axes.size(); ++i) {
        for (size_t j = i + 1; j < axes.size(); ++j) {
            auto dec = inst.cross_decision(axes[i], axes[j], min_run);
            if (!dec.edge) continue;
            int u = gr.vertex(i, dec.tX), v = gr.vertex(j, dec.tZ);
            if (u < 0 || v < 0) continue;   // connection point outside window
            gr.adj[u].emplace_back(v, cfg.K);
            gr.adj[v].emplace_back(u, cfg.K);
        }
    }
    return gr;
}

QTInstance::CrossDecision QTInstance::cross_decision(const Axis& X, const Axis& Z,
                                                     int min_run) const {
    bool swapped = Z.rep < X.rep;
    const Axis& A = swapped ? Z : X;
    const Axis& B = swapped ? X : Z;
    std::string key = A.rep.str() + "|" + B.rep.str();
    auto it = cross_cache_.find(key);
    if (it == cross_cache_.end()) {
        Interval ia = proj_axis(A, B), ib = proj_axis(B, A);
        CrossDecision dec;
        dec.tX = (ia.lo + ia.hi) / 2;
        dec.tZ = (ib.lo + ib.hi) / 2;
        dec.edge = true;
        Word pA = A.point(dec.tX), pB = B.point(dec.tZ);
        Word bridge = pA.inverse() * pB;
        if (!bridge.empty()) {
            Axis unit = make_axis(&fam, Word{});
            for (const Run& run : pattern_runs(bridge, fam, min_run)) {
                // the translate whose line carries this run
                Word v = pA * bridge.prefix(run.start);
                Word base_pt = run.back ? unit.point(-long(run.phase)) : unit.point(run.phase);
                Axis Y = make_axis(&fam, v * base_pt.inverse());
                if (Y.rep == A.rep || Y.rep == B.rep) continue;
                if (d_Y_axes(Y, A, B) >= cfg.K) {
                    dec.edge = false;
                    break;
                }
            }
        }
        it = cross_cache_.emplace(std::move(key), dec).first;
    }
    CrossDecision out = it->second;
    if (swapped) std::swap(out.tX, out.tZ);
    return out;
}

WSets w_sets_qt(const QTInstance& inst, const Word& g) {
    CKGraph gr = build_local_graph(inst, g);
    return w_sets_qt(inst, gr, g);
}

WSets w_sets_qt(const QTInstance& inst, const CKGraph& graph, const Word& g) {
    const QTConfig& cfg = inst.cfg;
    std::vector<Word> P = graph.path_positions(Word{}, g);
    if (P.empty()) throw std::runtime_error("working radius too small: no graph path");

    // nearest path index within tree-distance eps, per position
    struct Near {
        long dist;
        int idx;
    };
    std::unordered_map<Word, Near, WordHash> nbr;
    auto net = ball(cfg.eps);
    for (size_t i = 0; i < P.size(); ++i) {
        for (const Word& s : net) {
            Word q = P[i] * s;
            auto [it, fresh] = nbr.try_emplace(q, Near{s.size(), int(i)});
            if (!fresh && s.size() < it->second.dist)
                it->second = Near{s.size(), int(i)};
        }
    }

    // candidates: membership forces h x0 within eps of P, so this net is
    // complete; h counts as its own class (trivial stabilizer J)
    std::set<Word> cands;
    for (const Word& p : P)
        for (const Word& s : net) cands.insert(p * s);

    long qlen = std::min<long>(cfg.L, long(inst.M) * inst.fam.m);
    WSets ws;
    for (const Word& h : cands) {
        int entry = -1, exit = -1;
        bool inside = true;
        Word q = h;
        for (long t = 0; t <= qlen; ++t) {
            auto it = nbr.find(q);
            if (it == nbr.end()) { inside = false; break; }
            if (t == 0) entry = it->second.idx;
            exit = it->second.idx;
            if (t < qlen) q.push(inst.fam.fwd(int(t % inst.fam.m)));
        }
        if (!inside) continue;
        if (exit >= entry + 1) ws.plus.push_back(h);
        else if (exit <= entry - 1) ws.minus.push_back(h);
    }
    return ws;
}

double measure_delta(const CKGraph& g, int samples, Rng& rng) {
    if (g.pos.size() < 4) return 0;
    int n = std::min<size_t>(24, g.pos.size());
    std::vector<int> pick;
    for (int i = 0; i < n; ++i) pick.push_back(int(rng.next(g.pos.size())));
    std::vector<std::vector<long>> d(n);
    std::vector<int> parent;
    for (int i = 0; i < n; ++i) {
        std::vector<long> dist;
        g.dijkstra(g.pos[pick[i]], dist, parent);
        d[i].resize(n);
        for (int j = 0; j < n; ++j) d[i][j] = dist[pick[j]];
    }
    double delta = 0;
    for (int s = 0; s < samples; ++s) {
        int a = int(rng.next(n)), b = int(rng.next(n)), c = int(rng.next(n)), e = int(rng.next(n));
        if (d[a][b] < 0 || d[c][e] < 0 || d[a][c] < 0 || d[b][e] < 0 || d[a][e] < 0 || d[b][c] < 0)
            continue;
        long s1 = d[a][b] + d[c][e], s2 = d[a][c] + d[b][e], s3 = d[a][e] + d[b][c];
        long top = std::max({s1, s2, s3});
        long mid = s1 + s2 + s3 - top - std::min({s1, s2, s3});
        delta = std::max(delta, double(top - mid) / 2.0);
    }
    return delta;
}

QTDiagnostics qt_diagnostics(const QTInstance& inst, int R) {
    QTDiagnostics d;
    d.xi = inst.xi();
    std::vector<AxisBase> fams{inst.fam};
    Rng rng(12345);
    bool measured = false;
    for (const Word& g : ball(R)) {
        CKGraph gr = build_local_graph(inst, g);
        if (!measured && g.size() == R) {
            d.delta_meas = measure_delta(gr, 2000, rng);
            measured = true;
        }
        WSets ws = w_sets_qt(inst, gr, g);
        std::set<Word> plus(ws.plus.begin(), ws.plus.end());
        for (const Word& h : ws.minus)
            if (plus.count(h)) ++d.disjoint_violations;
        long sum = truncated_sum(fams, Word{}, g, inst.cfg.L);
        long dck = gr.distance(Word{}, g);
        if (dck >= 0 && sum > 4 * dck) ++d.formula_violations;
        double c = double(sum) / double(ws.plus.size() + ws.minus.size() + 1);
        d.fitted_C = std::max(d.fitted_C, c);
        ++d.checked;
    }
    return d;
}

} // namespace lipact
