#include "lipact/axes.hpp"

#include <set>

namespace lipact {

CycDecomp cyc_reduce(const Word& f) {
    if (f.empty()) throw std::invalid_argument("identity has no axis");
    Word u, c = f;
    while (c.size() >= 2 && c.at(0) == inv_letter(c.last())) {
        u.push(c.at(0));
        Word mid;
        for (int i = 1; i + 1 < c.size(); ++i) mid.push(c.at(i));
        c = mid;
    }
    if (c.empty()) throw std::invalid_argument("identity has no axis");
    return {u, c};
}

AxisBase::AxisBase(Word base) : c(std::move(base)) {
    if (c.empty()) throw std::invalid_argument("empty axis base");
    if (c.size() >= 2 && c.at(0) == inv_letter(c.last()))
        throw std::invalid_argument("axis base must be cyclically reduced");
    cinv = c.inverse();
    m = c.size();
}

Word Axis::point(long t) const {
    Word p = rep;
    if (t >= 0)
        for (long i = 0; i < t; ++i) p.push(fam->fwd(int(i % fam->m)));
    else
        for (long i = 0; i < -t; ++i) p.push(fam->bwd(int(i % fam->m)));
    return p;
}

Word canonical_rep(const Word& g, const AxisBase& fam) {
    // descend fast: right-multiplying by c^-1 shortens by |c| exactly when g
    // ends with c (and dually); partial-cancellation descents cannot occur
    // for |c| <= 2 and are handled by the bounded walk below
    Word cur = g;
    auto ends_with = [&](const Word& w, const Word& suf) {
        if (w.size() < suf.size()) return false;
        for (int i = 0; i < suf.size(); ++i)
            if (w.at(w.size() - suf.size() + i) != suf.at(i)) return false;
        return true;
    };
    bool moved = true;
    while (moved) {
        moved = false;
        if (ends_with(cur, fam.c)) { cur = cur.prefix(cur.size() - fam.m); moved = true; }
        else if (ends_with(cur, fam.cinv)) { cur = cur.prefix(cur.size() - fam.m); moved = true; }
    }
    // bounded convex walk to settle partial cancellations and lex plateaus
    Word best = cur;
    for (int dir = 0; dir < 2; ++dir) {
        const Word& mul = dir ? fam.c : fam.cinv;
        Word w = cur;
        for (int step = 0; step < 4 * fam.m + 8; ++step) {
            w = w * mul;
            if (w.size() > best.size() + fam.m) break;
            if (w.size() < best.size() || (w.size() == best.size() && w < best)) best = w;
        }
    }
    return best;
}

Axis make_axis(const AxisBase* fam, const Word& g) {
    Axis a;
    a.fam = fam;
    a.rep = canonical_rep(g, *fam);
    a.repinv = a.rep.inverse();
    return a;
}

long proj_point(const Axis& Y, const Word& x) {
    Word q = Y.repinv * x;
    long fwd = 0, bwd = 0;
    while (fwd < q.size() && q.at(int(fwd)) == Y.fam->fwd(int(fwd % Y.fam->m))) ++fwd;
    while (bwd < q.size() && q.at(int(bwd)) == Y.fam->bwd(int(bwd % Y.fam->m))) ++bwd;
    return fwd > 0 ? fwd : -bwd;
}

Interval proj_axis(const Axis& Y, const Axis& X) {
    // the projection of a line is the interval between the projections of
    // its two ends; S is far enough that both ends are past any overlap
    long S = X.rep.size() + Y.rep.size() + 2 * (X.fam->m + Y.fam->m) + 8;
    long t1 = proj_point(Y, X.point(-S));
    long t2 = proj_point(Y, X.point(S));
    return {std::min(t1, t2), std::max(t1, t2)};
}

long d_Y(const Axis& Y, const Word& x, const Word& z) {
    long t1 = proj_point(Y, x), t2 = proj_point(Y, z);
    return std::labs(t1 - t2);
}

long d_Y_axes(const Axis& Y, const Axis& X, const Axis& Z) {
    Interval ix = proj_axis(Y, X), iz = proj_axis(Y, Z);
    return std::max(ix.hi, iz.hi) - std::min(ix.lo, iz.lo);
}

long truncated_sum(const std::vector<AxisBase>& families, const Word& x0,
                   const Word& g, long L, int cand_radius) {
    if (L <= 0) throw std::invalid_argument("truncation threshold must be positive");
    Segment geo = geodesic(x0, g * x0);
    auto net = ball(cand_radius);
    long sum = 0;
    for (const AxisBase& fam : families) {
        std::set<Word> seen;
        for (const Word& v : geo.vertices) {
            for (const Word& s : net) {
                Word p = v * s;
                for (int r = 0; r < fam.m; ++r) {
                    // the axes through p, one per pattern phase
                    Axis probe = make_axis(&fam, Word{});
                    Word h = p * probe.point(r).inverse();
                    Word rep = canonical_rep(h, fam);
                    if (!seen.insert(rep).second) continue;
                    Axis Y = make_axis(&fam, rep);
                    sum += trunc_at(d_Y(Y, x0, g * x0), L);
                }
            }
        }
    }
    return sum;
}

long measure_xi(const AxisBase& fam, int rep_radius) {
    std::set<Word> reps;
    for (const Word& h : ball(rep_radius)) reps.insert(canonical_rep(h, fam));
    std::vector<Axis> axes;
    for (const Word& r : reps) axes.push_back(make_axis(&fam, r));
    long xi = 0;
    for (size_t i = 0; i < axes.size(); ++i)
        for (size_t j = 0; j < axes.size(); ++j) {
            if (i == j) continue;
            xi = std::max(xi, proj_axis(axes[i], axes[j]).diam());
        }
    return xi;
}

} // namespace lipact
