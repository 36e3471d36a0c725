#ifndef LIPACT_AXES_HPP
#define LIPACT_AXES_HPP

#include "lipact/vec.hpp"

namespace lipact {

// f = u c u^-1 with c cyclically reduced; axis(f) = u . axis(c)
struct CycDecomp {
    Word u, c;
};
CycDecomp cyc_reduce(const Word& f);

// one family: the orbit of the axis of a cyclically reduced base c, a
// bi-infinite line through the identity with letter pattern c repeated
struct AxisBase {
    Word c;        // cyclically reduced, nonempty
    Word cinv;
    int m;         // |c| = translation length
    explicit AxisBase(Word base);
    int fwd(int i) const { return c.at(i % m); }          // letters of c^inf
    int bwd(int i) const { return cinv.at(i % m); }       // letters of c^-inf
};

// translate rep . axis(c); rep canonical in its right <c>-coset
struct Axis {
    const AxisBase* fam = nullptr;
    Word rep, repinv;

    // vertex at signed arc-length t (t = 0 is rep itself)
    Word point(long t) const;
};

// minimal-length (then lex-least) representative of g<c>
Word canonical_rep(const Word& g, const AxisBase& fam);

Axis make_axis(const AxisBase* fam, const Word& g);

// arc parameter of the nearest point of the line to x (exact in a tree:
// the longest prefix of rep^-1 x matching the c^inf / c^-inf pattern)
long proj_point(const Axis& Y, const Word& x);

// projection of the whole line X onto Y as an arc interval [lo,hi]
struct Interval {
    long lo = 0, hi = 0;
    long diam() const { return hi - lo; }
};
Interval proj_axis(const Axis& Y, const Axis& X);

// d_Y(x,z) for points and for axes: diameter of the union of projections
long d_Y(const Axis& Y, const Word& x, const Word& z);
long d_Y_axes(const Axis& Y, const Axis& X, const Axis& Z);

// truncation: N if N >= L else 0
inline long trunc_at(long N, long L) { return N >= L ? N : 0; }

// sum over all family translates of the L-truncated projection distance
// between x0 and g x0.  Candidate axes are the translates through points at
// distance <= cand_radius of the geodesic; in a tree an axis with a nonzero
// truncated term runs along the geodesic, so this net is complete for
// cand_radius >= 1 (oracle-checked against full enumeration in the tests).
long truncated_sum(const std::vector<AxisBase>& families, const Word& x0,
                   const Word& g, long L, int cand_radius = 1);

// every distinct pair of translates with reps drawn from ball(rep_radius):
// max projection diameter = measured xi'
long measure_xi(const AxisBase& fam, int rep_radius);

} // namespace lipact

#endif
