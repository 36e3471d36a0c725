#ifndef LIPACT_PROPER_HPP
#define LIPACT_PROPER_HPP

#include "lipact/ckgraph.hpp"
#include "lipact/derivation.hpp"

namespace lipact {

// --- iterated-log growth functions ------------------------------------------

// log composed k times, and the threshold T' = exp°k(0) below which the
// k-fold log is nonpositive
double log_k(int k, double t);
double exp_k_zero(int k);

// theta(t) = t / (1 + positive part of log°k t); real arguments are read as
// theta(max{0, ceil t})
double theta_eval(int k, double t);

// Theta(j) = 1 / (j log j ... log°(k-1) j (log°k j)^2) above the positivity
// threshold, 1 below it; decreasing, summable, with
// integral bounds 1/log°k(J+1) <= sum_{j>J} Theta(j) <= 1/log°k(J)
double Theta_eval(int k, long j);

struct ThetaReport {
    bool monotone = true;
    bool subadditive = true;
    bool dominated = true;        // theta(t) <= double sum of Theta (tail bounded analytically)
    bool tail_ok = true;          // sum_{j>J} Theta(j) <= 1/log°k(J) on the grid
    uint64_t violations = 0;
    bool pass() const { return monotone && subadditive && dominated && tail_ok && violations == 0; }
};

ThetaReport verify_theta(int k, long grid_max, long j_cap = 1000000);

// --- tripod quasi-cocycle ---------------------------------------------------

// g0 moves x0 off the axis by at least the coarseness threshold, g1 = c^N
// moves it far along the axis: translates of e = beta(g0) + beta(g1) cannot
// cancel each other below one unit per term
struct TripodSpec {
    Word g0, g1;
    VecQ e;
};

TripodSpec make_tripod(const QTInstance& inst, long off_distance);

// the assumption check: some h takes x0 at distance >= n from the axis
bool check_off_axis_reachable(const QTInstance& inst, long n);

VecQ tripod_alpha(const QTInstance& inst, const TripodSpec& spec, const Word& g);

// --- Theta-decay quasi-cocycle ---------------------------------------------

struct DecaySpec {
    int k = 1;
    long j_max = 200;
    double tail_bound = 0;     // analytic bound on the dropped tail
    std::vector<double> wt;    // wt[j] = Theta(j), j = 1..j_max
    std::vector<double> wt_pre;  // prefix sums of wt
};

// throws when the analytic tail cannot reach the tolerance
DecaySpec make_decay(const QTInstance& inst, int k, long j_max, double tail_tol = 0.25);

// sum_j Theta(j) (delta_{c^j} - delta_{c^-j}), materialized; guarded against
// large j_max (the words c^j get long)
VecD decay_vector(const QTInstance& inst, const DecaySpec& spec);

VecD decay_alpha(const QTInstance& inst, const DecaySpec& spec, const Word& g);

// ||decay_alpha(g)|| without materializing the vector: the support of h.e
// lies in the <c>-coset of h, distinct cosets are disjoint, so the norm
// splits into per-coset sums evaluated on a dense offset array
double decay_alpha_norm(const QTInstance& inst, const DecaySpec& spec, const Word& g);

// --- assembled product action and properness profile ------------------------

struct AssembledPart {
    QTInstance inst;
    TripodSpec tri;
    AssembledPart(Word base, QTConfig cfg, long off_distance)
        : inst(std::move(base), cfg), tri(make_tripod(inst, off_distance)) {}
};

struct Assembled {
    std::vector<AssembledPart> parts;
};

// ||zeta(g)|| = sum_i (||alpha_i(g)|| + ||beta(g)||): the l1 product norm
Rat assembled_zeta_norm(const Assembled& act, const Word& g);

// total L-truncated projection sum over all families
long assembled_truncated_sum(const Assembled& act, const Word& g);

struct ProfileRow {
    int r = 0;
    double min_norm = 0, mean_norm = 0, max_norm = 0;
    double fitted_C = 0;     // per-sphere smallest C for the linear lower bound
    long sum_truncated = 0;  // max over the sphere
};

// exhaustive sphere minima/means/maxima of ||zeta|| for r <= R
std::vector<ProfileRow> properness_profile(const Assembled& act, int R);

// smallest C with ||zeta(g)|| >= (1/C) sum(g) - C over ball(R) (linear mode)
double lower_bound_fit_linear(const Assembled& act, int R);

// smallest C with ||zeta(g)|| >= (1/C) theta((1/C) sum(g) - 1) over ball(R)
double lower_bound_fit_theta(const Assembled& act, int R, int k);

struct UpperCheck {
    uint64_t checked = 0, violations = 0;
    double L_o = 0;
};

// linear orbit upper bound ||zeta(g)|| <= L_o r with
// L_o = (1 + Delta_3) max_{|s|<=1} ||zeta(s)||
UpperCheck linear_upper_check(const Assembled& act, int R);

// --- negative control: the Brooks-only affine action ------------------------

struct BrooksProfileRow {
    int r;
    Rat min_norm, max_norm;
};

// sphere profile of ||zeta_D(g)|| = ||eta(g)|| + ||beta(g)|| for the default
// Brooks data: max grows linearly along (ab)-powers, min stays bounded
std::vector<BrooksProfileRow> brooks_profile(const BrooksSpec& spec, int R);

} // namespace lipact

#endif
