#include "lipact/proper.hpp"

#include <algorithm>
#include <cmath>

namespace lipact {

double log_k(int k, double t) {
    double v = t;
    for (int i = 0; i < k; ++i) v = std::log(v);
    return v;
}

double exp_k_zero(int k) {
    double v = 0;
    for (int i = 0; i < k; ++i) v = std::exp(v);
    return v;
}

double theta_eval(int k, double t) {
    double n = std::ceil(t);
    if (n <= 0) return 0;
    double l = log_k(k, n);
    double d = 1 + (std::isfinite(l) && l > 0 ? l : 0);
    return n / d;
}

double Theta_eval(int k, long j) {
    if (double(j) <= exp_k_zero(k)) return 1.0;
    double prod = double(j);
    double v = double(j);
    for (int i = 1; i < k; ++i) {
        v = std::log(v);
        prod *= v;
    }
    v = std::log(v);
    return 1.0 / (prod * v * v);
}

ThetaReport verify_theta(int k, long grid_max, long j_cap) {
    ThetaReport rep;
    std::vector<double> th(size_t(2 * grid_max + 1));
    for (long n = 0; n <= 2 * grid_max; ++n) th[size_t(n)] = theta_eval(k, double(n));

    for (long n = 0; n < 2 * grid_max; ++n)
        if (th[size_t(n + 1)] + 1e-12 < th[size_t(n)]) { rep.monotone = false; ++rep.violations; }

    for (long m = 1; m <= grid_max; ++m)
        for (long n = m; n <= grid_max; ++n)
            if (th[size_t(m + n)] > th[size_t(m)] + th[size_t(n)] + 1e-9) {
                rep.subadditive = false;
                ++rep.violations;
            }

    std::vector<double> pre(size_t(j_cap + 1), 0.0);
    for (long j = 1; j <= j_cap; ++j) pre[size_t(j)] = pre[size_t(j - 1)] + Theta_eval(k, j);

    // the exact antiderivative of the decay weight is -1/log°k, so the tail
    // past J is sandwiched between 1/log°k(J+1) and 1/log°k(J)
    double tail_low = 1.0 / log_k(k, double(j_cap + 1));
    long j0 = long(std::ceil(exp_k_zero(k))) + 2;
    for (long J = j0; J <= grid_max; J = std::max(J + 1, J + J / 7)) {
        double part = pre[size_t(j_cap)] - pre[size_t(J)];
        double hi = 1.0 / log_k(k, double(J));
        double lo = 1.0 / log_k(k, double(J + 1)) - tail_low;
        if (part > hi + 1e-9 || part + 1e-9 < lo) { rep.tail_ok = false; ++rep.violations; }
    }

    // theta(t) <= sum_{i <= t} sum_{j >= i} Theta(j); the inner tails are
    // replaced by their certified lower bounds, so a pass here is conclusive
    double cum = 0;
    for (long t = 1; t <= grid_max; ++t) {
        double tail_from_t = (pre[size_t(j_cap)] - pre[size_t(t - 1)]) + tail_low;
        cum += tail_from_t;
        if (th[size_t(t)] > cum * (1 + 1e-9) + 1e-9) { rep.dominated = false; ++rep.violations; }
    }
    return rep;
}

static Word letter_power(int l, long p) {
    Word w;
    for (long i = 0; i < p; ++i) w.push(l);
    return w;
}

TripodSpec make_tripod(const QTInstance& inst, long off_distance) {
    const AxisBase& fam = inst.fam;
    Axis Y = make_axis(&fam, Word{});
    Word g0;
    bool found = false;
    for (int l = 0; l < 4 && !found; ++l) {
        Word cand = letter_power(l, off_distance + fam.m + 1);
        long t = proj_point(Y, cand);
        if (distance(cand, Y.point(t)) >= off_distance) {
            g0 = cand;
            found = true;
        }
    }
    if (!found) throw std::logic_error("no letter power leaves the axis");
    long N = off_distance / fam.m + 2;
    Word g1;
    for (long i = 0; i < N; ++i) g1 = g1 * fam.c;
    TripodSpec s;
    s.g0 = g0;
    s.g1 = g1;
    s.e = coboundary_beta<Rat>(g0) + coboundary_beta<Rat>(g1);
    return s;
}

bool check_off_axis_reachable(const QTInstance& inst, long n) {
    const AxisBase& fam = inst.fam;
    Axis Y = make_axis(&fam, Word{});
    for (int l = 0; l < 4; ++l) {
        Word cand = letter_power(l, n + fam.m + 1);
        long t = proj_point(Y, cand);
        if (distance(cand, Y.point(t)) >= n) return true;
    }
    return false;
}

VecQ tripod_alpha(const QTInstance& inst, const TripodSpec& spec, const Word& g) {
    return qt_sum<Rat>(w_sets_qt(inst, g), spec.e);
}

DecaySpec make_decay(const QTInstance& inst, int k, long j_max, double tail_tol) {
    (void)inst;
    DecaySpec s;
    s.k = k;
    s.j_max = j_max;
    double lk = log_k(k, double(j_max));
    if (!(lk > 0)) throw std::invalid_argument("j_max below the positivity threshold");
    s.tail_bound = 1.0 / lk;
    if (s.tail_bound > tail_tol)
        throw std::invalid_argument("dropped tail exceeds the requested tolerance");
    s.wt.assign(size_t(j_max + 1), 0.0);
    s.wt_pre.assign(size_t(j_max + 1), 0.0);
    for (long j = 1; j <= j_max; ++j) {
        s.wt[size_t(j)] = Theta_eval(k, j);
        s.wt_pre[size_t(j)] = s.wt_pre[size_t(j - 1)] + s.wt[size_t(j)];
    }
    return s;
}

VecD decay_vector(const QTInstance& inst, const DecaySpec& spec) {
    if (spec.j_max > 20000)
        throw std::invalid_argument("decay vector too large to materialize");
    VecD e;
    Word cp, cm;
    for (long j = 1; j <= spec.j_max; ++j) {
        cp = cp * inst.fam.c;
        cm = cm * inst.fam.cinv;
        e.add(cp, spec.wt[size_t(j)]);
        e.add(cm, -spec.wt[size_t(j)]);
    }
    return e;
}

VecD decay_alpha(const QTInstance& inst, const DecaySpec& spec, const Word& g) {
    return qt_sum<double>(w_sets_qt(inst, g), decay_vector(inst, spec));
}

double decay_alpha_norm(const QTInstance& inst, const DecaySpec& spec, const Word& g) {
    WSets ws = w_sets_qt(inst, g);
    const AxisBase& fam = inst.fam;
    const long J = spec.j_max;

    struct Mem {
        long q;
        int sgn;
    };
    std::map<Word, std::vector<Mem>> groups;
    auto add = [&](const Word& h, int sgn) {
        Word rep = canonical_rep(h, fam);
        Word d = rep.inverse() * h;   // a power of c: h and rep share a coset
        long q = 0;
        if (!d.empty()) {
            if (d.size() % fam.m) throw std::logic_error("coset offset not a pattern multiple");
            long steps = d.size() / fam.m;
            q = d.at(0) == fam.fwd(0) ? steps : -steps;
        }
        groups[rep].push_back({q, sgn});
    };
    for (const Word& h : ws.plus) add(h, 1);
    for (const Word& h : ws.minus) add(h, -1);

    // sum of wt[j] over j in [a,b] clipped to [1,J]
    auto S = [&](long a, long b) {
        a = std::max<long>(a, 1);
        b = std::min(b, J);
        return b >= a ? spec.wt_pre[size_t(b)] - spec.wt_pre[size_t(a - 1)] : 0.0;
    };

    double total = 0;
    for (auto& [rep, mems] : groups) {
        std::sort(mems.begin(), mems.end(), [](const Mem& a, const Mem& b) { return a.q < b.q; });
        long q0 = mems.front().q, q1 = mems.back().q;
        bool uniform = true;
        for (size_t i = 0; i < mems.size(); ++i)
            if (mems[i].sgn != mems[0].sgn || mems[i].q != q0 + long(i)) uniform = false;
        if (uniform && q1 - q0 + 1 == long(mems.size())) {
            // one member per offset, one sign: closed form from prefix sums
            for (long p = q0 - J; p <= q1 + J; ++p)
                total += std::fabs(S(p - q1, p - q0) - S(q0 - p, q1 - p));
        } else {
            std::vector<double> arr(size_t(q1 - q0 + 1 + 2 * J), 0.0);
            long off = J - q0;
            for (const Mem& mem : mems)
                for (long j = 1; j <= J; ++j) {
                    arr[size_t(off + mem.q + j)] += mem.sgn * spec.wt[size_t(j)];
                    arr[size_t(off + mem.q - j)] -= mem.sgn * spec.wt[size_t(j)];
                }
            for (double v : arr) total += std::fabs(v);
        }
    }
    return total;
}

Rat assembled_zeta_norm(const Assembled& act, const Word& g) {
    Rat s(0);
    Rat bn = coboundary_beta<Rat>(g).norm1();
    for (const AssembledPart& p : act.parts)
        s += tripod_alpha(p.inst, p.tri, g).norm1() + bn;
    return s;
}

long assembled_truncated_sum(const Assembled& act, const Word& g) {
    long s = 0;
    for (const AssembledPart& p : act.parts) {
        std::vector<AxisBase> fams{p.inst.fam};
        s += truncated_sum(fams, Word{}, g, p.inst.cfg.L, p.inst.cfg.cand_radius);
    }
    return s;
}

// smallest C >= 0 with n >= sum/C - C, i.e. the positive root of C^2 + nC = sum
static double linear_C(double n, long sum) {
    if (sum <= 0) return 0;
    return (-n + std::sqrt(n * n + 4.0 * double(sum))) / 2;
}

std::vector<ProfileRow> properness_profile(const Assembled& act, int R) {
    std::vector<ProfileRow> rows;
    for (int r = 0; r <= R; ++r) {
        ProfileRow row;
        row.r = r;
        double mn = 0, mx = 0, sum = 0;
        long cnt = 0;
        bool first = true;
        for (const Word& g : sphere(r)) {
            double nz = assembled_zeta_norm(act, g).convert_to<double>();
            long ts = assembled_truncated_sum(act, g);
            if (first || nz < mn) mn = nz;
            if (first || nz > mx) mx = nz;
            first = false;
            sum += nz;
            ++cnt;
            row.fitted_C = std::max(row.fitted_C, linear_C(nz, ts));
            row.sum_truncated = std::max(row.sum_truncated, ts);
        }
        row.min_norm = mn;
        row.max_norm = mx;
        row.mean_norm = cnt ? sum / double(cnt) : 0;
        rows.push_back(row);
    }
    return rows;
}

double lower_bound_fit_linear(const Assembled& act, int R) {
    double c = 0;
    for (const ProfileRow& row : properness_profile(act, R)) c = std::max(c, row.fitted_C);
    return c;
}

double lower_bound_fit_theta(const Assembled& act, int R, int k) {
    std::vector<std::pair<double, long>> pts;
    for (const Word& g : ball(R))
        pts.emplace_back(assembled_zeta_norm(act, g).convert_to<double>(),
                         assembled_truncated_sum(act, g));
    auto feasible = [&](double C) {
        for (auto& [nz, ts] : pts)
            if (nz + 1e-12 < theta_eval(k, double(ts) / C - 1) / C) return false;
        return true;
    };
    double lo = 1e-6, hi = 1e-6;
    while (!feasible(hi)) {
        hi *= 2;
        if (hi > 1e12) return hi;
    }
    for (int it = 0; it < 80; ++it) {
        double mid = (lo + hi) / 2;
        (feasible(mid) ? hi : lo) = mid;
    }
    return hi;
}

UpperCheck linear_upper_check(const Assembled& act, int R) {
    UpperCheck res;
    // per-part quasi-cocycle defect over short pairs, an empirical stand-in
    // for the uniform derivation bound in the per-letter growth estimate
    double dmax = 0;
    auto b2 = ball(2);
    for (const AssembledPart& p : act.parts) {
        std::unordered_map<Word, VecQ, WordHash> cache;
        auto alpha = [&](const Word& g) -> const VecQ& {
            auto it = cache.find(g);
            if (it != cache.end()) return it->second;
            return cache.emplace(g, tripod_alpha(p.inst, p.tri, g)).first->second;
        };
        for (const Word& g : b2)
            for (const Word& h : b2) {
                VecQ d = alpha(g * h) - alpha(g) - translate(g, alpha(h));
                dmax = std::max(dmax, d.norm1().convert_to<double>());
            }
    }
    double gen_max = 0;
    for (const Word& s : sphere(1))
        gen_max = std::max(gen_max, assembled_zeta_norm(act, s).convert_to<double>());
    res.L_o = (1 + dmax) * gen_max;
    for (const Word& g : ball(R)) {
        if (g.empty()) continue;
        ++res.checked;
        double nz = assembled_zeta_norm(act, g).convert_to<double>();
        if (nz > res.L_o * g.size() + 1e-9) ++res.violations;
    }
    return res;
}

std::vector<BrooksProfileRow> brooks_profile(const BrooksSpec& spec, int R) {
    std::vector<BrooksProfileRow> rows;
    for (int r = 0; r <= R; ++r) {
        BrooksProfileRow row{r, Rat(0), Rat(0)};
        bool first = true;
        for (const Word& g : sphere(r)) {
            Rat n = eta(spec, g).norm1() + coboundary_beta<Rat>(g).norm1();
            if (first || n < row.min_norm) row.min_norm = n;
            if (n > row.max_norm) row.max_norm = n;
            first = false;
        }
        rows.push_back(row);
    }
    return rows;
}

} // namespace lipact
