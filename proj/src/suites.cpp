#include "lipact/suites.hpp"

#include <chrono>
#include <functional>
#include <set>

#include "lipact/proper.hpp"

namespace lipact {

static BrooksSpec spec_from(const Config& c) {
    return BrooksSpec(Word::parse(c.brooks_w), BrooksSpec::standard().e);
}

static QTConfig qt_config(const Config& c) {
    QTConfig q;
    q.eps = c.eps;
    q.L = c.L;
    q.K = c.K;
    q.cand_radius = c.cand_radius;
    q.net_radius = c.net_radius;
    q.t_slack = c.t_slack;
    return q;
}

SuiteResult suite_verify(const Config& c) {
    SuiteResult r;
    r.summary.suite = "verify";
    BrooksSpec spec = spec_from(c);
    QuasiCocycle a = brooks_cocycle(spec);
    IdentityReport rep = verify_identities(a, c.radius);
    CheckReport anti = antisymmetry_check(spec, c.radius);
    DefectResult def = defect_measure(a, c.radius);

    r.table.name = "verify";
    r.table.cols = {"identity", "checked", "violations"};
    r.table.row({"cocycle", fmt(rep.pairs), fmt(rep.cocycle_violations)});
    r.table.row({"leibniz", fmt(rep.pairs), fmt(rep.leibniz_violations)});
    r.table.row({"coboundary", fmt(rep.pairs), fmt(rep.beta_violations)});
    r.table.row({"antisymmetry", fmt(anti.checked), fmt(anti.violations)});

    r.summary.put("radius", fmt(long(c.radius)));
    r.summary.put("defect", fmt(def.value));
    if (!c.word.empty()) {
        Zeta z = zeta_D(a, Word::parse(c.word));
        r.summary.put("word", c.word);
        r.summary.put("word_alpha_norm", fmt(z.alpha.norm1()));
        r.summary.put("word_beta_norm", fmt(z.beta.norm1()));
    }
    r.summary.pass = rep.pass() && anti.violations == 0;
    return r;
}

SuiteResult suite_defect(const Config& c) {
    SuiteResult r;
    r.summary.suite = "defect";
    BrooksSpec spec = spec_from(c);
    QuasiCocycle a = brooks_cocycle(spec);

    auto t0 = std::chrono::steady_clock::now();
    DefectResult def = defect_measure(a, c.defect_radius);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();

    r.table.name = "defect";
    r.table.cols = {"R", "defect_numerator", "defect_denominator", "argmax_g", "argmax_gp",
                    "wallclock_ms"};
    r.table.row({fmt(long(c.defect_radius)), fmt(Rat(boost::multiprecision::numerator(def.value))),
                 fmt(Rat(boost::multiprecision::denominator(def.value))), def.argmax_g.str(),
                 def.argmax_h.str(), fmt(long(ms))});

    // sampled derivation bound ||D(g)f|| <= Delta_R ||f||, f zero-sum with
    // support inside the measured ball
    Rng rng(c.seed);
    auto pool = ball(c.defect_radius);
    uint64_t bad = 0;
    for (int i = 0; i < c.samples; ++i) {
        VecQ f = random_zero_sum(rng, pool);
        const Word& g = pool[rng.next(pool.size())];
        if (derivation_apply(a, g, f).norm1() > def.value * f.norm1()) ++bad;
    }
    r.summary.put("defect", fmt(def.value));
    r.summary.put("pairs", fmt(def.pairs));
    r.summary.put("sampled", fmt(long(c.samples)));
    r.summary.put("bound_violations", fmt(bad));
    r.summary.pass = bad == 0;
    return r;
}

SuiteResult suite_orbit_growth(const Config& c) {
    SuiteResult r;
    r.summary.suite = "orbit-growth";
    BrooksSpec spec = BrooksSpec::standard();
    r.table.name = "orbit_growth";
    r.table.cols = {"n", "norm", "expected"};
    uint64_t bad = 0;
    Word g;
    for (int n = 1; n <= c.orbit_n; ++n) {
        g = g * spec.w;
        Rat norm = eta(spec, g).norm1();
        Rat want(2 * n);
        if (norm != want) ++bad;
        r.table.row({fmt(long(n)), fmt(norm), fmt(want)});
    }
    r.summary.put("n_max", fmt(long(c.orbit_n)));
    r.summary.put("mismatches", fmt(bad));
    r.summary.pass = bad == 0;
    return r;
}

SuiteResult suite_distance_formula(const Config& c) {
    SuiteResult r;
    r.summary.suite = "distance-formula";
    QTConfig qc = qt_config(c);
    std::vector<QTInstance> insts;
    std::vector<AxisBase> fams;
    for (const std::string& f : c.family_list()) {
        insts.emplace_back(Word::parse(f), qc);
        fams.push_back(insts.back().fam);
    }

    r.table.name = "distance_formula";
    r.table.cols = {"g", "d_CK", "truncated_sum", "W_plus_size", "W_minus_size"};
    uint64_t formula_bad = 0, disjoint_bad = 0, checked = 0;
    for (const Word& g : ball(c.radius)) {
        long total = 0;
        long dck0 = -1;
        size_t wp0 = 0, wm0 = 0;
        for (size_t i = 0; i < insts.size(); ++i) {
            CKGraph gr = build_local_graph(insts[i], g);
            std::vector<AxisBase> one{insts[i].fam};
            long sum = truncated_sum(one, Word{}, g, qc.L, qc.cand_radius);
            long dck = gr.distance(Word{}, g);
            WSets ws = w_sets_qt(insts[i], gr, g);
            std::set<Word> plus(ws.plus.begin(), ws.plus.end());
            for (const Word& h : ws.minus)
                if (plus.count(h)) ++disjoint_bad;
            if (dck >= 0 && sum > 4 * dck) ++formula_bad;
            total += sum;
            if (i == 0) {
                dck0 = dck;
                wp0 = ws.plus.size();
                wm0 = ws.minus.size();
            }
        }
        r.table.row({g.str(), fmt(dck0), fmt(total), fmt(long(wp0)), fmt(long(wm0))});
        ++checked;
    }
    for (size_t i = 0; i < insts.size(); ++i)
        r.summary.put("xi_" + insts[i].fam.c.str(), fmt(insts[i].xi()));
    r.summary.put("checked", fmt(checked));
    r.summary.put("formula_violations", fmt(formula_bad));
    r.summary.put("disjoint_violations", fmt(disjoint_bad));
    r.summary.pass = formula_bad == 0 && disjoint_bad == 0;
    return r;
}

SuiteResult suite_profile(const Config& c) {
    SuiteResult r;
    r.summary.suite = "profile";
    QTConfig qc = qt_config(c);

    std::function<double(const Word&)> norm_of;
    std::function<long(const Word&)> sum_of;
    std::vector<QTInstance> insts;
    std::vector<TripodSpec> tris;
    std::vector<DecaySpec> decs;
    for (const std::string& f : c.family_list()) insts.emplace_back(Word::parse(f), qc);

    if (c.profile_kind == "tripod") {
        for (const QTInstance& inst : insts) tris.push_back(make_tripod(inst, c.off_distance));
        norm_of = [&](const Word& g) {
            Rat s(0);
            Rat bn = coboundary_beta<Rat>(g).norm1();
            for (size_t i = 0; i < insts.size(); ++i)
                s += tripod_alpha(insts[i], tris[i], g).norm1() + bn;
            return s.convert_to<double>();
        };
    } else {
        for (const QTInstance& inst : insts)
            decs.push_back(make_decay(inst, c.k, c.j_max, c.tail_tol));
        norm_of = [&](const Word& g) {
            double s = 0;
            double bn = coboundary_beta<double>(g).norm1();
            for (size_t i = 0; i < insts.size(); ++i)
                s += decay_alpha_norm(insts[i], decs[i], g) + bn;
            return s;
        };
    }
    sum_of = [&](const Word& g) {
        long s = 0;
        for (const QTInstance& inst : insts) {
            std::vector<AxisBase> one{inst.fam};
            s += truncated_sum(one, Word{}, g, qc.L, qc.cand_radius);
        }
        return s;
    };

    r.table.name = "profile";
    r.table.cols = {"r", "min_norm", "mean_norm", "max_norm", "fitted_C", "sum_truncated"};
    double last_min = 0, min_r2 = 0;
    for (int rad = 0; rad <= c.profile_radius; ++rad) {
        double mn = 0, mx = 0, sum = 0, fit = 0;
        long cnt = 0, str = 0;
        bool first = true;
        for (const Word& g : sphere(rad)) {
            double nz = norm_of(g);
            long ts = sum_of(g);
            if (first || nz < mn) mn = nz;
            if (first || nz > mx) mx = nz;
            first = false;
            sum += nz;
            ++cnt;
            if (ts > 0) {
                double cg = (-nz + std::sqrt(nz * nz + 4.0 * double(ts))) / 2;
                fit = std::max(fit, cg);
            }
            str = std::max(str, ts);
        }
        r.table.row({fmt(long(rad)), fmt(mn), fmt(sum / double(cnt)), fmt(mx), fmt(fit),
                     fmt(str)});
        last_min = mn;
        if (rad == std::min(2, c.profile_radius)) min_r2 = mn;
    }
    r.summary.put("radius", fmt(long(c.profile_radius)));
    r.summary.put("min_last", fmt(last_min));
    r.summary.pass = c.profile_radius < 1 || last_min >= min_r2;
    return r;
}

SuiteResult suite_theta(const Config& c) {
    SuiteResult r;
    r.summary.suite = "theta";
    ThetaReport rep = verify_theta(c.k, c.grid_max, c.j_cap);
    r.table.name = "theta";
    r.table.cols = {"property", "pass"};
    r.table.row({"monotone", rep.monotone ? "1" : "0"});
    r.table.row({"subadditive", rep.subadditive ? "1" : "0"});
    r.table.row({"dominated", rep.dominated ? "1" : "0"});
    r.table.row({"tail_sandwich", rep.tail_ok ? "1" : "0"});
    r.summary.put("k", fmt(long(c.k)));
    r.summary.put("grid_max", fmt(c.grid_max));
    r.summary.put("violations", fmt(rep.violations));
    r.summary.pass = rep.pass();
    return r;
}

SuiteResult run_suite(const std::string& name, const Config& c) {
    if (name == "verify") return suite_verify(c);
    if (name == "defect") return suite_defect(c);
    if (name == "orbit-growth") return suite_orbit_growth(c);
    if (name == "distance-formula") return suite_distance_formula(c);
    if (name == "profile") return suite_profile(c);
    if (name == "theta") return suite_theta(c);
    throw ConfigError("unknown suite: " + name);
}

} // namespace lipact
