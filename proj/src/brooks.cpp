#include "lipact/brooks.hpp"

namespace lipact {

BrooksSpec BrooksSpec::standard() {
    VecQ e;
    e.add(Word{}, 1);
    e.add(Word::parse("aa"), -1);
    return BrooksSpec(Word::parse("ab"), e);
}

std::pair<std::vector<Word>, std::vector<Word>> w_sets(const Word& w, const Word& g) {
    std::vector<Word> plus, minus;
    int n = g.size(), m = w.size();
    Word winv = w.inverse();
    // [h,hw] lies on [id,g] with forward orientation iff the letters of g at
    // [i, i+m) spell w and h = prefix(i); on [g,id] iff the letters at
    // [i, i+m) spell w^-1 and h = prefix(i+m)
    for (int i = 0; i + m <= n; ++i) {
        bool fwd = true, bwd = true;
        for (int j = 0; j < m; ++j) {
            int c = g.at(i + j);
            if (c != w.at(j)) fwd = false;
            if (c != winv.at(j)) bwd = false;
            if (!fwd && !bwd) break;
        }
        if (fwd) plus.push_back(g.prefix(i));
        if (bwd) minus.push_back(g.prefix(i + m));
    }
    return {std::move(plus), std::move(minus)};
}

VecQ eta(const BrooksSpec& spec, const Word& g) {
    auto [plus, minus] = w_sets(spec.w, g);
    VecQ r;
    for (const Word& h : plus)
        for (auto& [x, c] : spec.e.m) r.add(h * x, c);
    for (const Word& h : minus)
        for (auto& [x, c] : spec.e.m) r.add(h * x, -c);
    return r;
}

QuasiCocycle brooks_cocycle(const BrooksSpec& spec) {
    QuasiCocycle qc;
    qc.raw = [spec](const Word& g) { return eta(spec, g); };
    return qc;
}

QuasiCocycle coboundary_cocycle() {
    QuasiCocycle qc;
    qc.raw = [](const Word& g) { return coboundary_beta<Rat>(g); };
    return qc;
}

VecQ defect_vec(const QuasiCocycle& a, const Word& g, const Word& h) {
    return a(g * h) - a(g) - translate(g, a(h));
}

DefectResult defect_measure(QuasiCocycle& a, int R, uint64_t cap) {
    auto B = ball(R, cap);
    DefectResult best;
    for (const Word& g : B) {
        for (const Word& h : B) {
            // a.raw for the product: caching ball(2R) products would not fit
            Rat d = (a.raw(g * h) - a(g) - translate(g, a(h))).norm1();
            ++best.pairs;
            if (d > best.value) {
                best.value = d;
                best.argmax_g = g;
                best.argmax_h = h;
            }
        }
    }
    a.defect_radius = R;
    a.measured_defect = best.value;
    return best;
}

CheckReport antisymmetry_check(const BrooksSpec& spec, int R) {
    CheckReport rep;
    for (const Word& g : ball(R)) {
        Word gi = g.inverse();
        VecQ lhs = eta(spec, gi);
        VecQ rhs = -translate(gi, eta(spec, g));
        ++rep.checked;
        if (!(lhs == rhs)) {
            if (rep.violations == 0) rep.first_bad = g;
            ++rep.violations;
        }
    }
    return rep;
}

} // namespace lipact
