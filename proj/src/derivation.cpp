#include "lipact/derivation.hpp"

namespace lipact {

std::vector<std::pair<Rat, Word>> beta_expansion(const VecQ& f, const Word& x0) {
    if (!f.zero_sum()) throw std::invalid_argument("beta expansion needs a zero-sum vector");
    std::vector<std::pair<Rat, Word>> terms;
    for (auto& [x, c] : f.m) {
        if (x == x0) continue;
        terms.emplace_back(-c, x);
    }
    return terms;
}

VecQ derivation_apply(const QuasiCocycle& a, const Word& g, const VecQ& f) {
    VecQ r;
    for (auto& [c, gx] : beta_expansion(f)) {
        VecQ d = a(g * gx) - a(g) - translate(g, a(gx));
        for (auto& [x, e] : d.m) r.add(x, c * e);
    }
    return r;
}

Zeta zeta_D(const QuasiCocycle& a, const Word& g) {
    return Zeta{a(g), coboundary_beta<Rat>(g)};
}

std::pair<VecQ, VecQ> pi_D_apply(const QuasiCocycle& a, const Word& g,
                                 const VecQ& x, const VecQ& y) {
    return {translate(g, x) + derivation_apply(a, g, y), translate(g, y)};
}

std::pair<VecQ, VecQ> affine_apply(const QuasiCocycle& a, const Word& g,
                                   const VecQ& x, const VecQ& y) {
    auto [u, v] = pi_D_apply(a, g, x, y);
    Zeta z = zeta_D(a, g);
    return {u + z.alpha, v + z.beta};
}

IdentityReport verify_identities(const QuasiCocycle& a, int R) {
    IdentityReport rep;
    auto B = ball(R);
    for (const Word& g : B) {
        for (const Word& h : B) {
            ++rep.pairs;
            Word gh = g * h;

            VecQ bg = coboundary_beta<Rat>(g);
            VecQ bh = coboundary_beta<Rat>(h);
            if (!(coboundary_beta<Rat>(gh) == bg + translate(g, bh)))
                ++rep.beta_violations;

            // zeta_D(gh) = zeta_D(g) + pi_D(g) zeta_D(h): the beta part is the
            // line above, the alpha part is the defining equation of D
            VecQ lhs = a(gh);
            VecQ rhs = a(g) + translate(g, a(h)) + derivation_apply(a, g, bh);
            if (!(lhs == rhs)) ++rep.cocycle_violations;

            for (const Word& gp : B) {
                VecQ f = coboundary_beta<Rat>(gp);
                VecQ l = derivation_apply(a, gh, f);
                VecQ r = derivation_apply(a, g, translate(h, f))
                       + translate(g, derivation_apply(a, h, f));
                if (!(l == r)) ++rep.leibniz_violations;
            }
        }
    }
    return rep;
}

ScaledAction rescale_conjugate(const QuasiCocycle& a, const Rat& eps) {
    if (eps <= 0) throw std::invalid_argument("rescale needs eps > 0");
    if (a.defect_radius < 0)
        throw std::logic_error("measure the defect before rescaling");
    ScaledAction act;
    act.a = &a;
    act.defect = a.measured_defect;
    act.s = act.defect == 0 ? Rat(1) : Rat(eps / act.defect);
    if (act.s > 1) act.s = 1;
    act.lip_bound = 2 * (1 + act.s * act.defect);
    return act;
}

std::pair<VecQ, VecQ> ScaledAction::linear(const Word& g, const VecQ& u, const VecQ& v) const {
    // F pi_{D_s}(g) F^-1 on both coordinates, D_s = s D
    VecQ x = iso_F_inv(u);
    VecQ y = iso_F_inv(v);
    VecQ top = translate(g, x) + s * derivation_apply(*a, g, y);
    VecQ bot = translate(g, y);
    return {iso_F(top), iso_F(bot)};
}

std::pair<VecQ, VecQ> ScaledAction::cocycle(const Word& g) const {
    return {iso_F(s * (*a)(g)), iso_F(coboundary_beta<Rat>(g))};
}

std::pair<VecQ, VecQ> ScaledAction::affine(const Word& g, const VecQ& u, const VecQ& v) const {
    auto [x, y] = linear(g, u, v);
    auto [za, zb] = cocycle(g);
    return {x + za, y + zb};
}

Rat lipschitz_lower_estimate(const ScaledAction& act, int g_radius, int samples,
                             Rng& rng, const std::vector<Word>& pool) {
    auto Bg = ball(g_radius);
    Rat best = 0;
    Word x0;
    for (int i = 0; i < samples; ++i) {
        const Word& g = Bg[rng.next(Bg.size())];
        // difference of two points of l1 + l1: any pair of vectors off x0
        VecQ u = random_zero_sum(rng, pool);
        VecQ v = random_zero_sum(rng, pool);
        u.m.erase(x0);
        v.m.erase(x0);
        Rat n = u.norm1() + v.norm1();
        if (n == 0) continue;
        auto [tu, tv] = act.linear(g, u, v);
        Rat r = (tu.norm1() + tv.norm1()) / n;
        if (r > best) best = r;
    }
    return best;
}

} // namespace lipact
