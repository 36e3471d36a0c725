#ifndef LIPACT_DERIVATION_HPP
#define LIPACT_DERIVATION_HPP

#include "lipact/brooks.hpp"

namespace lipact {

// f = sum_{x != x0} (-f(x)) beta(g_x) with g_x = x (stabilizer of x0 = id is
// trivial, so the coset representative of x is x itself)
std::vector<std::pair<Rat, Word>> beta_expansion(const VecQ& f, const Word& x0 = Word{});

// D(g)f = sum_x c_x (alpha(g g_x) - alpha(g) - g.alpha(g_x)); never a matrix
VecQ derivation_apply(const QuasiCocycle& a, const Word& g, const VecQ& f);

// the cocycle zeta_D(g) = (alpha(g), beta(g)) of the block action on E + E
struct Zeta {
    VecQ alpha, beta;
    bool operator==(const Zeta& o) const = default;
    Rat norm1() const { return alpha.norm1() + beta.norm1(); }
};

Zeta zeta_D(const QuasiCocycle& a, const Word& g);

// linear part: pi_D(g)(x,y) = (g.x + D(g)y, g.y)
std::pair<VecQ, VecQ> pi_D_apply(const QuasiCocycle& a, const Word& g,
                                 const VecQ& x, const VecQ& y);

// affine action: pi_D(g)(x,y) + zeta_D(g)
std::pair<VecQ, VecQ> affine_apply(const QuasiCocycle& a, const Word& g,
                                   const VecQ& x, const VecQ& y);

struct IdentityReport {
    uint64_t pairs = 0;
    uint64_t cocycle_violations = 0;   // zeta_D(gh) = zeta_D(g) + pi_D(g) zeta_D(h)
    uint64_t leibniz_violations = 0;   // D(gh) = D(g)pi(h) + pi(g)D(h) on beta(g')
    uint64_t beta_violations = 0;      // beta(gh) = beta(g) + g.beta(h)
    bool pass() const {
        return cocycle_violations == 0 && leibniz_violations == 0 && beta_violations == 0;
    }
};

// exact checks over all g,h in ball(R), Leibniz on the spanning family
// f = beta(g'), g' in ball(R)
IdentityReport verify_identities(const QuasiCocycle& a, int R);

// the action rescaled by s = eps/Delta_R and conjugated by the iso pair on
// both coordinates, so it lives on two copies of plain l1 (coordinates
// supported off x0)
struct ScaledAction {
    const QuasiCocycle* a = nullptr;
    Rat s = 1;
    Rat defect = 0;       // Delta_R used for the rescaling
    Rat lip_bound = 2;    // ||F|| ||F^-1|| (1 + s Delta_R) = 2 (1 + eps)

    std::pair<VecQ, VecQ> linear(const Word& g, const VecQ& u, const VecQ& v) const;
    std::pair<VecQ, VecQ> cocycle(const Word& g) const;   // F-conjugated s.zeta
    std::pair<VecQ, VecQ> affine(const Word& g, const VecQ& u, const VecQ& v) const;
};

// requires a.defect_radius >= 0 (call defect_measure first); s capped at 1
// when the measured defect vanishes
ScaledAction rescale_conjugate(const QuasiCocycle& a, const Rat& eps);

// max over samples of ||linear(g)(u,v)|| / ||(u,v)||, g over ball(g_radius),
// (u,v) random vectors supported off x0
Rat lipschitz_lower_estimate(const ScaledAction& act, int g_radius, int samples,
                             Rng& rng, const std::vector<Word>& pool);

} // namespace lipact

#endif
