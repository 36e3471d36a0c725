#ifndef LIPACT_BROOKS_HPP
#define LIPACT_BROOKS_HPP

#include <functional>
#include <unordered_map>

#include "lipact/vec.hpp"

namespace lipact {

// counting quasi-cocycle data: a nonempty reduced word w and a zero-sum
// finitely supported exact vector e
struct BrooksSpec {
    Word w;
    VecQ e;
    BrooksSpec(Word w_, VecQ e_) : w(std::move(w_)), e(std::move(e_)) {
        if (w.empty()) throw std::invalid_argument("Brooks word must be nonempty");
        if (!e.zero_sum()) throw std::invalid_argument("Brooks vector must be zero-sum");
    }
    // defaults w = ab, e = delta_id - delta_{a^2}
    static BrooksSpec standard();
};

// w+(g) = { h : [h,hw] oriented-subsegment of [id,g] },
// w-(g) = { h : [h,hw] oriented-subsegment of [g,id] }.
// Computed by scanning the letters of g; h is the corresponding prefix.
std::pair<std::vector<Word>, std::vector<Word>> w_sets(const Word& w, const Word& g);

// eta(g) = sum_{h in w+} h.e - sum_{h in w-} h.e
VecQ eta(const BrooksSpec& spec, const Word& g);

// evaluator with memo cache and measured-defect metadata
struct QuasiCocycle {
    std::function<VecQ(const Word&)> raw;
    std::string invariance = "trivial stabilizer (defined on elements)";
    int defect_radius = -1;
    Rat measured_defect = 0;

    const VecQ& operator()(const Word& g) const {
        auto it = cache_.find(g);
        if (it != cache_.end()) return it->second;
        return cache_.emplace(g, raw(g)).first->second;
    }

private:
    mutable std::unordered_map<Word, VecQ, WordHash> cache_;
};

QuasiCocycle brooks_cocycle(const BrooksSpec& spec);
QuasiCocycle coboundary_cocycle();   // alpha = beta, a genuine cocycle

// alpha(gh) - alpha(g) - g.alpha(h)
VecQ defect_vec(const QuasiCocycle& a, const Word& g, const Word& h);

struct DefectResult {
    Rat value = 0;
    Word argmax_g, argmax_h;
    uint64_t pairs = 0;
};

// exact max of ||defect_vec|| over g,h in ball(R); also stamps the result
// into the cocycle's metadata
DefectResult defect_measure(QuasiCocycle& a, int R, uint64_t cap = 10000000);

struct CheckReport {
    uint64_t checked = 0;
    uint64_t violations = 0;
    Word first_bad;
};

// eta(g^-1) = -g^-1.eta(g) for all g in ball(R)
CheckReport antisymmetry_check(const BrooksSpec& spec, int R);

} // namespace lipact

#endif
