#ifndef LIPACT_VEC_HPP
#define LIPACT_VEC_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cmath>
#include <map>
#include <random>

#include "lipact/word.hpp"

namespace lipact {

// exact scalar (default mode); float mode uses plain double and exists only
// for the decay-vector suites
using Rat = boost::multiprecision::cpp_rational;

inline Rat scalar_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }
inline double scalar_abs(double x) { return std::fabs(x); }

// finitely supported vector indexed by group elements; no stored zeros.
// map iteration order is the global length-then-lex order of Word, which is
// what makes float-mode sums reproducible.
template <class S>
struct Vec {
    std::map<Word, S> m;

    bool is_zero() const { return m.empty(); }

    void add(const Word& x, const S& c) {
        if (c == S(0)) return;
        auto [it, fresh] = m.try_emplace(x, c);
        if (!fresh) {
            it->second += c;
            if (it->second == S(0)) m.erase(it);
        }
    }

    S at(const Word& x) const {
        auto it = m.find(x);
        return it == m.end() ? S(0) : it->second;
    }

    Vec& operator+=(const Vec& o) {
        for (auto& [x, c] : o.m) add(x, c);
        return *this;
    }
    Vec& operator-=(const Vec& o) {
        for (auto& [x, c] : o.m) add(x, S(-c));
        return *this;
    }
    friend Vec operator+(Vec u, const Vec& v) { u += v; return u; }
    friend Vec operator-(Vec u, const Vec& v) { u -= v; return u; }
    friend Vec operator*(const S& c, const Vec& v) {
        Vec r;
        if (c == S(0)) return r;
        for (auto& [x, e] : v.m) r.m.emplace(x, c * e);
        return r;
    }
    friend Vec operator-(const Vec& v) { return S(-1) * v; }
    bool operator==(const Vec& o) const { return m == o.m; }

    S norm1() const {
        S s(0);
        for (auto& [x, c] : m) s += scalar_abs(c);
        return s;
    }

    S entry_sum() const {
        S s(0);
        for (auto& [x, c] : m) s += c;
        return s;
    }

    bool zero_sum() const { return entry_sum() == S(0); }
};

using VecQ = Vec<Rat>;
using VecD = Vec<double>;

template <class S>
Vec<S> delta(const Word& x) {
    Vec<S> v;
    v.m.emplace(x, S(1));
    return v;
}

template <class S>
Vec<S> linear_combine(const std::vector<std::pair<S, Vec<S>>>& terms) {
    Vec<S> r;
    for (auto& [c, v] : terms)
        for (auto& [x, e] : v.m) r.add(x, c * e);
    return r;
}

// pi(g)f(.) = f(g^-1 .): the entry at x moves to g*x.  Norm-preserving.
template <class S>
Vec<S> translate(const Word& g, const Vec<S>& v) {
    Vec<S> r;
    for (auto& [x, c] : v.m) r.m.emplace(g * x, c);
    return r;
}

// beta(g) = delta_{x0} - delta_{g x0}
template <class S>
Vec<S> coboundary_beta(const Word& g, const Word& x0 = Word{}) {
    Vec<S> r;
    Word gx = g * x0;
    if (gx == x0) return r;
    r.m.emplace(x0, S(1));
    r.m.emplace(gx, S(-1));
    return r;
}

// F drops the x0 coordinate of a zero-sum vector; F_inv restores it as minus
// the sum.  ||F|| = 1, ||F_inv|| <= 2 with the bound attained on deltas.
template <class S>
Vec<S> iso_F(const Vec<S>& v, const Word& x0 = Word{}) {
    if (!v.zero_sum()) throw std::invalid_argument("iso_F needs a zero-sum vector");
    Vec<S> r = v;
    r.m.erase(x0);
    return r;
}

template <class S>
Vec<S> iso_F_inv(const Vec<S>& v, const Word& x0 = Word{}) {
    if (v.m.count(x0)) throw std::invalid_argument("iso_F_inv input supported on x0");
    Vec<S> r = v;
    S s = v.entry_sum();
    if (s != S(0)) r.m.emplace(x0, S(-s));
    return r;
}

// deterministic sampler for the randomized suites; the stream is owned by the
// caller and passed around by reference so runs are reproducible from a seed
struct Rng {
    std::mt19937_64 eng;
    explicit Rng(uint64_t seed) : eng(seed) {}
    uint64_t next(uint64_t n) { return eng() % n; }   // n > 0
    int coeff() {
        // nonzero integer in [-3,3]
        int c = int(eng() % 6) - 3;
        return c >= 0 ? c + 1 : c;
    }
};

// random zero-sum exact vector: a few signed delta-pairs with small integer
// coefficients, indices drawn from the supplied pool
inline VecQ random_zero_sum(Rng& rng, const std::vector<Word>& pool) {
    VecQ v;
    int pairs = 1 + int(rng.next(3));
    for (int i = 0; i < pairs; ++i) {
        const Word& x = pool[rng.next(pool.size())];
        const Word& y = pool[rng.next(pool.size())];
        Rat c(rng.coeff());
        v.add(x, c);
        v.add(y, -c);
    }
    return v;
}

// max over samples of ||T v|| / ||v||: a certified lower bound on the
// operator norm of T restricted to the sampled subspace
template <class S, class Op, class Sampler>
S op_norm_lower_estimate(Op&& T, int sample_count, Rng& rng, Sampler&& sample) {
    S best(0);
    for (int i = 0; i < sample_count; ++i) {
        Vec<S> v = sample(rng);
        S nv = v.norm1();
        if (nv == S(0)) continue;
        S r = T(v).norm1() / nv;
        if (r > best) best = r;
    }
    return best;
}

// serialization: one "index<TAB>p/q" line per entry, index order
std::string serialize(const VecQ& v);
std::string serialize(const VecD& v);

} // namespace lipact

#endif
