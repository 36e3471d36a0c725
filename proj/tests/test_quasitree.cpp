#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "lipact/ckgraph.hpp"

using namespace lipact;

TEST_CASE("cyclic reduction") {
    auto [u, c] = cyc_reduce(Word::parse("abaBA"));
    CHECK(u == Word::parse("ab"));
    CHECK(c == Word::parse("a"));
    CHECK(u * c * u.inverse() == Word::parse("abaBA"));
    auto [u2, c2] = cyc_reduce(Word::parse("ab"));
    CHECK(u2.empty());
    CHECK(c2 == Word::parse("ab"));
    CHECK_THROWS(cyc_reduce(Word{}));
}

TEST_CASE("axis base validation") {
    CHECK_THROWS(AxisBase(Word{}));
    CHECK_THROWS(AxisBase(Word::parse("abA")));
    AxisBase f(Word::parse("ab"));
    CHECK(f.m == 2);
    CHECK(f.fwd(0) == LA);
    CHECK(f.fwd(1) == LB);
    CHECK(f.bwd(0) == LBi);
    CHECK(f.bwd(1) == LAi);
}

TEST_CASE("axis points walk the pattern") {
    AxisBase f(Word::parse("ab"));
    Axis ax = make_axis(&f, Word{});
    CHECK(ax.point(0).empty());
    CHECK(ax.point(1) == Word::parse("a"));
    CHECK(ax.point(2) == Word::parse("ab"));
    CHECK(ax.point(-1) == Word::parse("B"));
    CHECK(ax.point(-2) == Word::parse("BA"));
    for (long t = -8; t < 8; ++t) {
        CHECK(distance(ax.point(t), ax.point(t + 1)) == 1);
        CHECK(ax.point(t + f.m) == f.c * ax.point(t));   // c translates the line
    }
}

TEST_CASE("canonical representative is the coset minimum") {
    for (const char* base : {"a", "ab", "aB", "aab"}) {
        AxisBase fam(Word::parse(base));
        for (const Word& g : ball(5)) {
            Word rep = canonical_rep(g, fam);
            // brute minimum over nearby coset elements
            Word best = g, cur = g;
            Word cpow;
            for (int k = 0; k < g.size() + 3; ++k) {
                cpow = cpow * fam.c;
                Word r1 = g * cpow, r2 = g * cpow.inverse();
                if (r1.size() < best.size() || (r1.size() == best.size() && r1 < best)) best = r1;
                if (r2.size() < best.size() || (r2.size() == best.size() && r2 < best)) best = r2;
            }
            CHECK(rep == best);
            // invariance across the coset
            CHECK(canonical_rep(g * fam.c, fam) == rep);
            CHECK(canonical_rep(g * fam.cinv, fam) == rep);
        }
    }
}

TEST_CASE("point projection is the tree nearest point") {
    for (const char* base : {"a", "ab", "aab"}) {
        AxisBase fam(Word::parse(base));
        for (const Word& g : ball(4)) {
            Axis ax = make_axis(&fam, canonical_rep(g * Word::parse("b"), fam));
            for (const Word& x : ball(4)) {
                long t = proj_point(ax, x);
                long dproj = distance(x, ax.point(t));
                long S = 3 * (x.size() + ax.rep.size() + fam.m) + 4;
                for (long u = -S; u <= S; ++u)
                    CHECK(dproj <= distance(x, ax.point(u)));
            }
        }
    }
}

TEST_CASE("projection distances") {
    AxisBase fam(Word::parse("ab"));
    Axis ax = make_axis(&fam, Word{});
    CHECK(d_Y(ax, Word{}, Word::parse("abab")) == 4);
    CHECK(d_Y(ax, Word::parse("bb"), Word::parse("ba")) == 0);
    CHECK(d_Y(ax, Word::parse("BAB"), Word::parse("abab")) == 7);
    Axis far = make_axis(&fam, Word::parse("bb"));
    // both endpoints on one branch project to a single point
    CHECK(d_Y(far, Word{}, Word::parse("a")) == 0);
}

TEST_CASE("measured projection constant") {
    CHECK(measure_xi(AxisBase(Word::parse("a")), 4) == 0);
    CHECK(measure_xi(AxisBase(Word::parse("b")), 4) == 0);
    CHECK(measure_xi(AxisBase(Word::parse("ab")), 4) == 0);
    CHECK(measure_xi(AxisBase(Word::parse("aB")), 4) == 0);
    // two pattern alignments through one edge: overlapping translates exist
    CHECK(measure_xi(AxisBase(Word::parse("aab")), 4) >= 1);
}

TEST_CASE("truncated sum against full enumeration") {
    std::vector<AxisBase> fams{AxisBase(Word::parse("a")), AxisBase(Word::parse("ab"))};
    for (const Word& g : ball(4)) {
        long fast = truncated_sum(fams, Word{}, g, 2);
        long brute = 0;
        for (const AxisBase& fam : fams) {
            std::set<Word> seen;
            for (const Word& v : ball(g.size() + 2))
                seen.insert(canonical_rep(v, fam));
            for (const Word& rep : seen) {
                Axis Y = make_axis(&fam, rep);
                brute += trunc_at(d_Y(Y, Word{}, g), 2);
            }
        }
        CHECK(fast == brute);
    }
}

TEST_CASE("instance guard rejects K below the projection threshold") {
    QTConfig qc;
    qc.K = 2;
    AxisBase probe(Word::parse("aab"));
    if (measure_xi(probe, 4) >= 1) {
        CHECK_THROWS(QTInstance(Word::parse("aab"), qc));
    }
    CHECK_NOTHROW(QTInstance(Word::parse("ab"), qc));
}

TEST_CASE("local graph distances along the axis") {
    QTConfig qc;   // L = 8, K = 8, eps = 2
    QTInstance inst(Word::parse("ab"), qc);
    CHECK(inst.M == 4);
    CHECK(inst.F == Word::parse("abababab"));
    Word g;
    for (int n = 1; n <= 6; ++n) {
        g = g * Word::parse("ab");
        CKGraph gr = build_local_graph(inst, g);
        CHECK(gr.distance(Word{}, g) == 2 * n);
    }
}

TEST_CASE("graph edges are symmetric and positions indexed") {
    QTInstance inst(Word::parse("ab"), QTConfig{});
    CKGraph gr = build_local_graph(inst, Word::parse("abba"));
    REQUIRE(gr.adj.size() == gr.pos.size());
    for (size_t v = 0; v < gr.adj.size(); ++v)
        for (auto [w, len] : gr.adj[v]) {
            bool back = false;
            for (auto [x, l2] : gr.adj[size_t(w)])
                if (x == int(v) && l2 == len) back = true;
            CHECK(back);
        }
    for (size_t v = 0; v < gr.pos.size(); ++v) {
        auto it = gr.by_pos.find(gr.pos[v]);
        REQUIRE(it != gr.by_pos.end());
        CHECK(std::count(it->second.begin(), it->second.end(), int(v)) == 1);
    }
}

TEST_CASE("counting sets on a power of the shift element") {
    QTInstance inst(Word::parse("ab"), QTConfig{});
    Word g = inst.F * inst.F;
    WSets ws = w_sets_qt(inst, g);
    std::set<Word> plus(ws.plus.begin(), ws.plus.end());
    CHECK(plus.count(Word{}) == 1);
    CHECK(plus.count(inst.F) == 1);
    CHECK(ws.minus.empty());
    // reversed orientation swaps the sets
    WSets wsi = w_sets_qt(inst, g.inverse());
    CHECK(!wsi.minus.empty());
}

TEST_CASE("counting sets stay disjoint") {
    QTInstance inst(Word::parse("ab"), QTConfig{});
    for (const Word& g : ball(5)) {
        WSets ws = w_sets_qt(inst, g);
        std::set<Word> plus(ws.plus.begin(), ws.plus.end());
        for (const Word& h : ws.minus) CHECK(plus.count(h) == 0);
    }
}

TEST_CASE("runs shorter than the cross threshold stay visible with K=2") {
    QTConfig qc;
    qc.L = 2;
    qc.K = 2;
    QTInstance inst(Word::parse("a"), qc);
    WSets ws = w_sets_qt(inst, Word::parse("abaaaab"));
    CHECK(ws.plus.size() >= 3);
}

TEST_CASE("truncated sum is bounded by the graph distance") {
    QTInstance inst(Word::parse("ab"), QTConfig{});
    std::vector<AxisBase> fams{inst.fam};
    for (const Word& g : ball(4)) {
        long sum = truncated_sum(fams, Word{}, g, inst.cfg.L);
        CKGraph gr = build_local_graph(inst, g);
        long dck = gr.distance(Word{}, g);
        REQUIRE(dck >= 0);
        CHECK(sum <= 4 * dck);
    }
    // non-vacuous terms along the axis
    Word g;
    for (int n = 1; n <= 8; ++n) {
        g = g * Word::parse("ab");
        long sum = truncated_sum(fams, Word{}, g, inst.cfg.L);
        CHECK(sum == (2 * n >= inst.cfg.L ? 2 * n : 0));
        CKGraph gr = build_local_graph(inst, g);
        CHECK(sum <= 4 * gr.distance(Word{}, g));
    }
}

TEST_CASE("diagnostics aggregate cleanly") {
    QTInstance inst(Word::parse("ab"), QTConfig{});
    QTDiagnostics d = qt_diagnostics(inst, 3);
    CHECK(d.checked == 53);
    CHECK(d.disjoint_violations == 0);
    CHECK(d.formula_violations == 0);
    CHECK(d.xi == 0);
    CHECK(d.delta_meas <= 4.0);
}

TEST_CASE("qt_sum translates the base vector") {
    VecQ e = delta<Rat>(Word{}) - delta<Rat>(Word::parse("aa"));
    WSets ws;
    ws.plus = {Word{}, Word::parse("ab")};
    ws.minus = {Word::parse("b")};
    VecQ s = qt_sum<Rat>(ws, e);
    VecQ want = e + translate(Word::parse("ab"), e) - translate(Word::parse("b"), e);
    CHECK(s == want);
}
