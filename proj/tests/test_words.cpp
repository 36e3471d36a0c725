#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>
#include <set>

#include "lipact/word.hpp"

using namespace lipact;

// reference implementation: reduction on a plain letter stack
static std::vector<int> naive_reduce(const std::vector<int>& letters) {
    std::vector<int> st;
    for (int c : letters) {
        if (!st.empty() && st.back() == inv_letter(c)) st.pop_back();
        else st.push_back(c);
    }
    return st;
}

static Word from_letters(const std::vector<int>& letters) {
    Word w;
    for (int c : letters) w.push(c);
    return w;
}

TEST_CASE("letters and inverses") {
    CHECK(inv_letter(LA) == LAi);
    CHECK(inv_letter(LAi) == LA);
    CHECK(inv_letter(LB) == LBi);
    CHECK(inv_letter(LBi) == LB);
}

TEST_CASE("push performs free reduction (randomized against the stack oracle)") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 500; ++trial) {
        int len = int(rng() % 120);
        std::vector<int> letters;
        for (int i = 0; i < len; ++i) letters.push_back(int(rng() % 4));
        std::vector<int> red = naive_reduce(letters);
        Word w = from_letters(letters);
        REQUIRE(w.size() == int(red.size()));
        for (int i = 0; i < w.size(); ++i) CHECK(w.at(i) == red[size_t(i)]);
    }
}

TEST_CASE("parse and str round-trip") {
    for (const char* s : {"", "a", "A", "b", "B", "ab", "aB", "abAB", "bbbaaaBBB"}) {
        Word w = Word::parse(s);
        CHECK(w.str() == s);
        CHECK(Word::parse(w.str()) == w);
    }
    CHECK(Word::parse("aA").empty());       // parse reduces
    CHECK(Word::parse("abBA").empty());
    CHECK_THROWS(Word::parse("ax"));
}

TEST_CASE("multiplication matches concatenate-then-reduce") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        std::vector<int> u, v;
        for (int i = 0; i < int(rng() % 40); ++i) u.push_back(int(rng() % 4));
        for (int i = 0; i < int(rng() % 40); ++i) v.push_back(int(rng() % 4));
        std::vector<int> cat = u;
        cat.insert(cat.end(), v.begin(), v.end());
        CHECK(from_letters(u) * from_letters(v) == from_letters(cat));
    }
}

TEST_CASE("inverse") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<int> u, v;
        for (int i = 0; i < int(rng() % 30); ++i) u.push_back(int(rng() % 4));
        for (int i = 0; i < int(rng() % 30); ++i) v.push_back(int(rng() % 4));
        Word x = from_letters(u), y = from_letters(v);
        CHECK((x * x.inverse()).empty());
        CHECK((x.inverse() * x).empty());
        CHECK((x * y).inverse() == y.inverse() * x.inverse());
    }
}

TEST_CASE("prefix and pop") {
    Word w = Word::parse("abAB");
    CHECK(w.prefix(0).empty());
    CHECK(w.prefix(2) == Word::parse("ab"));
    CHECK(w.prefix(4) == w);
    Word x = w;
    x.pop();
    CHECK(x == Word::parse("abA"));
}

TEST_CASE("order is length-then-lex and matches ball enumeration") {
    auto b = ball(3);
    for (size_t i = 1; i < b.size(); ++i) CHECK(b[i - 1] < b[i]);
    CHECK(b.front().empty());
    CHECK(b[1] == Word::parse("a"));
    CHECK(b[2] == Word::parse("A"));
    CHECK(b[3] == Word::parse("b"));
    CHECK(b[4] == Word::parse("B"));
    CHECK(Word::parse("B") < Word::parse("aa"));
}

TEST_CASE("ball and sphere counts") {
    CHECK(ball_size(0) == 1);
    CHECK(ball_size(1) == 5);
    CHECK(ball_size(3) == 53);
    CHECK(ball_size(6) == 1457);
    CHECK(ball_size(8) == 13121);
    CHECK(ball_size(10) == 118097);
    CHECK(ball(3).size() == 53);
    CHECK(ball(6).size() == 1457);
    uint64_t expect = 4;
    for (int r = 1; r <= 6; ++r) {
        CHECK(sphere(r).size() == expect);
        expect *= 3;
    }
    auto b4 = ball(4);
    std::set<Word> dedup(b4.begin(), b4.end());
    CHECK(dedup.size() == ball_size(4));
    CHECK_THROWS(ball(10, 1000));
}

TEST_CASE("distance agrees with the reduced quotient length") {
    auto b = ball(3);
    for (const Word& x : b)
        for (const Word& y : b) {
            CHECK(distance(x, y) == (x.inverse() * y).size());
            CHECK(distance(x, y) == distance(y, x));
        }
    CHECK(distance(Word{}, Word::parse("abab")) == 4);
}

TEST_CASE("geodesic structure") {
    std::mt19937 rng(17);
    auto b = ball(4);
    for (int trial = 0; trial < 200; ++trial) {
        const Word& x = b[rng() % b.size()];
        const Word& y = b[rng() % b.size()];
        Segment s = geodesic(x, y);
        REQUIRE(int(s.vertices.size()) == distance(x, y) + 1);
        CHECK(s.vertices.front() == x);
        CHECK(s.vertices.back() == y);
        for (size_t i = 1; i < s.vertices.size(); ++i)
            CHECK(distance(s.vertices[i - 1], s.vertices[i]) == 1);
        Segment t = geodesic(y, x);
        std::vector<Word> rev(s.vertices.rbegin(), s.vertices.rend());
        CHECK(t.vertices == rev);
    }
}

TEST_CASE("median lies on all three pairwise geodesics") {
    std::mt19937 rng(19);
    auto b = ball(4);
    auto on_geo = [](const Word& m, const Word& x, const Word& y) {
        for (const Word& v : geodesic(x, y).vertices)
            if (v == m) return true;
        return false;
    };
    for (int trial = 0; trial < 200; ++trial) {
        const Word& x = b[rng() % b.size()];
        const Word& y = b[rng() % b.size()];
        const Word& z = b[rng() % b.size()];
        Word m = median(x, y, z);
        CHECK(on_geo(m, x, y));
        CHECK(on_geo(m, y, z));
        CHECK(on_geo(m, x, z));
        // the tripod centre is the unique triple intersection
        int count = 0;
        for (const Word& v : geodesic(x, y).vertices)
            if (on_geo(v, y, z) && on_geo(v, x, z)) ++count;
        CHECK(count == 1);
    }
}

TEST_CASE("median on concrete tripods") {
    CHECK(median(Word::parse("aa"), Word::parse("ab"), Word{}) == Word::parse("a"));
    CHECK(median(Word{}, Word::parse("b"), Word::parse("ba")) == Word::parse("b"));
    CHECK(median(Word::parse("a"), Word::parse("a"), Word::parse("bb")) == Word::parse("a"));
}

TEST_CASE("contains_oriented against brute enumeration of subsegments") {
    Segment sup = geodesic(Word::parse("BA"), Word::parse("abab"));
    const auto& vs = sup.vertices;
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = 0; j < vs.size(); ++j) {
            Segment sub = geodesic(vs[i], vs[j]);
            CHECK(contains_oriented(sub, sup) == (i <= j));
        }
    // off-segment start
    Segment off = geodesic(Word::parse("bb"), Word::parse("ab"));
    CHECK(!contains_oriented(off, sup));
}

TEST_CASE("hash consistency") {
    auto b = ball(3);
    for (const Word& x : b) {
        Word copy = Word::parse(x.str());
        CHECK(copy.hash() == x.hash());
    }
}
