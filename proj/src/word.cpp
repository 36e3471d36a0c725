#include "lipact/word.hpp"

namespace lipact {

static const char kAlpha[] = "aAbB";

std::string Word::str() const {
    std::string s;
    s.reserve(size_t(n_));
    for (int i = 0; i < n_; ++i) s += kAlpha[at(i)];
    return s;
}

Word Word::parse(const std::string& s) {
    Word w;
    for (char ch : s) {
        int c;
        switch (ch) {
            case 'a': c = LA; break;
            case 'A': c = LAi; break;
            case 'b': c = LB; break;
            case 'B': c = LBi; break;
            default: throw std::invalid_argument("bad letter in word: " + s);
        }
        w.push(c);
    }
    return w;
}

int common_prefix_len(const Word& x, const Word& y) {
    int m = std::min(x.size(), y.size());
    int i = 0;
    while (i < m && x.at(i) == y.at(i)) ++i;
    return i;
}

int distance(const Word& x, const Word& y) {
    int c = common_prefix_len(x, y);
    return x.size() + y.size() - 2 * c;
}

Segment geodesic(const Word& x, const Word& y) {
    Segment s;
    s.from = x;
    s.to = y;
    int c = common_prefix_len(x, y);
    s.vertices.reserve(size_t(x.size() + y.size() - 2 * c + 1));
    for (int len = x.size(); len > c; --len) s.vertices.push_back(x.prefix(len));
    for (int len = c; len <= y.size(); ++len) s.vertices.push_back(y.prefix(len));
    return s;
}

Word median(const Word& x, const Word& y, const Word& z) {
    // rooted at id, the median is the deepest of the three pairwise meets
    int xy = common_prefix_len(x, y);
    int xz = common_prefix_len(x, z);
    int yz = common_prefix_len(y, z);
    if (xy >= xz && xy >= yz) return x.prefix(xy);
    if (xz >= yz) return x.prefix(xz);
    return y.prefix(yz);
}

bool contains_oriented(const Segment& sub, const Segment& sup) {
    int d = distance(sup.from, sup.to);
    auto on = [&](const Word& v) {
        return distance(sup.from, v) + distance(v, sup.to) == d;
    };
    if (!on(sub.from) || !on(sub.to)) return false;
    // both endpoints on sup: the subsegment between them is automatic in a
    // tree, so only the orientation is left to check
    return distance(sup.from, sub.from) <= distance(sup.from, sub.to);
}

uint64_t ball_size(int radius) {
    uint64_t n = 1, sph = 4;
    for (int r = 1; r <= radius; ++r) {
        n += sph;
        sph *= 3;
    }
    return n;
}

std::vector<Word> ball(int radius, uint64_t cap) {
    if (radius < 0) throw std::invalid_argument("negative ball radius");
    uint64_t count = ball_size(radius);
    if (count > cap) throw std::length_error("ball size exceeds cap");
    std::vector<Word> out;
    out.reserve(count);
    out.push_back(Word{});
    size_t lvl_begin = 0;
    for (int r = 1; r <= radius; ++r) {
        size_t lvl_end = out.size();
        for (size_t i = lvl_begin; i < lvl_end; ++i) {
            for (int c = 0; c < 4; ++c) {
                if (out[i].size() > 0 && out[i].last() == inv_letter(c)) continue;
                Word w = out[i];
                w.push(c);
                out.push_back(std::move(w));
            }
        }
        lvl_begin = lvl_end;
    }
    return out;
}

std::vector<Word> sphere(int r, uint64_t cap) {
    auto b = ball(r, cap);
    std::vector<Word> out;
    for (auto& w : b)
        if (w.size() == r) out.push_back(std::move(w));
    return out;
}

} // namespace lipact
