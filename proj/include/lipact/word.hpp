#ifndef LIPACT_WORD_HPP
#define LIPACT_WORD_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lipact {

// Letters of F2 = <a,b> as 2-bit codes.  The code order a < a^-1 < b < b^-1
// fixes the lexicographic order used everywhere (enumeration, map iteration),
// and c ^ 1 is the inverse letter.
enum Letter : int { LA = 0, LAi = 1, LB = 2, LBi = 3 };

inline int inv_letter(int c) { return c ^ 1; }

// Freely reduced word, stored packed (32 letters per uint64_t).  Unused bits
// are kept zero so that equality and hashing can work on the raw blocks.
class Word {
public:
    Word() = default;

    int size() const { return n_; }
    bool empty() const { return n_ == 0; }

    int at(int i) const { return int(blk_[size_t(i) >> 5] >> (2 * (i & 31))) & 3; }
    int last() const { return at(n_ - 1); }

    // append one letter, cancelling against the current last letter
    void push(int c) {
        if (n_ > 0 && last() == inv_letter(c)) { pop(); return; }
        size_t b = size_t(n_) >> 5;
        if (b == blk_.size()) blk_.push_back(0);
        blk_[b] |= uint64_t(c) << (2 * (n_ & 31));
        ++n_;
    }

    void pop() {
        --n_;
        blk_[size_t(n_) >> 5] &= ~(uint64_t(3) << (2 * (n_ & 31)));
        if ((n_ & 31) == 0 && blk_.size() > size_t(n_) >> 5) blk_.pop_back();
    }

    Word prefix(int len) const {
        Word p;
        for (int i = 0; i < len; ++i) p.push_raw(at(i));
        return p;
    }

    Word inverse() const {
        Word r;
        for (int i = n_ - 1; i >= 0; --i) r.push_raw(inv_letter(at(i)));
        return r;
    }

    friend Word operator*(const Word& x, const Word& y) {
        Word r = x;
        for (int i = 0; i < y.n_; ++i) r.push(y.at(i));
        return r;
    }

    bool operator==(const Word& o) const { return n_ == o.n_ && blk_ == o.blk_; }

    // length-then-lex; this is the global index order of the artifact
    std::strong_ordering operator<=>(const Word& o) const {
        if (n_ != o.n_) return n_ <=> o.n_;
        for (int i = 0; i < n_; ++i)
            if (at(i) != o.at(i)) return at(i) <=> o.at(i);
        return std::strong_ordering::equal;
    }

    size_t hash() const {
        uint64_t h = uint64_t(n_) * 0x9e3779b97f4a7c15ull;
        for (uint64_t b : blk_) {
            h ^= b + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return size_t(h);
    }

    // serialization alphabet: a, A = a^-1, b, B = b^-1; empty string = id
    std::string str() const;
    static Word parse(const std::string& s);

private:
    // append without reduction; only for building from already-reduced input
    void push_raw(int c) {
        size_t b = size_t(n_) >> 5;
        if (b == blk_.size()) blk_.push_back(0);
        blk_[b] |= uint64_t(c) << (2 * (n_ & 31));
        ++n_;
    }

    std::vector<uint64_t> blk_;
    int n_ = 0;
};

struct WordHash {
    size_t operator()(const Word& w) const { return w.hash(); }
};

int common_prefix_len(const Word& x, const Word& y);
int distance(const Word& x, const Word& y);

// oriented geodesic segment; vertices listed from origin to terminus
struct Segment {
    Word from, to;
    std::vector<Word> vertices;   // size = distance(from,to) + 1
};

Segment geodesic(const Word& x, const Word& y);

// centre of the tripod spanned by x, y, z
Word median(const Word& x, const Word& y, const Word& z);

// true iff sub's vertices all lie on sup with matching orientation
bool contains_oriented(const Segment& sub, const Segment& sup);

// all reduced words of length <= radius, length-then-lex order.
// count = 1 + sum_{r=1..radius} 4*3^(r-1); throws if it would exceed cap.
std::vector<Word> ball(int radius, uint64_t cap = 10000000);

// words of length exactly r, in lex order
std::vector<Word> sphere(int r, uint64_t cap = 10000000);

uint64_t ball_size(int radius);

} // namespace lipact

#endif
