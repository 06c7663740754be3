#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace branch2 {

// A surgery slope: the class p*mu + q*lambda on a torus boundary, kept in
// lowest terms with q >= 0. The slope 1/0 is the slope at infinity (the
// meridian; trivial filling).
class Slope {
public:
    Slope() : p_(1), q_(0) {}  // infinity
    Slope(std::int64_t p) : p_(p), q_(1) {}
    Slope(std::int64_t p, std::int64_t q);

    static Slope infinity() { return Slope(); }

    std::int64_t p() const { return p_; }
    std::int64_t q() const { return q_; }

    bool is_infinite() const { return q_ == 0; }
    bool is_zero() const { return p_ == 0; }

    // "p/q", "p" when q == 1, "inf" for the slope at infinity.
    std::string str() const;

    friend bool operator==(const Slope& a, const Slope& b) {
        return a.p_ == b.p_ && a.q_ == b.q_;
    }
    friend bool operator!=(const Slope& a, const Slope& b) { return !(a == b); }

private:
    std::int64_t p_;
    std::int64_t q_;
};

// Accepts "p/q", "p" and "inf"; throws std::domain_error on anything else.
Slope parse_slope(std::string_view text);

// Integer 2x2 matrix, row-major [[a, b], [c, d]].
struct Mat2 {
    std::int64_t a = 1, b = 0, c = 0, d = 1;

    static Mat2 identity() { return {}; }

    std::int64_t det() const { return a * d - b * c; }

    friend Mat2 operator*(const Mat2& x, const Mat2& y) {
        return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d,
                x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
    }
    friend bool operator==(const Mat2& x, const Mat2& y) {
        return x.a == y.a && x.b == y.b && x.c == y.c && x.d == y.d;
    }
    friend bool operator!=(const Mat2& x, const Mat2& y) { return !(x == y); }
};

// Generators of SL2(Z): S = [[0,-1],[1,0]] (quarter rotation), T = [[1,1],[0,1]]
// (unit twist). T^-1 is admitted so arbitrary words can be evaluated.
enum class SL2Letter { S, T, Tinv };

Mat2 letter_matrix(SL2Letter l);

// A word in S, T, T^-1 read left to right as a matrix product.
class SL2Word {
public:
    SL2Word() = default;
    explicit SL2Word(std::vector<SL2Letter> letters) : letters_(std::move(letters)) {}

    const std::vector<SL2Letter>& letters() const { return letters_; }
    bool empty() const { return letters_.empty(); }
    std::size_t size() const { return letters_.size(); }

    void push_back(SL2Letter l) { letters_.push_back(l); }

    // Runs are grouped with exponents: "T S T^3 S"; the empty word prints "1".
    std::string str() const;

    friend bool operator==(const SL2Word& a, const SL2Word& b) {
        return a.letters_ == b.letters_;
    }
    friend bool operator!=(const SL2Word& a, const SL2Word& b) { return !(a == b); }

private:
    std::vector<SL2Letter> letters_;
};

// Canonical word with W * (1,0)^T = (p,q)^T, from the recursion
// word(inf) = empty, word(x) = T^a S word(-1/(x - a)) with a = ceil(x).
SL2Word slope_to_word(const Slope& s);

Mat2 word_to_matrix(const SL2Word& w);

// Slope carried by the first column; requires det == 1.
Slope matrix_to_slope(const Mat2& m);

}  // namespace branch2
