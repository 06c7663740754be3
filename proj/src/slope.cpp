#include "branch2/slope.hpp"

#include <charconv>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace branch2 {

Slope::Slope(std::int64_t p, std::int64_t q) {
    if (p == 0 && q == 0) throw std::domain_error("Slope: 0/0 is not a slope");
    if (q < 0) { p = -p; q = -q; }
    const std::int64_t g = std::gcd(p < 0 ? -p : p, q);
    if (g > 1) { p /= g; q /= g; }
    if (q == 0) p = 1;  // 1/0 and -1/0 are the same slope
    p_ = p;
    q_ = q;
}

std::string Slope::str() const {
    if (is_infinite()) return "inf";
    std::string s = std::to_string(p_);
    if (q_ != 1) s += "/" + std::to_string(q_);
    return s;
}

namespace {

bool parse_int(std::string_view text, std::int64_t& out) {
    if (text.empty()) return false;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    auto [ptr, ec] = std::from_chars(first, last, out);
    return ec == std::errc() && ptr == last;
}

}  // namespace

Slope parse_slope(std::string_view text) {
    if (text == "inf") return Slope::infinity();
    const auto slash = text.find('/');
    std::int64_t p = 0, q = 1;
    if (slash == std::string_view::npos) {
        if (!parse_int(text, p)) throw std::domain_error("Slope: cannot parse '" + std::string(text) + "'");
        return Slope(p);
    }
    if (!parse_int(text.substr(0, slash), p) || !parse_int(text.substr(slash + 1), q))
        throw std::domain_error("Slope: cannot parse '" + std::string(text) + "'");
    if (q == 0 && p == 0) throw std::domain_error("Slope: 0/0 is not a slope");
    return Slope(p, q);
}

Mat2 letter_matrix(SL2Letter l) {
    switch (l) {
        case SL2Letter::S: return {0, -1, 1, 0};
        case SL2Letter::T: return {1, 1, 0, 1};
        case SL2Letter::Tinv: return {1, -1, 0, 1};
    }
    throw std::domain_error("letter_matrix: bad letter");
}

std::string SL2Word::str() const {
    if (letters_.empty()) return "1";
    std::ostringstream out;
    bool first = true;
    std::size_t i = 0;
    while (i < letters_.size()) {
        if (!first) out << ' ';
        first = false;
        if (letters_[i] == SL2Letter::S) {
            out << 'S';
            ++i;
            continue;
        }
        const SL2Letter run = letters_[i];
        std::size_t len = 0;
        while (i < letters_.size() && letters_[i] == run) { ++len; ++i; }
        const std::int64_t exp =
            (run == SL2Letter::T) ? static_cast<std::int64_t>(len) : -static_cast<std::int64_t>(len);
        out << 'T';
        if (exp != 1) out << '^' << exp;
    }
    return out.str();
}

SL2Word slope_to_word(const Slope& s) {
    SL2Word word;
    std::int64_t p = s.p(), q = s.q();
    while (q != 0) {
        // a = ceil(p/q) with q > 0, so the remainder p - a*q lies in (-q, 0].
        std::int64_t a = p / q + ((p % q) > 0 ? 1 : 0);
        const SL2Letter t = a >= 0 ? SL2Letter::T : SL2Letter::Tinv;
        for (std::int64_t k = 0; k < (a < 0 ? -a : a); ++k) word.push_back(t);
        word.push_back(SL2Letter::S);
        // x <- -1/(x - a) maps p/q to q/(a*q - p); the new denominator is in [0, q).
        const std::int64_t np = q, nq = a * q - p;
        p = np;
        q = nq;
    }
    return word;
}

Mat2 word_to_matrix(const SL2Word& w) {
    Mat2 m = Mat2::identity();
    for (SL2Letter l : w.letters()) m = m * letter_matrix(l);
    return m;
}

Slope matrix_to_slope(const Mat2& m) {
    if (m.det() != 1) throw std::domain_error("matrix_to_slope: determinant must be 1");
    return Slope(m.a, m.c);
}

}  // namespace branch2
