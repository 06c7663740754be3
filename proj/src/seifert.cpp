#include "branch2/seifert.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace branch2 {

BezoutPair bezout(std::int64_t p, std::int64_t q) {
    if (q < 2) throw std::domain_error("bezout needs q >= 2");
    // Extended Euclid on (p mod q, q) gives the inverse of p modulo q.
    std::int64_t r0 = ((p % q) + q) % q, r1 = q;
    std::int64_t x0 = 1, x1 = 0;
    while (r1 != 0) {
        const std::int64_t k = r0 / r1;
        r0 -= k * r1;
        std::swap(r0, r1);
        x0 -= k * x1;
        std::swap(x0, x1);
    }
    if (r0 != 1) throw std::domain_error("bezout needs coprime p, q");
    const std::int64_t u = ((x0 % q) + q) % q;
    return {u, (1 - p * u) / q};
}

SeifertInvariants::SeifertInvariants(std::int64_t b, std::vector<SeifertFiber> fibers)
    : b_(b), fibers_(std::move(fibers)) {
    for (const auto& f : fibers_)
        if (f.alpha == 0) throw std::domain_error("Seifert fiber with alpha = 0");
}

std::string SeifertInvariants::str() const {
    std::ostringstream out;
    out << "{" << b_ << ",(Oo,0)";
    for (const auto& f : fibers_) out << ",(" << f.alpha << "," << f.beta << ")";
    out << "}";
    return out.str();
}

SeifertInvariants SeifertInvariants::normalized() const {
    std::vector<SeifertFiber> sorted = fibers_;
    std::stable_sort(sorted.begin(), sorted.end(),
                     [](const SeifertFiber& a, const SeifertFiber& b) {
                         const std::int64_t aa = a.alpha < 0 ? -a.alpha : a.alpha;
                         const std::int64_t bb = b.alpha < 0 ? -b.alpha : b.alpha;
                         if (aa != bb) return aa < bb;
                         return a.beta < b.beta;
                     });
    return SeifertInvariants(b_, std::move(sorted));
}

namespace {

[[noreturn]] void bad_invariants(const std::string& text) {
    throw std::domain_error("bad Seifert invariants '" + text + "'");
}

std::int64_t take_int(const std::string& text, const std::string& s, std::size_t& pos) {
    std::size_t end = pos;
    if (end < s.size() && (s[end] == '-' || s[end] == '+')) ++end;
    while (end < s.size() && s[end] >= '0' && s[end] <= '9') ++end;
    if (end == pos || (end == pos + 1 && !(s[pos] >= '0' && s[pos] <= '9')))
        bad_invariants(text);
    const std::int64_t v = std::stoll(s.substr(pos, end - pos));
    pos = end;
    return v;
}

void expect(const std::string& text, const std::string& s, std::size_t& pos,
            const std::string& lit) {
    if (s.compare(pos, lit.size(), lit) != 0) bad_invariants(text);
    pos += lit.size();
}

}  // namespace

SeifertInvariants parse_seifert_invariants(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '\t' && c != '\n' && c != '\r') s += c;

    std::size_t pos = 0;
    expect(text, s, pos, "{");
    const std::int64_t b = take_int(text, s, pos);
    expect(text, s, pos, ",(Oo,0)");
    std::vector<SeifertFiber> fibers;
    while (pos < s.size() && s[pos] == ',') {
        ++pos;
        expect(text, s, pos, "(");
        const std::int64_t alpha = take_int(text, s, pos);
        expect(text, s, pos, ",");
        const std::int64_t beta = take_int(text, s, pos);
        expect(text, s, pos, ")");
        if (alpha == 0) bad_invariants(text);
        fibers.push_back({alpha, beta});
    }
    expect(text, s, pos, "}");
    if (pos != s.size()) bad_invariants(text);
    return SeifertInvariants(b, std::move(fibers));
}

SeifertInvariants quotient_invariants(std::int64_t p, std::int64_t q, Slope filling) {
    if (p % 2 == 0 || q % 2 == 0)
        throw std::domain_error("quotient invariants need p and q odd");
    if ((p < 0 ? -p : p) < 3 || (q < 0 ? -q : q) < 3)
        throw std::domain_error("quotient invariants need |p|, |q| >= 3");
    const std::int64_t r = filling.p(), s = filling.q();
    if (r % 2 == 0 || s % 2 == 0)
        throw std::domain_error(
            "quotient invariants need an odd/odd filling slope (the even case "
            "is a free quotient)");
    const BezoutPair uv = bezout(p, q);
    return SeifertInvariants(0, {{p, 2 * uv.u}, {q, 2 * uv.v}, {r, s}});
}

std::uint64_t quotient_h1_order(std::int64_t p, std::int64_t q, std::int64_t r,
                                std::int64_t s) {
    if (p % 2 == 0 || q % 2 == 0)
        throw std::domain_error("quotient order needs p and q odd");
    if ((p < 0 ? -p : p) < 3 || (q < 0 ? -q : q) < 3)
        throw std::domain_error("quotient order needs |p|, |q| >= 3");
    if (r % 2 == 0 || s % 2 == 0) throw std::domain_error("quotient order needs r, s odd");
    if (std::gcd(p < 0 ? -p : p, q < 0 ? -q : q) != 1)
        throw std::domain_error("quotient order needs coprime p, q");
    const std::int64_t d = 2 * r - p * q * s;
    return static_cast<std::uint64_t>(d < 0 ? -d : d);
}

H1Order sfs_h1_order(const SeifertInvariants& inv) {
    Rational total(inv.b());
    for (const auto& f : inv.fibers()) total += Rational(f.beta, f.alpha);
    Rational scaled = total;
    for (const auto& f : inv.fibers()) scaled *= Rational(f.alpha);
    // Each fiber denominator divides the product of the alphas.
    const std::int64_t n = scaled.num();
    if (n == 0) return H1Order::infinite();
    return H1Order::finite(static_cast<std::uint64_t>(n < 0 ? -n : n));
}

Rational euler_number(const SeifertInvariants& inv) {
    Rational total(inv.b());
    for (const auto& f : inv.fibers()) total += Rational(f.beta, f.alpha);
    return -total;
}

}  // namespace branch2
