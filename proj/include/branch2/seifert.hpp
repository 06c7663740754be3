#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "branch2/homology.hpp"
#include "branch2/rational.hpp"
#include "branch2/slope.hpp"

namespace branch2 {

// Solution of p*u + q*v = 1 with the canonical choice 0 < u < q.
struct BezoutPair {
    std::int64_t u = 0;
    std::int64_t v = 0;
};

BezoutPair bezout(std::int64_t p, std::int64_t q);

struct SeifertFiber {
    std::int64_t alpha = 1;
    std::int64_t beta = 0;
    bool operator==(const SeifertFiber&) const = default;
};

// Seifert invariants over an orientable base with orientable fibration:
// an integer section obstruction b and exceptional fibers (alpha, beta).
class SeifertInvariants {
public:
    SeifertInvariants() = default;
    SeifertInvariants(std::int64_t b, std::vector<SeifertFiber> fibers);

    std::int64_t b() const { return b_; }
    const std::vector<SeifertFiber>& fibers() const { return fibers_; }

    // Brace notation, e.g. "{0,(Oo,0),(3,4),(5,-2),(1,1)}".
    std::string str() const;

    // Same invariants with fibers sorted by |alpha| then beta.
    SeifertInvariants normalized() const;

    bool operator==(const SeifertInvariants&) const = default;

private:
    std::int64_t b_ = 0;
    std::vector<SeifertFiber> fibers_;
};

SeifertInvariants parse_seifert_invariants(const std::string& text);

// Invariants of the quotient of r/s filling on the (p,q) torus knot by the
// involution that fixes both factors setwise: base S^2, b = 0, fibers
// (p, 2u), (q, 2v), (r, s) with (u, v) = bezout(p, q). Requires p, q odd
// coprime of absolute value at least 3 and r, s both odd.
SeifertInvariants quotient_invariants(std::int64_t p, std::int64_t q, Slope filling);

// Order of first homology of that quotient: |2r - pqs|.
std::uint64_t quotient_h1_order(std::int64_t p, std::int64_t q, std::int64_t r,
                                std::int64_t s);

// Order of first homology of the Seifert manifold itself:
// |alpha_1 ... alpha_n * (b + sum beta_i/alpha_i)|, 0 meaning infinite.
H1Order sfs_h1_order(const SeifertInvariants& inv);

// Euler number -(b + sum beta_i/alpha_i) of the fibration.
Rational euler_number(const SeifertInvariants& inv);

}  // namespace branch2
