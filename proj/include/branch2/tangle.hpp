#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "branch2/slope.hpp"

namespace branch2 {

// Twist counts of a rational tangle. Entries alternate between the two twist
// sites by position; the k-th entry is applied after a quarter rotation of
// everything built so far.
class TwistVector {
public:
    TwistVector() = default;
    explicit TwistVector(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {}

    const std::vector<std::int64_t>& entries() const { return entries_; }
    bool empty() const { return entries_.empty(); }

    // Evaluates f <- a1, f <- a_i - 1/f exactly, with 1/0 = inf. The empty
    // vector is the infinity tangle.
    Slope conway_fraction() const;

    std::string str() const;  // "(3, 1)" or "()"

    friend bool operator==(const TwistVector& a, const TwistVector& b) {
        return a.entries_ == b.entries_;
    }

private:
    std::vector<std::int64_t> entries_;
};

// Twist vector whose Conway fraction is s, read off the canonical S/T word.
TwistVector slope_to_twist_vector(const Slope& s);

// One crossing of a diagram: the four incident arc labels in counterclockwise
// order, with arc[0] and arc[2] on the understrand. sign records the
// handedness of the half twist that created the crossing; the checkerboard
// form does not consult it.
struct Crossing {
    std::array<int, 4> arc;
    int sign = +1;
};

// A link diagram in the plane. Arcs are the segments between crossing
// passages; every arc label occurs exactly twice among the crossing slots.
// Components without any crossing are counted in unknotted_loops.
struct PlanarDiagram {
    std::vector<Crossing> crossings;
    int unknotted_loops = 0;
    std::vector<std::vector<int>> components;  // arcs of each crossing-bearing component
    std::vector<int> closure_arcs;             // plat closure arcs, when built from a tangle

    int component_count() const {
        return static_cast<int>(components.size()) + unknotted_loops;
    }

    // One line per crossing, "X a b c d +", then one "O" line per free loop.
    std::string serialize() const;
};

// Inverse of PlanarDiagram::serialize; throws std::domain_error with the
// offending line on bad input. Components are recomputed.
PlanarDiagram parse_planar_diagram(const std::string& text);

// Plat closure of the p/q rational tangle against the trivial outer arc: the
// two-bridge link b(p,q). The slope at infinity is rejected (its closure is
// not a link diagram; see branch_locus for the trivial branch set).
PlanarDiagram two_bridge_diagram(const Slope& s);

// |det(Goeritz matrix)| for a checkerboard colouring of the diagram. Split
// diagrams give 0; malformed or non-planar crossing data throws.
std::uint64_t diagram_determinant(const PlanarDiagram& d);

// The image of the branch set after filling the tangle of slope s into the
// pillowcase quotient: an outer arc (trivial or the quotient of a knotted
// axis) closed up with the two inner tangle arcs.
enum class OuterArc { UnknottedArc, OpaqueQuotientArc };

struct BranchLocusDescriptor {
    OuterArc outer;
    std::string quotient_arc_name;  // only for OpaqueQuotientArc
    Slope filling;
    int components;   // 1 when the numerator is odd, else 2
    bool realized;    // a concrete diagram exists only over the trivial outer arc
    PlanarDiagram diagram;
};

BranchLocusDescriptor branch_locus(OuterArc outer, const Slope& s,
                                   const std::string& quotient_arc_name = "");

}  // namespace branch2
