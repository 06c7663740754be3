#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "branch2/slope.hpp"
#include "branch2/tangle.hpp"

namespace branch2 {

enum class FixedSet { S2, S1, S0, Empty };

// Fixed-point data of an involution of the pair (ambient sphere, knot):
// the fixed set in the sphere and its intersection with the knot. Only the
// eight geometrically possible combinations are accepted.
struct SymmetryType {
    FixedSet ambient_fix = FixedSet::S1;
    FixedSet knot_fix = FixedSet::S0;
    bool operator==(const SymmetryType&) const = default;

    // Compact form: "S1S0", "S1E", "S0S0", "EE", "S0E", "S2S1", "S2S0", "S1S1".
    std::string str() const;
};

SymmetryType make_symmetry_type(FixedSet ambient, FixedSet knot);
SymmetryType parse_symmetry_type(std::string_view text);

enum class QuotientKind {
    ThreeSphere,
    LensSpace,
    SurgeryOnQuotientKnot,
    NonOrientableCover,
    None,
};

// Symbolic description of the quotient manifold. LensSpace carries its two
// parameters in `slope`; SurgeryOnQuotientKnot carries the quotient knot's
// name and surgery coefficient. `known_not_s3` records that nontrivial
// surgery on a nontrivial knot never gives the sphere back.
struct QuotientDescriptor {
    QuotientKind kind = QuotientKind::None;
    bool orientable = true;
    std::string name;
    Slope slope;
    bool known_not_s3 = false;

    std::string str() const;
};

struct ExtensionResult {
    bool extends = false;
    bool free = false;
    bool degenerate = false;
    QuotientDescriptor quotient;
    unsigned branch_components = 0;
    std::string note;
    std::optional<BranchLocusDescriptor> branch_locus;
};

// Quotient knot data needed for the (S1, Empty) case: the image of the knot
// in the quotient sphere, either unknotted or named.
struct QuotientKnot {
    std::string name;
    bool unknotted = true;

    static QuotientKnot unknot() { return {"", true}; }
    static QuotientKnot knotted(std::string name) { return {std::move(name), false}; }
};

// Decide whether the involution of the given type extends over the s-filling
// of the knot exterior, and describe the induced quotient.
ExtensionResult extend_involution(SymmetryType t, Slope s,
                                  std::optional<QuotientKnot> quotient_knot = std::nullopt);

// Upper bound 1 + dim on the number of branch components from the Z/2
// cohomology of the filled manifold.
unsigned branch_components_bound(unsigned h2_z2_dim);

// dim_{Z/2} H^2 of p/q surgery on a knot: 0 for p odd, 1 for p even or zero.
unsigned h2_z2_dim_of_surgery(Slope s);

// Coefficient downstairs in the cyclic n-fold quotient: p/q maps to p/(nq).
// For n > 2 only coefficients of the form 1/q are supported.
Slope cyclic_quotient_coefficient(Slope s, int n);

}  // namespace branch2
