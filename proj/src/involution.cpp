#include "branch2/involution.hpp"

#include <stdexcept>

namespace branch2 {

namespace {

std::string fixed_set_tag(FixedSet f) {
    switch (f) {
        case FixedSet::S2: return "S2";
        case FixedSet::S1: return "S1";
        case FixedSet::S0: return "S0";
        case FixedSet::Empty: return "E";
    }
    throw std::logic_error("unreachable");
}

bool valid_pair(FixedSet a, FixedSet k) {
    switch (a) {
        case FixedSet::S2: return k == FixedSet::S1 || k == FixedSet::S0;
        case FixedSet::S1:
            return k == FixedSet::S1 || k == FixedSet::S0 || k == FixedSet::Empty;
        case FixedSet::S0: return k == FixedSet::S0 || k == FixedSet::Empty;
        case FixedSet::Empty: return k == FixedSet::Empty;
    }
    return false;
}

}  // namespace

std::string SymmetryType::str() const {
    return fixed_set_tag(ambient_fix) + fixed_set_tag(knot_fix);
}

SymmetryType make_symmetry_type(FixedSet ambient, FixedSet knot) {
    if (!valid_pair(ambient, knot))
        throw std::domain_error("impossible fixed-set combination " + fixed_set_tag(ambient) +
                                fixed_set_tag(knot));
    return {ambient, knot};
}

SymmetryType parse_symmetry_type(std::string_view text) {
    for (FixedSet a : {FixedSet::S2, FixedSet::S1, FixedSet::S0, FixedSet::Empty})
        for (FixedSet k : {FixedSet::S1, FixedSet::S0, FixedSet::Empty})
            if (valid_pair(a, k) && text == fixed_set_tag(a) + fixed_set_tag(k))
                return {a, k};
    throw std::domain_error("unknown symmetry type '" + std::string(text) + "'");
}

std::string QuotientDescriptor::str() const {
    switch (kind) {
        case QuotientKind::ThreeSphere: return "S3";
        case QuotientKind::LensSpace:
            return "L(" + std::to_string(slope.p()) + "," + std::to_string(slope.q()) + ")";
        case QuotientKind::SurgeryOnQuotientKnot: return name + "(" + slope.str() + ")";
        case QuotientKind::NonOrientableCover: return "nonorientable quotient";
        case QuotientKind::None: return "none";
    }
    throw std::logic_error("unreachable");
}

unsigned branch_components_bound(unsigned h2_z2_dim) { return 1 + h2_z2_dim; }

unsigned h2_z2_dim_of_surgery(Slope s) { return s.p() % 2 != 0 ? 0 : 1; }

Slope cyclic_quotient_coefficient(Slope s, int n) {
    if (n <= 0) throw std::domain_error("cover degree must be positive");
    if (n == 1) return s;
    if (n == 2) return Slope(s.p(), 2 * s.q());
    if (s.p() != 1 && s.p() != -1)
        throw std::domain_error("covers of degree above two need a 1/q coefficient");
    return Slope(s.p(), n * s.q());
}

ExtensionResult extend_involution(SymmetryType t, Slope s,
                                  std::optional<QuotientKnot> quotient_knot) {
    make_symmetry_type(t.ambient_fix, t.knot_fix);

    ExtensionResult r;
    const bool p_odd = s.p() % 2 != 0;

    if (t.ambient_fix == FixedSet::S2 ||
        (t.ambient_fix == FixedSet::S1 && t.knot_fix == FixedSet::S1)) {
        // Fixed sphere, or fixed circle equal to the knot: the knot is the
        // unknot or composite and falls outside the classification.
        r.extends = true;
        r.degenerate = true;
        r.note = "degenerate type: the knot is unknotted or composite, no "
                 "quotient is reported";
        return r;
    }

    if (t.ambient_fix == FixedSet::S1 && t.knot_fix == FixedSet::S0) {
        // Strong inversion: the quotient is the sphere again and the branch
        // locus closes up to the two-bridge diagram of the filling.
        r.extends = true;
        r.quotient.kind = QuotientKind::ThreeSphere;
        r.branch_components = p_odd ? 1 : 2;
        r.branch_locus = branch_locus(OuterArc::UnknottedArc, s);
        r.note = "quotient is the sphere, branched over a two-bridge closure";
        return r;
    }

    if (t.ambient_fix == FixedSet::S1 && t.knot_fix == FixedSet::Empty) {
        if (!quotient_knot)
            throw std::domain_error("type S1E needs quotient knot data");
        r.extends = true;
        r.branch_components = p_odd ? 1 : 2;
        const Slope down = cyclic_quotient_coefficient(s, 2);
        if (s.is_infinite()) {
            r.quotient.kind = QuotientKind::ThreeSphere;
        } else if (quotient_knot->unknotted) {
            if (down.p() == 1 || down.p() == -1) {
                r.quotient.kind = QuotientKind::ThreeSphere;
            } else {
                r.quotient.kind = QuotientKind::LensSpace;
                r.quotient.slope = down;
            }
        } else {
            r.quotient.kind = QuotientKind::SurgeryOnQuotientKnot;
            r.quotient.name = quotient_knot->name;
            r.quotient.slope = down;
            r.quotient.known_not_s3 = true;
        }
        r.note = "coefficient halves on the quotient knot";
        r.branch_locus = branch_locus(OuterArc::OpaqueQuotientArc, s, quotient_knot->name);
        return r;
    }

    if (t.ambient_fix == FixedSet::S0 && t.knot_fix == FixedSet::S0) {
        // The two fixed points lie on the knot; the filling slope must be
        // carried to itself with reversed orientation, which pins it to the
        // trivial or zero coefficient.
        if (s.is_infinite()) {
            r.extends = true;
            r.note = "no filling; two fixed points remain, the quotient is "
                     "not a manifold";
            return r;
        }
        if (s.is_zero()) {
            r.extends = true;
            r.free = true;
            r.quotient.kind = QuotientKind::NonOrientableCover;
            r.quotient.orientable = false;
            r.note = "free after zero-filling; the double cover is "
                     "orientation-reversing";
            return r;
        }
        r.note = "only the trivial or zero filling is compatible with a "
                 "point-symmetric knot";
        return r;
    }

    if (t.ambient_fix == FixedSet::S0 && t.knot_fix == FixedSet::Empty) {
        r.note = "the quotient of the sphere is the cone on the projective "
                 "plane, never a branched cover over a manifold";
        return r;
    }

    // Free (antipodal) involution: the quotient is surgery on the image knot
    // in the projective space, branched exactly when both coordinates of the
    // filling are odd.
    r.extends = true;
    r.quotient.kind = QuotientKind::SurgeryOnQuotientKnot;
    r.quotient.name = "quotient knot in RP3";
    r.quotient.slope = s;
    const bool branched = p_odd && s.q() % 2 != 0;
    if (branched) {
        r.branch_components = 1;
        r.note = "filling torus meets the fixed translation in one circle";
    } else {
        r.free = true;
        r.quotient.known_not_s3 = true;
        r.note = "involution stays free after filling";
    }
    return r;
}

}  // namespace branch2
