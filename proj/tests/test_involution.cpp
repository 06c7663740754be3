#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "branch2/involution.hpp"

using namespace branch2;

namespace {

// Independent oracle for the free-involution branching rule: the shifted
// torus translation (x,y) -> (x+1/2, y+1/2) preserves a line of direction
// (r,s) through the origin iff s*k = r (mod 2r) for some odd k.
bool half_shift_fixes_curve(std::int64_t r, std::int64_t s) {
    const std::int64_t m = 2 * (r < 0 ? -r : r);
    if (m == 0) return false;
    for (std::int64_t k = 1; k < m; k += 2)
        if ((((s * k - r) % m) + m) % m == 0) return true;
    return false;
}

}  // namespace

TEST_CASE("symmetry type strings") {
    const char* tags[] = {"S2S1", "S2S0", "S1S1", "S1S0", "S1E", "S0S0", "S0E", "EE"};
    for (const char* tag : tags) {
        const SymmetryType t = parse_symmetry_type(tag);
        CHECK(t.str() == tag);
        CHECK(make_symmetry_type(t.ambient_fix, t.knot_fix) == t);
    }
    CHECK(parse_symmetry_type("S1S0").ambient_fix == FixedSet::S1);
    CHECK(parse_symmetry_type("S1S0").knot_fix == FixedSet::S0);
    CHECK(parse_symmetry_type("EE").ambient_fix == FixedSet::Empty);

    CHECK_THROWS_AS(parse_symmetry_type("S2E"), std::domain_error);
    CHECK_THROWS_AS(parse_symmetry_type("ES0"), std::domain_error);
    CHECK_THROWS_AS(parse_symmetry_type("bogus"), std::domain_error);
    CHECK_THROWS_AS(make_symmetry_type(FixedSet::S2, FixedSet::Empty), std::domain_error);
    CHECK_THROWS_AS(make_symmetry_type(FixedSet::Empty, FixedSet::S0), std::domain_error);
    CHECK_THROWS_AS(make_symmetry_type(FixedSet::S0, FixedSet::S1), std::domain_error);
}

TEST_CASE("strong inversion quotients") {
    const SymmetryType t = parse_symmetry_type("S1S0");

    const ExtensionResult odd = extend_involution(t, Slope(3, 5));
    CHECK(odd.extends);
    CHECK(!odd.free);
    CHECK(!odd.degenerate);
    CHECK(odd.quotient.kind == QuotientKind::ThreeSphere);
    CHECK(odd.quotient.orientable);
    CHECK(odd.quotient.str() == "S3");
    CHECK(odd.branch_components == 1);
    REQUIRE(odd.branch_locus.has_value());
    CHECK(odd.branch_locus->realized);
    CHECK(odd.branch_locus->components == 1);
    CHECK(odd.branch_locus->diagram.crossings.size() ==
          two_bridge_diagram(Slope(3, 5)).crossings.size());

    const ExtensionResult even = extend_involution(t, Slope(2, 3));
    CHECK(even.branch_components == 2);
    CHECK(even.branch_locus->components == 2);

    const ExtensionResult trivial = extend_involution(t, Slope::infinity());
    CHECK(trivial.extends);
    CHECK(trivial.branch_components == 1);
    CHECK(trivial.branch_locus->diagram.unknotted_loops == 1);
    CHECK(trivial.branch_locus->diagram.crossings.empty());
}

TEST_CASE("period two with knotted and unknotted quotients") {
    const SymmetryType t = parse_symmetry_type("S1E");

    CHECK_THROWS_AS(extend_involution(t, Slope(1)), std::domain_error);

    const ExtensionResult knotted =
        extend_involution(t, Slope(1), QuotientKnot::knotted("3_1"));
    CHECK(knotted.extends);
    CHECK(!knotted.free);
    CHECK(knotted.quotient.kind == QuotientKind::SurgeryOnQuotientKnot);
    CHECK(knotted.quotient.name == "3_1");
    CHECK(knotted.quotient.slope == Slope(1, 2));
    CHECK(knotted.quotient.known_not_s3);
    CHECK(knotted.quotient.str() == "3_1(1/2)");
    CHECK(knotted.branch_components == 1);
    REQUIRE(knotted.branch_locus.has_value());
    CHECK(!knotted.branch_locus->realized);
    CHECK(knotted.branch_locus->quotient_arc_name == "3_1");

    const ExtensionResult lens = extend_involution(t, Slope(3), QuotientKnot::unknot());
    CHECK(lens.quotient.kind == QuotientKind::LensSpace);
    CHECK(lens.quotient.slope == Slope(3, 2));
    CHECK(lens.quotient.str() == "L(3,2)");
    CHECK(!lens.quotient.known_not_s3);

    // Coefficient 1 halves to 1/2; the unknot gives the sphere back.
    const ExtensionResult sphere = extend_involution(t, Slope(1), QuotientKnot::unknot());
    CHECK(sphere.quotient.kind == QuotientKind::ThreeSphere);

    // An even numerator reduces: 2/3 halves to 2/6 = 1/3, a trivial lens space.
    const ExtensionResult reduced = extend_involution(t, Slope(2, 3), QuotientKnot::unknot());
    CHECK(reduced.quotient.kind == QuotientKind::ThreeSphere);
    CHECK(reduced.branch_components == 2);

    const ExtensionResult nofill =
        extend_involution(t, Slope::infinity(), QuotientKnot::knotted("3_1"));
    CHECK(nofill.quotient.kind == QuotientKind::ThreeSphere);
    CHECK(nofill.branch_components == 1);
}

TEST_CASE("period two parity matches the cohomology bound") {
    const SymmetryType t = parse_symmetry_type("S1E");
    for (std::int64_t q = 0; q <= 12; ++q)
        for (std::int64_t p = -12; p <= 12; ++p) {
            if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
            if (p == 0 && q == 0) continue;
            const Slope s(p, q);
            const ExtensionResult r = extend_involution(t, s, QuotientKnot::unknot());
            CHECK(r.branch_components == branch_components_bound(h2_z2_dim_of_surgery(s)));
        }
}

TEST_CASE("point symmetric knots only survive trivial or zero filling") {
    const SymmetryType t = parse_symmetry_type("S0S0");

    CHECK(!extend_involution(t, Slope(2, 3)).extends);

    const ExtensionResult zero = extend_involution(t, Slope(0));
    CHECK(zero.extends);
    CHECK(zero.free);
    CHECK(zero.branch_components == 0);
    CHECK(zero.quotient.kind == QuotientKind::NonOrientableCover);
    CHECK(!zero.quotient.orientable);

    const ExtensionResult inf = extend_involution(t, Slope::infinity());
    CHECK(inf.extends);
    CHECK(!inf.free);
    CHECK(inf.quotient.kind == QuotientKind::None);
    CHECK(!inf.note.empty());

    // The slope must be carried to itself under (p,q) -> (p,-q).
    for (std::int64_t q = 0; q <= 50; ++q)
        for (std::int64_t p = -50; p <= 50; ++p) {
            if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
            if (p == 0 && q == 0) continue;
            const Slope s(p, q);
            const bool fixed_slope = Slope(p, q) == Slope(p, -q) || q == 0;
            CHECK(extend_involution(t, s).extends == fixed_slope);
            CHECK(fixed_slope == (s.is_infinite() || s.is_zero()));
        }
}

TEST_CASE("point symmetry off the knot never branches a manifold") {
    const ExtensionResult r = extend_involution(parse_symmetry_type("S0E"), Slope(1));
    CHECK(!r.extends);
    CHECK(r.quotient.kind == QuotientKind::None);
    CHECK(!r.note.empty());
}

TEST_CASE("free involutions extend over every filling") {
    const SymmetryType t = parse_symmetry_type("EE");

    const ExtensionResult branched = extend_involution(t, Slope(3, 5));
    CHECK(branched.extends);
    CHECK(!branched.free);
    CHECK(branched.branch_components == 1);
    CHECK(branched.quotient.kind == QuotientKind::SurgeryOnQuotientKnot);
    CHECK(branched.quotient.orientable);

    const ExtensionResult free_even = extend_involution(t, Slope(2));
    CHECK(free_even.extends);
    CHECK(free_even.free);
    CHECK(free_even.branch_components == 0);
    CHECK(free_even.quotient.orientable);
    CHECK(free_even.quotient.known_not_s3);

    const ExtensionResult nofill = extend_involution(t, Slope::infinity());
    CHECK(nofill.extends);
    CHECK(nofill.free);

    for (std::int64_t s = 0; s <= 50; ++s)
        for (std::int64_t r = -50; r <= 50; ++r) {
            if (std::gcd(r < 0 ? -r : r, s) != 1) continue;
            if (r == 0 && s == 0) continue;
            const Slope slope(r, s);
            const ExtensionResult res = extend_involution(t, slope);
            const bool both_odd = slope.p() % 2 != 0 && slope.q() % 2 != 0;
            CHECK(res.extends);
            CHECK(res.free == !both_odd);
            CHECK(res.branch_components == (both_odd ? 1u : 0u));
            CHECK(half_shift_fixes_curve(slope.p(), slope.q()) == both_odd);
            if (res.free) CHECK(res.branch_components == 0);
        }
}

TEST_CASE("degenerate types are flagged") {
    for (const char* tag : {"S2S1", "S2S0", "S1S1"}) {
        const ExtensionResult r = extend_involution(parse_symmetry_type(tag), Slope(1));
        CHECK(r.extends);
        CHECK(r.degenerate);
        CHECK(r.quotient.kind == QuotientKind::None);
        CHECK(!r.note.empty());
        CHECK(r.branch_components == 0);
    }
    CHECK(!extend_involution(parse_symmetry_type("S1S0"), Slope(1)).degenerate);
}

TEST_CASE("cohomology dimension and component bound") {
    CHECK(h2_z2_dim_of_surgery(Slope(1, 3)) == 0);
    CHECK(h2_z2_dim_of_surgery(Slope(2, 3)) == 1);
    CHECK(h2_z2_dim_of_surgery(Slope(0)) == 1);
    CHECK(h2_z2_dim_of_surgery(Slope::infinity()) == 0);

    CHECK(branch_components_bound(0) == 1);
    CHECK(branch_components_bound(1) == 2);
    CHECK(branch_components_bound(3) == 4);
}

TEST_CASE("cyclic quotient coefficients") {
    CHECK(cyclic_quotient_coefficient(Slope(1), 2) == Slope(1, 2));
    CHECK(cyclic_quotient_coefficient(Slope(1, 3), 5) == Slope(1, 15));
    CHECK(cyclic_quotient_coefficient(Slope(-1, 4), 3) == Slope(-1, 12));
    CHECK(cyclic_quotient_coefficient(Slope(7, 2), 2) == Slope(7, 4));
    CHECK(cyclic_quotient_coefficient(Slope(2, 3), 2) == Slope(1, 3));
    CHECK(cyclic_quotient_coefficient(Slope::infinity(), 2) == Slope::infinity());
    CHECK(cyclic_quotient_coefficient(Slope::infinity(), 7) == Slope::infinity());
    CHECK(cyclic_quotient_coefficient(Slope(5, 3), 1) == Slope(5, 3));

    CHECK_THROWS_AS(cyclic_quotient_coefficient(Slope(3, 5), 3), std::domain_error);
    CHECK_THROWS_AS(cyclic_quotient_coefficient(Slope(1), 0), std::domain_error);
    CHECK_THROWS_AS(cyclic_quotient_coefficient(Slope(1), -2), std::domain_error);

    for (std::int64_t q = 1; q <= 20; ++q)
        for (std::int64_t p = -20; p <= 20; ++p) {
            if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
            CHECK(cyclic_quotient_coefficient(Slope(p, q), 2) == Slope(p, 2 * q));
        }
}
