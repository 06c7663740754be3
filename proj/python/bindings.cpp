#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <optional>
#include <string>

#include "branch2/census.hpp"
#include "branch2/hyperbolic.hpp"
#include "branch2/involution.hpp"
#include "branch2/seifert.hpp"
#include "branch2/slope.hpp"
#include "branch2/surgery.hpp"
#include "branch2/tangle.hpp"

namespace py = pybind11;
using namespace branch2;

PYBIND11_MODULE(_branch2, m) {
    m.doc() = "Dehn surgery, two-fold branched covers, and symmetry census";

    m.def(
        "slope_word",
        [](const std::string& s) { return slope_to_word(parse_slope(s)).str(); },
        py::arg("slope"), "Canonical S/T word of a slope, e.g. '2/3' -> 'T S T^3 S'.");
    m.def(
        "twist_vector",
        [](const std::string& s) { return slope_to_twist_vector(parse_slope(s)).str(); },
        py::arg("slope"), "Twist counts of the rational tangle of a slope.");

    m.def(
        "two_bridge_determinant",
        [](const std::string& s) {
            return diagram_determinant(two_bridge_diagram(parse_slope(s)));
        },
        py::arg("slope"), "Checkerboard determinant of the two-bridge link b(p,q).");
    m.def(
        "two_bridge_diagram_text",
        [](const std::string& s) { return two_bridge_diagram(parse_slope(s)).serialize(); },
        py::arg("slope"), "Planar diagram of b(p,q), one crossing per line.");

    m.def(
        "link_h1",
        [](const std::string& text) { return parse_framed_link(text).h1_order().str(); },
        py::arg("link_text"), "First homology order of surgery on a framed link.");
    m.def(
        "rolfsen_twist",
        [](const std::string& text, std::size_t comp, std::int64_t n) {
            FramedLink link = parse_framed_link(text);
            link.rolfsen_twist(comp, n);
            return link.serialize();
        },
        py::arg("link_text"), py::arg("comp"), py::arg("n"),
        "Twist n times along an unknotted component; returns the new link.");
    m.def(
        "blow_down",
        [](const std::string& text, std::size_t comp) {
            FramedLink link = parse_framed_link(text);
            link.blow_down(comp);
            return link.serialize();
        },
        py::arg("link_text"), py::arg("comp"),
        "Remove a (+-1)-framed unknotted component; returns the new link.");

    m.def(
        "quotient_invariants",
        [](std::int64_t p, std::int64_t q, const std::string& filling) {
            return branch2::quotient_invariants(p, q, parse_slope(filling)).str();
        },
        py::arg("p"), py::arg("q"), py::arg("filling"),
        "Seifert invariants of the involution quotient of the (p,q) filling.");
    m.def(
        "quotient_h1",
        [](std::int64_t p, std::int64_t q, const std::string& filling) {
            const Slope f = parse_slope(filling);
            return quotient_h1_order(p, q, f.p(), f.q());
        },
        py::arg("p"), py::arg("q"), py::arg("filling"),
        "First homology order of that quotient, |2r - pqs|.");
    m.def(
        "seifert_h1",
        [](const std::string& invariants) {
            return sfs_h1_order(parse_seifert_invariants(invariants)).str();
        },
        py::arg("invariants"), "Homology order of a Seifert fibration in brace notation.");
    m.def(
        "euler_number",
        [](const std::string& invariants) {
            return branch2::euler_number(parse_seifert_invariants(invariants)).str();
        },
        py::arg("invariants"), "Euler number of a Seifert fibration in brace notation.");

    m.def(
        "extend_involution",
        [](const std::string& type, const std::string& slope,
           std::optional<std::string> quotient_knot) {
            std::optional<QuotientKnot> qk;
            if (quotient_knot)
                qk = *quotient_knot == "unknot" ? QuotientKnot::unknot()
                                                : QuotientKnot::knotted(*quotient_knot);
            const ExtensionResult r =
                branch2::extend_involution(parse_symmetry_type(type), parse_slope(slope), qk);
            py::dict d;
            d["extends"] = r.extends;
            d["free"] = r.free;
            d["degenerate"] = r.degenerate;
            d["quotient"] = r.quotient.str();
            d["known_not_s3"] = r.quotient.known_not_s3;
            d["branch_components"] = r.branch_components;
            d["note"] = r.note;
            return d;
        },
        py::arg("type"), py::arg("slope"), py::arg("quotient_knot") = std::nullopt,
        "Extension of the involution of the given type over the slope filling.");
    m.def("cyclic_quotient_coefficient",
          [](const std::string& s, int n) {
              return branch2::cyclic_quotient_coefficient(parse_slope(s), n).str();
          },
          py::arg("slope"), py::arg("n"),
          "Surgery coefficient downstairs in the cyclic n-fold quotient.");

    m.def(
        "census_report",
        [](const std::string& knot, const std::string& slope,
           std::optional<std::string> census_text) {
            std::optional<Census> loaded;
            const Census* census = &Census::embedded();
            if (census_text) {
                loaded = Census::load(*census_text);
                census = &*loaded;
            }
            const QuotientReport r = census->quotient_report(knot, parse_slope(slope));
            py::list quotients, known_not_s3, facts, notes;
            for (const auto& q : r.quotients) {
                quotients.append(q.str());
                known_not_s3.append(q.known_not_s3);
            }
            for (const auto& f : r.facts) facts.append(f.str());
            for (const auto& n : r.notes) notes.append(n);
            py::dict d;
            d["quotients"] = quotients;
            d["known_not_s3"] = known_not_s3;
            d["facts"] = facts;
            d["notes"] = notes;
            return d;
        },
        py::arg("knot"), py::arg("slope"), py::arg("census_text") = std::nullopt,
        "Everything the filling two-fold branched covers, per the census.");
    m.def("census_knots", []() {
        py::list names;
        for (const auto& e : Census::embedded().entries()) names.append(e.knot);
        return names;
    }, "Names of all knots in the built-in census.");

    m.def("core_geodesic_length", &core_geodesic_length, py::arg("p"), py::arg("q"),
          "2 pi / (p^2 + q^2) for a coprime filling slope.");
    m.def(
        "filling_residuals",
        [](std::complex<double> w, std::complex<double> zeta) {
            return conjugation_residual(filling_family(w, zeta));
        },
        py::arg("w"), py::arg("zeta") = std::complex<double>(0.0, 1.0),
        "Distance of the conjugated holonomy pair from its parabolic limit form.");
}
