#include "branch2/cli.hpp"

#include <complex>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "CLI11.hpp"
#include "branch2/census.hpp"
#include "branch2/hyperbolic.hpp"
#include "branch2/involution.hpp"
#include "branch2/seifert.hpp"
#include "branch2/slope.hpp"
#include "branch2/surgery.hpp"
#include "branch2/tangle.hpp"

namespace branch2 {

namespace {

std::string fmt_real(double v) {
    std::ostringstream out;
    out << std::setprecision(12) << v + 0.0;
    return out.str();
}

std::string fmt_complex(Cx z) {
    const double re = z.real() + 0.0;
    const double im = z.imag() + 0.0;
    if (im < 0.0) return fmt_real(re) + "-" + fmt_real(-im) + "i";
    return fmt_real(re) + "+" + fmt_real(im) + "i";
}

double to_double(const std::string& text) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &pos);
    } catch (const std::exception&) {
        throw std::domain_error("bad number '" + text + "'");
    }
    if (pos != text.size())
        throw std::domain_error("bad number '" + text + "'");
    return v;
}

// "a+bi" with optional parts: "3", "-2.5", "i", "-i", "2i", "3-2i", "1e2+0.5i".
Cx parse_complex(const std::string& text) {
    if (text.empty()) throw std::domain_error("empty complex number");
    if (text.back() != 'i') return Cx(to_double(text), 0.0);
    std::size_t split = 0;
    for (std::size_t i = 1; i + 1 < text.size(); ++i) {
        if ((text[i] == '+' || text[i] == '-') && text[i - 1] != 'e' &&
            text[i - 1] != 'E')
            split = i;
    }
    const std::string imag_part = text.substr(split, text.size() - split - 1);
    double im = 0.0;
    if (imag_part.empty() || imag_part == "+")
        im = 1.0;
    else if (imag_part == "-")
        im = -1.0;
    else
        im = to_double(imag_part);
    const double re = split == 0 ? 0.0 : to_double(text.substr(0, split));
    return Cx(re, im);
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::domain_error("cannot open file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& desc) {
    CLI::App* sub = parent->add_subcommand(name, desc);
    sub->fallthrough();
    return sub;
}

void emit_diagram(std::ostream& out, bool machine, const PlanarDiagram& d) {
    if (!machine) {
        out << d.serialize();
        return;
    }
    out << "crossings=" << d.crossings.size() << "\n";
    out << "components=" << d.component_count() << "\n";
    out << "loops=" << d.unknotted_loops << "\n";
    for (std::size_t i = 0; i < d.crossings.size(); ++i) {
        const Crossing& c = d.crossings[i];
        out << "crossing" << i << "=" << c.arc[0] << " " << c.arc[1] << " "
            << c.arc[2] << " " << c.arc[3] << " "
            << (c.sign >= 0 ? "+" : "-") << "\n";
    }
}

void emit_link(std::ostream& out, bool machine, const FramedLink& link) {
    if (!machine) {
        out << link.serialize();
        return;
    }
    out << "components=" << link.size() << "\n";
    for (std::size_t i = 0; i < link.size(); ++i) {
        const LinkComponent& c = link.component(i);
        out << "component" << i << "=" << c.name << " " << c.framing.str()
            << " " << (c.unknotted ? "unknotted" : "knotted") << "\n";
    }
    for (std::size_t i = 0; i < link.size(); ++i) {
        out << "lk" << i << "=";
        for (std::size_t j = 0; j < link.size(); ++j)
            out << (j ? " " : "") << link.linking(i, j);
        out << "\n";
    }
}

struct Args {
    std::string format = "text";
    std::string slope_arg;
    std::string file_arg;
    std::uint64_t comp_arg = 0;
    std::int64_t twist_arg = 0;
    std::int64_t p_arg = 0;
    std::int64_t q_arg = 0;
    std::string invariants_arg;
    std::string type_arg;
    std::string quotient_knot_arg;
    std::string knot_arg;
    std::string census_arg;
    std::string w_arg;
    std::string zeta_arg;
};

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Dehn surgery and two-fold branched cover toolkit"};
    app.name("branch2");
    app.require_subcommand(1);
    Args a;
    app.add_option("--format", a.format, "output format")
        ->check(CLI::IsMember({"text", "machine"}));

    CLI::App* slope_cmd = app.add_subcommand("slope", "slope words in SL2(Z)");
    slope_cmd->fallthrough();
    slope_cmd->require_subcommand(1);
    CLI::App* slope_decompose =
        leaf(slope_cmd, "decompose", "canonical S/T word of a slope");
    slope_decompose->add_option("slope", a.slope_arg, "p/q, p or inf")->required();

    CLI::App* tangle_cmd = app.add_subcommand("tangle", "rational tangles and two-bridge links");
    tangle_cmd->fallthrough();
    tangle_cmd->require_subcommand(1);
    CLI::App* tangle_bridge =
        leaf(tangle_cmd, "bridge", "planar diagram of the two-bridge link b(p,q)");
    tangle_bridge->add_option("slope", a.slope_arg, "p/q or p")->required();
    CLI::App* tangle_det =
        leaf(tangle_cmd, "det", "checkerboard determinant of b(p,q)");
    tangle_det->add_option("slope", a.slope_arg, "p/q or p")->required();

    CLI::App* surgery_cmd = app.add_subcommand("surgery", "framed links and Rolfsen moves");
    surgery_cmd->fallthrough();
    surgery_cmd->require_subcommand(1);
    CLI::App* surgery_h1 = leaf(surgery_cmd, "h1", "first homology order of the surgery");
    surgery_h1->add_option("file", a.file_arg, "framed link file")->required();
    CLI::App* surgery_twist = leaf(surgery_cmd, "twist", "Rolfsen twist along a component");
    surgery_twist->add_option("file", a.file_arg, "framed link file")->required();
    surgery_twist->add_option("comp", a.comp_arg, "component index (0-based)")->required();
    surgery_twist->add_option("n", a.twist_arg, "number of twists")->required();

    CLI::App* seifert_cmd = app.add_subcommand("seifert", "Seifert fibered invariants");
    seifert_cmd->fallthrough();
    seifert_cmd->require_subcommand(1);
    CLI::App* seifert_quotient =
        leaf(seifert_cmd, "quotient", "quotient invariants of the (p,q) torus knot filling");
    seifert_quotient->add_option("p", a.p_arg, "first torus knot parameter")->required();
    seifert_quotient->add_option("q", a.q_arg, "second torus knot parameter")->required();
    seifert_quotient->add_option("filling", a.slope_arg, "filling slope r/s")->required();
    CLI::App* seifert_h1 = leaf(seifert_cmd, "h1", "homology and Euler number of a fibration");
    seifert_h1->add_option("invariants", a.invariants_arg,
                           "brace notation, e.g. {0,(Oo,0),(3,4),(5,-2),(1,1)}")
        ->required();

    CLI::App* involution_cmd = app.add_subcommand("involution", "extending involutions over fillings");
    involution_cmd->fallthrough();
    involution_cmd->require_subcommand(1);
    CLI::App* involution_extend =
        leaf(involution_cmd, "extend", "extension of a symmetry over the s-filling");
    involution_extend->add_option("type", a.type_arg, "symmetry type, e.g. S1S0")->required();
    involution_extend->add_option("slope", a.slope_arg, "filling slope p/q")->required();
    involution_extend->add_option("--quotient-knot", a.quotient_knot_arg,
                                  "quotient knot name, or 'unknot'");

    CLI::App* census_cmd = app.add_subcommand("census", "symmetry census queries");
    census_cmd->fallthrough();
    census_cmd->require_subcommand(1);
    CLI::App* census_report =
        leaf(census_cmd, "report", "quotients of the two-fold cover of the filling");
    census_report->add_option("knot", a.knot_arg, "census knot name")->required();
    census_report->add_option("slope", a.slope_arg, "filling slope p/q")->required();
    census_report->add_option("--census", a.census_arg, "census file overriding the built-in table");

    CLI::App* hyperbolic_cmd = app.add_subcommand("hyperbolic", "holonomy and geodesic lengths");
    hyperbolic_cmd->fallthrough();
    hyperbolic_cmd->require_subcommand(1);
    CLI::App* hyperbolic_length =
        leaf(hyperbolic_cmd, "length", "core geodesic length of the (p,q) filling");
    hyperbolic_length->add_option("p", a.p_arg, "meridian coefficient")->required();
    hyperbolic_length->add_option("q", a.q_arg, "longitude coefficient")->required();
    CLI::App* hyperbolic_family =
        leaf(hyperbolic_cmd, "family", "holonomy family at parameter w");
    hyperbolic_family->add_option("w", a.w_arg, "complex parameter a+bi, or inf")->required();
    hyperbolic_family->add_option("--zeta", a.zeta_arg, "cusp shape a+bi (default i)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << "\n";
        return 2;
    }

    const bool machine = a.format == "machine";
    try {
        if (machine) out << "schema=1\n";

        if (slope_decompose->parsed()) {
            const SL2Word w = slope_to_word(parse_slope(a.slope_arg));
            if (machine) {
                out << "slope=" << parse_slope(a.slope_arg).str() << "\n";
                out << "word=" << w.str() << "\n";
                out << "length=" << w.size() << "\n";
            } else {
                out << w.str() << "\n";
            }
        } else if (tangle_bridge->parsed()) {
            emit_diagram(out, machine, two_bridge_diagram(parse_slope(a.slope_arg)));
        } else if (tangle_det->parsed()) {
            const auto det = diagram_determinant(two_bridge_diagram(parse_slope(a.slope_arg)));
            if (machine)
                out << "determinant=" << det << "\n";
            else
                out << det << "\n";
        } else if (surgery_h1->parsed()) {
            const FramedLink link = parse_framed_link(read_file(a.file_arg));
            if (machine)
                out << "h1=" << link.h1_order().str() << "\n";
            else
                out << link.h1_order().str() << "\n";
        } else if (surgery_twist->parsed()) {
            FramedLink link = parse_framed_link(read_file(a.file_arg));
            link.rolfsen_twist(a.comp_arg, a.twist_arg);
            emit_link(out, machine, link);
        } else if (seifert_quotient->parsed()) {
            const Slope filling = parse_slope(a.slope_arg);
            const SeifertInvariants inv = quotient_invariants(a.p_arg, a.q_arg, filling);
            const std::uint64_t h1 =
                quotient_h1_order(a.p_arg, a.q_arg, filling.p(), filling.q());
            if (machine) {
                out << "invariants=" << inv.str() << "\n";
                out << "h1=" << h1 << "\n";
            } else {
                out << inv.str() << "\n";
                out << "h1 = " << h1 << "\n";
            }
        } else if (seifert_h1->parsed()) {
            const SeifertInvariants inv = parse_seifert_invariants(a.invariants_arg);
            const std::string h1 = sfs_h1_order(inv).str();
            const std::string euler = euler_number(inv).str();
            if (machine) {
                out << "h1=" << h1 << "\n";
                out << "euler=" << euler << "\n";
            } else {
                out << "h1 = " << h1 << "\n";
                out << "euler = " << euler << "\n";
            }
        } else if (involution_extend->parsed()) {
            const SymmetryType type = parse_symmetry_type(a.type_arg);
            std::optional<QuotientKnot> qk;
            if (!a.quotient_knot_arg.empty())
                qk = a.quotient_knot_arg == "unknot"
                         ? QuotientKnot::unknot()
                         : QuotientKnot::knotted(a.quotient_knot_arg);
            const ExtensionResult r =
                extend_involution(type, parse_slope(a.slope_arg), qk);
            const char* sep = machine ? "=" : ": ";
            out << "extends" << sep << yes_no(r.extends) << "\n";
            out << "free" << sep << yes_no(r.free) << "\n";
            out << "degenerate" << sep << yes_no(r.degenerate) << "\n";
            out << "quotient" << sep << r.quotient.str() << "\n";
            if (r.quotient.known_not_s3)
                out << "known_not_s3" << sep << "yes" << "\n";
            out << "branch_components" << sep << r.branch_components << "\n";
            if (r.branch_locus) {
                out << "branch_locus_components" << sep << r.branch_locus->components << "\n";
                out << "branch_locus_realized" << sep << yes_no(r.branch_locus->realized) << "\n";
            }
            if (!r.note.empty()) out << "note" << sep << r.note << "\n";
        } else if (census_report->parsed()) {
            std::optional<Census> loaded;
            const Census* census = &Census::embedded();
            if (!a.census_arg.empty()) {
                loaded = Census::load(read_file(a.census_arg));
                census = &*loaded;
            } else if (const char* env = std::getenv("BRANCH2_CENSUS");
                       env != nullptr && *env != '\0') {
                loaded = Census::load(read_file(env));
                census = &*loaded;
            }
            const QuotientReport report =
                census->quotient_report(a.knot_arg, parse_slope(a.slope_arg));
            for (std::size_t i = 0; i < report.quotients.size(); ++i) {
                const QuotientDescriptor& q = report.quotients[i];
                if (machine) {
                    out << "quotient" << i << "=" << q.str() << "\n";
                    if (q.known_not_s3)
                        out << "quotient" << i << "_known_not_s3=yes\n";
                } else {
                    out << "quotient " << q.str()
                        << (q.known_not_s3 ? "  [not the 3-sphere]" : "") << "\n";
                }
            }
            for (std::size_t i = 0; i < report.facts.size(); ++i) {
                if (machine)
                    out << "fact" << i << "=" << report.facts[i].str() << "\n";
                else
                    out << "fact " << report.facts[i].str() << "\n";
            }
            for (std::size_t i = 0; i < report.notes.size(); ++i) {
                if (machine)
                    out << "note" << i << "=" << report.notes[i] << "\n";
                else
                    out << "note " << report.notes[i] << "\n";
            }
        } else if (hyperbolic_length->parsed()) {
            const double len = core_geodesic_length(a.p_arg, a.q_arg);
            if (machine)
                out << "length=" << fmt_real(len) << "\n";
            else
                out << fmt_real(len) << "\n";
        } else if (hyperbolic_family->parsed()) {
            const Cx zeta =
                a.zeta_arg.empty() ? Cx(0.0, 1.0) : parse_complex(a.zeta_arg);
            const FillingFamily fam = a.w_arg == "inf"
                                          ? filling_family_at_infinity(zeta)
                                          : filling_family(parse_complex(a.w_arg), zeta);
            const std::string w_str = fam.w ? fmt_complex(*fam.w) : "inf";
            std::string res1 = "-", res2 = "-";
            if (fam.E) {
                const auto [r1, r2] = conjugation_residual(fam);
                res1 = fmt_real(r1);
                res2 = fmt_real(r2);
            }
            const std::string len_a = classify(fam.A) == MapClass::Loxodromic
                                          ? fmt_complex(complex_length(fam.A))
                                          : "-";
            const std::string len_b = classify(fam.B) == MapClass::Loxodromic
                                          ? fmt_complex(complex_length(fam.B))
                                          : "-";
            if (machine) {
                out << "w=" << w_str << "\n";
                out << "zeta=" << fmt_complex(fam.zeta) << "\n";
                out << "trace_A=" << fmt_complex(fam.A.trace()) << "\n";
                out << "trace_B=" << fmt_complex(fam.B.trace()) << "\n";
                out << "residual_1=" << res1 << "\n";
                out << "residual_2=" << res2 << "\n";
                out << "length_A=" << len_a << "\n";
                out << "length_B=" << len_b << "\n";
            } else {
                out << "w,trace_A,trace_B,residual_1,residual_2,length_A,length_B\n";
                out << w_str << "," << fmt_complex(fam.A.trace()) << ","
                    << fmt_complex(fam.B.trace()) << "," << res1 << "," << res2
                    << "," << len_a << "," << len_b << "\n";
            }
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace branch2
