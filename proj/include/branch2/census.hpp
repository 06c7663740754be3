#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "branch2/involution.hpp"
#include "branch2/seifert.hpp"
#include "branch2/slope.hpp"

namespace branch2 {

class UnknownKnotError : public std::domain_error {
public:
    explicit UnknownKnotError(const std::string& name)
        : std::domain_error("unknown knot '" + name + "'") {}
};

class CensusParseError : public std::domain_error {
    using std::domain_error::domain_error;
};

class CensusValidationError : public std::domain_error {
    using std::domain_error::domain_error;
};

// One knot of the symmetry tables: its involution classes, whether the
// (S1,E) quotient knot is knotted, an optional higher dihedral symmetry
// tag, and whether the knot sits in one of the torus-knot rows.
struct CensusEntry {
    std::string knot;
    std::vector<SymmetryType> classes;
    std::optional<bool> s1e_quotient_knotted;
    std::string higher;
    bool torus = false;

    bool has_class(SymmetryType t) const;
};

enum class FactKind { SymmetryGroup, EquivalentSurgery, SeifertFibered, QuotientIdentified };

// A recorded exceptional behaviour of one particular filling, kept together
// with the source sentence it was taken from.
struct ExceptionalFact {
    std::string knot;
    Slope slope;
    FactKind kind = FactKind::SymmetryGroup;
    std::string group;
    std::string other_knot;
    Slope other_slope;
    SeifertInvariants seifert;
    std::string anchor;

    std::string str() const;
};

struct QuotientReport {
    std::vector<QuotientDescriptor> quotients;
    std::vector<ExceptionalFact> facts;
    std::vector<std::string> notes;
};

// Count of knots sharing one signature (classes, quotient flag, torus row),
// next to the count the source table header states, where it states one.
struct RowSummary {
    std::string label;
    std::size_t listed = 0;
    std::optional<std::size_t> stated;
};

class Census {
public:
    // Parse and validate the line format:
    //   knot <name> classes=<tag,...|-> s1e_quotient=<knotted|unknotted|->
    //        higher=<D3|D4|D6|D8|D10|-> [torus=yes]
    //   except <name> <slope> <kind> <payload> "<anchor>"
    // Blank lines and lines starting with '#' are skipped.
    static Census load(const std::string& text);

    // The table compiled into the library.
    static const Census& embedded();

    const CensusEntry& lookup(const std::string& knot) const;
    bool contains(const std::string& knot) const;
    const std::vector<CensusEntry>& entries() const { return entries_; }
    const std::vector<ExceptionalFact>& facts() const { return facts_; }
    std::vector<ExceptionalFact> facts_for(const std::string& knot, Slope s) const;

    // Everything p/q surgery on the knot two-fold branched covers: one
    // descriptor per extending involution class, plus recorded facts.
    QuotientReport quotient_report(const std::string& knot, Slope s) const;

    // Knot counts per row signature, in first-appearance order.
    std::vector<RowSummary> row_summary() const;

private:
    std::vector<CensusEntry> entries_;
    std::vector<ExceptionalFact> facts_;
    bool embedded_ = false;
};

}  // namespace branch2
