#include "branch2/census.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace branch2 {

namespace {

const char* const kEmbeddedCensus =
#include "census_data.inc"
    ;

[[noreturn]] void parse_fail(int line_no, const std::string& what) {
    throw CensusParseError("line " + std::to_string(line_no) + ": " + what);
}

const std::vector<std::string> kHigherTags = {"D3", "D4", "D6", "D8", "D10"};

bool known_higher_tag(const std::string& tag) {
    return std::find(kHigherTags.begin(), kHigherTags.end(), tag) != kHigherTags.end();
}

std::string value_of(const std::string& token, const std::string& key, int line_no) {
    if (token.compare(0, key.size(), key) != 0 || token.size() <= key.size() ||
        token[key.size()] != '=')
        parse_fail(line_no, "expected '" + key + "=...', got '" + token + "'");
    return token.substr(key.size() + 1);
}

Slope parse_slope_or_fail(const std::string& text, int line_no) {
    try {
        return parse_slope(text);
    } catch (const std::exception&) {
        parse_fail(line_no, "bad slope '" + text + "'");
    }
}

CensusEntry parse_knot_line(const std::vector<std::string>& tok, int line_no) {
    if (tok.size() < 5 || tok.size() > 6)
        parse_fail(line_no, "knot line needs name, classes=, s1e_quotient=, higher=");
    CensusEntry e;
    e.knot = tok[1];

    const std::string classes = value_of(tok[2], "classes", line_no);
    if (classes != "-") {
        std::istringstream list(classes);
        std::string tag;
        while (std::getline(list, tag, ',')) {
            try {
                e.classes.push_back(parse_symmetry_type(tag));
            } catch (const std::exception&) {
                parse_fail(line_no, "unknown symmetry tag '" + tag + "'");
            }
        }
    }

    const std::string s1e = value_of(tok[3], "s1e_quotient", line_no);
    if (s1e == "knotted")
        e.s1e_quotient_knotted = true;
    else if (s1e == "unknotted")
        e.s1e_quotient_knotted = false;
    else if (s1e != "-")
        parse_fail(line_no, "s1e_quotient must be knotted, unknotted or -");

    const std::string higher = value_of(tok[4], "higher", line_no);
    if (higher != "-") {
        if (!known_higher_tag(higher)) parse_fail(line_no, "unknown group tag '" + higher + "'");
        e.higher = higher;
    }

    if (tok.size() == 6) {
        if (tok[5] != "torus=yes") parse_fail(line_no, "unexpected token '" + tok[5] + "'");
        e.torus = true;
    }
    return e;
}

ExceptionalFact parse_except_line(const std::vector<std::string>& tok,
                                  const std::string& anchor, int line_no) {
    if (tok.size() != 5)
        parse_fail(line_no, "except line needs name, slope, kind, payload, quote");
    ExceptionalFact f;
    f.knot = tok[1];
    f.slope = parse_slope_or_fail(tok[2], line_no);
    f.anchor = anchor;
    const std::string& kind = tok[3];
    const std::string& payload = tok[4];
    if (kind == "SymmetryGroup") {
        f.kind = FactKind::SymmetryGroup;
        if (!known_higher_tag(payload)) parse_fail(line_no, "unknown group tag '" + payload + "'");
        f.group = payload;
    } else if (kind == "EquivalentSurgery" || kind == "QuotientIdentified") {
        f.kind = kind[0] == 'E' ? FactKind::EquivalentSurgery : FactKind::QuotientIdentified;
        const std::size_t at = payload.rfind('@');
        if (at == std::string::npos || at == 0)
            parse_fail(line_no, "payload must look like <knot>@<slope>");
        f.other_knot = payload.substr(0, at);
        f.other_slope = parse_slope_or_fail(payload.substr(at + 1), line_no);
    } else if (kind == "SeifertFibered") {
        f.kind = FactKind::SeifertFibered;
        try {
            f.seifert = parse_seifert_invariants(payload);
        } catch (const std::exception&) {
            parse_fail(line_no, "bad Seifert invariants '" + payload + "'");
        }
    } else {
        parse_fail(line_no, "unknown fact kind '" + kind + "'");
    }
    return f;
}

std::string row_key(const CensusEntry& e) {
    if (e.classes.empty()) return e.higher.empty() ? "no symmetry" : "higher symmetry only";
    std::string key = e.torus ? "torus " : "";
    for (std::size_t i = 0; i < e.classes.size(); ++i) {
        if (i) key += "+";
        key += e.classes[i].str();
    }
    if (e.s1e_quotient_knotted)
        key += *e.s1e_quotient_knotted ? " (knotted quotient)" : " (unknotted quotient)";
    return key;
}

const std::map<std::string, std::size_t> kStatedCounts = {
    {"no symmetry", 29},
    {"S0S0", 7},
    {"S1S0", 79},
    {"S1S0+S1E (unknotted quotient)", 93},
    {"S1S0+S1E (knotted quotient)", 22},
};

}  // namespace

bool CensusEntry::has_class(SymmetryType t) const {
    return std::find(classes.begin(), classes.end(), t) != classes.end();
}

std::string ExceptionalFact::str() const {
    switch (kind) {
        case FactKind::SymmetryGroup: return "SymmetryGroup " + group;
        case FactKind::EquivalentSurgery:
            return "EquivalentSurgery " + other_knot + "(" + other_slope.str() + ")";
        case FactKind::SeifertFibered: return "SeifertFibered " + seifert.str();
        case FactKind::QuotientIdentified:
            return "QuotientIdentified " + other_knot + "(" + other_slope.str() + ")";
    }
    throw std::logic_error("unreachable");
}

Census Census::load(const std::string& text) {
    Census census;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        const std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;

        std::string head = line;
        std::string anchor;
        const std::size_t quote = line.find('"');
        if (quote != std::string::npos) {
            if (line.back() != '"' || line.size() < quote + 2)
                parse_fail(line_no, "unterminated quote");
            anchor = line.substr(quote + 1, line.size() - quote - 2);
            head = line.substr(0, quote);
        }

        std::vector<std::string> tok;
        std::istringstream fields(head);
        std::string t;
        while (fields >> t) tok.push_back(t);

        if (tok[0] == "knot") {
            if (quote != std::string::npos) parse_fail(line_no, "knot line with quote");
            census.entries_.push_back(parse_knot_line(tok, line_no));
        } else if (tok[0] == "except") {
            if (quote == std::string::npos) parse_fail(line_no, "except line needs a quote");
            census.facts_.push_back(parse_except_line(tok, anchor, line_no));
        } else {
            parse_fail(line_no, "expected 'knot' or 'except', got '" + tok[0] + "'");
        }
    }

    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < census.entries_.size(); ++i) {
        const CensusEntry& e = census.entries_[i];
        if (!index.emplace(e.knot, i).second)
            throw CensusValidationError("knot '" + e.knot + "' listed twice");
        const bool has_s1e = e.has_class(parse_symmetry_type("S1E"));
        if (has_s1e != e.s1e_quotient_knotted.has_value())
            throw CensusValidationError(
                "knot '" + e.knot +
                "': s1e_quotient must be given exactly when classes contain S1E");
        for (std::size_t a = 0; a < e.classes.size(); ++a)
            for (std::size_t b = a + 1; b < e.classes.size(); ++b)
                if (e.classes[a] == e.classes[b])
                    throw CensusValidationError("knot '" + e.knot + "': repeated class");
    }
    for (const ExceptionalFact& f : census.facts_)
        if (index.find(f.knot) == index.end())
            throw CensusValidationError("fact for unlisted knot '" + f.knot + "'");
    return census;
}

const Census& Census::embedded() {
    static const Census instance = [] {
        Census c = load(kEmbeddedCensus);
        c.embedded_ = true;
        return c;
    }();
    return instance;
}

bool Census::contains(const std::string& knot) const {
    return std::any_of(entries_.begin(), entries_.end(),
                       [&](const CensusEntry& e) { return e.knot == knot; });
}

const CensusEntry& Census::lookup(const std::string& knot) const {
    for (const CensusEntry& e : entries_)
        if (e.knot == knot) return e;
    throw UnknownKnotError(knot);
}

std::vector<ExceptionalFact> Census::facts_for(const std::string& knot, Slope s) const {
    std::vector<ExceptionalFact> out;
    for (const ExceptionalFact& f : facts_)
        if (f.knot == knot && f.slope == s) out.push_back(f);
    return out;
}

QuotientReport Census::quotient_report(const std::string& knot, Slope s) const {
    const CensusEntry& entry = lookup(knot);
    QuotientReport report;

    if (entry.classes.empty() && !entry.higher.empty())
        report.notes.push_back("higher symmetry " + entry.higher +
                               " recorded without involution classes");

    for (SymmetryType t : entry.classes) {
        std::optional<QuotientKnot> qk;
        if (t == parse_symmetry_type("S1E"))
            qk = *entry.s1e_quotient_knotted ? QuotientKnot::knotted("quotient of " + knot)
                                             : QuotientKnot::unknot();
        const ExtensionResult r = extend_involution(t, s, qk);
        if (r.extends && r.quotient.kind != QuotientKind::None)
            report.quotients.push_back(r.quotient);
        else if (!r.note.empty())
            report.notes.push_back(t.str() + ": " + r.note);
    }

    for (const ExceptionalFact& f : facts_for(knot, s)) {
        if (f.kind == FactKind::QuotientIdentified) {
            bool matched = false;
            for (QuotientDescriptor& qd : report.quotients)
                if (qd.kind == QuotientKind::SurgeryOnQuotientKnot &&
                    qd.slope == f.other_slope) {
                    qd.name = f.other_knot;
                    matched = true;
                }
            if (!matched)
                report.notes.push_back("recorded quotient " + f.other_knot + "(" +
                                       f.other_slope.str() +
                                       ") does not match a derived descriptor");
        }
        report.facts.push_back(f);
    }
    return report;
}

std::vector<RowSummary> Census::row_summary() const {
    std::vector<RowSummary> rows;
    for (const CensusEntry& e : entries_) {
        const std::string key = row_key(e);
        auto it = std::find_if(rows.begin(), rows.end(),
                               [&](const RowSummary& r) { return r.label == key; });
        if (it == rows.end()) {
            RowSummary r;
            r.label = key;
            if (embedded_) {
                const auto stated = kStatedCounts.find(key);
                if (stated != kStatedCounts.end()) r.stated = stated->second;
            }
            rows.push_back(r);
            it = rows.end() - 1;
        }
        ++it->listed;
    }
    return rows;
}

}  // namespace branch2
