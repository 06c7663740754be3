#include "branch2/tangle.hpp"

#include <algorithm>

#include "int_det.hpp"
#include <map>
#include <numeric>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace branch2 {

Slope TwistVector::conway_fraction() const {
    Slope f = Slope::infinity();
    bool first = true;
    for (std::int64_t a : entries_) {
        if (first) {
            f = Slope(a);
            first = false;
        } else {
            // a - 1/f maps p/q to (a*p - q)/p; Slope normalizes -1/0 to inf.
            f = Slope(a * f.p() - f.q(), f.p());
        }
    }
    return f;
}

std::string TwistVector::str() const {
    std::ostringstream out;
    out << '(';
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i) out << ", ";
        out << entries_[i];
    }
    out << ')';
    return out.str();
}

TwistVector slope_to_twist_vector(const Slope& s) {
    // T-run exponents of the canonical word, one per S, in reverse order: the
    // word acts on the infinity tangle right to left, and each S T^a pair is
    // "rotate then twist a times".
    const SL2Word word = slope_to_word(s);
    std::vector<std::int64_t> runs;
    std::int64_t run = 0;
    for (SL2Letter l : word.letters()) {
        switch (l) {
            case SL2Letter::T: ++run; break;
            case SL2Letter::Tinv: --run; break;
            case SL2Letter::S:
                runs.push_back(run);
                run = 0;
                break;
        }
    }
    std::reverse(runs.begin(), runs.end());
    return TwistVector(std::move(runs));
}

namespace {

// Union-find over arc labels, used while building and closing tangles.
struct ArcMerge {
    std::map<int, int> parent;

    int find(int a) {
        auto it = parent.find(a);
        if (it == parent.end() || it->second == a) return a;
        return it->second = find(it->second);
    }
    void unite(int a, int b) { parent[find(b)] = find(a); }
};

void compute_components(PlanarDiagram& d) {
    ArcMerge strands;
    for (const Crossing& c : d.crossings) {
        strands.unite(c.arc[0], c.arc[2]);
        strands.unite(c.arc[1], c.arc[3]);
    }
    std::map<int, std::vector<int>> groups;
    std::map<int, bool> seen;
    for (const Crossing& c : d.crossings)
        for (int a : c.arc)
            if (!seen[a]) {
                seen[a] = true;
                groups[strands.find(a)].push_back(a);
            }
    d.components.clear();
    for (auto& [root, arcs] : groups) {
        std::sort(arcs.begin(), arcs.end());
        d.components.push_back(arcs);
    }
}

}  // namespace

PlanarDiagram two_bridge_diagram(const Slope& s) {
    if (s.is_infinite())
        throw std::domain_error("two_bridge_diagram: the slope at infinity has no tangle closure");

    const TwistVector tv = slope_to_twist_vector(s);

    PlanarDiagram d;
    ArcMerge merge;
    int next_arc = 0;

    // Boundary ends of the tangle box, each holding the arc that terminates
    // there. Start with the infinity tangle: two vertical strands.
    int nw = next_arc++, sw, ne = next_arc++, se;
    sw = nw;
    se = ne;

    for (std::int64_t entry : tv.entries()) {
        // Quarter rotation counterclockwise.
        const int onw = nw, one = ne, osw = sw, ose = se;
        nw = one;
        sw = onw;
        se = osw;
        ne = ose;

        // |entry| half twists between the two east ends; the sign picks which
        // strand passes over.
        for (std::int64_t k = 0; k < (entry < 0 ? -entry : entry); ++k) {
            const int x = ne, y = se;
            const int xc = next_arc++;  // continuation of x, toward the new SE
            const int yc = next_arc++;  // continuation of y, toward the new NE
            if (entry > 0)
                d.crossings.push_back({{x, y, xc, yc}, +1});  // y-strand over
            else
                d.crossings.push_back({{y, xc, yc, x}, -1});  // x-strand over
            ne = yc;
            se = xc;
        }
    }

    // Plat closure: cap the two north ends together and the two south ends
    // together. Joining the two ends of one arc closes a crossing-free loop.
    const auto close = [&](int a, int b) -> int {
        if (merge.find(a) == merge.find(b)) {
            ++d.unknotted_loops;
            return -1;
        }
        merge.unite(a, b);
        return merge.find(a);
    };
    std::vector<int> closed;
    closed.push_back(close(nw, ne));
    closed.push_back(close(sw, se));

    // Apply merges and relabel arcs 1..2n.
    std::map<int, int> rename;
    int label = 0;
    for (Crossing& c : d.crossings)
        for (int& a : c.arc) {
            a = merge.find(a);
            auto [it, fresh] = rename.try_emplace(a, label + 1);
            if (fresh) ++label;
            a = it->second;
        }
    for (int root : closed)
        if (root >= 0 && rename.count(merge.find(root)))
            d.closure_arcs.push_back(rename[merge.find(root)]);

    compute_components(d);
    return d;
}

namespace {

struct Slot {
    int crossing;
    int slot;
    friend bool operator==(const Slot&, const Slot&) = default;
};

// Occurrence table: the two (crossing, slot) positions of every arc. Throws
// when some arc does not occur exactly twice.
std::map<int, std::vector<Slot>> occurrences(const PlanarDiagram& d) {
    std::map<int, std::vector<Slot>> occ;
    for (int ci = 0; ci < static_cast<int>(d.crossings.size()); ++ci)
        for (int s = 0; s < 4; ++s) occ[d.crossings[ci].arc[s]].push_back({ci, s});
    for (const auto& [arc, slots] : occ)
        if (slots.size() != 2)
            throw std::domain_error("diagram: arc " + std::to_string(arc) + " occurs " +
                                    std::to_string(slots.size()) + " times (want 2)");
    return occ;
}

// Faces of the diagram as orbits of corner states. State (c, s) is the corner
// between slots s and s+1 of crossing c; the face continues through the arc
// attached at slot s+1. Returns face ids indexed by state (4 per crossing).
std::vector<int> trace_faces(const PlanarDiagram& d,
                             std::map<int, std::vector<Slot>>& occ, int& face_count) {
    const int n = static_cast<int>(d.crossings.size());
    std::vector<int> face(4 * n, -1);
    face_count = 0;
    for (int start = 0; start < 4 * n; ++start) {
        if (face[start] != -1) continue;
        int state = start;
        while (face[state] == -1) {
            face[state] = face_count;
            const int c = state / 4, s = state % 4;
            const int exit = (s + 1) % 4;
            const auto& ends = occ[d.crossings[c].arc[exit]];
            const Slot here{c, exit};
            const Slot other = (ends[0] == here) ? ends[1] : ends[0];
            state = 4 * other.crossing + other.slot;
        }
        ++face_count;
    }
    return face;
}

}  // namespace

std::uint64_t diagram_determinant(const PlanarDiagram& d) {
    const int n = static_cast<int>(d.crossings.size());
    if (n == 0) {
        // Unlinks: one free loop is the unknot; more are split.
        return d.unknotted_loops <= 1 ? 1 : 0;
    }
    if (d.unknotted_loops > 0) return 0;  // split

    auto occ = occurrences(d);

    // Split diagrams (disconnected 4-valent graph) have determinant 0.
    {
        std::vector<int> group(n, -1);
        std::queue<int> todo;
        group[0] = 0;
        todo.push(0);
        while (!todo.empty()) {
            const int c = todo.front();
            todo.pop();
            for (int s = 0; s < 4; ++s)
                for (const Slot& o : occ[d.crossings[c].arc[s]])
                    if (group[o.crossing] == -1) {
                        group[o.crossing] = 0;
                        todo.push(o.crossing);
                    }
        }
        for (int c = 0; c < n; ++c)
            if (group[c] == -1) return 0;
    }

    int face_count = 0;
    const std::vector<int> face = trace_faces(d, occ, face_count);
    if (face_count != n + 2)
        throw std::domain_error("diagram: crossing data is not planar");

    // Checkerboard colouring: corners on either side of a slot lie in faces of
    // opposite colour. Propagate over corner adjacencies until stable.
    std::vector<int> colour(face_count, -1);
    colour[face[0]] = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int state = 0; state < 4 * n; ++state) {
            const int c = state / 4, s = state % 4;
            const int f1 = face[state];
            const int f2 = face[4 * c + (s + 3) % 4];
            if (colour[f1] == -1 && colour[f2] == -1) continue;
            if (colour[f1] == -1) { colour[f1] = 1 - colour[f2]; changed = true; }
            else if (colour[f2] == -1) { colour[f2] = 1 - colour[f1]; changed = true; }
            else if (colour[f1] == colour[f2])
                throw std::domain_error("diagram: not checkerboard colourable");
        }
    }
    for (int f = 0; f < face_count; ++f)
        if (colour[f] == -1) throw std::domain_error("diagram: not checkerboard colourable");

    // White regions (either colour class works; the determinant is invariant).
    std::vector<int> white_index(face_count, -1);
    int whites = 0;
    for (int f = 0; f < face_count; ++f)
        if (colour[f] == 0) white_index[f] = whites++;
    if (whites <= 1) return 1;

    std::vector<std::vector<std::int64_t>> g(whites, std::vector<std::int64_t>(whites, 0));
    for (int c = 0; c < n; ++c) {
        // Corner k of crossing c sits between slots k and k+1; corners 0 and 2
        // form one colour pair, 1 and 3 the other. The understrand occupies
        // slots 0 and 2, so the crossing type is read off the colour of
        // corner 0: eta = +1 when the shaded pair is {corner 0, corner 2}.
        const int c0 = face[4 * c + 0], c1 = face[4 * c + 1];
        const int c2 = face[4 * c + 2], c3 = face[4 * c + 3];
        int eta, u, v;
        if (colour[c0] == 1) {  // corners 0 and 2 shaded; whites at 1 and 3
            eta = +1;
            u = white_index[c1];
            v = white_index[c3];
        } else {
            eta = -1;
            u = white_index[c0];
            v = white_index[c2];
        }
        if (u != v) {
            g[u][v] -= eta;
            g[v][u] -= eta;
        }
    }
    for (int i = 0; i < whites; ++i) {
        std::int64_t row = 0;
        for (int j = 0; j < whites; ++j)
            if (j != i) row += g[i][j];
        g[i][i] = -row;
    }

    // Delete the first white region (any choice gives the same determinant).
    std::vector<std::vector<std::int64_t>> minor(whites - 1,
                                                 std::vector<std::int64_t>(whites - 1));
    for (int i = 1; i < whites; ++i)
        for (int j = 1; j < whites; ++j) minor[i - 1][j - 1] = g[i][j];

    const std::int64_t det = detail::int_det(std::move(minor));
    return static_cast<std::uint64_t>(det < 0 ? -det : det);
}

std::string PlanarDiagram::serialize() const {
    std::ostringstream out;
    for (const Crossing& c : crossings)
        out << "X " << c.arc[0] << ' ' << c.arc[1] << ' ' << c.arc[2] << ' ' << c.arc[3]
            << ' ' << (c.sign >= 0 ? '+' : '-') << '\n';
    for (int i = 0; i < unknotted_loops; ++i) out << "O\n";
    return out.str();
}

PlanarDiagram parse_planar_diagram(const std::string& text) {
    PlanarDiagram d;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;  // blank line
        const std::string where = "diagram line " + std::to_string(line_no);
        if (head == "O") {
            ++d.unknotted_loops;
            std::string extra;
            if (ls >> extra) throw std::domain_error(where + ": trailing tokens after O");
            continue;
        }
        if (head != "X") throw std::domain_error(where + ": expected X or O");
        Crossing c;
        for (int k = 0; k < 4; ++k)
            if (!(ls >> c.arc[k])) throw std::domain_error(where + ": expected four arc labels");
        std::string sign;
        if (!(ls >> sign) || (sign != "+" && sign != "-"))
            throw std::domain_error(where + ": expected sign + or -");
        c.sign = (sign == "+") ? +1 : -1;
        std::string extra;
        if (ls >> extra) throw std::domain_error(where + ": trailing tokens");
        d.crossings.push_back(c);
    }
    occurrences(d);  // validates arc multiplicity
    compute_components(d);
    return d;
}

BranchLocusDescriptor branch_locus(OuterArc outer, const Slope& s,
                                   const std::string& quotient_arc_name) {
    BranchLocusDescriptor b;
    b.outer = outer;
    b.quotient_arc_name = quotient_arc_name;
    b.filling = s;
    b.components = (s.p() % 2 != 0) ? 1 : 2;
    b.realized = (outer == OuterArc::UnknottedArc);
    if (b.realized) {
        if (s.is_infinite())
            b.diagram.unknotted_loops = 1;  // trivial branch set: the unknotted axis image
        else
            b.diagram = two_bridge_diagram(s);
    }
    return b;
}

}  // namespace branch2
