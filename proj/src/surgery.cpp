#include "branch2/surgery.hpp"

#include <sstream>
#include <stdexcept>

#include "int_det.hpp"

namespace branch2 {

std::size_t FramedLink::add_component(std::string name, Slope framing, bool unknotted) {
    components_.push_back({std::move(name), framing, unknotted});
    for (auto& row : lk_) row.push_back(0);
    lk_.emplace_back(components_.size(), 0);
    return components_.size() - 1;
}

void FramedLink::check_index(std::size_t i) const {
    if (i >= components_.size()) throw std::out_of_range("component index out of range");
}

void FramedLink::set_linking(std::size_t i, std::size_t j, std::int64_t value) {
    check_index(i);
    check_index(j);
    if (i == j) throw std::domain_error("linking number needs two distinct components");
    lk_[i][j] = value;
    lk_[j][i] = value;
}

std::int64_t FramedLink::linking(std::size_t i, std::size_t j) const {
    check_index(i);
    check_index(j);
    return i == j ? 0 : lk_[i][j];
}

const LinkComponent& FramedLink::component(std::size_t i) const {
    check_index(i);
    return components_[i];
}

void FramedLink::set_framing(std::size_t i, Slope framing) {
    check_index(i);
    components_[i].framing = framing;
}

void FramedLink::remove_component(std::size_t i) {
    check_index(i);
    components_.erase(components_.begin() + static_cast<std::ptrdiff_t>(i));
    lk_.erase(lk_.begin() + static_cast<std::ptrdiff_t>(i));
    for (auto& row : lk_) row.erase(row.begin() + static_cast<std::ptrdiff_t>(i));
}

H1Order FramedLink::h1_order() const {
    const std::size_t n = components_.size();
    std::vector<std::vector<std::int64_t>> m(n, std::vector<std::int64_t>(n, 0));
    for (std::size_t i = 0; i < n; ++i) {
        const Slope& f = components_[i].framing;
        m[i][i] = f.p();
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) m[i][j] = f.q() * lk_[i][j];
    }
    const std::int64_t det = detail::int_det(std::move(m));
    if (det == 0) return H1Order::infinite();
    return H1Order::finite(static_cast<std::uint64_t>(det < 0 ? -det : det));
}

void FramedLink::rolfsen_twist(std::size_t j, std::int64_t n) {
    check_index(j);
    if (!components_[j].unknotted)
        throw std::domain_error("can only twist along an unknotted component");

    std::vector<std::int64_t> lkj(components_.size());
    for (std::size_t i = 0; i < components_.size(); ++i) lkj[i] = linking(i, j);

    const Slope fj = components_[j].framing;
    components_[j].framing = Slope(fj.p(), fj.q() + n * fj.p());

    for (std::size_t i = 0; i < components_.size(); ++i) {
        if (i == j) continue;
        const Slope fi = components_[i].framing;
        components_[i].framing = Slope(fi.p() + n * lkj[i] * lkj[i] * fi.q(), fi.q());
        for (std::size_t k = i + 1; k < components_.size(); ++k) {
            if (k == j) continue;
            const std::int64_t v = lk_[i][k] + n * lkj[i] * lkj[k];
            lk_[i][k] = v;
            lk_[k][i] = v;
        }
    }
}

void FramedLink::blow_down(std::size_t j) {
    check_index(j);
    const Slope f = components_[j].framing;
    if (!(f == Slope(1) || f == Slope(-1)))
        throw std::domain_error("blow down needs framing +1 or -1");
    rolfsen_twist(j, -f.p());
    remove_component(j);
}

std::string FramedLink::serialize() const {
    std::ostringstream out;
    out << "components: " << components_.size() << "\n";
    for (const auto& c : components_)
        out << c.name << " " << c.framing.str() << " "
            << (c.unknotted ? "unknotted" : "knotted") << "\n";
    for (std::size_t i = 0; i < components_.size(); ++i) {
        for (std::size_t j = 0; j < components_.size(); ++j) {
            if (j) out << " ";
            out << (i == j ? 0 : lk_[i][j]);
        }
        out << "\n";
    }
    return out.str();
}

namespace {

std::int64_t parse_int_token(const std::string& tok, int line_no) {
    try {
        std::size_t used = 0;
        const long long v = std::stoll(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return v;
    } catch (const std::exception&) {
        std::ostringstream msg;
        msg << "line " << line_no << ": expected an integer, got '" << tok << "'";
        throw std::domain_error(msg.str());
    }
}

}  // namespace

FramedLink parse_framed_link(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;

    auto next_line = [&](const char* what) {
        while (std::getline(in, line)) {
            ++line_no;
            if (line.find_first_not_of(" \t\r") != std::string::npos) return;
        }
        std::ostringstream msg;
        msg << "line " << line_no + 1 << ": missing " << what;
        throw std::domain_error(msg.str());
    };

    next_line("'components: <n>' header");
    std::istringstream header(line);
    std::string keyword;
    long long count = -1;
    header >> keyword >> count;
    if (keyword != "components:" || count < 0) {
        std::ostringstream msg;
        msg << "line " << line_no << ": expected 'components: <n>'";
        throw std::domain_error(msg.str());
    }

    FramedLink link;
    for (long long i = 0; i < count; ++i) {
        next_line("component line");
        std::istringstream fields(line);
        std::string name, framing, flag;
        fields >> name >> framing >> flag;
        std::string extra;
        if (name.empty() || framing.empty() || (flag != "unknotted" && flag != "knotted") ||
            (fields >> extra)) {
            std::ostringstream msg;
            msg << "line " << line_no << ": expected '<name> <framing> unknotted|knotted'";
            throw std::domain_error(msg.str());
        }
        Slope f;
        try {
            f = parse_slope(framing);
        } catch (const std::exception&) {
            std::ostringstream msg;
            msg << "line " << line_no << ": bad framing '" << framing << "'";
            throw std::domain_error(msg.str());
        }
        link.add_component(name, f, flag == "unknotted");
    }

    for (long long i = 0; i < count; ++i) {
        next_line("linking matrix row");
        std::istringstream row(line);
        std::string tok;
        for (long long j = 0; j < count; ++j) {
            if (!(row >> tok)) {
                std::ostringstream msg;
                msg << "line " << line_no << ": matrix row has fewer than " << count
                    << " entries";
                throw std::domain_error(msg.str());
            }
            const std::int64_t v = parse_int_token(tok, line_no);
            if (i == j) {
                if (v != 0) {
                    std::ostringstream msg;
                    msg << "line " << line_no << ": linking matrix diagonal must be 0";
                    throw std::domain_error(msg.str());
                }
            } else if (j > i) {
                link.set_linking(static_cast<std::size_t>(i), static_cast<std::size_t>(j), v);
            } else if (link.linking(static_cast<std::size_t>(i),
                                    static_cast<std::size_t>(j)) != v) {
                std::ostringstream msg;
                msg << "line " << line_no << ": linking matrix is not symmetric";
                throw std::domain_error(msg.str());
            }
        }
        std::string extra;
        if (row >> extra) {
            std::ostringstream msg;
            msg << "line " << line_no << ": matrix row has more than " << count << " entries";
            throw std::domain_error(msg.str());
        }
    }

    return link;
}

}  // namespace branch2
