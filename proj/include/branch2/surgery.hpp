#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "branch2/homology.hpp"
#include "branch2/slope.hpp"

namespace branch2 {

struct LinkComponent {
    std::string name;
    Slope framing;
    bool unknotted = true;
};

// A framed link: named components with rational (or infinite) surgery
// coefficients and a symmetric integer linking matrix.
class FramedLink {
public:
    std::size_t add_component(std::string name, Slope framing, bool unknotted = true);
    void set_linking(std::size_t i, std::size_t j, std::int64_t value);
    std::int64_t linking(std::size_t i, std::size_t j) const;

    std::size_t size() const { return components_.size(); }
    const LinkComponent& component(std::size_t i) const;
    void set_framing(std::size_t i, Slope framing);

    // Remove component i, dropping its row and column of linking numbers.
    void remove_component(std::size_t i);

    std::string serialize() const;

    // Order of first homology of the surgered manifold, from the framing
    // presentation matrix. Determinant zero means infinite homology.
    H1Order h1_order() const;

    // Twist n times along an unknotted component j. Its coefficient p/q
    // becomes p/(q + n p); every other coefficient and linking number shifts
    // by the usual linking-square correction. The resulting surgery
    // description presents the same manifold.
    void rolfsen_twist(std::size_t j, std::int64_t n);

    // Remove a (+1)- or (-1)-framed unknotted component by twisting it to
    // infinite framing and deleting it.
    void blow_down(std::size_t j);

private:
    void check_index(std::size_t i) const;

    std::vector<LinkComponent> components_;
    std::vector<std::vector<std::int64_t>> lk_;
};

FramedLink parse_framed_link(const std::string& text);

}  // namespace branch2
