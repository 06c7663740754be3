#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace branch2 {

// Order of a first homology group: either a non-negative integer (the order of
// a finite group, with 1 meaning trivial) or infinite (positive first Betti
// number).
class H1Order {
public:
    static H1Order finite(std::uint64_t n) { return H1Order(false, n); }
    static H1Order infinite() { return H1Order(true, 0); }

    bool is_infinite() const { return infinite_; }

    std::uint64_t value() const {
        if (infinite_) throw std::domain_error("H1Order: order is infinite");
        return order_;
    }

    std::string str() const { return infinite_ ? "inf" : std::to_string(order_); }

    friend bool operator==(const H1Order& a, const H1Order& b) {
        return a.infinite_ == b.infinite_ && a.order_ == b.order_;
    }
    friend bool operator!=(const H1Order& a, const H1Order& b) { return !(a == b); }

private:
    H1Order(bool inf, std::uint64_t n) : infinite_(inf), order_(n) {}

    bool infinite_;
    std::uint64_t order_;
};

}  // namespace branch2
