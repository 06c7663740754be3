#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <string>

#include "branch2/slope.hpp"

using namespace branch2;

namespace {

// Flat letter string ("TSTTTS") for easy comparison against expected words.
std::string flat(const SL2Word& w) {
    std::string out;
    for (SL2Letter l : w.letters()) {
        switch (l) {
            case SL2Letter::S: out += 'S'; break;
            case SL2Letter::T: out += 'T'; break;
            case SL2Letter::Tinv: out += 't'; break;
        }
    }
    return out;
}

}  // namespace

TEST_CASE("slope normalization and parsing") {
    CHECK(Slope(2, 3).str() == "2/3");
    CHECK(Slope(-2, 3).str() == "-2/3");
    CHECK(Slope(2, -3) == Slope(-2, 3));
    CHECK(Slope(4, 6) == Slope(2, 3));
    CHECK(Slope(-1, 0) == Slope::infinity());
    CHECK(Slope(0, -5) == Slope(0));
    CHECK(Slope(7, 1).str() == "7");
    CHECK(Slope::infinity().str() == "inf");
    CHECK_THROWS_AS(Slope(0, 0), std::domain_error);

    CHECK(parse_slope("2/3") == Slope(2, 3));
    CHECK(parse_slope("-1/3") == Slope(-1, 3));
    CHECK(parse_slope("17") == Slope(17));
    CHECK(parse_slope("inf") == Slope::infinity());
    CHECK(parse_slope("4/-6") == Slope(-2, 3));
    CHECK_THROWS_AS(parse_slope(""), std::domain_error);
    CHECK_THROWS_AS(parse_slope("x"), std::domain_error);
    CHECK_THROWS_AS(parse_slope("1/3/5"), std::domain_error);
    CHECK_THROWS_AS(parse_slope("0/0"), std::domain_error);
    CHECK_THROWS_AS(parse_slope("2/ 3"), std::domain_error);
}

TEST_CASE("canonical words for the labelled slopes") {
    CHECK(flat(slope_to_word(Slope::infinity())) == "");
    CHECK(flat(slope_to_word(Slope(0))) == "S");
    CHECK(flat(slope_to_word(Slope(1))) == "TS");
    CHECK(flat(slope_to_word(Slope(3))) == "TTTS");
    CHECK(flat(slope_to_word(Slope(-1, 3))) == "STTTS");
    CHECK(flat(slope_to_word(Slope(2, 3))) == "TSTTTS");
}

TEST_CASE("word printing groups runs") {
    CHECK(slope_to_word(Slope(2, 3)).str() == "T S T^3 S");
    CHECK(slope_to_word(Slope(-1, 3)).str() == "S T^3 S");
    CHECK(slope_to_word(Slope::infinity()).str() == "1");
    CHECK(slope_to_word(Slope(-2)).str() == "T^-2 S");
}

TEST_CASE("letter matrices and word evaluation") {
    CHECK(word_to_matrix(SL2Word{}) == Mat2::identity());
    CHECK(word_to_matrix(SL2Word{{SL2Letter::S}}) == Mat2{0, -1, 1, 0});
    CHECK(word_to_matrix(SL2Word{{SL2Letter::T, SL2Letter::Tinv}}) == Mat2::identity());

    // T S T^3 S sends (1,0) to (2,3).
    const Mat2 m = word_to_matrix(slope_to_word(Slope(2, 3)));
    CHECK(m.det() == 1);
    CHECK(m.a == 2);
    CHECK(m.c == 3);
}

TEST_CASE("matrix to slope") {
    CHECK(matrix_to_slope(Mat2::identity()) == Slope::infinity());
    CHECK(matrix_to_slope(Mat2{0, -1, 1, 0}) == Slope(0));
    CHECK(matrix_to_slope(Mat2{-2, 1, -3, 1}) == Slope(2, 3));
    CHECK_THROWS_AS(matrix_to_slope(Mat2{2, 0, 0, 2}), std::domain_error);
    CHECK_THROWS_AS(matrix_to_slope(Mat2{0, 1, 1, 0}), std::domain_error);
}

TEST_CASE("roundtrip and termination over small slopes") {
    for (std::int64_t q = 0; q <= 60; ++q) {
        for (std::int64_t p = -60; p <= 60; ++p) {
            if (std::gcd(p < 0 ? -p : p, q) != 1) continue;
            if (p == 0 && q == 0) continue;
            const Slope s(p, q);
            const SL2Word w = slope_to_word(s);
            CHECK(matrix_to_slope(word_to_matrix(w)) == s);

            // One S per recursion step; the denominator strictly drops each step.
            std::size_t s_count = 0;
            for (SL2Letter l : w.letters())
                if (l == SL2Letter::S) ++s_count;
            CHECK(s_count <= static_cast<std::size_t>(q + 1));

            // Only the leading run may use T^-1 (slopes below -1).
            bool seen_s = false;
            for (SL2Letter l : w.letters()) {
                if (l == SL2Letter::S) seen_s = true;
                if (l == SL2Letter::Tinv) CHECK(!seen_s);
            }
        }
    }
}
