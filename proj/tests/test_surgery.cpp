#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "branch2/surgery.hpp"

using namespace branch2;

namespace {

FramedLink hopf(Slope f0, Slope f1) {
    FramedLink link;
    link.add_component("a", f0);
    link.add_component("b", f1);
    link.set_linking(0, 1, 1);
    return link;
}

}  // namespace

TEST_CASE("homology orders of basic surgeries") {
    FramedLink empty;
    CHECK(empty.h1_order() == H1Order::finite(1));

    FramedLink unknot;
    unknot.add_component("u", Slope(5, 3));
    CHECK(unknot.h1_order() == H1Order::finite(5));

    unknot.set_framing(0, Slope(0));
    CHECK(unknot.h1_order().is_infinite());

    unknot.set_framing(0, Slope::infinity());
    CHECK(unknot.h1_order() == H1Order::finite(1));

    FramedLink trefoil;
    trefoil.add_component("t", Slope(-1), /*unknotted=*/false);
    CHECK(trefoil.h1_order() == H1Order::finite(1));

    // Hopf link with integer framings a, b presents det(a b - 1).
    CHECK(hopf(Slope(2), Slope(3)).h1_order() == H1Order::finite(5));
    CHECK(hopf(Slope(1), Slope(1)).h1_order().is_infinite());
    CHECK(hopf(Slope(1, 2), Slope(1, 3)).h1_order() == H1Order::finite(5));

    // Unlinked split union multiplies orders.
    FramedLink split;
    split.add_component("a", Slope(3));
    split.add_component("b", Slope(5, 2));
    CHECK(split.h1_order() == H1Order::finite(15));
}

TEST_CASE("rolfsen twist on the Hopf link") {
    FramedLink link = hopf(Slope(1), Slope(0));
    link.rolfsen_twist(0, -1);
    CHECK(link.component(0).framing == Slope::infinity());
    CHECK(link.component(1).framing == Slope(-1));
    CHECK(link.linking(0, 1) == 1);
    CHECK(link.h1_order() == H1Order::finite(1));

    link.rolfsen_twist(0, 1);
    CHECK(link.component(0).framing == Slope(1));
    CHECK(link.component(1).framing == Slope(0));
}

TEST_CASE("twisting is rejected on knotted components") {
    FramedLink link;
    link.add_component("k", Slope(3), /*unknotted=*/false);
    CHECK_THROWS_AS(link.rolfsen_twist(0, 1), std::domain_error);
    CHECK_THROWS_AS(link.rolfsen_twist(1, 1), std::out_of_range);
}

TEST_CASE("twists preserve the homology order") {
    std::mt19937 rng(2026);
    std::uniform_int_distribution<int> ncomp(1, 3);
    std::uniform_int_distribution<int> lk_val(-2, 2);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 2);
    std::uniform_int_distribution<int> inf_roll(0, 9);
    std::uniform_int_distribution<int> turns(-2, 2);

    for (int trial = 0; trial < 10000; ++trial) {
        FramedLink link;
        const int n = ncomp(rng);
        for (int i = 0; i < n; ++i) {
            Slope f = inf_roll(rng) == 0 ? Slope::infinity() : Slope(num(rng), den(rng));
            link.add_component("c" + std::to_string(i), f);
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                link.set_linking(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                                 lk_val(rng));

        const H1Order before = link.h1_order();
        std::uniform_int_distribution<int> pick(0, n - 1);
        for (int t = 0; t < 2; ++t)
            link.rolfsen_twist(static_cast<std::size_t>(pick(rng)), turns(rng));
        REQUIRE(link.h1_order() == before);
    }
}

TEST_CASE("single twist on four components") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> lk_val(-2, 2);
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 2);
    std::uniform_int_distribution<int> turns(-2, 2);
    std::uniform_int_distribution<int> pick(0, 3);

    for (int trial = 0; trial < 2000; ++trial) {
        FramedLink link;
        for (int i = 0; i < 4; ++i)
            link.add_component("c" + std::to_string(i), Slope(num(rng), den(rng)));
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                link.set_linking(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
                                 lk_val(rng));
        const H1Order before = link.h1_order();
        link.rolfsen_twist(static_cast<std::size_t>(pick(rng)), turns(rng));
        REQUIRE(link.h1_order() == before);
    }
}

TEST_CASE("blow down") {
    FramedLink link = hopf(Slope(-1), Slope(4));
    link.blow_down(0);
    REQUIRE(link.size() == 1);
    CHECK(link.component(0).name == "b");
    CHECK(link.component(0).framing == Slope(5));
    CHECK(link.h1_order() == H1Order::finite(5));

    FramedLink plus = hopf(Slope(1), Slope(4));
    const H1Order before = plus.h1_order();
    plus.blow_down(0);
    CHECK(plus.component(0).framing == Slope(3));
    CHECK(plus.h1_order() == before);

    // Blowing down the middle of a chain links the outer components.
    FramedLink chain;
    chain.add_component("a", Slope(2));
    chain.add_component("m", Slope(1));
    chain.add_component("b", Slope(3));
    chain.set_linking(0, 1, 1);
    chain.set_linking(1, 2, 1);
    const H1Order chain_before = chain.h1_order();
    chain.blow_down(1);
    REQUIRE(chain.size() == 2);
    CHECK(chain.linking(0, 1) == -1);
    CHECK(chain.component(0).framing == Slope(1));
    CHECK(chain.component(1).framing == Slope(2));
    CHECK(chain.h1_order() == chain_before);

    FramedLink bad;
    bad.add_component("u", Slope(2));
    CHECK_THROWS_AS(bad.blow_down(0), std::domain_error);
    bad.set_framing(0, Slope(1, 2));
    CHECK_THROWS_AS(bad.blow_down(0), std::domain_error);

    FramedLink knotted;
    knotted.add_component("k", Slope(1), /*unknotted=*/false);
    CHECK_THROWS_AS(knotted.blow_down(0), std::domain_error);
}

TEST_CASE("serialization roundtrip") {
    FramedLink link;
    link.add_component("alpha", Slope(5, 3));
    link.add_component("beta", Slope::infinity(), /*unknotted=*/false);
    link.add_component("gamma", Slope(-2));
    link.set_linking(0, 1, 2);
    link.set_linking(1, 2, -1);

    const std::string text = link.serialize();
    const FramedLink back = parse_framed_link(text);
    REQUIRE(back.size() == 3);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(back.component(i).name == link.component(i).name);
        CHECK(back.component(i).framing == link.component(i).framing);
        CHECK(back.component(i).unknotted == link.component(i).unknotted);
        for (std::size_t j = 0; j < 3; ++j) CHECK(back.linking(i, j) == link.linking(i, j));
    }
    CHECK(back.serialize() == text);
    CHECK(back.h1_order() == link.h1_order());
}

TEST_CASE("parse errors carry line numbers") {
    CHECK_THROWS_WITH_AS(parse_framed_link(""), doctest::Contains("components"),
                         std::domain_error);
    CHECK_THROWS_WITH_AS(parse_framed_link("links: 2\n"), doctest::Contains("line 1"),
                         std::domain_error);
    CHECK_THROWS_WITH_AS(parse_framed_link("components: 1\nu x/y unknotted\n0\n"),
                         doctest::Contains("line 2"), std::domain_error);
    CHECK_THROWS_WITH_AS(parse_framed_link("components: 1\nu 3 tangled\n0\n"),
                         doctest::Contains("line 2"), std::domain_error);
    CHECK_THROWS_WITH_AS(
        parse_framed_link("components: 2\na 1 unknotted\nb 2 unknotted\n0 1\n2 0\n"),
        doctest::Contains("not symmetric"), std::domain_error);
    CHECK_THROWS_WITH_AS(
        parse_framed_link("components: 2\na 1 unknotted\nb 2 unknotted\n1 1\n1 0\n"),
        doctest::Contains("diagonal"), std::domain_error);
    CHECK_THROWS_WITH_AS(
        parse_framed_link("components: 2\na 1 unknotted\nb 2 unknotted\n0\n0 0\n"),
        doctest::Contains("fewer"), std::domain_error);
    CHECK_THROWS_WITH_AS(
        parse_framed_link("components: 2\na 1 unknotted\nb 2 unknotted\n0 1 5\n1 0\n"),
        doctest::Contains("more"), std::domain_error);
    CHECK_THROWS_WITH_AS(parse_framed_link("components: 1\nu 3 unknotted\nz\n"),
                         doctest::Contains("integer"), std::domain_error);
}
