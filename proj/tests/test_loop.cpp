#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "bolmoufang/constructions.hpp"
#include "bolmoufang/evaluator.hpp"
#include "bolmoufang/loop.hpp"
#include "bolmoufang/model_finder.hpp"
#include "oracles.hpp"

using namespace bolmoufang;

namespace {

std::vector<FiniteLoop> small_catalog() {
    std::vector<FiniteLoop> all;
    for (int n = 1; n <= 5; ++n)
        for (auto& l : all_loops(n)) all.push_back(std::move(l));
    for (auto e : kAllPaperExamples) all.push_back(paper_example(e));
    return all;
}

}  // namespace

TEST_CASE("from_table accepts loops and rejects the rest") {
    auto e66 = FiniteLoop::from_table({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}});
    CHECK(e66.order() == 5);
    CHECK(FiniteLoop::from_table({{0}}).order() == 1);
    CHECK_THROWS_AS(FiniteLoop::from_table({{0, 1}, {1, 1}}), NotLatin);
    CHECK_THROWS_AS(FiniteLoop::from_table({{1, 0}, {0, 0}}), NotLatin);
    CHECK_THROWS_AS(FiniteLoop::from_table({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}), NoNeutral);
    CHECK_THROWS_AS(FiniteLoop::from_table({{0, 1}, {1}}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteLoop::from_table({{0, 1}, {1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(FiniteLoop::from_table({}), std::invalid_argument);
}

TEST_CASE("from_table moves the neutral element to 0") {
    // Z3 written with neutral 2: a*b = a+b-2 mod 3
    auto l = FiniteLoop::from_table({{1, 2, 0}, {2, 0, 1}, {0, 1, 2}});
    for (int a = 0; a < 3; ++a) {
        CHECK(l(0, static_cast<Element>(a)) == a);
        CHECK(l(static_cast<Element>(a), 0) == a);
    }
    CHECK(is_associative(l));
}

TEST_CASE("property: relabelled copies keep their profile") {
    std::mt19937 rng(7);
    auto catalog = small_catalog();
    for (int trial = 0; trial < 200; ++trial) {
        const auto& l = catalog[rng() % catalog.size()];
        auto copy = FiniteLoop::from_table(oracle::relabel(l, oracle::random_permutation(l.order(), rng)));
        CHECK(profile(copy) == profile(l));
    }
}

TEST_CASE("property: division tables satisfy the loop axioms") {
    for (const auto& L : small_catalog()) {
        const int n = L.order();
        bool ok = true;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                auto a = static_cast<Element>(i), b = static_cast<Element>(j);
                ok = ok && L(a, L.left_div(a, b)) == b && L(L.right_div(b, a), a) == b &&
                     L.left_div(a, L(a, b)) == b && L.right_div(L(b, a), a) == b &&
                     L.left_div(L.right_div(a, b), a) == b && L.right_div(a, L.left_div(b, a)) == b;
            }
        CHECK(ok);
    }
}

TEST_CASE("opposite") {
    const auto& e64 = paper_example(PaperExample::E6_4);
    CHECK(opposite(opposite(e64)) == e64);
    auto z4 = cyclic_group(4).loop();
    CHECK(opposite(z4) == z4);
    auto op7 = opposite(paper_example(PaperExample::E6_7));
    CHECK(satisfies_variety(op7, Variety::RN));
    CHECK_FALSE(satisfies_variety(op7, Variety::MN));
    CHECK_FALSE(satisfies_variety(op7, Variety::PA3));
}

TEST_CASE("inverse properties") {
    const auto& e32 = paper_example(PaperExample::E3_2);
    CHECK(has_two_sided_inverses(e32));
    CHECK_FALSE(has_left_inverse_property(e32));
    CHECK_FALSE(has_right_inverse_property(e32));

    for (const auto& g : {cyclic_group(5), dihedral_group(8), symmetric_group_3()}) {
        CHECK(has_left_inverse_property(g.loop()));
        CHECK(has_right_inverse_property(g.loop()));
        CHECK(has_two_sided_inverses(g.loop()));
    }
    CHECK(has_left_inverse_property(paper_example(PaperExample::E6_5)));
}

TEST_CASE("property: left or right inverse property implies two-sided inverses") {
    for (const auto& L : small_catalog()) {
        if (has_left_inverse_property(L) || has_right_inverse_property(L)) CHECK(has_two_sided_inverses(L));
    }
}

TEST_CASE("bounded power associativity") {
    const auto& e31 = paper_example(PaperExample::E3_1);
    CHECK(powers_associative_upto(e31, 3));
    CHECK_FALSE(powers_associative_upto(e31, 4));
    CHECK(e31(e31(1, 1), e31(1, 1)) != e31(1, e31(1, e31(1, 1))));
    CHECK(powers_associative_upto(symmetric_group_3().loop(), 6));
    CHECK(powers_associative_upto(dihedral_group(8).loop(), 6));
}

TEST_CASE(".loop text format") {
    auto l = read_loop_text("# comment line\n3  # order\n0 1 2\n1 2 0\n2 0 1 # last row\n");
    CHECK(l == cyclic_group(3).loop());
    CHECK(read_loop_text(to_loop_text(paper_example(PaperExample::E6_5))) == paper_example(PaperExample::E6_5));
    CHECK_THROWS(read_loop_text(""));
    CHECK_THROWS(read_loop_text("2\n0 1\n1"));
    CHECK_THROWS(read_loop_text("2\n0 1\n1 0\n5"));
    CHECK_THROWS_AS(read_loop_text("2\n0 1\n1 1\n"), NotLatin);
    CHECK_THROWS(read_loop_file("/nonexistent/file.loop"));
}
