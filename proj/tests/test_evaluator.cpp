#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bolmoufang/constructions.hpp"
#include "bolmoufang/evaluator.hpp"
#include "bolmoufang/model_finder.hpp"
#include "oracles.hpp"

using namespace bolmoufang;

namespace {

const std::vector<FiniteLoop>& loops_upto_5_and_examples() {
    static const auto all = [] {
        std::vector<FiniteLoop> v;
        for (int n = 1; n <= 5; ++n)
            for (auto& l : all_loops(n)) v.push_back(std::move(l));
        for (auto e : kAllPaperExamples) {
            v.push_back(paper_example(e));
            v.push_back(opposite(paper_example(e)));
        }
        return v;
    }();
    return all;
}

}  // namespace

TEST_CASE("defining laws match their tabulated names") {
    for (auto v : kAllVarieties) {
        if (auto n = defining_name(v)) CHECK(defining_law(v) == decode_name(*n).equation());
    }
    CHECK(defining_law(Variety::GR).str() == "x(yz)=(xy)z");
    CHECK(defining_law(Variety::LA).str() == "x(xy)=(xx)y");
    CHECK(defining_law(Variety::RA).str() == "x(yy)=(xy)y");
    CHECK(defining_law(Variety::FL).str() == "x(yx)=(xy)x");
    CHECK(defining_law(Variety::PA3).str() == "x(xx)=(xx)x");
    CHECK(defining_name(Variety::ML)->str() == "D34");
    CHECK(defining_name(Variety::MN)->str() == "C24");
    CHECK_FALSE(defining_name(Variety::GR).has_value());
}

TEST_CASE("variety duals") {
    CHECK(dual(Variety::LB) == Variety::RB);
    CHECK(dual(Variety::LN) == Variety::RN);
    CHECK(dual(Variety::ML) == Variety::ML);
    CHECK(dual(Variety::PA3) == Variety::PA3);
    for (auto v : kAllVarieties) {
        CHECK(dual(dual(v)) == v);
        CHECK(parse_variety(tag(v)) == v);
    }
    CHECK_FALSE(parse_variety("XX").has_value());
}

TEST_CASE("parse_law") {
    CHECK(parse_law("C52").label == "C25");
    CHECK(parse_law("3PA").label == "3PA");
    CHECK(parse_law("x(y(zy))=(xy)(zy)").label == "E13");
    CHECK(parse_law("x(yx)=(xy)x").label == "x(yx)=(xy)x");
    CHECK_THROWS_AS(parse_law("bogus"), SyntaxError);
}

TEST_CASE("holds and witnesses on the example loops") {
    const auto& e63 = paper_example(PaperExample::E6_3);
    auto w = counterexample(e63, law(Variety::FL));
    REQUIRE(w.has_value());
    CHECK(w->lhs_value != w->rhs_value);
    auto [l, r] = evaluate_at(e63, defining_law(Variety::FL), 8, 9, 0);
    CHECK(l != r);

    auto trivial = FiniteLoop::from_table({{0}});
    for (auto n : enumerate_all()) CHECK(holds(trivial, n));

    const auto& e64 = paper_example(PaperExample::E6_4);
    CHECK_FALSE(satisfies_variety(e64, Variety::RA));
    auto [l2, r2] = evaluate_at(e64, defining_law(Variety::RA), 6, 4, 0);
    CHECK(l2 != r2);
}

TEST_CASE("witness is the lexicographically first failing triple and re-evaluates") {
    for (const auto& L : loops_upto_5_and_examples()) {
        if (L.order() > 8) continue;
        for (auto n : {parse_name("B45"), parse_name("A34"), parse_name("F13")}) {
            auto w = counterexample(L, law(n));
            auto eq = decode_name(n).equation();
            std::optional<std::array<int, 3>> first;
            for (int x = 0; x < L.order() && !first; ++x)
                for (int y = 0; y < L.order() && !first; ++y)
                    for (int z = 0; z < L.order() && !first; ++z)
                        if (oracle::eval(L, eq.lhs, {x, y, z}) != oracle::eval(L, eq.rhs, {x, y, z}))
                            first = std::array{x, y, z};
            REQUIRE(w.has_value() == first.has_value());
            if (!w) continue;
            CHECK(std::array<int, 3>{w->x, w->y, w->z} == *first);
            CHECK(oracle::eval(L, eq.lhs, *first) == w->lhs_value);
            CHECK(oracle::eval(L, eq.rhs, *first) == w->rhs_value);
            CHECK(w->lhs_value != w->rhs_value);
            CHECK(w->law == n.str());
        }
    }
}

TEST_CASE("satisfies_variety") {
    const auto& e61 = paper_example(PaperExample::E6_1);
    CHECK(satisfies_variety(e61, Variety::EL));
    CHECK_FALSE(satisfies_variety(e61, Variety::GR));
    const auto& e68 = paper_example(PaperExample::E6_8);
    CHECK(satisfies_variety(e68, Variety::MN));
    CHECK_FALSE(satisfies_variety(e68, Variety::PA3));
    CHECK(e68(1, e68(1, 1)) != e68(e68(1, 1), 1));
    for (auto v : kAllVarieties) CHECK(satisfies_variety(cyclic_group(3).loop(), v));
}

TEST_CASE("profile examples") {
    auto p = profile(cyclic_group(2).loop());
    CHECK(p.identities.all());
    CHECK(p.varieties.all());

    auto p62 = profile(paper_example(PaperExample::E6_2));
    CHECK(p62.holds(Variety::ML));
    CHECK_FALSE(p62.holds(Variety::LN));
    CHECK_FALSE(p62.holds(Variety::MN));
    CHECK_FALSE(p62.holds(Variety::GR));

    const auto& e65 = paper_example(PaperExample::E6_5);
    auto p65 = profile(e65);
    CHECK(p65.holds(Variety::LC));
    CHECK_FALSE(p65.holds(Variety::RN));
    auto [l, r] = evaluate_at(e65, defining_law(Variety::RN), 1, 2, 3);
    CHECK(l != r);
}

TEST_CASE("property: profile agrees with naive evaluation of every law") {
    for (const auto& L : loops_upto_5_and_examples()) {
        auto p = profile(L);
        bool ok = true;
        for (auto n : enumerate_all()) ok = ok && p.holds(n) == oracle::holds(L, decode_name(n).equation());
        for (auto v : kAllVarieties) ok = ok && p.holds(v) == oracle::holds(L, defining_law(v));
        CHECK(ok);
    }
}

TEST_CASE("property: profile coherence") {
    for (const auto& L : loops_upto_5_and_examples()) {
        auto p = profile(L);
        if (p.holds(Variety::GR)) {
            CHECK(p.identities.all());
            CHECK(p.varieties.all());
        }
        for (auto v : kAllVarieties)
            if (auto n = defining_name(v)) CHECK(p.holds(v) == p.holds(*n));
    }
}

TEST_CASE("LawProgram shares common subterms") {
    std::vector<Equation> eqs{parse_equation("x(y(zx))=((xy)z)x"), parse_equation("(xy)(zx)=(x(yz))x")};
    LawProgram prog(eqs);
    // 6 products for the first equation; the second reuses xy and zx
    CHECK(prog.steps().size() == 10);
    CHECK(prog.equation_count() == 2);
}
