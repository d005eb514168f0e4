#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "bolmoufang/constructions.hpp"
#include "bolmoufang/evaluator.hpp"
#include "oracles.hpp"

using namespace bolmoufang;

namespace {

bool commutative_by_scan(const FiniteLoop& L) {
    for (int a = 0; a < L.order(); ++a)
        for (int b = 0; b < L.order(); ++b)
            if (L(static_cast<Element>(a), static_cast<Element>(b)) != L(static_cast<Element>(b), static_cast<Element>(a)))
                return false;
    return true;
}

bool moufang(const FiniteLoop& L) { return oracle::holds(L, defining_law(Variety::ML)); }
bool associative(const FiniteLoop& L) { return oracle::holds(L, defining_law(Variety::GR)); }

std::vector<FiniteGroup> abelian_groups_upto_8() {
    std::vector<FiniteGroup> v;
    for (int n = 1; n <= 8; ++n) v.push_back(cyclic_group(n));
    auto c2 = cyclic_group(2);
    v.push_back(direct_product(c2, c2));
    v.push_back(direct_product(c2, cyclic_group(4)));
    v.push_back(direct_product(direct_product(c2, c2), c2));
    return v;
}

}  // namespace

TEST_CASE("small groups") {
    auto c4 = cyclic_group(4);
    CHECK(c4.order() == 4);
    CHECK(commutative_by_scan(c4.loop()));
    auto d4 = dihedral_group(8);
    CHECK(d4.order() == 8);
    CHECK_FALSE(commutative_by_scan(d4.loop()));
    auto s3 = symmetric_group_3();
    CHECK(s3.order() == 6);
    CHECK_FALSE(commutative_by_scan(s3.loop()));
    for (const auto& g : {c4, d4, s3}) {
        CHECK(associative(g.loop()));
        for (int a = 0; a < g.order(); ++a) {
            auto e = static_cast<Element>(a);
            CHECK(g.mul(e, g.inverse(e)) == 0);
            CHECK(g.mul(g.inverse(e), e) == 0);
        }
    }
    CHECK_THROWS(FiniteGroup::from_loop(paper_example(PaperExample::E6_6)));
    CHECK_THROWS(cyclic_group(0));
    CHECK_THROWS(dihedral_group(7));
}

TEST_CASE("direct products") {
    auto k = direct_product(cyclic_group(2), cyclic_group(3));
    CHECK(k.order() == 6);
    CHECK(commutative_by_scan(k.loop()));
    // C2 x C3 is cyclic: some element has order 6
    bool has_generator = false;
    for (int g = 1; g < 6; ++g) {
        Element p = static_cast<Element>(g);
        int ord = 1;
        while (p != 0) {
            p = k.mul(p, static_cast<Element>(g));
            ++ord;
        }
        has_generator = has_generator || ord == 6;
    }
    CHECK(has_generator);
    CHECK_FALSE(commutative_by_scan(direct_product(symmetric_group_3(), cyclic_group(2)).loop()));
}

TEST_CASE("Chein doubles of nonabelian groups are Moufang and nonassociative") {
    for (const auto& g : {symmetric_group_3(), dihedral_group(8), direct_product(symmetric_group_3(), cyclic_group(2))}) {
        auto m = chein_double(g);
        CHECK(m.order() == 2 * g.order());
        CHECK(moufang(m));
        CHECK_FALSE(associative(m));
    }
}

TEST_CASE("Chein doubles of abelian groups are associative") {
    for (const auto& g : abelian_groups_upto_8()) {
        auto m = chein_double(g);
        CHECK(moufang(m));
        CHECK(associative(m));
    }
}

TEST_CASE("the Chein double of D4 is extra and not a group") {
    const auto& e61 = paper_example(PaperExample::E6_1);
    CHECK(e61 == chein_double(dihedral_group(8)));
    CHECK(e61.order() == 16);
    CHECK(oracle::holds(e61, defining_law(Variety::EL)));
    CHECK_FALSE(oracle::holds(e61, defining_law(Variety::GR)));
    CHECK(paper_example(PaperExample::E6_2) == chein_double(symmetric_group_3()));
}

TEST_CASE("example orders") {
    const int orders[] = {6, 5, 16, 12, 12, 8, 12, 5, 6, 6};
    for (std::size_t i = 0; i < kAllPaperExamples.size(); ++i)
        CHECK(paper_example(kAllPaperExamples[i]).order() == orders[i]);
}

TEST_CASE("every caption claim holds") {
    for (auto e : kAllPaperExamples) {
        auto claims = caption_claims(e);
        CHECK_FALSE(claims.empty());
        for (const auto& c : claims) {
            INFO(name(e), ": ", c.text);
            CHECK(c.check(paper_example(e)));
        }
    }
}

TEST_CASE("example names") {
    for (auto e : kAllPaperExamples) {
        CHECK(parse_paper_example(name(e)) == e);
        CHECK_FALSE(caption(e).empty());
    }
    CHECK_FALSE(parse_paper_example("E7_1").has_value());
    for (int n = 1; n <= 8; ++n) CHECK(name(distinguishing_example(n)) == "E6_" + std::to_string(n));
    CHECK_THROWS(distinguishing_example(9));
}

TEST_CASE("quoted witness triples") {
    const auto& e63 = paper_example(PaperExample::E6_3);
    CHECK(e63(8, e63(9, 8)) != e63(e63(8, 9), 8));
    const auto& e64 = paper_example(PaperExample::E6_4);
    CHECK(e64(1, e64(2, 1)) != e64(e64(1, 2), 1));
    const auto& e67 = paper_example(PaperExample::E6_7);
    CHECK(e67(1, e67(e67(2, 2), 3)) != e67(e67(1, e67(2, 2)), 3));
}
