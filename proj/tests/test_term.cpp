#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "bolmoufang/term.hpp"

using namespace bolmoufang;

TEST_CASE("parse_identity names the identity") {
    CHECK(encode_name(parse_identity("x((yy)z)=((xy)y)z")).str() == "C25");
    CHECK(encode_name(parse_identity("x(y(zy))=(xy)(zy)")).str() == "E13");
    CHECK(encode_name(parse_identity(" x * ( y * (z*y) ) = (x*y) * (z*y) ")).str() == "E13");
    CHECK(encode_name(parse_identity("x\xC2\xB7(y(zy))=(xy)(zy)")).str() == "E13");
}

TEST_CASE("juxtaposition associates to the left") {
    CHECK(parse_term("xyz") == parse_term("(xy)z"));
    CHECK(parse_term("xy(zx)") == parse_term("(xy)(zx)"));
    CHECK(parse_term("x((yy)z)").str() == "x((yy)z)");
}

TEST_CASE("parse_identity rejects what is not Bol-Moufang") {
    CHECK_THROWS_AS(parse_identity("x(yz)=x(yz)"), NotBolMoufang);
    CHECK_THROWS_AS(parse_identity("x(y(zx))=x(y(zx))"), NotBolMoufang);  // same bracketing
    CHECK_THROWS_AS(parse_identity("x(y(zx))=((xy)x)z"), NotBolMoufang);  // order differs
    CHECK_THROWS_AS(parse_identity("x(x(xy))=((xx)x)y"), NotBolMoufang);  // two variables
    CHECK_THROWS_AS(parse_identity("x(yz)=(xy)z"), NotBolMoufang);        // three leaves
    CHECK_THROWS_AS(parse_identity("x(y(zw))=((xy)z)w"), SyntaxError);
    CHECK_THROWS_AS(parse_identity("x(y(zx)=((xy)z)x"), SyntaxError);
    CHECK_THROWS_AS(parse_identity("x(y(zx))"), SyntaxError);
    CHECK_THROWS_AS(parse_identity("x=y=z"), SyntaxError);
    CHECK_THROWS_AS(parse_identity("=x"), SyntaxError);
}

TEST_CASE("encode_name canonicalizes variables and sides") {
    CHECK(encode_name(parse_identity("(xy)(xz)=((xy)x)z")).str() == "B35");
    CHECK(encode_name(parse_identity("((xy)y)z=x((yy)z)")).str() == "C25");
    CHECK(encode_name(parse_identity("z(x(yx))=(zx)(yx)")).str() == "E13");
}

TEST_CASE("decode_name") {
    CHECK(decode_name(parse_name("C25")).str() == "x((yy)z)=((xy)y)z");
    CHECK(decode_name(parse_name("D34")).str() == "(xy)(zx)=(x(yz))x");
    CHECK(decode_name(parse_name("A12")).str() == "x(x(yz))=x((xy)z)");
}

TEST_CASE("names parse in either bracket order") {
    CHECK(parse_name("C52") == parse_name("C25"));
    CHECK(parse_name("B41").str() == "B14");
    CHECK_THROWS_AS(parse_name("C22"), SyntaxError);
    CHECK_THROWS_AS(parse_name("G12"), SyntaxError);
    CHECK_THROWS_AS(parse_name("A16"), SyntaxError);
    CHECK_THROWS_AS(IdentityName(Pattern::A, 3, 3), std::invalid_argument);
}

TEST_CASE("dual_name") {
    CHECK(dual_name(parse_name("B35")).str() == "E13");
    CHECK(dual_name(parse_name("D15")).str() == "D15");
    CHECK(dual_name(parse_name("B14")).str() == "E25");
    CHECK(dual_name(parse_name("A34")).str() == "F23");
}

TEST_CASE("dual_term reads the identity backwards") {
    CHECK(dual_term(parse_identity("(xy)(xz)=((xy)x)z")).str() == "x(y(zy))=(xy)(zy)");
    auto c15 = decode_name(parse_name("C15"));
    auto d = dual_term(c15);
    CHECK((d == c15 || (d.lhs() == c15.rhs() && d.rhs() == c15.lhs())));
    CHECK(dual_term(decode_name(parse_name("A34"))) == decode_name(parse_name("F23")));
}

TEST_CASE("enumerate_all") {
    const auto& all = enumerate_all();
    REQUIRE(all.size() == 60);
    CHECK(all.front().str() == "A12");
    CHECK(all.back().str() == "F45");
    std::set<std::string> seen;
    for (auto n : all) {
        seen.insert(n.str());
        CHECK(n.lhs_bracket() < n.rhs_bracket());
        CHECK(IdentityName::from_index(n.index()) == n);
    }
    CHECK(seen.size() == 60);
    CHECK(std::is_sorted(all.begin(), all.end()));
}

TEST_CASE("name calculus invariants over all 60 names") {
    std::set<std::string> duals;
    for (auto n : enumerate_all()) {
        CHECK(encode_name(decode_name(n)) == n);
        CHECK(dual_name(dual_name(n)) == n);
        CHECK(encode_name(dual_term(decode_name(n))) == dual_name(encode_name(decode_name(n))));
        if (n.pattern() == Pattern::C || n.pattern() == Pattern::D)
            CHECK(dual_name(n).pattern() == n.pattern());
        duals.insert(dual_name(n).str());
    }
    CHECK(duals.size() == 60);  // bijection
}

TEST_CASE("property: renaming variables and swapping sides keeps the name") {
    std::mt19937 rng(20240611);
    std::array<Variable, 3> perm{Variable::x, Variable::y, Variable::z};
    for (int trial = 0; trial < 500; ++trial) {
        auto n = IdentityName::from_index(static_cast<int>(rng() % 60));
        std::shuffle(perm.begin(), perm.end(), rng);
        auto id = decode_name(n);
        Term l = id.lhs().renamed(perm), r = id.rhs().renamed(perm);
        if (rng() % 2) std::swap(l, r);
        Identity moved{Equation{l, r}};
        CHECK(encode_name(moved) == n);
        // the printed form parses back to the same identity
        CHECK(encode_name(parse_identity(moved.str())) == n);
        CHECK(encode_name(dual_term(moved)) == dual_name(n));
    }
}

TEST_CASE("bracketings") {
    std::array<Variable, 4> w{Variable::x, Variable::y, Variable::z, Variable::x};
    const char* shapes[] = {"x(y(zx))", "x((yz)x)", "(xy)(zx)", "(x(yz))x", "((xy)z)x"};
    for (int b = 1; b <= 5; ++b) {
        CHECK(bracket(b, w).str() == shapes[b - 1]);
        CHECK(bracketing_of(bracket(b, w)) == b);
    }
    CHECK_THROWS(bracket(6, w));
    CHECK_THROWS(bracketing_of(parse_term("xy")));
}
