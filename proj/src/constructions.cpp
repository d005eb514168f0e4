#include "bolmoufang/constructions.hpp"

#include <map>
#include <stdexcept>

#include "bolmoufang/evaluator.hpp"

namespace bolmoufang {

namespace {

#include "paper_assets.inc"  // kAsset_E3_1 ... kAsset_E6_8

FiniteLoop loop_from(int n, auto&& product) {
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) rows[a][b] = product(a, b);
    return FiniteLoop::from_table(rows);
}

}  // namespace

FiniteGroup FiniteGroup::from_loop(FiniteLoop loop) {
    if (!is_associative(loop)) throw std::invalid_argument("table is not associative");
    return FiniteGroup(std::move(loop));
}

FiniteGroup cyclic_group(int n) {
    if (n < 1) throw std::invalid_argument("cyclic_group: n must be positive");
    return FiniteGroup::from_loop(loop_from(n, [n](int a, int b) { return (a + b) % n; }));
}

FiniteGroup dihedral_group(int order) {
    if (order < 2 || order % 2) throw std::invalid_argument("dihedral_group: order must be even and >= 2");
    const int m = order / 2;
    // (r^a s^b)(r^c s^d) = r^(a + (-1)^b c) s^(b+d)
    return FiniteGroup::from_loop(loop_from(order, [m](int p, int q) {
        int a = p % m, b = p / m, c = q % m, d = q / m;
        int rot = ((b ? a - c : a + c) % m + m) % m;
        return rot + m * ((b + d) % 2);
    }));
}

FiniteGroup symmetric_group_3() {
    constexpr std::array<std::array<int, 3>, 6> perms{
        {{0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}}};
    auto index = [&](const std::array<int, 3>& p) {
        for (int i = 0; i < 6; ++i)
            if (perms[i] == p) return i;
        throw std::logic_error("not a permutation");
    };
    return FiniteGroup::from_loop(loop_from(6, [&](int a, int b) {
        std::array<int, 3> c{};
        for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];
        return index(c);
    }));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
    const int m = g.order();
    return FiniteGroup::from_loop(loop_from(m * h.order(), [&](int p, int q) {
        auto gp = static_cast<Element>(p % m), hp = static_cast<Element>(p / m);
        auto gq = static_cast<Element>(q % m), hq = static_cast<Element>(q / m);
        return g.mul(gp, gq) + m * h.mul(hp, hq);
    }));
}

FiniteLoop chein_double(const FiniteGroup& G) {
    const int m = G.order();
    return loop_from(2 * m, [&](int p, int q) {
        auto g = static_cast<Element>(p % m), h = static_cast<Element>(q % m);
        const int pb = p / m, qb = q / m;
        if (!pb && !qb) return int(G.mul(g, h));
        if (!pb && qb) return G.mul(h, g) + m;
        if (pb && !qb) return G.mul(g, G.inverse(h)) + m;
        return int(G.mul(G.inverse(h), g));
    });
}

// ---------------------------------------------------------------------------

namespace {

struct ExampleInfo {
    std::string_view name;
    std::string_view caption;
};

constexpr std::array<ExampleInfo, 10> kExamples{{
    {"E3_1", "3-power associative loop that is not power associative"},
    {"E3_2", "loop with two-sided inverses but neither inverse property"},
    {"E6_1", "extra loop that is not a group: M(D4,2)"},
    {"E6_2", "Moufang loop that is neither left nor middle nuclear square: M(S3,2)"},
    {"E6_3", "C-loop that is neither flexible nor left Bol"},
    {"E6_4", "left Bol loop that is neither flexible nor right alternative"},
    {"E6_5", "LC-loop that is neither right nuclear square nor right alternative"},
    {"E6_6", "flexible loop that is not left alternative"},
    {"E6_7", "left nuclear square loop that is neither middle nuclear square nor 3-power associative"},
    {"E6_8", "middle nuclear square loop that is not 3-power associative"},
}};

FiniteLoop build(PaperExample e) {
    switch (e) {
        case PaperExample::E3_1: return read_loop_text(kAsset_E3_1);
        case PaperExample::E3_2: return read_loop_text(kAsset_E3_2);
        case PaperExample::E6_1: return chein_double(dihedral_group(8));
        case PaperExample::E6_2: return chein_double(symmetric_group_3());
        case PaperExample::E6_3: return read_loop_text(kAsset_E6_3);
        case PaperExample::E6_4: return read_loop_text(kAsset_E6_4);
        case PaperExample::E6_5: return read_loop_text(kAsset_E6_5);
        case PaperExample::E6_6: return read_loop_text(kAsset_E6_6);
        case PaperExample::E6_7: return read_loop_text(kAsset_E6_7);
        case PaperExample::E6_8: return read_loop_text(kAsset_E6_8);
    }
    throw std::logic_error("unknown example");
}

CaptionClaim in_variety(Variety v, bool expected) {
    std::string text = std::string(expected ? "is " : "is not ") + "in " + std::string(tag(v));
    return {std::move(text), [v, expected](const FiniteLoop& l) { return satisfies_variety(l, v) == expected; }};
}

/// The defining law of `v` has unequal sides at (x, y, z).
CaptionClaim fails_at(Variety v, int x, int y, int z, std::string shown) {
    return {std::string(tag(v)) + " fails: " + shown, [v, x, y, z](const FiniteLoop& l) {
                auto [lhs, rhs] = evaluate_at(l, defining_law(v), static_cast<Element>(x),
                                              static_cast<Element>(y), static_cast<Element>(z));
                return lhs != rhs;
            }};
}

CaptionClaim of_order(int n) {
    return {"has order " + std::to_string(n), [n](const FiniteLoop& l) { return l.order() == n; }};
}

}  // namespace

std::string_view name(PaperExample e) { return kExamples[static_cast<std::size_t>(e)].name; }
std::string_view caption(PaperExample e) { return kExamples[static_cast<std::size_t>(e)].caption; }

std::optional<PaperExample> parse_paper_example(std::string_view text) {
    for (auto e : kAllPaperExamples)
        if (name(e) == text) return e;
    return std::nullopt;
}

PaperExample distinguishing_example(int n) {
    if (n < 1 || n > 8) throw std::out_of_range("distinguishing examples are numbered 1..8");
    return static_cast<PaperExample>(static_cast<int>(PaperExample::E6_1) + n - 1);
}

const FiniteLoop& paper_example(PaperExample e) {
    static const std::vector<FiniteLoop> loops = [] {
        std::vector<FiniteLoop> v;
        for (auto id : kAllPaperExamples) v.push_back(build(id));
        return v;
    }();
    return loops[static_cast<std::size_t>(e)];
}

std::vector<CaptionClaim> caption_claims(PaperExample e) {
    using V = Variety;
    switch (e) {
        case PaperExample::E3_1:
            return {of_order(6), in_variety(V::PA3, true),
                    {"is not power associative (degree 4)",
                     [](const FiniteLoop& l) { return !powers_associative_upto(l, 4); }},
                    {"(1*1)(1*1) != 1(1(1*1))", [](const FiniteLoop& l) {
                         auto [lhs, rhs] = evaluate_at(l, parse_equation("(xx)(xx)=x(x(xx))"), 1, 0, 0);
                         return lhs != rhs;
                     }}};
        case PaperExample::E3_2:
            return {of_order(5),
                    {"has two-sided inverses", [](const FiniteLoop& l) { return has_two_sided_inverses(l); }},
                    {"lacks the left inverse property",
                     [](const FiniteLoop& l) { return !has_left_inverse_property(l); }},
                    {"lacks the right inverse property",
                     [](const FiniteLoop& l) { return !has_right_inverse_property(l); }},
                    {"1^-1 (1*2) != 2",
                     [](const FiniteLoop& l) { return l(l.right_div(0, 1), l(1, 2)) != 2; }},
                    {"(2*1) 1^-1 != 2",
                     [](const FiniteLoop& l) { return l(l(2, 1), l.left_div(1, 0)) != 2; }}};
        case PaperExample::E6_1:
            return {of_order(16), in_variety(V::EL, true), in_variety(V::GR, false)};
        case PaperExample::E6_2:
            return {of_order(12), in_variety(V::ML, true), in_variety(V::LN, false),
                    in_variety(V::MN, false)};
        case PaperExample::E6_3:
            return {of_order(12), in_variety(V::CL, true), in_variety(V::FL, false),
                    in_variety(V::LB, false), fails_at(V::FL, 8, 9, 0, "8(9*8) != (8*9)8"),
                    fails_at(V::LB, 5, 8, 5, "5(8(5*5)) != (5(8*5))5")};
        case PaperExample::E6_4:
            return {of_order(8), in_variety(V::LB, true), in_variety(V::FL, false),
                    in_variety(V::RA, false), fails_at(V::FL, 1, 2, 0, "1(2*1) != (1*2)1"),
                    fails_at(V::RA, 6, 4, 0, "6(4*4) != (6*4)4")};
        case PaperExample::E6_5:
            return {of_order(12), in_variety(V::LC, true), in_variety(V::RN, false),
                    in_variety(V::RA, false), fails_at(V::RN, 1, 2, 3, "1(2(3*3)) != (1*2)(3*3)"),
                    fails_at(V::RA, 1, 2, 0, "1(2*2) != (1*2)2")};
        case PaperExample::E6_6:
            return {of_order(5), in_variety(V::FL, true), in_variety(V::LA, false),
                    fails_at(V::LA, 1, 2, 0, "1(1*2) != (1*1)2")};
        case PaperExample::E6_7:
            return {of_order(6), in_variety(V::LN, true), in_variety(V::MN, false),
                    in_variety(V::PA3, false), fails_at(V::MN, 1, 2, 3, "1((2*2)3) != (1(2*2))3"),
                    fails_at(V::PA3, 1, 0, 0, "1(1*1) != (1*1)1")};
        case PaperExample::E6_8:
            return {of_order(6), in_variety(V::MN, true), in_variety(V::PA3, false),
                    fails_at(V::PA3, 1, 0, 0, "1(1*1) != (1*1)1")};
    }
    return {};
}

}  // namespace bolmoufang
