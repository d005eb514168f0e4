#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bolmoufang/loop.hpp"

namespace bolmoufang {

/// An associative FiniteLoop.
class FiniteGroup {
public:
    /// Throws std::invalid_argument when `loop` is not associative.
    static FiniteGroup from_loop(FiniteLoop loop);

    const FiniteLoop& loop() const { return loop_; }
    int order() const { return loop_.order(); }
    Element mul(Element a, Element b) const { return loop_(a, b); }
    Element inverse(Element a) const { return loop_.left_div(a, 0); }

private:
    explicit FiniteGroup(FiniteLoop loop) : loop_(std::move(loop)) {}
    FiniteLoop loop_;
};

FiniteGroup cyclic_group(int n);
/// Dihedral group of the given (even) order 2m: r^i s^j is i + m·j, so
/// rotations come first and reflections after them.
FiniteGroup dihedral_group(int order);
/// S3 on the permutations of {0,1,2} in lexicographic order.
FiniteGroup symmetric_group_3();
/// (g, h) is g + |G|·h.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);

/// Chein's M(G,2) on G × {0,1}, with (g, bit) flattened to g + |G|·bit:
///   (g,0)(h,0) = (gh,0)     (g,0)(h,1) = (hg,1)
///   (g,1)(h,0) = (gh⁻¹,1)   (g,1)(h,1) = (h⁻¹g,0)
/// Moufang for every group, associative exactly when G is abelian.
FiniteLoop chein_double(const FiniteGroup& g);

enum class PaperExample { E3_1, E3_2, E6_1, E6_2, E6_3, E6_4, E6_5, E6_6, E6_7, E6_8 };

inline constexpr std::array<PaperExample, 10> kAllPaperExamples{
    PaperExample::E3_1, PaperExample::E3_2, PaperExample::E6_1, PaperExample::E6_2,
    PaperExample::E6_3, PaperExample::E6_4, PaperExample::E6_5, PaperExample::E6_6,
    PaperExample::E6_7, PaperExample::E6_8};

std::string_view name(PaperExample e);  // "E6_3"
std::string_view caption(PaperExample e);
std::optional<PaperExample> parse_paper_example(std::string_view text);
/// Distinguishing example n (1..8) from the separation table.
PaperExample distinguishing_example(int n);

/// E6_1 = M(D4,2) and E6_2 = M(S3,2); the others are the shipped tables.
const FiniteLoop& paper_example(PaperExample e);

/// One machine-checkable statement from an example's caption.
struct CaptionClaim {
    std::string text;
    std::function<bool(const FiniteLoop&)> check;
};

std::vector<CaptionClaim> caption_claims(PaperExample e);

}  // namespace bolmoufang
