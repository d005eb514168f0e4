#pragma once

#include <array>
#include <bitset>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bolmoufang/loop.hpp"
#include "bolmoufang/term.hpp"

namespace bolmoufang {

/// The fifteen varieties, in the order they are usually tabulated.
enum class Variety : std::uint8_t { GR, EL, ML, LB, RB, CL, LC, RC, LA, RA, FL, LN, MN, RN, PA3 };

inline constexpr int kVarietyCount = 15;
inline constexpr std::array<Variety, kVarietyCount> kAllVarieties{
    Variety::GR, Variety::EL, Variety::ML, Variety::LB, Variety::RB,
    Variety::CL, Variety::LC, Variety::RC, Variety::LA, Variety::RA,
    Variety::FL, Variety::LN, Variety::MN, Variety::RN, Variety::PA3};

std::string_view tag(Variety v);        // "GR", ..., "3PA"
std::string_view long_name(Variety v);  // "group", "Moufang loop", ...
std::optional<Variety> parse_variety(std::string_view tag);
Variety dual(Variety v);

/// Defining law exactly as tabulated: x(yz)=(xy)z for GR, D15 for EL, ...
Equation defining_law(Variety v);
/// The Xij name of the defining law, when it is a Bol-Moufang identity.
std::optional<IdentityName> defining_name(Variety v);

/// An equation together with the label used in reports and witnesses.
struct Law {
    std::string label;
    Equation equation;
};

Law law(IdentityName name);
Law law(Variety v);
/// Accepts an Xij name, a variety tag, or an equation such as "x(yx)=(xy)x".
Law parse_law(std::string_view text);

/// An assignment at which a law fails.
struct Witness {
    std::string law;
    Element x = 0, y = 0, z = 0;
    Element lhs_value = 0, rhs_value = 0;

    std::string str() const;
};

/// Straight-line evaluation program for a set of equations. Slots 0, 1, 2
/// hold x, y, z; every further slot is the product of two earlier slots.
/// Common subterms across the equations share one slot.
class LawProgram {
public:
    struct Step {
        std::uint16_t left, right;
    };

    explicit LawProgram(std::span<const Equation> equations);

    std::size_t slot_count() const { return 3 + steps_.size(); }
    std::size_t equation_count() const { return sides_.size(); }
    const std::vector<Step>& steps() const { return steps_; }
    std::pair<std::uint16_t, std::uint16_t> sides(std::size_t i) const { return sides_[i]; }

    /// Fills `slots` (size slot_count()) for one assignment.
    void run(const FiniteLoop& loop, Element x, Element y, Element z,
             std::span<Element> slots) const;

private:
    std::vector<Step> steps_;
    std::vector<std::pair<std::uint16_t, std::uint16_t>> sides_;
};

/// Both sides of `eq` at one assignment.
std::pair<Element, Element> evaluate_at(const FiniteLoop& loop, const Equation& eq, Element x,
                                        Element y, Element z);

/// Lexicographically first (x, y, z) at which `law` fails, if any.
std::optional<Witness> counterexample(const FiniteLoop& loop, const Law& law);
bool holds(const FiniteLoop& loop, const Equation& eq);
bool holds(const FiniteLoop& loop, const Identity& id);
bool holds(const FiniteLoop& loop, IdentityName name);
bool satisfies_variety(const FiniteLoop& loop, Variety v);

struct Profile {
    std::bitset<60> identities;   // indexed by IdentityName::index()
    std::bitset<kVarietyCount> varieties;  // indexed by Variety

    bool holds(IdentityName name) const { return identities[static_cast<std::size_t>(name.index())]; }
    bool holds(Variety v) const { return varieties[static_cast<std::size_t>(v)]; }
    friend bool operator==(const Profile&, const Profile&) = default;
};

/// All 60 identities and 15 variety laws in one pass over the n³
/// assignments, sharing subterm products.
Profile profile(const FiniteLoop& loop);

}  // namespace bolmoufang
