#include "bolmoufang/evaluator.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace bolmoufang {

namespace {

struct VarietyInfo {
    std::string_view tag;
    std::string_view long_name;
    std::string_view law;
    std::string_view name;  // empty when the law is not an Xij
};

constexpr std::array<VarietyInfo, kVarietyCount> kVarieties{{
    {"GR", "group", "x(yz)=(xy)z", ""},
    {"EL", "extra loop", "x(y(zx))=((xy)z)x", "D15"},
    {"ML", "Moufang loop", "(xy)(zx)=(x(yz))x", "D34"},
    {"LB", "left Bol loop", "x(y(xz))=(x(yx))z", "B14"},
    {"RB", "right Bol loop", "x((yz)y)=((xy)z)y", "E25"},
    {"CL", "C-loop", "x(y(yz))=((xy)y)z", "C15"},
    {"LC", "LC-loop", "(xx)(yz)=(x(xy))z", "A34"},
    {"RC", "RC-loop", "x((yz)z)=(xy)(zz)", "F23"},
    {"LA", "left alternative loop", "x(xy)=(xx)y", ""},
    {"RA", "right alternative loop", "x(yy)=(xy)y", ""},
    {"FL", "flexible loop", "x(yx)=(xy)x", ""},
    {"LN", "left nuclear square loop", "(xx)(yz)=((xx)y)z", "A35"},
    {"MN", "middle nuclear square loop", "x((yy)z)=(x(yy))z", "C24"},
    {"RN", "right nuclear square loop", "x(y(zz))=(xy)(zz)", "F13"},
    {"3PA", "3-power associative loop", "x(xx)=(xx)x", ""},
}};

const VarietyInfo& info(Variety v) { return kVarieties[static_cast<std::size_t>(v)]; }

}  // namespace

std::string_view tag(Variety v) { return info(v).tag; }
std::string_view long_name(Variety v) { return info(v).long_name; }

std::optional<Variety> parse_variety(std::string_view text) {
    for (Variety v : kAllVarieties)
        if (tag(v) == text) return v;
    return std::nullopt;
}

Variety dual(Variety v) {
    switch (v) {
        case Variety::LB: return Variety::RB;
        case Variety::RB: return Variety::LB;
        case Variety::LC: return Variety::RC;
        case Variety::RC: return Variety::LC;
        case Variety::LA: return Variety::RA;
        case Variety::RA: return Variety::LA;
        case Variety::LN: return Variety::RN;
        case Variety::RN: return Variety::LN;
        default: return v;
    }
}

Equation defining_law(Variety v) { return parse_equation(info(v).law); }

std::optional<IdentityName> defining_name(Variety v) {
    if (info(v).name.empty()) return std::nullopt;
    return parse_name(info(v).name);
}

Law law(IdentityName name) { return {name.str(), decode_name(name).equation()}; }
Law law(Variety v) { return {std::string(tag(v)), defining_law(v)}; }

Law parse_law(std::string_view text) {
    if (looks_like_name(text)) return law(parse_name(text));
    if (auto v = parse_variety(text)) return law(*v);
    if (text.find('=') == std::string_view::npos)
        throw SyntaxError("unknown identity or variety '" + std::string(text) + "'");
    auto eq = parse_equation(text);
    try {
        return {encode_name(Identity(eq)).str(), eq};
    } catch (const NotBolMoufang&) {
        return {eq.str(), eq};
    }
}

std::string Witness::str() const {
    std::ostringstream out;
    out << law << " fails at x=" << int(x) << " y=" << int(y) << " z=" << int(z) << ": "
        << int(lhs_value) << " != " << int(rhs_value);
    return out.str();
}

// ---------------------------------------------------------------------------

LawProgram::LawProgram(std::span<const Equation> equations) {
    std::map<std::string, std::uint16_t> slot_of{{"x", 0}, {"y", 1}, {"z", 2}};
    auto compile = [&](const auto& self, const Term& t) -> std::uint16_t {
        if (t.is_variable()) return static_cast<std::uint16_t>(t.variable());
        auto key = t.str();
        if (auto it = slot_of.find(key); it != slot_of.end()) return it->second;
        auto l = self(self, t.left());
        auto r = self(self, t.right());
        steps_.push_back({l, r});
        auto slot = static_cast<std::uint16_t>(2 + steps_.size());
        slot_of.emplace(std::move(key), slot);
        return slot;
    };
    for (const auto& eq : equations)
        sides_.emplace_back(compile(compile, eq.lhs), compile(compile, eq.rhs));
}

void LawProgram::run(const FiniteLoop& loop, Element x, Element y, Element z,
                     std::span<Element> slots) const {
    slots[0] = x;
    slots[1] = y;
    slots[2] = z;
    for (std::size_t k = 0; k < steps_.size(); ++k)
        slots[3 + k] = loop(slots[steps_[k].left], slots[steps_[k].right]);
}

std::pair<Element, Element> evaluate_at(const FiniteLoop& loop, const Equation& eq, Element x,
                                        Element y, Element z) {
    LawProgram program(std::span(&eq, 1));
    std::vector<Element> slots(program.slot_count());
    program.run(loop, x, y, z, slots);
    auto [l, r] = program.sides(0);
    return {slots[l], slots[r]};
}

std::optional<Witness> counterexample(const FiniteLoop& loop, const Law& law) {
    LawProgram program(std::span(&law.equation, 1));
    std::vector<Element> slots(program.slot_count());
    auto [l, r] = program.sides(0);
    const int n = loop.order();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                program.run(loop, static_cast<Element>(x), static_cast<Element>(y),
                            static_cast<Element>(z), slots);
                if (slots[l] != slots[r])
                    return Witness{law.label,        static_cast<Element>(x),
                                   static_cast<Element>(y), static_cast<Element>(z),
                                   slots[l],         slots[r]};
            }
    return std::nullopt;
}

bool holds(const FiniteLoop& loop, const Equation& eq) {
    return !counterexample(loop, Law{{}, eq}).has_value();
}
bool holds(const FiniteLoop& loop, const Identity& id) { return holds(loop, id.equation()); }
bool holds(const FiniteLoop& loop, IdentityName name) { return holds(loop, decode_name(name)); }
bool satisfies_variety(const FiniteLoop& loop, Variety v) { return holds(loop, defining_law(v)); }

Profile profile(const FiniteLoop& loop) {
    // 60 identities followed by the 15 variety laws
    static const LawProgram program = [] {
        std::vector<Equation> eqs;
        for (auto name : enumerate_all()) eqs.push_back(decode_name(name).equation());
        for (auto v : kAllVarieties) eqs.push_back(defining_law(v));
        return LawProgram(eqs);
    }();
    constexpr std::size_t kLaws = 60 + kVarietyCount;

    std::array<std::uint8_t, kLaws> alive{};
    std::iota(alive.begin(), alive.end(), std::uint8_t{0});
    std::size_t alive_count = kLaws;
    std::vector<Element> slots(program.slot_count());

    const int n = loop.order();
    for (int x = 0; x < n && alive_count; ++x)
        for (int y = 0; y < n && alive_count; ++y)
            for (int z = 0; z < n && alive_count; ++z) {
                program.run(loop, static_cast<Element>(x), static_cast<Element>(y),
                            static_cast<Element>(z), slots);
                std::size_t kept = 0;
                for (std::size_t i = 0; i < alive_count; ++i) {
                    auto [l, r] = program.sides(alive[i]);
                    if (slots[l] == slots[r]) alive[kept++] = alive[i];
                }
                alive_count = kept;
            }

    Profile p;
    for (std::size_t i = 0; i < alive_count; ++i) {
        if (alive[i] < 60)
            p.identities.set(alive[i]);
        else
            p.varieties.set(alive[i] - 60u);
    }
    return p;
}

}  // namespace bolmoufang
