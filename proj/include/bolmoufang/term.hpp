#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace bolmoufang {

enum class Variable : std::uint8_t { x = 0, y = 1, z = 2 };

char to_char(Variable v);

/// Binary term over the variables x, y, z. Immutable; subtrees are shared.
class Term {
public:
    static Term var(Variable v);
    static Term product(Term left, Term right);

    bool is_variable() const { return node_->left == nullptr; }
    Variable variable() const { return node_->var; }
    Term left() const;
    Term right() const;

    /// Leaves read left to right.
    std::vector<Variable> leaves() const;
    std::size_t leaf_count() const;

    /// The same tree read right to left.
    Term mirrored() const;
    /// Applies `map` (indexed by Variable) to every leaf.
    Term renamed(const std::array<Variable, 3>& map) const;

    /// Fully parenthesised except that a product of two variables prints as "xy".
    std::string str() const;

    friend bool operator==(const Term& a, const Term& b);

private:
    struct Node {
        Variable var{};
        std::shared_ptr<const Node> left, right;
    };
    explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
    std::shared_ptr<const Node> node_;
};

/// An arbitrary equation between two terms. Variety laws such as
/// x(xy)=(xx)y are equations but not Bol-Moufang identities.
struct Equation {
    Term lhs;
    Term rhs;

    std::string str() const { return lhs.str() + "=" + rhs.str(); }
    friend bool operator==(const Equation&, const Equation&) = default;
};

/// Order of the repeated variable inside the length-4 word.
enum class Pattern : std::uint8_t { A, B, C, D, E, F };

inline constexpr std::array<std::string_view, 6> kPatternWords{
    "xxyz", "xyxz", "xyyz", "xyzx", "xyzy", "xyzz"};

/// The five bracketings of a four-letter word, numbered as in the
/// systematic Xij notation:
/// 1 o(o(oo)), 2 o((oo)o), 3 (oo)(oo), 4 (o(oo))o, 5 ((oo)o)o.
inline constexpr int kBracketings = 5;

class IdentityName {
public:
    /// Accepts i > j and normalizes to i < j. Throws std::invalid_argument
    /// when i == j or a bracket is out of 1..5.
    IdentityName(Pattern pattern, int lhs_bracket, int rhs_bracket);

    Pattern pattern() const { return pattern_; }
    int lhs_bracket() const { return lhs_; }
    int rhs_bracket() const { return rhs_; }

    /// Position in enumerate_all(), 0..59.
    int index() const;
    static IdentityName from_index(int index);

    std::string str() const;

    friend auto operator<=>(const IdentityName&, const IdentityName&) = default;

private:
    Pattern pattern_;
    std::uint8_t lhs_, rhs_;
};

/// Parses "[A-F][1-5][1-5]"; "C52" normalizes to C25.
IdentityName parse_name(std::string_view text);
bool looks_like_name(std::string_view text);

struct SyntaxError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NotBolMoufang : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A Bol-Moufang identity: four leaves over exactly three variables, the
/// same leaf word on both sides, different bracketings.
class Identity {
public:
    /// Throws NotBolMoufang when the equation is not of Bol-Moufang type.
    explicit Identity(Equation eq);

    const Term& lhs() const { return eq_.lhs; }
    const Term& rhs() const { return eq_.rhs; }
    const Equation& equation() const { return eq_; }
    std::string str() const { return eq_.str(); }

    friend bool operator==(const Identity&, const Identity&) = default;

private:
    Equation eq_;
};

/// Parses a term; juxtaposition and '*' both denote the product, and a run
/// of factors associates to the left ("xyz" is (xy)z). Whitespace is ignored.
Term parse_term(std::string_view text);
/// Parses "lhs=rhs" without the Bol-Moufang checks.
Equation parse_equation(std::string_view text);
/// Throws SyntaxError or NotBolMoufang.
Identity parse_identity(std::string_view text);

/// Bracketing number 1..5 of a four-leaf term.
int bracketing_of(const Term& t);
Term bracket(int bracketing, const std::array<Variable, 4>& word);

IdentityName encode_name(const Identity& id);
Identity decode_name(IdentityName name);
IdentityName dual_name(IdentityName name);
/// Reads the identity right to left (which also exchanges the sides) and
/// renames the variables to first-occurrence order.
Identity dual_term(const Identity& id);

/// All 60 canonical names, A12 first and F45 last.
const std::vector<IdentityName>& enumerate_all();

}  // namespace bolmoufang
