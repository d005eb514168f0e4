#include "bolmoufang/term.hpp"

#include <algorithm>

namespace bolmoufang {

char to_char(Variable v) { return static_cast<char>('x' + static_cast<int>(v)); }

Term Term::var(Variable v) {
    auto n = std::make_shared<Node>();
    n->var = v;
    return Term(std::move(n));
}

Term Term::product(Term left, Term right) {
    auto n = std::make_shared<Node>();
    n->left = std::move(left.node_);
    n->right = std::move(right.node_);
    return Term(std::move(n));
}

Term Term::left() const {
    if (is_variable()) throw std::logic_error("left() of a variable");
    return Term(node_->left);
}

Term Term::right() const {
    if (is_variable()) throw std::logic_error("right() of a variable");
    return Term(node_->right);
}

std::vector<Variable> Term::leaves() const {
    std::vector<Variable> out;
    auto walk = [&out](const auto& self, const Node& n) -> void {
        if (!n.left) {
            out.push_back(n.var);
            return;
        }
        self(self, *n.left);
        self(self, *n.right);
    };
    walk(walk, *node_);
    return out;
}

std::size_t Term::leaf_count() const {
    if (is_variable()) return 1;
    return left().leaf_count() + right().leaf_count();
}

Term Term::mirrored() const {
    if (is_variable()) return *this;
    return product(right().mirrored(), left().mirrored());
}

Term Term::renamed(const std::array<Variable, 3>& map) const {
    if (is_variable()) return var(map[static_cast<int>(variable())]);
    return product(left().renamed(map), right().renamed(map));
}

std::string Term::str() const {
    if (is_variable()) return std::string(1, to_char(variable()));
    auto operand = [](const Term& t) {
        return t.is_variable() ? t.str() : "(" + t.str() + ")";
    };
    return operand(left()) + operand(right());
}

bool operator==(const Term& a, const Term& b) {
    if (a.node_ == b.node_) return true;
    if (a.is_variable() || b.is_variable())
        return a.is_variable() && b.is_variable() && a.variable() == b.variable();
    return a.left() == b.left() && a.right() == b.right();
}

// ---------------------------------------------------------------------------
// Names

namespace {

constexpr std::array<std::pair<int, int>, 10> kBracketPairs{{
    {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}};

}  // namespace

IdentityName::IdentityName(Pattern pattern, int lhs_bracket, int rhs_bracket)
    : pattern_(pattern) {
    if (lhs_bracket < 1 || lhs_bracket > kBracketings || rhs_bracket < 1 ||
        rhs_bracket > kBracketings)
        throw std::invalid_argument("bracketing must be in 1..5");
    if (lhs_bracket == rhs_bracket)
        throw std::invalid_argument("an identity needs two different bracketings");
    if (lhs_bracket > rhs_bracket) std::swap(lhs_bracket, rhs_bracket);
    lhs_ = static_cast<std::uint8_t>(lhs_bracket);
    rhs_ = static_cast<std::uint8_t>(rhs_bracket);
}

int IdentityName::index() const {
    auto it = std::find(kBracketPairs.begin(), kBracketPairs.end(),
                        std::pair<int, int>{lhs_, rhs_});
    return static_cast<int>(pattern_) * 10 + static_cast<int>(it - kBracketPairs.begin());
}

IdentityName IdentityName::from_index(int index) {
    if (index < 0 || index >= 60) throw std::out_of_range("identity index");
    auto [i, j] = kBracketPairs[static_cast<std::size_t>(index % 10)];
    return {static_cast<Pattern>(index / 10), i, j};
}

std::string IdentityName::str() const {
    std::string s;
    s += static_cast<char>('A' + static_cast<int>(pattern_));
    s += static_cast<char>('0' + lhs_);
    s += static_cast<char>('0' + rhs_);
    return s;
}

bool looks_like_name(std::string_view text) {
    return text.size() == 3 && text[0] >= 'A' && text[0] <= 'F' && text[1] >= '1' &&
           text[1] <= '5' && text[2] >= '1' && text[2] <= '5' && text[1] != text[2];
}

IdentityName parse_name(std::string_view text) {
    if (!looks_like_name(text))
        throw SyntaxError("not an identity name: '" + std::string(text) + "'");
    return {static_cast<Pattern>(text[0] - 'A'), text[1] - '0', text[2] - '0'};
}

const std::vector<IdentityName>& enumerate_all() {
    static const std::vector<IdentityName> all = [] {
        std::vector<IdentityName> v;
        v.reserve(60);
        for (int i = 0; i < 60; ++i) v.push_back(IdentityName::from_index(i));
        return v;
    }();
    return all;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) {
        for (std::size_t i = 0; i < text.size(); ++i) {
            char c = text[i];
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r') continue;
            // U+00B7 middle dot is an explicit product sign
            if (c == '\xC2' && i + 1 < text.size() && text[i + 1] == '\xB7') {
                text_ += '*';
                ++i;
                continue;
            }
            text_ += c;
        }
    }

    Term term() {
        Term acc = factor();
        while (pos_ < text_.size()) {
            char c = text_[pos_];
            if (c == '*') {
                ++pos_;
                acc = Term::product(std::move(acc), factor());
            } else if (c == '(' || (c >= 'x' && c <= 'z')) {
                acc = Term::product(std::move(acc), factor());
            } else {
                break;
            }
        }
        return acc;
    }

    bool at_end() const { return pos_ == text_.size(); }
    char peek() const { return at_end() ? '\0' : text_[pos_]; }
    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    [[noreturn]] void fail(const std::string& what) const {
        throw SyntaxError(what + " at position " + std::to_string(pos_) + " in '" + text_ +
                          "'");
    }

private:
    Term factor() {
        char c = peek();
        if (c >= 'x' && c <= 'z') {
            ++pos_;
            return Term::var(static_cast<Variable>(c - 'x'));
        }
        if (c == '(') {
            ++pos_;
            Term t = term();
            expect(')');
            return t;
        }
        if (at_end()) fail("unexpected end of input");
        fail(std::string("unexpected '") + c + "'");
    }

    std::string text_;
    std::size_t pos_ = 0;
};

std::array<Variable, 3> first_occurrence_renaming(const std::vector<Variable>& word) {
    std::array<Variable, 3> map{Variable::x, Variable::y, Variable::z};
    std::array<bool, 3> seen{};
    int next = 0;
    for (Variable v : word) {
        auto i = static_cast<std::size_t>(v);
        if (!seen[i]) {
            seen[i] = true;
            map[i] = static_cast<Variable>(next++);
        }
    }
    // variables absent from the word go to the remaining slots
    for (std::size_t i = 0; i < 3; ++i)
        if (!seen[i]) map[i] = static_cast<Variable>(next++);
    return map;
}

Pattern pattern_of(const std::vector<Variable>& canonical_word) {
    std::string w;
    for (Variable v : canonical_word) w += to_char(v);
    for (std::size_t p = 0; p < kPatternWords.size(); ++p)
        if (kPatternWords[p] == w) return static_cast<Pattern>(p);
    throw NotBolMoufang("word '" + w + "' is not a Bol-Moufang pattern");
}

}  // namespace

Term parse_term(std::string_view text) {
    Parser p(text);
    Term t = p.term();
    if (!p.at_end()) p.fail("trailing input");
    return t;
}

Equation parse_equation(std::string_view text) {
    auto eq = text.find('=');
    if (eq == std::string_view::npos) throw SyntaxError("missing '=' in '" + std::string(text) + "'");
    if (text.find('=', eq + 1) != std::string_view::npos)
        throw SyntaxError("more than one '=' in '" + std::string(text) + "'");
    return {parse_term(text.substr(0, eq)), parse_term(text.substr(eq + 1))};
}

Identity parse_identity(std::string_view text) { return Identity(parse_equation(text)); }

Identity::Identity(Equation eq) : eq_(std::move(eq)) {
    auto word = eq_.lhs.leaves();
    if (word.size() != 4)
        throw NotBolMoufang("'" + eq_.str() + "': each side needs exactly four variable occurrences");
    if (eq_.rhs.leaves() != word)
        throw NotBolMoufang("'" + eq_.str() + "': variables must appear in the same order on both sides");
    auto sorted = word;
    std::sort(sorted.begin(), sorted.end());
    if (std::unique(sorted.begin(), sorted.end()) - sorted.begin() != 3)
        throw NotBolMoufang("'" + eq_.str() + "': exactly three distinct variables required");
    if (bracketing_of(eq_.lhs) == bracketing_of(eq_.rhs))
        throw NotBolMoufang("'" + eq_.str() + "': both sides have the same bracketing");
}

// ---------------------------------------------------------------------------
// Bracketings and the name calculus

int bracketing_of(const Term& t) {
    if (t.leaf_count() != 4) throw std::invalid_argument("bracketing_of needs a four-leaf term");
    Term l = t.left(), r = t.right();
    if (l.is_variable()) return r.right().is_variable() ? 2 : 1;
    if (r.is_variable()) return l.left().is_variable() ? 4 : 5;
    return 3;
}

Term bracket(int bracketing, const std::array<Variable, 4>& w) {
    auto v = [&](int i) { return Term::var(w[static_cast<std::size_t>(i)]); };
    auto p = [](Term a, Term b) { return Term::product(std::move(a), std::move(b)); };
    switch (bracketing) {
        case 1: return p(v(0), p(v(1), p(v(2), v(3))));
        case 2: return p(v(0), p(p(v(1), v(2)), v(3)));
        case 3: return p(p(v(0), v(1)), p(v(2), v(3)));
        case 4: return p(p(v(0), p(v(1), v(2))), v(3));
        case 5: return p(p(p(v(0), v(1)), v(2)), v(3));
        default: throw std::invalid_argument("bracketing must be in 1..5");
    }
}

IdentityName encode_name(const Identity& id) {
    auto map = first_occurrence_renaming(id.lhs().leaves());
    Term lhs = id.lhs().renamed(map);
    return {pattern_of(lhs.leaves()), bracketing_of(lhs), bracketing_of(id.rhs())};
}

Identity decode_name(IdentityName name) {
    auto word_text = kPatternWords[static_cast<std::size_t>(name.pattern())];
    std::array<Variable, 4> word{};
    for (std::size_t i = 0; i < 4; ++i) word[i] = static_cast<Variable>(word_text[i] - 'x');
    return Identity(Equation{bracket(name.lhs_bracket(), word), bracket(name.rhs_bracket(), word)});
}

IdentityName dual_name(IdentityName name) {
    constexpr std::array<Pattern, 6> dual_pattern{Pattern::F, Pattern::E, Pattern::C,
                                                  Pattern::D, Pattern::B, Pattern::A};
    auto dual_bracket = [](int b) { return 6 - b; };
    return {dual_pattern[static_cast<std::size_t>(name.pattern())],
            dual_bracket(name.rhs_bracket()), dual_bracket(name.lhs_bracket())};
}

Identity dual_term(const Identity& id) {
    Term lhs = id.rhs().mirrored();
    Term rhs = id.lhs().mirrored();
    auto map = first_occurrence_renaming(lhs.leaves());
    return Identity(Equation{lhs.renamed(map), rhs.renamed(map)});
}

}  // namespace bolmoufang
