#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace bolmoufang {

using Element = std::uint8_t;

struct NotLatin : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct NoNeutral : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A finite loop stored as its Cayley table. Element 0 is the neutral
/// element, the row index is the left factor, and both division tables are
/// precomputed. Immutable after construction.
class FiniteLoop {
public:
    static constexpr int kMaxOrder = 255;

    /// Validates a square table over 0..n-1 and relabels the neutral
    /// element to 0 if needed. Throws NotLatin, NoNeutral, or
    /// std::invalid_argument for shape/range problems.
    static FiniteLoop from_table(const std::vector<std::vector<int>>& rows);

    /// Row-major flat table that is already a reduced Latin square.
    /// Only the neutral row/column and Latin property are asserted in debug.
    static FiniteLoop from_reduced(int order, std::vector<Element> table);

    int order() const { return n_; }
    Element mul(Element a, Element b) const { return table_[idx(a, b)]; }
    Element operator()(Element a, Element b) const { return mul(a, b); }
    /// a\b: the unique c with a·c = b.
    Element left_div(Element a, Element b) const { return ldiv_[idx(a, b)]; }
    /// b/a: the unique c with c·a = b. Argument order follows the notation.
    Element right_div(Element b, Element a) const { return rdiv_[idx(b, a)]; }

    std::span<const Element> table() const { return table_; }
    std::vector<std::vector<int>> rows() const;

    friend bool operator==(const FiniteLoop& a, const FiniteLoop& b) {
        return a.n_ == b.n_ && a.table_ == b.table_;
    }
    /// Lexicographic on (order, row-major table).
    friend bool operator<(const FiniteLoop& a, const FiniteLoop& b) {
        return a.n_ != b.n_ ? a.n_ < b.n_ : a.table_ < b.table_;
    }

private:
    FiniteLoop(int n, std::vector<Element> table);
    std::size_t idx(Element a, Element b) const {
        return static_cast<std::size_t>(a) * static_cast<std::size_t>(n_) + b;
    }

    int n_;
    std::vector<Element> table_, ldiv_, rdiv_;
};

/// Transposed table: satisfies exactly the duals of the identities of `loop`.
FiniteLoop opposite(const FiniteLoop& loop);

bool has_left_inverse_property(const FiniteLoop& loop);
bool has_right_inverse_property(const FiniteLoop& loop);
bool has_two_sided_inverses(const FiniteLoop& loop);

/// Every bracketing of a^m agrees, for all a and all m <= max_degree.
bool powers_associative_upto(const FiniteLoop& loop, int max_degree = 4);

bool is_commutative(const FiniteLoop& loop);
bool is_associative(const FiniteLoop& loop);

/// `.loop` text format: the order, then n rows of n integers; '#' starts a
/// comment that runs to the end of the line.
FiniteLoop read_loop(std::istream& in);
FiniteLoop read_loop_text(const std::string& text);
FiniteLoop read_loop_file(const std::string& path);
void write_loop(std::ostream& out, const FiniteLoop& loop);
std::string to_loop_text(const FiniteLoop& loop);

}  // namespace bolmoufang
