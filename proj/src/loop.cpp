#include "bolmoufang/loop.hpp"

#include <bitset>
#include <cassert>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace bolmoufang {

FiniteLoop::FiniteLoop(int n, std::vector<Element> table)
    : n_(n), table_(std::move(table)), ldiv_(table_.size()), rdiv_(table_.size()) {
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) {
            auto ea = static_cast<Element>(a), eb = static_cast<Element>(b);
            Element c = mul(ea, eb);
            ldiv_[idx(ea, c)] = eb;
            rdiv_[idx(c, eb)] = ea;
        }
}

FiniteLoop FiniteLoop::from_table(const std::vector<std::vector<int>>& rows) {
    const auto n = static_cast<int>(rows.size());
    if (n < 1) throw std::invalid_argument("empty table");
    if (n > kMaxOrder) throw std::invalid_argument("order exceeds " + std::to_string(kMaxOrder));
    for (const auto& r : rows)
        if (static_cast<int>(r.size()) != n) throw std::invalid_argument("table is not square");
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int v = rows[a][b];
            if (v < 0 || v >= n)
                throw std::invalid_argument("entry " + std::to_string(v) + " out of range 0.." +
                                            std::to_string(n - 1));
        }

    for (int a = 0; a < n; ++a) {
        std::vector<bool> row_seen(n), col_seen(n);
        for (int b = 0; b < n; ++b) {
            if (row_seen[rows[a][b]])
                throw NotLatin("row " + std::to_string(a) + " repeats " + std::to_string(rows[a][b]));
            if (col_seen[rows[b][a]])
                throw NotLatin("column " + std::to_string(a) + " repeats " +
                               std::to_string(rows[b][a]));
            row_seen[rows[a][b]] = col_seen[rows[b][a]] = true;
        }
    }

    int neutral = -1;
    for (int e = 0; e < n && neutral < 0; ++e) {
        bool ok = true;
        for (int a = 0; a < n && ok; ++a) ok = rows[e][a] == a && rows[a][e] == a;
        if (ok) neutral = e;
    }
    if (neutral < 0) throw NoNeutral("no two-sided neutral element");

    // swap the labels 0 and `neutral`
    auto relabel = [neutral](int v) { return v == neutral ? 0 : v == 0 ? neutral : v; };
    std::vector<Element> table(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            table[static_cast<std::size_t>(relabel(a) * n + relabel(b))] =
                static_cast<Element>(relabel(rows[a][b]));
    return FiniteLoop(n, std::move(table));
}

FiniteLoop FiniteLoop::from_reduced(int order, std::vector<Element> table) {
    assert(order >= 1 && order <= kMaxOrder);
    assert(table.size() == static_cast<std::size_t>(order) * order);
    return FiniteLoop(order, std::move(table));
}

std::vector<std::vector<int>> FiniteLoop::rows() const {
    std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) out[a][b] = table_[idx(a, b)];
    return out;
}

FiniteLoop opposite(const FiniteLoop& loop) {
    const int n = loop.order();
    std::vector<Element> t(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            t[static_cast<std::size_t>(a * n + b)] = loop(static_cast<Element>(b), static_cast<Element>(a));
    return FiniteLoop::from_reduced(n, std::move(t));
}

bool has_left_inverse_property(const FiniteLoop& L) {
    for (int x = 0; x < L.order(); ++x) {
        Element inv = L.right_div(0, static_cast<Element>(x));
        for (int y = 0; y < L.order(); ++y)
            if (L(inv, L(static_cast<Element>(x), static_cast<Element>(y))) != y) return false;
    }
    return true;
}

bool has_right_inverse_property(const FiniteLoop& L) {
    for (int x = 0; x < L.order(); ++x) {
        Element inv = L.left_div(static_cast<Element>(x), 0);
        for (int y = 0; y < L.order(); ++y)
            if (L(L(static_cast<Element>(y), static_cast<Element>(x)), inv) != y) return false;
    }
    return true;
}

bool has_two_sided_inverses(const FiniteLoop& L) {
    for (int x = 0; x < L.order(); ++x) {
        auto e = static_cast<Element>(x);
        if (L.right_div(0, e) != L.left_div(e, 0)) return false;
    }
    return true;
}

bool powers_associative_upto(const FiniteLoop& L, int max_degree) {
    using Values = std::bitset<FiniteLoop::kMaxOrder + 1>;
    const int n = L.order();
    for (int a = 0; a < n; ++a) {
        // values[m] = set of values of all bracketings of a^m
        std::vector<Values> values(static_cast<std::size_t>(max_degree) + 1);
        values[1].set(static_cast<std::size_t>(a));
        for (int m = 2; m <= max_degree; ++m) {
            for (int i = 1; i < m; ++i)
                for (int p = 0; p < n; ++p) {
                    if (!values[i][p]) continue;
                    for (int q = 0; q < n; ++q)
                        if (values[m - i][q])
                            values[m].set(L(static_cast<Element>(p), static_cast<Element>(q)));
                }
            if (values[m].count() != 1) return false;
        }
    }
    return true;
}

bool is_commutative(const FiniteLoop& L) {
    for (int a = 0; a < L.order(); ++a)
        for (int b = a + 1; b < L.order(); ++b)
            if (L(static_cast<Element>(a), static_cast<Element>(b)) !=
                L(static_cast<Element>(b), static_cast<Element>(a)))
                return false;
    return true;
}

bool is_associative(const FiniteLoop& L) {
    const int n = L.order();
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Element ab = L(static_cast<Element>(a), static_cast<Element>(b));
            for (int c = 0; c < n; ++c)
                if (L(static_cast<Element>(a), L(static_cast<Element>(b), static_cast<Element>(c))) !=
                    L(ab, static_cast<Element>(c)))
                    return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// .loop files

FiniteLoop read_loop(std::istream& in) {
    std::ostringstream cleaned;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        cleaned << line << '\n';
    }
    std::istringstream tokens(cleaned.str());
    long n = 0;
    if (!(tokens >> n) || n < 1) throw std::invalid_argument(".loop: missing or invalid order");
    if (n > FiniteLoop::kMaxOrder) throw std::invalid_argument(".loop: order too large");
    std::vector<std::vector<int>> rows(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (auto& r : rows)
        for (auto& v : r)
            if (!(tokens >> v)) throw std::invalid_argument(".loop: expected " + std::to_string(n * n) + " entries");
    std::string extra;
    if (tokens >> extra) throw std::invalid_argument(".loop: trailing data '" + extra + "'");
    return FiniteLoop::from_table(rows);
}

FiniteLoop read_loop_text(const std::string& text) {
    std::istringstream in(text);
    return read_loop(in);
}

FiniteLoop read_loop_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_loop(in);
}

void write_loop(std::ostream& out, const FiniteLoop& loop) {
    const int n = loop.order();
    const int width = n > 10 ? 2 : 1;
    out << n << '\n';
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            if (b) out << ' ';
            out << std::setw(width) << int(loop(static_cast<Element>(a), static_cast<Element>(b)));
        }
        out << '\n';
    }
}

std::string to_loop_text(const FiniteLoop& loop) {
    std::ostringstream out;
    write_loop(out, loop);
    return out.str();
}

}  // namespace bolmoufang
