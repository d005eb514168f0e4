#pragma once

#include <cstdint>
#include <functional>
#include <variant>
#include <vector>

#include "bolmoufang/evaluator.hpp"
#include "bolmoufang/loop.hpp"

namespace bolmoufang {

enum class SearchMode {
    /// Any satisfying table; with several threads the winner may vary.
    FirstFound,
    /// The least satisfying table in row-major lexicographic order.
    LexMinimal,
};

struct SearchSpec {
    int order = 1;
    std::vector<Law> require;
    std::vector<Law> forbid;
    SearchMode mode = SearchMode::LexMinimal;
    unsigned threads = 1;
};

struct Found {
    FiniteLoop loop;
    /// One witness per forbidden law, in `forbid` order.
    std::vector<Witness> witnesses;
};

struct ExhaustedOrder {
    int order;
    std::uint64_t nodes;
};

using SearchResult = std::variant<Found, ExhaustedOrder>;

/// Backtracking over the free cells of a reduced table (row-major, values
/// ascending). Each instance of a required law is checked as soon as all
/// products it needs are known; forbidden laws are checked on complete
/// tables only. Throws std::invalid_argument when a label appears in both
/// `require` and `forbid`, or the order is out of range.
SearchResult find(const SearchSpec& spec);

struct FoundAt {
    int order;
    FiniteLoop loop;
    std::vector<Witness> witnesses;
};

struct NoneUpTo {
    int max_order;
};

inline constexpr int kDefaultMaxOrder = 16;

/// Runs find() over orders 1..max_order and returns the first hit.
std::variant<FoundAt, NoneUpTo> find_minimal(const std::vector<Law>& require,
                                             const std::vector<Law>& forbid,
                                             int max_order = kDefaultMaxOrder,
                                             SearchMode mode = SearchMode::LexMinimal,
                                             unsigned threads = 1);

/// Visits every reduced loop table of order n once, in lexicographic order.
/// Returns the number visited.
std::uint64_t enumerate_loops(int n, const std::function<void(const FiniteLoop&)>& visit);
std::vector<FiniteLoop> all_loops(int n);

}  // namespace bolmoufang
