#include "bolmoufang/model_finder.hpp"

#include <atomic>
#include <bit>
#include <limits>
#include <mutex>
#include <optional>
#include <set>
#include <stdexcept>
#include <thread>

namespace bolmoufang {

namespace {

constexpr int kMaxSearchOrder = 64;  // row/column masks are 64-bit
constexpr std::int16_t kUnset = -1;

/// Partial reduced table with Latin bookkeeping.
class PartialTable {
public:
    explicit PartialTable(int n)
        : n_(n), cells_(static_cast<std::size_t>(n) * n, kUnset), rows_(n), cols_(n) {
        for (int i = 0; i < n; ++i) {
            set(0, i, static_cast<std::int16_t>(i));
            if (i) set(i, 0, static_cast<std::int16_t>(i));
        }
    }

    int order() const { return n_; }
    std::int16_t at(int a, int b) const { return cells_[static_cast<std::size_t>(a * n_ + b)]; }
    std::uint64_t available(int r, int c) const {
        std::uint64_t all = n_ == 64 ? ~0ull : (1ull << n_) - 1;
        return all & ~(rows_[r] | cols_[c]);
    }
    void set(int r, int c, std::int16_t v) {
        cells_[static_cast<std::size_t>(r * n_ + c)] = v;
        rows_[r] |= 1ull << v;
        cols_[c] |= 1ull << v;
    }
    void clear(int r, int c) {
        auto v = at(r, c);
        cells_[static_cast<std::size_t>(r * n_ + c)] = kUnset;
        rows_[r] &= ~(1ull << v);
        cols_[c] &= ~(1ull << v);
    }

    FiniteLoop to_loop() const {
        std::vector<Element> t(cells_.size());
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = static_cast<Element>(cells_[i]);
        return FiniteLoop::from_reduced(n_, std::move(t));
    }

private:
    int n_;
    std::vector<std::int16_t> cells_;
    std::vector<std::uint64_t> rows_, cols_;
};

/// A required law compiled for evaluation over a partial table.
class Constraint {
public:
    explicit Constraint(const Equation& eq) : program_(std::span(&eq, 1)) {
        std::tie(lhs_, rhs_) = program_.sides(0);
    }

    /// False iff some fully determined instance has unequal sides.
    bool consistent(const PartialTable& t, std::vector<std::int16_t>& slots) const {
        const int n = t.order();
        const auto& steps = program_.steps();
        slots.resize(program_.slot_count());
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                for (int z = 0; z < n; ++z) {
                    slots[0] = static_cast<std::int16_t>(x);
                    slots[1] = static_cast<std::int16_t>(y);
                    slots[2] = static_cast<std::int16_t>(z);
                    for (std::size_t k = 0; k < steps.size(); ++k) {
                        auto a = slots[steps[k].left], b = slots[steps[k].right];
                        slots[3 + k] = (a < 0 || b < 0) ? kUnset : t.at(a, b);
                    }
                    auto l = slots[lhs_], r = slots[rhs_];
                    if (l >= 0 && r >= 0 && l != r) return false;
                }
        return true;
    }

private:
    LawProgram program_;
    std::uint16_t lhs_ = 0, rhs_ = 0;
};

struct Cell {
    int r, c;
};

class Searcher {
public:
    Searcher(const SearchSpec& spec, std::vector<Cell> cells) : cells_(std::move(cells)) {
        for (const auto& law : spec.require) constraints_.emplace_back(law.equation);
    }

    /// Runs DFS from `start` over cells_[depth..]; `leaf` returns true to stop.
    template <class Leaf, class Stop>
    bool run(PartialTable& t, std::size_t depth, Leaf&& leaf, Stop&& stop) {
        if (stop()) return true;
        ++nodes_;
        if (depth == cells_.size()) return leaf(t);
        auto [r, c] = cells_[depth];
        auto avail = t.available(r, c);
        while (avail) {
            auto v = static_cast<std::int16_t>(std::countr_zero(avail));
            avail &= avail - 1;
            t.set(r, c, v);
            if (consistent(t) && run(t, depth + 1, leaf, stop)) {
                t.clear(r, c);
                return true;
            }
            t.clear(r, c);
        }
        return false;
    }

    bool consistent(const PartialTable& t) {
        for (const auto& k : constraints_)
            if (!k.consistent(t, slots_)) return false;
        return true;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    std::vector<Cell> cells_;
    std::vector<Constraint> constraints_;
    std::vector<std::int16_t> slots_;
    std::uint64_t nodes_ = 0;
};

std::vector<Cell> free_cells(int n) {
    std::vector<Cell> cells;
    for (int r = 1; r < n; ++r)
        for (int c = 1; c < n; ++c) cells.push_back({r, c});
    return cells;
}

void validate(const SearchSpec& spec) {
    if (spec.order < 1 || spec.order > kMaxSearchOrder)
        throw std::invalid_argument("search order must be in 1.." + std::to_string(kMaxSearchOrder));
    if (spec.threads == 0) throw std::invalid_argument("thread budget must be positive");
    std::set<std::string> required;
    for (const auto& l : spec.require) required.insert(l.label);
    for (const auto& l : spec.forbid)
        if (required.count(l.label))
            throw std::invalid_argument("'" + l.label + "' is both required and forbidden");
}

/// Forbidden laws must all fail on the completed table.
std::optional<std::vector<Witness>> forbid_witnesses(const FiniteLoop& loop,
                                                     const std::vector<Law>& forbid) {
    std::vector<Witness> out;
    for (const auto& law : forbid) {
        auto w = counterexample(loop, law);
        if (!w) return std::nullopt;
        out.push_back(std::move(*w));
    }
    return out;
}

}  // namespace

SearchResult find(const SearchSpec& spec) {
    validate(spec);
    const int n = spec.order;
    auto cells = free_cells(n);

    // Work units: every consistent completion of row 1.
    const std::size_t prefix = std::min<std::size_t>(cells.size(), static_cast<std::size_t>(n - 1));
    std::vector<std::vector<std::int16_t>> units;
    std::uint64_t nodes = 0;
    {
        Searcher s(spec, std::vector<Cell>(cells.begin(), cells.begin() + static_cast<std::ptrdiff_t>(prefix)));
        PartialTable t(n);
        s.run(
            t, 0,
            [&](const PartialTable& p) {
                std::vector<std::int16_t> row;
                for (std::size_t i = 0; i < prefix; ++i) row.push_back(p.at(cells[i].r, cells[i].c));
                units.push_back(std::move(row));
                return false;
            },
            [] { return false; });
        nodes += s.nodes();
    }

    constexpr auto kNone = std::numeric_limits<std::size_t>::max();
    std::atomic<std::size_t> next_unit{0};
    std::atomic<std::size_t> best_unit{kNone};
    std::atomic<std::uint64_t> total_nodes{nodes};
    std::mutex result_mutex;
    std::optional<Found> best;

    auto worker = [&] {
        Searcher s(spec, cells);
        PartialTable t(n);
        for (;;) {
            std::size_t u = next_unit.fetch_add(1);
            if (u >= units.size()) break;
            if (best_unit.load() != kNone &&
                (spec.mode == SearchMode::FirstFound || best_unit.load() < u))
                break;
            for (std::size_t i = 0; i < prefix; ++i) t.set(cells[i].r, cells[i].c, units[u][i]);
            s.run(
                t, prefix,
                [&](const PartialTable& p) {
                    auto loop = p.to_loop();
                    auto witnesses = forbid_witnesses(loop, spec.forbid);
                    if (!witnesses) return false;
                    std::lock_guard lock(result_mutex);
                    if (best_unit.load() == kNone || u < best_unit.load()) {
                        best_unit.store(u);
                        best = Found{std::move(loop), std::move(*witnesses)};
                    }
                    return true;
                },
                [&] {
                    auto b = best_unit.load(std::memory_order_relaxed);
                    if (b == kNone) return false;
                    return spec.mode == SearchMode::FirstFound || b < u;
                });
            for (std::size_t i = prefix; i-- > 0;) t.clear(cells[i].r, cells[i].c);
        }
        total_nodes += s.nodes();
    };

    const unsigned threads = std::min<unsigned>(spec.threads, static_cast<unsigned>(std::max<std::size_t>(units.size(), 1)));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned i = 0; i < threads; ++i) pool.emplace_back(worker);
    }

    if (!best) return ExhaustedOrder{n, total_nodes.load()};

    for (const auto& law : spec.require)
        if (!holds(best->loop, law.equation))
            throw std::logic_error("search returned a table violating required law " + law.label);
    return std::move(*best);
}

std::variant<FoundAt, NoneUpTo> find_minimal(const std::vector<Law>& require,
                                             const std::vector<Law>& forbid, int max_order,
                                             SearchMode mode, unsigned threads) {
    if (max_order < 1) throw std::invalid_argument("max_order must be at least 1");
    for (int n = 1; n <= max_order; ++n) {
        auto r = find(SearchSpec{n, require, forbid, mode, threads});
        if (auto* f = std::get_if<Found>(&r))
            return FoundAt{n, std::move(f->loop), std::move(f->witnesses)};
    }
    return NoneUpTo{max_order};
}

std::uint64_t enumerate_loops(int n, const std::function<void(const FiniteLoop&)>& visit) {
    if (n < 1 || n > kMaxSearchOrder)
        throw std::invalid_argument("order must be in 1.." + std::to_string(kMaxSearchOrder));
    SearchSpec spec{n, {}, {}, SearchMode::LexMinimal, 1};
    Searcher s(spec, free_cells(n));
    PartialTable t(n);
    std::uint64_t count = 0;
    s.run(
        t, 0,
        [&](const PartialTable& p) {
            ++count;
            visit(p.to_loop());
            return false;
        },
        [] { return false; });
    return count;
}

std::vector<FiniteLoop> all_loops(int n) {
    std::vector<FiniteLoop> out;
    enumerate_loops(n, [&](const FiniteLoop& l) { out.push_back(l); });
    return out;
}

}  // namespace bolmoufang
