#pragma once

// Exact search for members of M(p,q,C) with |C| = n at desk scale.
//
// Cells are filled in row-major order with colour ids. Symmetry breaking
// (sound under row, column and colour relabeling):
//   * colours appear in id order of first occurrence (restricted growth),
//     which forces the first row to 0..q-1;
//   * the first column is strictly increasing. Rows 2..p can always be
//     reordered so this holds: repeatedly take the remaining row whose
//     first-column colour has the smallest id so far (unseen counts as +inf).
// Pruning, with f(l) = l(p+q-l-1) the number of colours a colour of
// frequency l can meet:
//   * every colour needs a frequency l with f(l) >= n-1, i.e. l in [lo, hi];
//     the cells still empty must cover each colour's shortfall below lo;
//   * colours not yet used must fit in the empty cells;
//   * uncovered pairs must not exceed the number of cell adjacencies still
//     to be created (each empty cell meets i + j earlier cells).

#include "kpq/bounds.hpp"
#include "kpq/matrix.hpp"
#include "kpq/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <thread>
#include <tuple>
#include <vector>

namespace kpq {

enum class SearchStatus { sat, unsat, budget_exhausted };

inline const char* status_name(SearchStatus s)
{
    switch (s) {
    case SearchStatus::sat: return "SAT";
    case SearchStatus::unsat: return "UNSAT";
    case SearchStatus::budget_exhausted: return "BUDGET_EXHAUSTED";
    }
    return "?";
}

struct SearchProblem {
    std::size_t p = 1;
    std::size_t q = 1;
    std::size_t n = 1;
    std::optional<std::uint64_t> node_budget;
    // Sequential, fixed branch order. When false, top-level branches run on
    // `jobs` threads; status and witness match the sequential run whenever
    // the budget is not hit.
    bool deterministic = true;
    unsigned jobs = 1;
};

struct SearchOutcome {
    SearchStatus status = SearchStatus::unsat;
    std::optional<ColourMatrix> witness;
    std::uint64_t nodes_explored = 0;
    std::vector<std::uint64_t> branch_nodes; // per top-level branch
};

namespace detail {

/// Frequencies l in [1, min(p,q)] with l(p+q-l-1) >= n-1, as [lo, hi].
inline std::optional<std::pair<std::size_t, std::size_t>> admissible_frequencies(std::size_t p, std::size_t q,
                                                                                std::size_t n)
{
    std::optional<std::pair<std::size_t, std::size_t>> range;
    for (std::size_t l = 1; l <= std::min(p, q); ++l) {
        if (l * (p + q - l - 1) + 1 < n)
            continue;
        if (!range)
            range = {l, l};
        range->second = l;
    }
    return range;
}

struct SharedControl {
    std::atomic<std::uint64_t> nodes{0};
    std::uint64_t budget = std::numeric_limits<std::uint64_t>::max();
    std::atomic<bool> budget_hit{false};
    std::atomic<std::size_t> first_sat_branch{std::numeric_limits<std::size_t>::max()};
};

class Search {
public:
    Search(std::size_t p, std::size_t q, std::size_t n, std::size_t lo, std::size_t hi, SharedControl& ctl,
           std::size_t branch)
        : p_(p), q_(q), n_(n), lo_(lo), hi_(hi), ctl_(ctl), branch_(branch), grid_(p * q, -1),
          row_has_(p * n, 0), col_has_(q * n, 0), pair_cnt_(n * n, 0), freq_(n, 0), potential_(p * q + 1, 0)
    {
        target_pairs_ = n * (n - 1) / 2;
        deficit_ = n * lo;
        for (std::size_t pos = p * q; pos-- > 0;)
            potential_[pos] = potential_[pos + 1] + pos / q + pos % q;
    }

    /// Restrict one cell to a single value (top-level branch split).
    void pin(std::size_t pos, int value)
    {
        pinned_pos_ = pos;
        pinned_value_ = value;
    }

    /// Values the search may try at `pos` once every earlier cell follows
    /// the forced first row. Only meaningful for pos = q (cell (1,0)).
    std::vector<int> first_column_candidates() const
    {
        std::vector<int> out;
        const std::size_t used = std::min(q_, n_);
        for (std::size_t c = 1; c <= std::min(used, n_ - 1); ++c)
            out.push_back(static_cast<int>(c));
        return out;
    }

    bool run() { return descend(0); }

    std::uint64_t nodes() const noexcept { return nodes_; }
    const std::vector<int>& grid() const noexcept { return grid_; }

private:
    bool should_stop() const
    {
        return ctl_.budget_hit.load(std::memory_order_relaxed) ||
               ctl_.first_sat_branch.load(std::memory_order_relaxed) < branch_;
    }

    bool feasible(std::size_t pos) const
    {
        const std::size_t remaining = p_ * q_ - pos;
        if (n_ - used_ > remaining)
            return false;
        if (deficit_ > remaining)
            return false;
        return target_pairs_ - covered_ <= potential_[pos];
    }

    bool descend(std::size_t pos)
    {
        if (pos == p_ * q_)
            return used_ == n_ && covered_ == target_pairs_;
        if (!feasible(pos))
            return false;
        const std::size_t i = pos / q_;
        const std::size_t j = pos % q_;
        const std::size_t top = std::min(used_, n_ - 1);
        int floor_value = 0;
        if (j == 0 && i > 0)
            floor_value = grid_[(i - 1) * q_] + 1;
        for (std::size_t c = static_cast<std::size_t>(floor_value); c <= top; ++c) {
            if (pos == pinned_pos_ && static_cast<int>(c) != pinned_value_)
                continue;
            if (row_has_[i * n_ + c] || col_has_[j * n_ + c] || freq_[c] + 1 > hi_)
                continue;
            if (should_stop())
                return false;
            if (ctl_.nodes.fetch_add(1, std::memory_order_relaxed) + 1 > ctl_.budget) {
                ctl_.budget_hit.store(true, std::memory_order_relaxed);
                return false;
            }
            ++nodes_;
            place(i, j, static_cast<ColourId>(c));
            if (descend(pos + 1))
                return true;
            unplace(i, j, static_cast<ColourId>(c));
        }
        return false;
    }

    void place(std::size_t i, std::size_t j, ColourId c)
    {
        for (std::size_t jj = 0; jj < j; ++jj)
            bump(c, static_cast<ColourId>(grid_[i * q_ + jj]));
        for (std::size_t ii = 0; ii < i; ++ii)
            bump(c, static_cast<ColourId>(grid_[ii * q_ + j]));
        grid_[i * q_ + j] = static_cast<int>(c);
        row_has_[i * n_ + c] = 1;
        col_has_[j * n_ + c] = 1;
        if (freq_[c] < lo_)
            --deficit_;
        ++freq_[c];
        if (c == used_)
            ++used_;
    }

    void unplace(std::size_t i, std::size_t j, ColourId c)
    {
        if (c + 1 == used_ && freq_[c] == 1)
            --used_;
        --freq_[c];
        if (freq_[c] < lo_)
            ++deficit_;
        row_has_[i * n_ + c] = 0;
        col_has_[j * n_ + c] = 0;
        grid_[i * q_ + j] = -1;
        for (std::size_t jj = 0; jj < j; ++jj)
            drop(c, static_cast<ColourId>(grid_[i * q_ + jj]));
        for (std::size_t ii = 0; ii < i; ++ii)
            drop(c, static_cast<ColourId>(grid_[ii * q_ + j]));
    }

    void bump(ColourId a, ColourId b)
    {
        if (pair_cnt_[std::min(a, b) * n_ + std::max(a, b)]++ == 0)
            ++covered_;
    }

    void drop(ColourId a, ColourId b)
    {
        if (--pair_cnt_[std::min(a, b) * n_ + std::max(a, b)] == 0)
            --covered_;
    }

    std::size_t p_, q_, n_, lo_, hi_;
    SharedControl& ctl_;
    std::size_t branch_;
    std::vector<int> grid_;
    std::vector<char> row_has_;
    std::vector<char> col_has_;
    std::vector<std::uint32_t> pair_cnt_;
    std::vector<std::size_t> freq_;
    std::vector<std::size_t> potential_;
    std::size_t used_ = 0;
    std::size_t covered_ = 0;
    std::size_t target_pairs_ = 0;
    std::size_t deficit_ = 0;
    std::uint64_t nodes_ = 0;
    std::size_t pinned_pos_ = std::numeric_limits<std::size_t>::max();
    int pinned_value_ = -1;
};

inline ColourMatrix grid_to_matrix(std::size_t p, std::size_t q, std::size_t n, const std::vector<int>& grid)
{
    std::vector<ColourId> entries(grid.begin(), grid.end());
    return ColourMatrix(p, q, std::move(entries), Palette::numbered(n, 0));
}

} // namespace detail

inline SearchOutcome exists_matrix(const SearchProblem& problem)
{
    const auto [p, q, n] = std::tuple{problem.p, problem.q, problem.n};
    if (p == 0 || q == 0)
        throw std::invalid_argument("exists_matrix: p and q must be positive");
    if (n < std::max(p, q))
        throw std::invalid_argument("exists_matrix: n must be at least max(p,q)");

    SearchOutcome out;
    const auto freq_range = detail::admissible_frequencies(p, q, n);
    if (n > p * q || !freq_range)
        return out; // UNSAT without search

    detail::SharedControl ctl;
    if (problem.node_budget)
        ctl.budget = *problem.node_budget;
    const auto [lo, hi] = *freq_range;

    // Top-level split on cell (1,0); a single branch when p = 1.
    std::vector<int> pins;
    if (p > 1) {
        detail::Search probe(p, q, n, lo, hi, ctl, 0);
        pins = probe.first_column_candidates();
    } else {
        pins.push_back(-1);
    }

    const std::size_t branches = pins.size();
    out.branch_nodes.assign(branches, 0);
    std::vector<std::optional<std::vector<int>>> found(branches);

    auto run_branch = [&](std::size_t b) {
        detail::Search s(p, q, n, lo, hi, ctl, b);
        if (pins[b] >= 0)
            s.pin(q, pins[b]);
        if (s.run()) {
            found[b] = s.grid();
            std::size_t cur = ctl.first_sat_branch.load();
            while (b < cur && !ctl.first_sat_branch.compare_exchange_weak(cur, b)) {
            }
        }
        out.branch_nodes[b] = s.nodes();
    };

    const unsigned jobs = problem.deterministic ? 1u : std::max(1u, problem.jobs);
    if (jobs == 1) {
        for (std::size_t b = 0; b < branches; ++b) {
            run_branch(b);
            if (found[b] || ctl.budget_hit)
                break;
        }
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(jobs, branches); ++t)
            pool.emplace_back([&] {
                for (std::size_t b; (b = next.fetch_add(1)) < branches;) {
                    if (ctl.first_sat_branch.load() < b || ctl.budget_hit)
                        continue;
                    run_branch(b);
                }
            });
        for (auto& th : pool)
            th.join();
    }

    for (auto v : out.branch_nodes)
        out.nodes_explored += v;
    for (std::size_t b = 0; b < branches; ++b)
        if (found[b]) {
            out.status = SearchStatus::sat;
            out.witness = detail::grid_to_matrix(p, q, n, *found[b]);
            return out;
        }
    out.status = ctl.budget_hit ? SearchStatus::budget_exhausted : SearchStatus::unsat;
    return out;
}

struct AchromaticResult {
    std::size_t value = 0;                // largest n shown SAT
    std::optional<ColourMatrix> witness;  // for `value`
    bool upper_certified = false;         // n = value+1 shown UNSAT
    SearchStatus last_status = SearchStatus::unsat;
    std::uint64_t nodes_explored = 0;
};

/// Largest n with a member of M(p,q,n). Feasible palette sizes form the
/// interval [max(p,q), achr] (interpolation theorem), so the scan climbs
/// from max(p,q) and stops at the first UNSAT.
inline AchromaticResult achromatic_exact(std::size_t p, std::size_t q, std::optional<std::uint64_t> budget = {},
                                         bool deterministic = true, unsigned jobs = 1)
{
    if (p == 0 || q == 0)
        throw std::invalid_argument("achromatic_exact: p and q must be positive");
    AchromaticResult r;
    for (std::size_t n = std::max(p, q);; ++n) {
        SearchProblem prob{p, q, n, std::nullopt, deterministic, jobs};
        if (budget) {
            if (r.nodes_explored >= *budget) {
                r.last_status = SearchStatus::budget_exhausted;
                return r;
            }
            prob.node_budget = *budget - r.nodes_explored;
        }
        auto o = exists_matrix(prob);
        r.nodes_explored += o.nodes_explored;
        r.last_status = o.status;
        if (o.status == SearchStatus::sat) {
            r.value = n;
            r.witness = std::move(o.witness);
            continue;
        }
        r.upper_certified = o.status == SearchStatus::unsat;
        return r;
    }
}

/// Ground truth for tiny grids (pq <= 12): enumerates every partition of the
/// cells into colour classes (ids in order of first appearance, which only
/// fixes the naming of colours), keeps proper ones, and tests each complete
/// assignment with verify_membership. No row or column reduction, no
/// counting bounds.
inline bool naive_oracle(std::size_t p, std::size_t q, std::size_t n)
{
    if (p == 0 || q == 0)
        throw std::invalid_argument("naive_oracle: p and q must be positive");
    if (p * q > 12)
        throw std::invalid_argument("naive_oracle: p*q must not exceed 12");
    if (n == 0)
        return false;
    std::vector<ColourId> cells(p * q, 0);

    auto rec = [&](auto&& self, std::size_t pos, std::size_t used) -> bool {
        if (pos == p * q) {
            if (used != n)
                return false;
            return verify_membership(ColourMatrix(p, q, cells, Palette::numbered(n, 0))).member();
        }
        const std::size_t i = pos / q;
        const std::size_t j = pos % q;
        for (std::size_t c = 0; c <= used && c < n; ++c) {
            bool clash = false;
            for (std::size_t jj = 0; jj < j && !clash; ++jj)
                clash = cells[i * q + jj] == c;
            for (std::size_t ii = 0; ii < i && !clash; ++ii)
                clash = cells[ii * q + j] == c;
            if (clash)
                continue;
            cells[pos] = static_cast<ColourId>(c);
            if (self(self, pos + 1, std::max(used, c + 1)))
                return true;
        }
        return false;
    };
    return rec(rec, 0, 0);
}

} // namespace kpq
