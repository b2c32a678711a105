#pragma once

// Frontier dynamic programming over cylinder columns.
//
// A column of the padded segment graph is summarized per cell by one of
// three states: OCCUPIED (in A), COVERED (not in A, already dominated by
// settled cells) or NEEDY (not in A, not yet dominated; it must be dominated
// by the next column or sit in a relaxed/padding row). Sweeping the n cyclic
// columns turns minimum wasted domination (and gamma) into a minimum-weight
// closed walk of length n in the state graph: occupying a cell costs +5 and
// every cell finalized as dominated credits -1, so a closed walk accumulates
// exactly 5|A| - |N[A]|. Cyclic closure fixes the first column's state and
// requires a consistent wrap, so the engine runs one value-DP per feasible
// start state ("slice") and reads the diagonal at every length, sharing one
// pass for the whole series. Completion lower bounds from a single backward
// sweep plus upper bounds from explicit seed patterns prune both whole
// slices and individual states.

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "cyldom/cylinder.hpp"
#include "cyldom/segment.hpp"

namespace cyldom {

struct EngineOptions {
    int threads = 0; // 0 = hardware concurrency
    bool allow_long = false;
    bool pruning = true; // disabled only by equivalence tests
    int witness_budget = 2000;
    std::optional<std::filesystem::path> cache_dir;
};

struct WasteSeries {
    SegmentConfig config;
    int start_n = 3;
    std::vector<int> values; // values[i] = min waste at n = start_n + i

    int n_max() const { return start_n + static_cast<int>(values.size()) - 1; }
    int value_at(int n) const {
        if (n < start_n || n > n_max())
            throw input_error("series value requested outside computed range");
        return values[n - start_n];
    }
};

// Minimum waste of almost-dominating sets for n = 3..n_max, one engine pass.
WasteSeries waste_series(const SegmentConfig& config, int n_max,
                         const EngineOptions& opts = {});

// Exact minimum wasted domination at one cycle length, with one optimal
// witness over the segment rows.
std::pair<int, Pattern> min_waste_cycle(const SegmentConfig& config, int n,
                                        const EngineOptions& opts = {});

// Exact gamma(C_n x P_m), frontier = one column of m rows, sweep around the
// cycle. Height cap 13; m >= 11 requires allow_long.
int gamma_cycle_orientation(int m, int n, const EngineOptions& opts = {});

// Exact gamma(C_n x P_m), frontier = full ring of n cells, sweep along the
// path rows. Ring cap 13; n > 10 requires allow_long.
int gamma_path_orientation(int n, int m, const EngineOptions& opts = {});

// Up to max_count distinct optimal witnesses, deterministic order.
std::vector<Pattern> witness_enumerate(const SegmentConfig& config, int n,
                                       int max_count,
                                       const EngineOptions& opts = {});

namespace engine_detail {

// Row-class problem handed to the low-level engine. Waste mode: occupy_cost
// 5, dominate_credit -1. Gamma mode: occupy_cost 1, credit 0, all Required.
struct DpProblem {
    std::vector<RowClass> classes;
    int occupy_cost = 5;
    int dominate_credit = -1;

    int height() const { return static_cast<int>(classes.size()); }
};

struct SeriesResult {
    std::vector<int> values; // f(3..n_max); kUnattained if no closed walk
    // per length k (index k-3): start states whose diagonal equals f(k),
    // sorted; capped at 64 entries
    std::vector<std::vector<uint32_t>> optimal_starts;
};

constexpr int kUnattained = 1 << 20;

SeriesResult compute_series(const DpProblem& prob, int n_max,
                            const EngineOptions& opts,
                            const std::vector<int>& seed_upper_bounds);

// Exact diagonal row (min closed-walk weight through s0 for every length
// 3..n_max) for a single start state; no pruning.
std::vector<int> slice_diagonals(const DpProblem& prob, int n_max, uint32_t s0);

struct CycleWalk {
    std::vector<uint16_t> occupancy; // per column, bit r = row r occupied
    std::vector<uint32_t> states;    // state entering each column
    int cells = 0;
};

// Enumerate closed walks of length n through s0 with total weight exactly
// `cost`, in deterministic order, invoking cb for each; stop when cb returns
// false or `budget` walks were delivered. Walks whose running cell count
// exceeds max_cells (if set) are pruned. Returns the number delivered.
int enumerate_cycles(const DpProblem& prob, int n, uint32_t s0, int cost,
                     int budget, std::optional<int> max_cells,
                     const std::function<bool(const CycleWalk&)>& cb);

DpProblem problem_for(const SegmentConfig& config);
DpProblem gamma_problem(int m);

// waste_series plus the per-length optimal start states, cache-backed; this
// is what witness reconstruction and tile derivation build on.
struct SeriesWithStarts {
    WasteSeries series;
    std::vector<std::vector<uint32_t>> optimal_starts; // index n-3
};
SeriesWithStarts waste_series_full(const SegmentConfig& config, int n_max,
                                   const EngineOptions& opts);

// Upper-bound seeds from explicit verified patterns (diagonal strips patched
// with full columns); index k-3 for k = 3..n_max.
std::vector<int> waste_seed_bounds(const SegmentConfig& config, int n_max);
std::vector<int> gamma_seed_bounds(int m, int n_max);

Pattern walk_to_segment_pattern(const SegmentConfig& config, int n,
                                const CycleWalk& walk);

} // namespace engine_detail

} // namespace cyldom
