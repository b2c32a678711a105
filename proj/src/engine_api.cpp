#include <algorithm>
#include <set>

#include "cyldom/cache.hpp"
#include "cyldom/engine.hpp"

namespace cyldom {

using namespace engine_detail;

namespace {

void check_waste_gate(const SegmentConfig& config, const EngineOptions& opts) {
    if (config.rows >= 11 && !opts.allow_long)
        throw long_run_refused(
            "segments with " + std::to_string(config.rows) +
            " rows are a long-running computation; pass --allow-long");
}

} // namespace

namespace engine_detail {

SeriesWithStarts waste_series_full(const SegmentConfig& config, int n_max,
                                   const EngineOptions& opts) {
    if (n_max < 3) throw input_error("n_max must be >= 3");
    check_waste_gate(config, opts);

    std::optional<ResultCache> cache;
    if (opts.cache_dir) cache.emplace(*opts.cache_dir);

    if (cache) {
        auto hit = cache->load_series(config);
        if (hit && hit->n_max() >= n_max) {
            SeriesWithStarts out;
            out.series.config = config;
            out.series.start_n = hit->start_n;
            int count = n_max - hit->start_n + 1;
            out.series.values.assign(hit->values.begin(),
                                     hit->values.begin() + count);
            out.optimal_starts.assign(hit->optimal_starts.begin(),
                                      hit->optimal_starts.begin() + count);
            return out;
        }
    }

    auto seeds = waste_seed_bounds(config, n_max);
    auto res = compute_series(problem_for(config), n_max, opts, seeds);
    for (int v : res.values)
        if (v == kUnattained)
            throw infeasible_error("series value unattained"); // cannot happen

    SeriesWithStarts out;
    out.series.config = config;
    out.series.start_n = 3;
    out.series.values = res.values;
    out.optimal_starts = res.optimal_starts;

    if (cache) {
        CachedSeries rec;
        rec.config = config;
        rec.start_n = 3;
        rec.values = res.values;
        rec.optimal_starts = res.optimal_starts;
        auto old = cache->load_series(config);
        if (old) {
            // A shorter cached series must agree with the fresh computation.
            for (size_t i = 0; i < old->values.size() && i < rec.values.size();
                 ++i)
                if (old->values[i] != rec.values[i])
                    throw input_error("cache disagrees with fresh computation; "
                                      "remove " +
                                      cache->series_path(config).string());
        }
        cache->store_series(rec);
    }
    return out;
}

} // namespace engine_detail

WasteSeries waste_series(const SegmentConfig& config, int n_max,
                         const EngineOptions& opts) {
    return waste_series_full(config, n_max, opts).series;
}

std::vector<Pattern> witness_enumerate(const SegmentConfig& config, int n,
                                       int max_count,
                                       const EngineOptions& opts) {
    if (max_count <= 0) return {};
    auto full = waste_series_full(config, n, opts);
    int target = full.series.value_at(n);
    const auto& starts = full.optimal_starts[static_cast<size_t>(n - 3)];

    std::vector<Pattern> out;
    std::set<std::vector<Cell>> seen;
    DpProblem prob = problem_for(config);
    for (uint32_t s0 : starts) {
        if (static_cast<int>(out.size()) >= max_count) break;
        enumerate_cycles(prob, n, s0, target,
                         max_count - static_cast<int>(out.size()), std::nullopt,
                         [&](const CycleWalk& walk) {
                             Pattern p = walk_to_segment_pattern(config, n, walk);
                             if (seen.insert(p.cells()).second)
                                 out.push_back(std::move(p));
                             return static_cast<int>(out.size()) < max_count;
                         });
    }
    return out;
}

std::pair<int, Pattern> min_waste_cycle(const SegmentConfig& config, int n,
                                        const EngineOptions& opts) {
    auto full = waste_series_full(config, n, opts);
    int value = full.series.value_at(n);

    std::optional<ResultCache> cache;
    if (opts.cache_dir) cache.emplace(*opts.cache_dir);
    if (cache) {
        auto text = cache->load_witness_text(config, n);
        if (text) {
            Pattern witness = parse_pattern(*text);
            if (segment_waste(config, n, witness) != value)
                throw input_error("cached witness does not achieve the "
                                  "cached minimum; remove " +
                                  cache->witness_path(config, n).string());
            return {value, witness};
        }
    }

    auto witnesses = witness_enumerate(config, n, 1, opts);
    if (witnesses.empty())
        throw infeasible_error("no witness reconstructed"); // cannot happen
    if (cache) cache->store_witness_text(config, n, format_pattern(witnesses[0]));
    return {value, witnesses[0]};
}

int gamma_cycle_orientation(int m, int n, const EngineOptions& opts) {
    if (m < 2) throw input_error("cylinder requires m >= 2");
    if (n < 3) throw input_error("cylinder requires n >= 3");
    if (m > 13)
        throw infeasible_error("cycle-orientation frontier capped at 13 rows");
    if (m >= 11 && !opts.allow_long)
        throw long_run_refused("gamma with " + std::to_string(m) +
                               " frontier rows is long-running; pass --allow-long");
    auto seeds = gamma_seed_bounds(m, n);
    auto res = compute_series(gamma_problem(m), n, opts, seeds);
    int v = res.values[static_cast<size_t>(n - 3)];
    if (v == kUnattained)
        throw infeasible_error("gamma unattained"); // cannot happen
    return v;
}

} // namespace cyldom
