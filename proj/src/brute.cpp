#include "cyldom/brute.hpp"

#include <algorithm>
#include <cstdint>
#include <vector>

namespace cyldom {

namespace {

// Vertices indexed v = (row-1)*n + (col-1); closed neighborhoods as bitmasks.
struct FlatGraph {
    int n, m, count;
    std::vector<uint32_t> closed; // closed[v] = N[v] mask

    FlatGraph(const CylinderSpec& spec) : n(spec.n), m(spec.m), count(spec.n * spec.m) {
        closed.assign(count, 0);
        for (int row = 0; row < m; ++row) {
            for (int col = 0; col < n; ++col) {
                int v = row * n + col;
                uint32_t mask = 1u << v;
                mask |= 1u << (row * n + (col + 1) % n);
                mask |= 1u << (row * n + (col + n - 1) % n);
                if (row > 0) mask |= 1u << ((row - 1) * n + col);
                if (row + 1 < m) mask |= 1u << ((row + 1) * n + col);
                closed[v] = mask;
            }
        }
    }
};

// Depth-limited search: can `remaining` more vertices dominate everything
// not yet in `dom`? Branches on the closed neighborhood of the first
// undominated vertex, in increasing vertex order.
bool dominate_search(const FlatGraph& g, uint32_t dom, int remaining,
                     std::vector<int>* chosen) {
    uint32_t full = g.count == 32 ? ~0u : (1u << g.count) - 1;
    if (dom == full) return true;
    if (remaining == 0) return false;
    int first = -1;
    for (int v = 0; v < g.count; ++v) {
        if (!(dom & (1u << v))) {
            first = v;
            break;
        }
    }
    // `first` must be dominated by some chosen vertex in its closed
    // neighborhood; try candidates in lexicographic order.
    for (int v = 0; v < g.count; ++v) {
        if (!(g.closed[first] & (1u << v))) continue;
        if (chosen) chosen->push_back(v);
        if (dominate_search(g, dom | g.closed[v], remaining - 1, chosen))
            return true;
        if (chosen) chosen->pop_back();
    }
    return false;
}

} // namespace

int brute_gamma(const CylinderSpec& spec, const OracleLimit& limit,
                Pattern* witness) {
    if (spec.vertex_count() > limit.max_vertices || spec.vertex_count() > 30)
        throw infeasible_error("instance too large for the brute oracle (" +
                               std::to_string(spec.vertex_count()) + " vertices)");
    FlatGraph g(spec);
    int max_size = limit.max_subset_size.value_or(g.count);
    for (int k = 1; k <= max_size; ++k) {
        std::vector<int> chosen;
        if (dominate_search(g, 0, k, witness ? &chosen : nullptr)) {
            if (witness) {
                std::vector<Cell> cells;
                for (int v : chosen)
                    cells.push_back({v % g.n + 1, v / g.n + 1});
                *witness = Pattern(spec, std::move(cells));
            }
            return k;
        }
    }
    throw infeasible_error("no dominating set within the subset-size limit");
}

int brute_min_waste(const SegmentConfig& config, int n,
                    const OracleLimit& limit, Pattern* witness) {
    RowLayout lay = config.layout();
    if (lay.height * n > limit.max_vertices)
        throw infeasible_error("padded instance too large for the brute oracle");
    int cell_count = config.rows * n;
    if (cell_count > 24)
        throw infeasible_error("too many segment cells for exhaustive search");

    CylinderSpec seg_spec = CylinderSpec::segment_dims(n, config.rows);
    int best = -1;
    std::vector<Cell> best_cells;
    for (uint32_t bits = 0; bits < (1u << cell_count); ++bits) {
        std::vector<Cell> cells;
        for (int i = 0; i < cell_count; ++i)
            if (bits & (1u << i)) cells.push_back({i % n + 1, i / n + 1});
        Pattern seg(seg_spec, cells);
        Pattern padded = embed_in_padded(config, n, seg);
        if (!almost_dominates(config, padded)) continue;
        int w = wasted_domination(padded.spec(), padded).waste;
        if (best < 0 || w < best) {
            best = w;
            best_cells = cells;
        }
    }
    if (best < 0)
        throw infeasible_error("no almost-dominating subset found"); // cannot happen
    if (witness) *witness = Pattern(seg_spec, best_cells);
    return best;
}

} // namespace cyldom
