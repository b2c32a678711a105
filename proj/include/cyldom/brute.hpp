#pragma once

// Exhaustive-search ground truth for small instances. Not an engine: the
// point is independence from the DP code paths it validates.

#include <optional>

#include "cyldom/cylinder.hpp"
#include "cyldom/segment.hpp"

namespace cyldom {

struct OracleLimit {
    int max_vertices = 24;
    std::optional<int> max_subset_size;
};

// Exact gamma(C_n x P_m) by iterative deepening on subset size, branching on
// the closed neighborhood of the first undominated vertex. Deterministic:
// ties resolve to the lexicographically first witness.
int brute_gamma(const CylinderSpec& spec, const OracleLimit& limit = {},
                Pattern* witness = nullptr);

// Exact minimum w(A) over almost-dominating segment subsets, by exhaustive
// enumeration of subsets of the segment cells, measured in the padded graph.
int brute_min_waste(const SegmentConfig& config, int n,
                    const OracleLimit& limit = {}, Pattern* witness = nullptr);

} // namespace cyldom
