#pragma once

// Matching upper-bound construction: tiles are base-32 optimal-waste
// witnesses carrying a five-column window that can be duplicated in place,
// found by splicing a minimal 5-loop of the DP state graph into a minimal
// 27-cycle through the same state. Stitching expands tiles to the target
// cycle length, searches rotations so all seam rows end up dominated, adds
// the single extra vertex required for even m >= 28, and verifies the result.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cyldom/bounds.hpp"
#include "cyldom/cylinder.hpp"
#include "cyldom/engine.hpp"
#include "cyldom/segment.hpp"

namespace cyldom {

struct Tile {
    SegmentKind kind = SegmentKind::Interior;
    int rows = 0;
    int base_n = 32;
    Pattern cells;        // at base_n, over the segment's own rows
    int window_start = 1; // first column (1-based) of the repeat window
    int window_cells = 0; // chosen vertices inside the window
    int contribution = 0; // |cells| at base_n
    Provenance prov = Provenance::Derived;
};

class TileCatalog {
public:
    void add(Tile tile) { tiles_.push_back(std::move(tile)); }
    const std::vector<Tile>& tiles() const { return tiles_; }
    std::vector<const Tile*> find_all(SegmentKind kind, int rows) const;
    const Tile* find_first(SegmentKind kind, int rows) const;

    void save(const std::filesystem::path& dir) const;
    static TileCatalog load(const std::filesystem::path& dir);

private:
    std::vector<Tile> tiles_;
};

// Expected per-tile counts at n = 5k+2 for the tiles whose contributions the
// paper reports: edge-11 12k+5, edge-10 11k+5, interior-10 10k+5,
// interior-6 6k+3. Returns nullopt for other shapes (measured instead).
std::optional<int> paper_contribution(SegmentKind kind, int rows, int n);

// Derive tiles for the given segment shapes at base_n = 32, keeping up to
// `alternatives` stitchure candidates per shape. Throws if no repeatable
// witness emerges within the witness budget.
TileCatalog derive_tiles(const std::vector<SegmentConfig>& shapes,
                         const EngineOptions& opts, int alternatives = 6);

// Duplicate the repeat window (n - base_n)/5 times; n = 2 (mod 5), n >= 32.
Pattern expand_tile(const Tile& tile, int n);

// Row partition behind the upper bound: interior filler only from
// {6, 8, 10}, maximizing the number of 10s; even m >= 28 uses two 11-row
// edges plus the extra vertex, odd m >= 27 an 11-row and a 10-row edge,
// m = 26 two 10-row edges around a 6, m = 23..25 edge pairs only.
PartitionPlan plan_upper(int m);

// Predicted |S| for a stitched plan (including the extra vertex).
long long upper_bound_count(const PartitionPlan& plan, int n,
                            const TileCatalog& catalog);

struct AssemblySegment {
    PlanSegment seg;
    int tile_index = 0; // index into the catalog
    bool flipped = false;
    int shift = 0;
    int top_row = 0; // 1-based row of the segment's first row in the cylinder
};

struct Assembly {
    CylinderSpec spec{3, 2};
    PartitionPlan plan;
    std::vector<AssemblySegment> segments;
    std::vector<int> seam_rows; // last row of each segment except the bottom
    Pattern pattern;            // verified dominating set, star marks the extra vertex
    long long count = 0;
};

// Depth-first search over per-segment tile alternatives and rotations; seams
// are accepted when both adjacent rows end up dominated (the top seam of an
// extra-vertex plan may leave one vertex for the star to cover). The final
// assembly is re-verified with is_dominating and must hit the predicted
// count exactly.
Assembly stitch(const PartitionPlan& plan, int n, const TileCatalog& catalog);

// Assembly text format: pattern rows with '#---' comment lines at seams.
std::string format_assembly(const Assembly& assembly);

} // namespace cyldom
