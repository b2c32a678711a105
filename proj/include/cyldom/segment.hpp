#pragma once

// Segment subgraphs of a partitioned cylinder. An interior segment of r rows
// is measured inside C_n x P_{r+2} with one padding row above and below; an
// edge segment of r rows is measured inside C_n x P_{r+1} with one padding
// row on its interior-facing side. Padding rows never hold chosen vertices
// but count toward |N[A]| when dominated.

#include <string>
#include <vector>

#include "cyldom/cylinder.hpp"

namespace cyldom {

enum class SegmentKind { Edge, Interior };

enum class RowClass {
    Required, // must end dominated; may hold chosen vertices
    Relaxed,  // may end undominated; may hold chosen vertices
    Padding,  // may end undominated; never holds chosen vertices
};

std::string to_string(SegmentKind k);
SegmentKind segment_kind_from_string(const std::string& s);

struct RowLayout {
    int height = 0;                // rows + padding
    int seg_top = 0;               // 0-based padded row index of segment row 1
    std::vector<RowClass> classes; // one per padded row
};

struct SegmentConfig {
    SegmentKind kind = SegmentKind::Interior;
    int rows = 0;
    // Almost-domination allows undominated vertices on the top or bottom
    // edges, so by default an edge segment's outer boundary row is relaxed
    // like its interior-facing row; that is the reading under which the
    // published constants (edge rows 10 -> n, etc.) reproduce. Tile
    // derivation sets outer_required so edge tiles always dominate the true
    // cylinder boundary, at the cost of one extra unit of waste.
    bool outer_required = false;

    SegmentConfig() = default;
    SegmentConfig(SegmentKind k, int r, bool outer_req = false);

    RowLayout layout() const;
    int height() const { return rows + (kind == SegmentKind::Edge ? 1 : 2); }
    bool operator==(const SegmentConfig&) const = default;
};

// Embed a pattern over the segment's own rows (spec m == rows) into the
// padded graph at cycle length n.
Pattern embed_in_padded(const SegmentConfig& config, int n, const Pattern& seg);

// Extract the segment rows of a padded-height pattern back out.
Pattern segment_rows_of(const SegmentConfig& config, const Pattern& padded);

// True iff the padded-height pattern satisfies the row-class constraints:
// no chosen vertices in padding rows and every Required-row vertex dominated.
bool almost_dominates(const SegmentConfig& config, const Pattern& padded,
                      std::string* why = nullptr);

// w(A) of a segment pattern (spec m == rows) measured in the padded graph.
// Throws if the pattern violates the row-class constraints.
int segment_waste(const SegmentConfig& config, int n, const Pattern& seg);

} // namespace cyldom
