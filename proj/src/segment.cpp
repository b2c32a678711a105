#include "cyldom/segment.hpp"

#include <algorithm>

namespace cyldom {

std::string to_string(SegmentKind k) {
    return k == SegmentKind::Edge ? "edge" : "interior";
}

SegmentKind segment_kind_from_string(const std::string& s) {
    if (s == "edge") return SegmentKind::Edge;
    if (s == "interior") return SegmentKind::Interior;
    throw input_error("unknown segment kind '" + s + "'");
}

SegmentConfig::SegmentConfig(SegmentKind k, int r, bool outer_req)
    : kind(k), rows(r), outer_required(outer_req) {
    if (rows < 1 || rows > 13)
        throw input_error("segment rows must be in 1..13");
}

RowLayout SegmentConfig::layout() const {
    RowLayout out;
    out.height = height();
    out.classes.assign(out.height, RowClass::Required);
    if (kind == SegmentKind::Interior) {
        out.seg_top = 1;
        out.classes.front() = RowClass::Padding;
        out.classes.back() = RowClass::Padding;
        out.classes[1] = RowClass::Relaxed;
        out.classes[out.height - 2] = RowClass::Relaxed;
    } else {
        // Edge segment: row 1 is the outer boundary, the last segment row
        // faces the interior; the single padding row sits below it.
        out.seg_top = 0;
        out.classes.back() = RowClass::Padding;
        out.classes[rows - 1] = RowClass::Relaxed;
        if (!outer_required && rows >= 2) out.classes[0] = RowClass::Relaxed;
    }
    return out;
}

Pattern embed_in_padded(const SegmentConfig& config, int n, const Pattern& seg) {
    if (seg.spec().n != n || seg.spec().m != config.rows)
        throw input_error("segment pattern has wrong dimensions");
    RowLayout lay = config.layout();
    std::vector<Cell> cells;
    cells.reserve(seg.cells().size());
    for (const Cell& c : seg.cells())
        cells.push_back({c.col, c.row + lay.seg_top});
    return Pattern(CylinderSpec(n, lay.height), std::move(cells));
}

Pattern segment_rows_of(const SegmentConfig& config, const Pattern& padded) {
    RowLayout lay = config.layout();
    if (padded.spec().m != lay.height)
        throw input_error("pattern height does not match padded layout");
    std::vector<Cell> cells;
    for (const Cell& c : padded.cells()) {
        int seg_row = c.row - lay.seg_top;
        if (seg_row < 1 || seg_row > config.rows)
            throw input_error("padded pattern has cells outside segment rows");
        cells.push_back({c.col, seg_row});
    }
    return Pattern(CylinderSpec::segment_dims(padded.spec().n, config.rows),
                   std::move(cells));
}

bool almost_dominates(const SegmentConfig& config, const Pattern& padded,
                      std::string* why) {
    RowLayout lay = config.layout();
    const CylinderSpec& spec = padded.spec();
    if (spec.m != lay.height) {
        if (why) *why = "pattern height does not match padded layout";
        return false;
    }
    for (const Cell& c : padded.cells()) {
        if (lay.classes[c.row - 1] == RowClass::Padding) {
            if (why)
                *why = "chosen vertex in padding row " + std::to_string(c.row);
            return false;
        }
    }
    auto dom = dominated_mask(spec, padded);
    for (int row = 1; row <= spec.m; ++row) {
        if (lay.classes[row - 1] != RowClass::Required) continue;
        for (int col = 1; col <= spec.n; ++col) {
            if (!dom[row - 1][col - 1]) {
                if (why)
                    *why = "required vertex (" + std::to_string(col) + "," +
                           std::to_string(row) + ") undominated";
                return false;
            }
        }
    }
    return true;
}

int segment_waste(const SegmentConfig& config, int n, const Pattern& seg) {
    Pattern padded = embed_in_padded(config, n, seg);
    std::string why;
    if (!almost_dominates(config, padded, &why))
        throw input_error("pattern does not almost-dominate the segment: " + why);
    return wasted_domination(padded.spec(), padded).waste;
}

} // namespace cyldom
