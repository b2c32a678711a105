#pragma once

// Graph model for the cylinder C_n x P_m: an n-cycle of columns, each a path
// of m rows. Vertices are addressed 1-based as (col, row), col cyclic.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cyldom/errors.hpp"

namespace cyldom {

struct CylinderSpec {
    int n = 0; // cycle length (columns)
    int m = 0; // path length (rows)

    CylinderSpec() = default;
    CylinderSpec(int n_, int m_) : n(n_), m(m_) {
        if (n < 3 || m < 2)
            throw input_error("cylinder requires n >= 3 and m >= 2");
    }

    // Segment grids may be a single row tall; full cylinders never are.
    static CylinderSpec segment_dims(int n, int rows) {
        if (n < 3 || rows < 1)
            throw input_error("segment grid requires n >= 3 and rows >= 1");
        CylinderSpec s;
        s.n = n;
        s.m = rows;
        return s;
    }

    int vertex_count() const { return n * m; }
    bool in_bounds(int col, int row) const {
        return col >= 1 && col <= n && row >= 1 && row <= m;
    }
    bool operator==(const CylinderSpec&) const = default;
};

struct Cell {
    int col = 0;
    int row = 0;
    auto operator<=>(const Cell&) const = default;
};

// A set of chosen vertices on a cylinder (or on a rows x n segment grid).
// Cells are kept sorted and unique. `star` optionally marks one member as
// the extra vertex of an assembly; it is always also present in cells.
class Pattern {
public:
    Pattern() = default;
    Pattern(CylinderSpec spec, std::vector<Cell> cells,
            std::optional<Cell> star = std::nullopt);

    const CylinderSpec& spec() const { return spec_; }
    const std::vector<Cell>& cells() const { return cells_; }
    const std::optional<Cell>& star() const { return star_; }
    int size() const { return static_cast<int>(cells_.size()); }
    bool contains(Cell c) const;

    bool operator==(const Pattern&) const = default;

private:
    CylinderSpec spec_{3, 2};
    std::vector<Cell> cells_;
    std::optional<Cell> star_;
};

struct WasteReport {
    int size = 0;      // |S|
    int dominated = 0; // |N[S]|
    int waste = 0;     // 5|S| - |N[S]|
};

// Open neighborhood of a vertex: row +-1 clipped at the path ends, column
// +-1 modulo n.
std::vector<Cell> neighbors(const CylinderSpec& spec, Cell v);

// Closed-neighborhood membership mask, indexed [row-1][col-1].
std::vector<std::vector<uint8_t>> dominated_mask(const CylinderSpec& spec,
                                                 const Pattern& s);

bool is_dominating(const CylinderSpec& spec, const Pattern& s);
WasteReport wasted_domination(const CylinderSpec& spec, const Pattern& s);
std::vector<Cell> undominated(const CylinderSpec& spec, const Pattern& s);

// Rotate every cell by `shift` columns around the cycle.
Pattern rotate(const Pattern& s, int shift);

// Pattern text format: one line per row (row 1 first), length n, characters
// '.' (not in S), 'O' (in S), '*' (extra vertex, also in S). Lines starting
// with '#' are comments and are ignored on parse.
std::string format_pattern(const Pattern& s);
Pattern parse_pattern(const std::string& text);
Pattern parse_pattern_stream(std::istream& in);

} // namespace cyldom
