#include "cyldom/cylinder.hpp"

#include <algorithm>
#include <sstream>

namespace cyldom {

Pattern::Pattern(CylinderSpec spec, std::vector<Cell> cells,
                 std::optional<Cell> star)
    : spec_(spec), cells_(std::move(cells)), star_(star) {
    for (const Cell& c : cells_)
        if (!spec_.in_bounds(c.col, c.row))
            throw input_error("pattern cell (" + std::to_string(c.col) + "," +
                              std::to_string(c.row) + ") out of bounds");
    std::sort(cells_.begin(), cells_.end());
    cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
    if (star_) {
        if (!spec_.in_bounds(star_->col, star_->row))
            throw input_error("star cell out of bounds");
        if (!contains(*star_))
            throw input_error("star cell must be a member of the pattern");
    }
}

bool Pattern::contains(Cell c) const {
    return std::binary_search(cells_.begin(), cells_.end(), c);
}

std::vector<Cell> neighbors(const CylinderSpec& spec, Cell v) {
    if (!spec.in_bounds(v.col, v.row))
        throw input_error("vertex out of bounds");
    std::vector<Cell> out;
    out.reserve(4);
    int left = v.col == 1 ? spec.n : v.col - 1;
    int right = v.col == spec.n ? 1 : v.col + 1;
    out.push_back({left, v.row});
    out.push_back({right, v.row});
    if (v.row > 1) out.push_back({v.col, v.row - 1});
    if (v.row < spec.m) out.push_back({v.col, v.row + 1});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<uint8_t>> dominated_mask(const CylinderSpec& spec,
                                                 const Pattern& s) {
    std::vector<std::vector<uint8_t>> dom(spec.m, std::vector<uint8_t>(spec.n, 0));
    for (const Cell& c : s.cells()) {
        if (!spec.in_bounds(c.col, c.row))
            throw input_error("pattern cell out of bounds for this spec");
        int col0 = c.col - 1;
        int row0 = c.row - 1;
        dom[row0][col0] = 1;
        dom[row0][(col0 + 1) % spec.n] = 1;
        dom[row0][(col0 + spec.n - 1) % spec.n] = 1;
        if (row0 > 0) dom[row0 - 1][col0] = 1;
        if (row0 + 1 < spec.m) dom[row0 + 1][col0] = 1;
    }
    return dom;
}

bool is_dominating(const CylinderSpec& spec, const Pattern& s) {
    auto dom = dominated_mask(spec, s);
    for (const auto& row : dom)
        for (uint8_t d : row)
            if (!d) return false;
    return true;
}

WasteReport wasted_domination(const CylinderSpec& spec, const Pattern& s) {
    auto dom = dominated_mask(spec, s);
    int count = 0;
    for (const auto& row : dom)
        for (uint8_t d : row) count += d;
    WasteReport r;
    r.size = s.size();
    r.dominated = count;
    r.waste = 5 * r.size - r.dominated;
    return r;
}

std::vector<Cell> undominated(const CylinderSpec& spec, const Pattern& s) {
    auto dom = dominated_mask(spec, s);
    std::vector<Cell> out;
    for (int row = 1; row <= spec.m; ++row)
        for (int col = 1; col <= spec.n; ++col)
            if (!dom[row - 1][col - 1]) out.push_back({col, row});
    return out;
}

Pattern rotate(const Pattern& s, int shift) {
    int n = s.spec().n;
    auto wrap = [&](int col) {
        int c = (col - 1 + shift) % n;
        if (c < 0) c += n;
        return c + 1;
    };
    std::vector<Cell> cells;
    cells.reserve(s.cells().size());
    for (const Cell& c : s.cells()) cells.push_back({wrap(c.col), c.row});
    std::optional<Cell> star;
    if (s.star()) star = Cell{wrap(s.star()->col), s.star()->row};
    return Pattern(s.spec(), std::move(cells), star);
}

std::string format_pattern(const Pattern& s) {
    const CylinderSpec& spec = s.spec();
    std::string out;
    out.reserve(static_cast<size_t>(spec.m) * (spec.n + 1));
    for (int row = 1; row <= spec.m; ++row) {
        for (int col = 1; col <= spec.n; ++col) {
            Cell c{col, row};
            char ch = '.';
            if (s.contains(c)) ch = (s.star() && *s.star() == c) ? '*' : 'O';
            out.push_back(ch);
        }
        out.push_back('\n');
    }
    return out;
}

Pattern parse_pattern_stream(std::istream& in) {
    std::vector<std::string> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        rows.push_back(line);
    }
    if (rows.empty()) throw input_error("pattern needs at least 1 row");
    size_t n = rows[0].size();
    if (n < 3) throw input_error("pattern needs at least 3 columns");
    std::vector<Cell> cells;
    std::optional<Cell> star;
    for (size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != n)
            throw input_error("ragged pattern line " + std::to_string(r + 1));
        for (size_t c = 0; c < n; ++c) {
            char ch = rows[r][c];
            Cell cell{static_cast<int>(c) + 1, static_cast<int>(r) + 1};
            if (ch == 'O') {
                cells.push_back(cell);
            } else if (ch == '*') {
                if (star) throw input_error("multiple star cells in pattern");
                star = cell;
                cells.push_back(cell);
            } else if (ch != '.') {
                throw input_error(std::string("bad pattern character '") + ch + "'");
            }
        }
    }
    CylinderSpec spec = CylinderSpec::segment_dims(static_cast<int>(n),
                                                   static_cast<int>(rows.size()));
    return Pattern(spec, std::move(cells), star);
}

Pattern parse_pattern(const std::string& text) {
    std::istringstream in(text);
    return parse_pattern_stream(in);
}

} // namespace cyldom
