#include <doctest.h>

#include <filesystem>

#include "cyldom/tiles.hpp"

using namespace cyldom;

namespace {

// A hand-made "tile" over 2 rows whose window duplication is easy to see.
Tile toy_tile() {
    Tile t;
    t.kind = SegmentKind::Interior;
    t.rows = 2;
    t.base_n = 32;
    std::vector<Cell> cells;
    for (int col = 1; col <= 32; col += 2) cells.push_back({col, 1});
    t.cells = Pattern(CylinderSpec::segment_dims(32, 2), cells);
    t.window_start = 3;
    t.window_cells = 3; // columns 3,5,7
    t.contribution = t.cells.size();
    return t;
}

} // namespace

TEST_CASE("expand_tile duplicates the window in place") {
    Tile t = toy_tile();
    CHECK(expand_tile(t, 32) == t.cells);
    Pattern e = expand_tile(t, 37);
    CHECK(e.spec().n == 37);
    CHECK(e.size() == t.contribution + t.window_cells);
    // pre-window columns unchanged, window repeated, tail shifted by 5
    CHECK(e.contains({1, 1}));
    CHECK(e.contains({3, 1}));
    CHECK(e.contains({8, 1}));  // first window copy
    CHECK(e.contains({14, 1})); // tail column 9 shifted
    CHECK(expand_tile(t, 42).size() == t.contribution + 2 * t.window_cells);
    CHECK_THROWS_AS(expand_tile(t, 33), Error);
    CHECK_THROWS_AS(expand_tile(t, 27), Error);
}

TEST_CASE("plan_upper follows the published partitions") {
    auto rows_of = [](const PartitionPlan& p) {
        std::vector<int> out;
        for (const auto& s : p.segments) out.push_back(s.rows);
        return out;
    };
    CHECK(rows_of(plan_upper(23)) == std::vector<int>{11, 12});
    CHECK(rows_of(plan_upper(24)) == std::vector<int>{12, 12});
    CHECK(rows_of(plan_upper(25)) == std::vector<int>{12, 13});
    CHECK(rows_of(plan_upper(26)) == std::vector<int>{10, 6, 10});
    CHECK(rows_of(plan_upper(27)) == std::vector<int>{11, 6, 10});
    CHECK(rows_of(plan_upper(33)) == std::vector<int>{11, 6, 6, 10});
    CHECK(rows_of(plan_upper(34)) == std::vector<int>{11, 6, 6, 11});
    CHECK(rows_of(plan_upper(37)) == std::vector<int>{11, 6, 10, 10});
    CHECK(rows_of(plan_upper(38)) == std::vector<int>{11, 6, 10, 11});
    CHECK(rows_of(plan_upper(42)) == std::vector<int>{11, 10, 10, 11});

    CHECK_FALSE(plan_upper(26).extra_vertex);
    CHECK_FALSE(plan_upper(27).extra_vertex);
    CHECK_FALSE(plan_upper(24).extra_vertex);
    CHECK(plan_upper(28).extra_vertex);
    CHECK(plan_upper(34).extra_vertex);
    CHECK(plan_upper(38).extra_vertex);

    for (int m = 23; m <= 120; ++m) {
        CAPTURE(m);
        CHECK(plan_upper(m).total_rows() == m);
        for (const auto& s : plan_upper(m).segments)
            if (s.kind == SegmentKind::Interior)
                CHECK((s.rows == 6 || s.rows == 8 || s.rows == 10));
    }
}

TEST_CASE("paper contributions") {
    CHECK(*paper_contribution(SegmentKind::Edge, 11, 32) == 77);
    CHECK(*paper_contribution(SegmentKind::Edge, 10, 32) == 71);
    CHECK(*paper_contribution(SegmentKind::Interior, 10, 32) == 65);
    CHECK(*paper_contribution(SegmentKind::Interior, 6, 32) == 39);
    CHECK(*paper_contribution(SegmentKind::Interior, 6, 37) == 45);
    CHECK_FALSE(paper_contribution(SegmentKind::Interior, 8, 32).has_value());
}

TEST_CASE("upper_bound_count sums tile contributions") {
    TileCatalog catalog;
    Tile e11 = toy_tile();
    e11.kind = SegmentKind::Edge;
    e11.rows = 11;
    e11.contribution = 77;
    e11.window_cells = 12;
    catalog.add(e11);
    Tile i6 = toy_tile();
    i6.kind = SegmentKind::Interior;
    i6.rows = 6;
    i6.contribution = 39;
    i6.window_cells = 6;
    catalog.add(i6);

    PartitionPlan plan;
    plan.purpose = PlanPurpose::Upper;
    plan.segments = {{SegmentKind::Edge, 11},
                     {SegmentKind::Interior, 6},
                     {SegmentKind::Edge, 11}};
    plan.extra_vertex = true;
    CHECK(upper_bound_count(plan, 32, catalog) == 77 + 39 + 77 + 1);
    CHECK(upper_bound_count(plan, 37, catalog) == 89 + 45 + 89 + 1);
}

TEST_CASE("catalog save/load round-trip") {
    TileCatalog catalog;
    catalog.add(toy_tile());
    auto dir = std::filesystem::temp_directory_path() / "cyldom-test-catalog";
    std::filesystem::remove_all(dir);
    catalog.save(dir);
    TileCatalog back = TileCatalog::load(dir);
    REQUIRE(back.tiles().size() == 1);
    CHECK(back.tiles()[0].cells == catalog.tiles()[0].cells);
    CHECK(back.tiles()[0].window_start == catalog.tiles()[0].window_start);
    CHECK(back.tiles()[0].window_cells == catalog.tiles()[0].window_cells);
    CHECK(back.tiles()[0].contribution == catalog.tiles()[0].contribution);
    std::filesystem::remove_all(dir);
}
