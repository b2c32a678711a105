#include <doctest.h>

#include <random>

#include "cyldom/cylinder.hpp"

using namespace cyldom;

namespace {

Pattern random_pattern(const CylinderSpec& spec, std::mt19937& rng,
                       double density) {
    std::vector<Cell> cells;
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    for (int row = 1; row <= spec.m; ++row)
        for (int col = 1; col <= spec.n; ++col)
            if (coin(rng) < density) cells.push_back({col, row});
    return Pattern(spec, cells);
}

} // namespace

TEST_CASE("spec invariants") {
    CHECK_THROWS_AS(CylinderSpec(2, 5), Error);
    CHECK_THROWS_AS(CylinderSpec(5, 1), Error);
    CHECK_NOTHROW(CylinderSpec(3, 2));
    CHECK_NOTHROW(CylinderSpec::segment_dims(5, 1));
}

TEST_CASE("neighbors: interior vertex has degree 4") {
    CylinderSpec spec(5, 3);
    auto nb = neighbors(spec, {2, 2});
    std::vector<Cell> expect = {{1, 2}, {2, 1}, {2, 3}, {3, 2}};
    CHECK(nb == expect);
}

TEST_CASE("neighbors: boundary row vertex has degree 3") {
    CylinderSpec spec(5, 3);
    CHECK(neighbors(spec, {2, 1}).size() == 3);
    CHECK(neighbors(spec, {2, 3}).size() == 3);
}

TEST_CASE("neighbors: cyclic wraparound") {
    CylinderSpec spec(3, 2);
    auto nb = neighbors(spec, {1, 1});
    std::vector<Cell> expect = {{1, 2}, {2, 1}, {3, 1}};
    CHECK(nb == expect);
}

TEST_CASE("neighbors: out of bounds is an input error") {
    CylinderSpec spec(5, 3);
    CHECK_THROWS_AS(neighbors(spec, {0, 1}), Error);
    CHECK_THROWS_AS(neighbors(spec, {1, 4}), Error);
}

TEST_CASE("degree bounds hold everywhere") {
    for (int n = 3; n <= 6; ++n) {
        for (int m = 2; m <= 5; ++m) {
            CylinderSpec spec(n, m);
            for (int row = 1; row <= m; ++row) {
                for (int col = 1; col <= n; ++col) {
                    size_t deg = neighbors(spec, {col, row}).size();
                    if (row == 1 || row == m)
                        CHECK(deg == 3);
                    else
                        CHECK(deg == 4);
                }
            }
        }
    }
}

TEST_CASE("is_dominating basics") {
    CylinderSpec spec(3, 2);
    std::vector<Cell> all;
    for (int row = 1; row <= 2; ++row)
        for (int col = 1; col <= 3; ++col) all.push_back({col, row});
    CHECK(is_dominating(spec, Pattern(spec, all)));
    CHECK_FALSE(is_dominating(spec, Pattern(spec, {})));
    CHECK(is_dominating(spec, Pattern(spec, {{1, 1}, {2, 2}})));
}

TEST_CASE("wasted_domination examples") {
    CylinderSpec spec(3, 2);
    CHECK(wasted_domination(spec, Pattern(spec, {})).waste == 0);
    std::vector<Cell> all;
    for (int row = 1; row <= 2; ++row)
        for (int col = 1; col <= 3; ++col) all.push_back({col, row});
    CHECK(wasted_domination(spec, Pattern(spec, all)).waste == 24);
    auto rep = wasted_domination(spec, Pattern(spec, {{1, 1}, {2, 2}}));
    CHECK(rep.dominated == 6);
    CHECK(rep.waste == 4);
}

TEST_CASE("undominated examples") {
    CylinderSpec spec(3, 2);
    std::vector<Cell> all;
    for (int row = 1; row <= 2; ++row)
        for (int col = 1; col <= 3; ++col) all.push_back({col, row});
    CHECK(undominated(spec, Pattern(spec, all)).empty());
    CHECK(undominated(spec, Pattern(spec, {})).size() == 6);
    auto rest = undominated(spec, Pattern(spec, {{1, 1}}));
    std::vector<Cell> expect = {{2, 2}, {3, 2}};
    CHECK(rest == expect);
}

TEST_CASE("rotate is a group action preserving waste and domination") {
    std::mt19937 rng(7);
    CylinderSpec spec(7, 4);
    for (int trial = 0; trial < 30; ++trial) {
        Pattern p = random_pattern(spec, rng, 0.3);
        CHECK(rotate(p, 0) == p);
        CHECK(rotate(p, spec.n) == p);
        int a = static_cast<int>(rng() % 20) - 10;
        int b = static_cast<int>(rng() % 20) - 10;
        CHECK(rotate(rotate(p, a), b) == rotate(p, a + b));
        CHECK(wasted_domination(spec, rotate(p, a)).waste ==
              wasted_domination(spec, p).waste);
        CHECK(is_dominating(spec, rotate(p, a)) == is_dominating(spec, p));
    }
}

TEST_CASE("coverage bounds: |N[S]| <= 5|S| and w >= max(0, 5|S|-nm)") {
    std::mt19937 rng(11);
    CylinderSpec spec(6, 5);
    for (int trial = 0; trial < 50; ++trial) {
        Pattern p = random_pattern(spec, rng, 0.25);
        auto rep = wasted_domination(spec, p);
        CHECK(rep.dominated <= 5 * rep.size);
        CHECK(rep.dominated <= spec.vertex_count());
        CHECK(rep.waste >= 0);
        CHECK(rep.waste >= 5 * rep.size - spec.vertex_count());
        CHECK((rep.dominated == spec.vertex_count()) == is_dominating(spec, p));
    }
}

TEST_CASE("pattern text round-trip") {
    std::mt19937 rng(3);
    CylinderSpec spec(8, 5);
    for (int trial = 0; trial < 20; ++trial) {
        Pattern p = random_pattern(spec, rng, 0.3);
        CHECK(parse_pattern(format_pattern(p)) == p);
    }
}

TEST_CASE("pattern text format details") {
    Pattern p = parse_pattern(".O.\n*..\n");
    CHECK(p.spec().n == 3);
    CHECK(p.spec().m == 2);
    CHECK(p.size() == 2);
    REQUIRE(p.star().has_value());
    CHECK(*p.star() == Cell{1, 2});
    CHECK(format_pattern(p) == ".O.\n*..\n");

    CHECK_THROWS_AS(parse_pattern(".O.\n...."), Error); // ragged
    CHECK_THROWS_AS(parse_pattern(".X.\n..."), Error);  // bad character
    // comment lines are ignored
    CHECK(parse_pattern("#note\n.O.\n...\n").size() == 1);
}

TEST_CASE("partition subadditivity on random dominating sets") {
    // w(S) >= sum_i w(S_i) for any split of the rows into consecutive bands,
    // with each S_i measured inside the full cylinder.
    std::mt19937 rng(23);
    CylinderSpec spec(6, 6);
    int done = 0;
    while (done < 40) {
        Pattern p = random_pattern(spec, rng, 0.35);
        if (!is_dominating(spec, p)) continue;
        ++done;
        int cut = 1 + static_cast<int>(rng() % (spec.m - 1));
        std::vector<Cell> top, bottom;
        for (const Cell& c : p.cells())
            (c.row <= cut ? top : bottom).push_back(c);
        int w = wasted_domination(spec, p).waste;
        int w1 = wasted_domination(spec, Pattern(spec, top)).waste;
        int w2 = wasted_domination(spec, Pattern(spec, bottom)).waste;
        CHECK(w >= w1 + w2);
    }
}
