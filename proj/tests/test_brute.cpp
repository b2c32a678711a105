#include <doctest.h>

#include "cyldom/brute.hpp"

using namespace cyldom;

TEST_CASE("brute gamma on tiny cylinders") {
    CHECK(brute_gamma(CylinderSpec(3, 2)) == 2);
    CHECK(brute_gamma(CylinderSpec(4, 2)) == 2);
}

TEST_CASE("brute gamma floor: gamma >= ceil(nm/5)") {
    for (int n = 3; n <= 6; ++n) {
        for (int m = 2; m <= 4; ++m) {
            if (n * m > 24) continue;
            int g = brute_gamma(CylinderSpec(n, m));
            CHECK(g >= (n * m + 4) / 5);
        }
    }
}

TEST_CASE("brute gamma witness dominates") {
    for (int n = 3; n <= 5; ++n) {
        for (int m = 2; m <= 4; ++m) {
            if (n * m > 24) continue;
            CylinderSpec spec(n, m);
            Pattern witness;
            int g = brute_gamma(spec, {}, &witness);
            CHECK(witness.size() == g);
            CHECK(is_dominating(spec, witness));
        }
    }
}

TEST_CASE("brute gamma monotone in m on the tested range") {
    for (int n = 3; n <= 6; ++n) {
        int prev = 0;
        for (int m = 2; m <= 24 / n && m <= 4; ++m) {
            int g = brute_gamma(CylinderSpec(n, m));
            CHECK(g >= prev);
            prev = g;
        }
    }
}

TEST_CASE("brute gamma rejects oversized instances") {
    CHECK_THROWS_AS(brute_gamma(CylinderSpec(6, 5)), Error);
}

TEST_CASE("brute min waste feasibility and witness") {
    SegmentConfig cfg(SegmentKind::Interior, 2);
    Pattern witness;
    int w = brute_min_waste(cfg, 3, {}, &witness);
    CHECK(w >= 0);
    CHECK(segment_waste(cfg, 3, witness) == w);
}

TEST_CASE("brute min waste rejects oversized instances") {
    SegmentConfig cfg(SegmentKind::Interior, 4);
    CHECK_THROWS_AS(brute_min_waste(cfg, 5), Error);
}
