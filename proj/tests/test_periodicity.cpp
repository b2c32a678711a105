#include <doctest.h>

#include "cyldom/periodicity.hpp"

using namespace cyldom;

namespace {

WasteSeries series_from(std::vector<int> values) {
    WasteSeries s;
    s.config = SegmentConfig(SegmentKind::Interior, 5);
    s.start_n = 3;
    s.values = std::move(values);
    return s;
}

} // namespace

TEST_CASE("linear sequence detects p=1, q=1") {
    std::vector<int> v;
    for (int n = 3; n <= 80; ++n) v.push_back(n);
    auto cert = detect(series_from(v));
    REQUIRE(cert.has_value());
    CHECK(cert->p == 1);
    CHECK(cert->q == 1);
    CHECK(cert->threshold == 4);
}

TEST_CASE("constant sequence detects p=1, q=0") {
    std::vector<int> v(80, 7);
    auto cert = detect(series_from(v));
    REQUIRE(cert.has_value());
    CHECK(cert->p == 1);
    CHECK(cert->q == 0);
}

TEST_CASE("residue-5 table detects p=5, q=0") {
    // the interior rows-10 constants keyed by n mod 5
    const int table[5] = {0, 6, 5, 9, 6};
    std::vector<int> v;
    for (int n = 3; n <= 80; ++n) v.push_back(table[n % 5]);
    auto cert = detect(series_from(v));
    REQUIRE(cert.has_value());
    CHECK(cert->p == 5);
    CHECK(cert->q == 0);
    auto fits = residue_fits(series_from(v), *cert);
    for (const auto& f : fits) {
        CHECK(f.linear);
        CHECK(f.a_num == 0);
        CHECK(f.b_num == table[f.residue] * f.b_den);
    }
}

TEST_CASE("noise before the tail is tolerated, threshold reported") {
    std::vector<int> v;
    for (int n = 3; n <= 80; ++n) v.push_back(n <= 12 ? 99 : n + 1);
    auto cert = detect(series_from(v));
    REQUIRE(cert.has_value());
    CHECK(cert->p == 1);
    CHECK(cert->q == 1);
    CHECK(cert->threshold == 14);
}

TEST_CASE("no periodicity within p_max yields nullopt") {
    std::vector<int> v;
    int x = 1;
    for (int n = 3; n <= 80; ++n) {
        x = x * 1103515245 % 1000003;
        v.push_back(x % 97);
    }
    CHECK_FALSE(detect(series_from(v)).has_value());
}

TEST_CASE("insufficient data is an error") {
    std::vector<int> v(10, 1);
    CHECK_THROWS_AS(detect(series_from(v)), Error);
}

TEST_CASE("extrapolation: inside data equals stored, beyond follows recurrence") {
    std::vector<int> v;
    for (int n = 3; n <= 62; ++n) v.push_back(2 * n + 3);
    auto s = series_from(v);
    auto cert = detect(s);
    REQUIRE(cert.has_value());
    CHECK(extrapolate(*cert, s, 40) == 83);
    CHECK(extrapolate(*cert, s, 70) == 143);
    CHECK(extrapolate(*cert, s, 101) == 205);
    CHECK_THROWS_AS(extrapolate(*cert, s, cert->threshold - 1), Error);
}

TEST_CASE("certificate serialization round-trip") {
    PeriodicityCert cert{5, 3, 17, 46};
    auto parsed = parse_cert(format_cert(cert));
    REQUIRE(parsed.has_value());
    CHECK(parsed->p == 5);
    CHECK(parsed->q == 3);
    CHECK(parsed->threshold == 17);
    CHECK(parsed->window == 46);
}
