#include <doctest.h>

#include <filesystem>

#include "cyldom/cache.hpp"
#include "cyldom/engine.hpp"

using namespace cyldom;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        path = std::filesystem::temp_directory_path() / "cyldom-test-cache";
        std::filesystem::remove_all(path);
    }
    ~TempDir() { std::filesystem::remove_all(path); }
};

} // namespace

TEST_CASE("atomic write and read back") {
    TempDir tmp;
    auto p = tmp.path / "x" / "y.txt";
    write_file_atomic(p, "hello\n");
    auto text = read_file(p);
    REQUIRE(text.has_value());
    CHECK(*text == "hello\n");
    CHECK_FALSE(read_file(tmp.path / "missing").has_value());
}

TEST_CASE("series cache round-trip") {
    TempDir tmp;
    ResultCache cache(tmp.path);
    CachedSeries s;
    s.config = SegmentConfig(SegmentKind::Edge, 4);
    s.start_n = 3;
    s.values = {7, 8, 9};
    s.optimal_starts = {{1, 2}, {3}, {}};
    cache.store_series(s);
    auto back = cache.load_series(s.config);
    REQUIRE(back.has_value());
    CHECK(back->values == s.values);
    CHECK(back->optimal_starts == s.optimal_starts);
    CHECK_FALSE(cache.load_series(SegmentConfig(SegmentKind::Edge, 5)).has_value());
}

TEST_CASE("engine reuses the cache and hits are identical") {
    TempDir tmp;
    EngineOptions opts;
    opts.threads = 2;
    opts.cache_dir = tmp.path;
    SegmentConfig cfg(SegmentKind::Interior, 3);

    auto first = waste_series(cfg, 12, opts);
    REQUIRE(std::filesystem::exists(ResultCache(tmp.path).series_path(cfg)));
    auto second = waste_series(cfg, 12, opts); // served from cache
    CHECK(first.values == second.values);

    EngineOptions fresh;
    fresh.threads = 2;
    auto recomputed = waste_series(cfg, 12, fresh);
    CHECK(first.values == recomputed.values);

    // a shorter read out of a longer cache is a prefix
    auto prefix = waste_series(cfg, 8, opts);
    CHECK(std::vector<int>(first.values.begin(), first.values.begin() + 6) ==
          prefix.values);

    // witnesses are cached byte-identically
    auto [v1, w1] = min_waste_cycle(cfg, 10, opts);
    auto [v2, w2] = min_waste_cycle(cfg, 10, opts);
    CHECK(v1 == v2);
    CHECK(w1 == w2);
}
