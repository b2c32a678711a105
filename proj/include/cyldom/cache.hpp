#pragma once

// On-disk result cache. One series record per (kind, rows) holding the value
// and the best start states for every computed cycle length, plus separate
// witness files per (kind, rows, n). Writes are atomic (tmp + rename) so
// concurrent processes sharing a cache directory never see torn files.

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "cyldom/segment.hpp"

namespace cyldom {

void write_file_atomic(const std::filesystem::path& path,
                       const std::string& content);
std::optional<std::string> read_file(const std::filesystem::path& path);

struct CachedSeries {
    SegmentConfig config;
    int start_n = 3;
    std::vector<int> values;
    std::vector<std::vector<uint32_t>> optimal_starts; // engine state ids

    int n_max() const { return start_n + static_cast<int>(values.size()) - 1; }
};

class ResultCache {
public:
    explicit ResultCache(std::filesystem::path dir);

    std::optional<CachedSeries> load_series(const SegmentConfig& config) const;
    void store_series(const CachedSeries& series) const;

    std::optional<std::string> load_witness_text(const SegmentConfig& config,
                                                 int n) const;
    void store_witness_text(const SegmentConfig& config, int n,
                            const std::string& text) const;

    std::filesystem::path series_path(const SegmentConfig& config) const;
    std::filesystem::path witness_path(const SegmentConfig& config, int n) const;
    const std::filesystem::path& dir() const { return dir_; }

private:
    std::filesystem::path dir_;
};

} // namespace cyldom
