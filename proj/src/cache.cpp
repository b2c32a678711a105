#include "cyldom/cache.hpp"

#include <fstream>
#include <sstream>

namespace cyldom {

namespace fs = std::filesystem;

void write_file_atomic(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path());
    fs::path tmp = path;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw input_error("cannot write " + tmp.string());
        out << content;
    }
    fs::rename(tmp, path);
}

std::optional<std::string> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

ResultCache::ResultCache(fs::path dir) : dir_(std::move(dir)) {}

namespace {
std::string config_tag(const SegmentConfig& config) {
    std::string tag = to_string(config.kind) + "_r" + std::to_string(config.rows);
    if (config.outer_required) tag += "_strictouter";
    return tag;
}
} // namespace

fs::path ResultCache::series_path(const SegmentConfig& config) const {
    return dir_ / ("waste_" + config_tag(config) + ".series");
}

fs::path ResultCache::witness_path(const SegmentConfig& config, int n) const {
    return dir_ / ("witness_" + config_tag(config) + "_n" + std::to_string(n) +
                   ".txt");
}

std::optional<CachedSeries> ResultCache::load_series(
    const SegmentConfig& config) const {
    auto text = read_file(series_path(config));
    if (!text) return std::nullopt;
    std::istringstream in(*text);
    std::string magic, version, kind;
    int rows = 0, strict = 0, start = 0, count = 0;
    in >> magic >> version >> kind >> rows >> strict >> start >> count;
    if (magic != "cyldom-series" || version != "v1")
        throw input_error("unrecognized cache file " +
                          series_path(config).string());
    if (kind != to_string(config.kind) || rows != config.rows ||
        strict != (config.outer_required ? 1 : 0))
        throw input_error("cache file does not match its name");
    CachedSeries out;
    out.config = config;
    out.start_n = start;
    out.values.resize(static_cast<size_t>(count));
    out.optimal_starts.resize(static_cast<size_t>(count));
    for (int i = 0; i < count; ++i) {
        int n = 0, value = 0, nstarts = 0;
        in >> n >> value >> nstarts;
        if (!in || n != start + i)
            throw input_error("corrupt cache record in " +
                              series_path(config).string());
        out.values[i] = value;
        out.optimal_starts[i].resize(static_cast<size_t>(nstarts));
        for (int j = 0; j < nstarts; ++j) in >> out.optimal_starts[i][j];
    }
    if (!in) throw input_error("corrupt cache file " + series_path(config).string());
    return out;
}

void ResultCache::store_series(const CachedSeries& series) const {
    std::ostringstream out;
    out << "cyldom-series v1 " << to_string(series.config.kind) << ' '
        << series.config.rows << ' ' << (series.config.outer_required ? 1 : 0)
        << ' ' << series.start_n << ' ' << series.values.size() << '\n';
    for (size_t i = 0; i < series.values.size(); ++i) {
        out << (series.start_n + static_cast<int>(i)) << ' ' << series.values[i]
            << ' ' << series.optimal_starts[i].size();
        for (uint32_t s : series.optimal_starts[i]) out << ' ' << s;
        out << '\n';
    }
    write_file_atomic(series_path(series.config), out.str());
}

std::optional<std::string> ResultCache::load_witness_text(
    const SegmentConfig& config, int n) const {
    return read_file(witness_path(config, n));
}

void ResultCache::store_witness_text(const SegmentConfig& config, int n,
                                     const std::string& text) const {
    write_file_atomic(witness_path(config, n), text);
}

} // namespace cyldom
