#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace homstab {

/// One output cell of an experiment; i and n are optional coordinates
/// (homological degree and number of points), the value is a dimension or a
/// group/verdict string.
struct ResultRecord {
    std::optional<int> i;
    std::optional<int> n;
    std::variant<std::int64_t, std::string> value;

    bool operator==(const ResultRecord&) const = default;
};

struct ExperimentResult {
    std::string experiment;
    std::map<std::string, std::string> params;
    std::vector<ResultRecord> results;
    bool pass = true;
    std::int64_t wall_ms = 0;

    bool operator==(const ExperimentResult&) const = default;
};

std::string to_json(const ExperimentResult& r);
ExperimentResult experiment_from_json(const std::string& text);
std::string to_csv(const ExperimentResult& r);
std::string to_table(const ExperimentResult& r);

/// Result cache, keyed by experiment name and canonical parameters.
struct CacheConfig {
    std::filesystem::path dir;
    bool enabled = true;
};

/// HOMSTAB_CACHE_DIR when set, otherwise ~/.cache/homstab, otherwise a local
/// .homstab-cache directory.
std::filesystem::path default_cache_dir();

std::string cache_file_name(const std::string& experiment, const std::map<std::string, std::string>& params);

std::optional<ExperimentResult> cache_load(const CacheConfig& cfg, const std::string& experiment,
                                           const std::map<std::string, std::string>& params);

void cache_store(const CacheConfig& cfg, const ExperimentResult& result);

}  // namespace homstab
