#include "homstab/experiment.hpp"

#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace homstab {

namespace {

nlohmann::json record_to_json(const ResultRecord& rec) {
    nlohmann::json j = nlohmann::json::object();
    if (rec.i) j["i"] = *rec.i;
    if (rec.n) j["n"] = *rec.n;
    if (std::holds_alternative<std::int64_t>(rec.value))
        j["value"] = std::get<std::int64_t>(rec.value);
    else
        j["value"] = std::get<std::string>(rec.value);
    return j;
}

ResultRecord record_from_json(const nlohmann::json& j) {
    ResultRecord rec;
    if (j.contains("i")) rec.i = j.at("i").get<int>();
    if (j.contains("n")) rec.n = j.at("n").get<int>();
    const auto& v = j.at("value");
    if (v.is_number_integer())
        rec.value = v.get<std::int64_t>();
    else
        rec.value = v.get<std::string>();
    return rec;
}

std::string value_to_string(const ResultRecord& rec) {
    if (std::holds_alternative<std::int64_t>(rec.value)) return std::to_string(std::get<std::int64_t>(rec.value));
    return std::get<std::string>(rec.value);
}

}  // namespace

std::string to_json(const ExperimentResult& r) {
    nlohmann::json j;
    j["experiment"] = r.experiment;
    j["params"] = nlohmann::json::object();
    for (const auto& [k, v] : r.params) j["params"][k] = v;
    j["results"] = nlohmann::json::array();
    for (const auto& rec : r.results) j["results"].push_back(record_to_json(rec));
    j["status"] = r.pass ? "pass" : "fail";
    j["wall_ms"] = r.wall_ms;
    return j.dump(2);
}

ExperimentResult experiment_from_json(const std::string& text) {
    const nlohmann::json j = nlohmann::json::parse(text);
    ExperimentResult r;
    r.experiment = j.at("experiment").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) r.params[k] = v.get<std::string>();
    for (const auto& item : j.at("results")) r.results.push_back(record_from_json(item));
    r.pass = j.at("status").get<std::string>() == "pass";
    r.wall_ms = j.at("wall_ms").get<std::int64_t>();
    return r;
}

std::string to_csv(const ExperimentResult& r) {
    std::ostringstream os;
    os << "i,n,value\n";
    for (const auto& rec : r.results) {
        if (rec.i) os << *rec.i;
        os << ",";
        if (rec.n) os << *rec.n;
        os << "," << value_to_string(rec) << "\n";
    }
    return os.str();
}

std::string to_table(const ExperimentResult& r) {
    std::ostringstream os;
    os << "experiment: " << r.experiment << "\n";
    if (!r.params.empty()) {
        os << "params:";
        for (const auto& [k, v] : r.params) os << " " << k << "=" << v;
        os << "\n";
    }

    // grid layout when records carry both coordinates
    bool grid = !r.results.empty();
    for (const auto& rec : r.results)
        if (!rec.i || !rec.n) grid = false;
    if (grid) {
        std::map<int, std::map<int, std::string>> cells;  // i -> n -> value
        std::map<int, std::size_t> width;
        for (const auto& rec : r.results) {
            const std::string v = value_to_string(rec);
            cells[*rec.i][*rec.n] = v;
            width[*rec.n] = std::max({width[*rec.n], v.size(), std::to_string(*rec.n).size()});
        }
        os << "  i\\n |";
        for (const auto& [n, w] : width) os << " " << std::setw(static_cast<int>(w)) << n;
        os << "\n";
        for (const auto& [i, row] : cells) {
            os << std::setw(5) << i << " |";
            for (const auto& [n, w] : width) {
                auto it = row.find(n);
                os << " " << std::setw(static_cast<int>(w)) << (it == row.end() ? "" : it->second);
            }
            os << "\n";
        }
    } else {
        for (const auto& rec : r.results) {
            os << "  ";
            if (rec.i) os << "i=" << *rec.i << " ";
            if (rec.n) os << "n=" << *rec.n << " ";
            os << value_to_string(rec) << "\n";
        }
    }
    os << "status: " << (r.pass ? "pass" : "fail") << "\n";
    os << "wall_ms: " << r.wall_ms << "\n";
    return os.str();
}

std::filesystem::path default_cache_dir() {
    if (const char* env = std::getenv("HOMSTAB_CACHE_DIR"); env && *env) return std::filesystem::path(env);
    if (const char* home = std::getenv("HOME"); home && *home)
        return std::filesystem::path(home) / ".cache" / "homstab";
    return std::filesystem::path(".homstab-cache");
}

namespace {

std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string canonical_key(const std::string& experiment, const std::map<std::string, std::string>& params) {
    std::string key = experiment;
    for (const auto& [k, v] : params) {
        key += '\x1f';
        key += k;
        key += '=';
        key += v;
    }
    return key;
}

}  // namespace

std::string cache_file_name(const std::string& experiment, const std::map<std::string, std::string>& params) {
    std::ostringstream os;
    os << experiment << "-" << std::hex << std::setw(16) << std::setfill('0')
       << fnv1a(canonical_key(experiment, params)) << ".json";
    return os.str();
}

std::optional<ExperimentResult> cache_load(const CacheConfig& cfg, const std::string& experiment,
                                           const std::map<std::string, std::string>& params) {
    if (!cfg.enabled) return std::nullopt;
    const auto path = cfg.dir / cache_file_name(experiment, params);
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        ExperimentResult r = experiment_from_json(buf.str());
        if (r.experiment != experiment || r.params != params) return std::nullopt;  // hash collision
        return r;
    } catch (...) {
        return std::nullopt;  // stale or corrupt cache entry
    }
}

void cache_store(const CacheConfig& cfg, const ExperimentResult& result) {
    if (!cfg.enabled) return;
    std::error_code ec;
    std::filesystem::create_directories(cfg.dir, ec);
    if (ec) return;
    const auto path = cfg.dir / cache_file_name(result.experiment, result.params);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp);
        if (!out) return;
        out << to_json(result);
    }
    std::filesystem::rename(tmp, path, ec);
}

}  // namespace homstab
