// homstab: batch verification experiments on exact chain-level models.
//
// Every subcommand prints a machine-readable report (table, json or csv) and
// exits 0 exactly when all asserted properties hold.  Results are cached
// under a content-addressed key derived from the command and parameters.

#include <CLI11.hpp>

#include "homstab/commands.hpp"
#include "homstab/experiment.hpp"

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace {

struct GlobalOptions {
    std::string format = "table";
    std::size_t jobs = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    std::string cache_dir;
    bool no_cache = false;
};

void add_global_flags(CLI::App* cmd, GlobalOptions& g) {
    cmd->add_option("--format", g.format, "Output format")->check(CLI::IsMember({"table", "json", "csv"}));
    cmd->add_option("--jobs", g.jobs, "Worker threads for independent cells")->check(CLI::PositiveNumber);
    cmd->add_option("--cache-dir", g.cache_dir, "Result cache directory (overrides HOMSTAB_CACHE_DIR)");
    cmd->add_flag("--no-cache", g.no_cache, "Do not read or write the result cache");
}

homstab::CacheConfig cache_config(const GlobalOptions& g) {
    homstab::CacheConfig cfg;
    cfg.enabled = !g.no_cache;
    cfg.dir = g.cache_dir.empty() ? homstab::default_cache_dir() : std::filesystem::path(g.cache_dir);
    return cfg;
}

int emit(const homstab::ExperimentResult& result, const GlobalOptions& g) {
    if (g.format == "json")
        std::cout << homstab::to_json(result) << "\n";
    else if (g.format == "csv")
        std::cout << homstab::to_csv(result);
    else
        std::cout << homstab::to_table(result);
    return result.pass ? 0 : 1;
}

// Runs through the cache: a hit is replayed, a miss is computed and stored.
template <class Fn>
int run(const GlobalOptions& g, const std::string& experiment,
        const std::map<std::string, std::string>& params, Fn&& compute) {
    const homstab::CacheConfig cfg = cache_config(g);
    if (auto cached = homstab::cache_load(cfg, experiment, params)) return emit(*cached, g);
    const homstab::ExperimentResult result = compute();
    homstab::cache_store(cfg, result);
    return emit(result, g);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact homological stability experiments"};
    app.require_subcommand(1);
    GlobalOptions g;

    // injwords
    std::size_t injwords_n = 0;
    std::size_t injwords_cap = homstab::cli::kInjwordsCap;
    auto* injwords = app.add_subcommand("injwords", "Wedge certificate for the complex of injective words");
    injwords->add_option("n", injwords_n, "Alphabet size")->required();
    injwords->add_option("--cap", injwords_cap, "Largest admissible n");
    add_global_flags(injwords, g);

    // braid-table
    std::size_t braid_n_max = 12, braid_deg_max = 6, braid_cap = homstab::cli::kBraidTableCap;
    auto* braid = app.add_subcommand("braid-table", "Mod-2 stability table for configurations in the plane");
    braid->add_option("--n-max", braid_n_max, "Largest number of points");
    braid->add_option("--deg-max", braid_deg_max, "Largest cohomological degree");
    braid->add_option("--cap", braid_cap, "Largest admissible n-max");
    add_global_flags(braid, g);

    // sphere-h1
    std::size_t sphere_n = 2;
    std::int64_t sphere_char = 0;
    auto* sphere = app.add_subcommand("sphere-h1", "First homology of configurations on the 2-sphere");
    sphere->add_option("n", sphere_n, "Number of points")->required();
    auto* char_opt = sphere->add_option("--char", sphere_char, "Prime field characteristic (omit for Z)");
    add_global_flags(sphere, g);

    // tau
    std::size_t tau_d = 2;
    auto* tau = app.add_subcommand("tau", "Divisibility of the commutator class of the two-point model");
    tau->add_option("d", tau_d, "Ambient dimension")->required();
    add_global_flags(tau, g);

    // dold
    std::uint64_t dold_seed = 0;
    std::size_t dold_length = 4;
    std::vector<std::size_t> dold_dims = {1, 2, 0, 3};
    auto* dold = app.add_subcommand("dold", "Random transfer system decomposition");
    dold->add_option("--seed", dold_seed, "Random seed");
    dold->add_option("--length", dold_length, "System length N");
    dold->add_option("--dims", dold_dims, "Summand dimensions b_0,b_1,...")->delimiter(',');
    add_global_flags(dold, g);

    // halfsmash
    std::size_t halfsmash_n = 1;
    std::size_t halfsmash_cap = homstab::cli::kHalfSmashCap;
    auto* halfsmash = app.add_subcommand("halfsmash", "Connectivity of the half-smash construction on F(n)");
    halfsmash->add_option("n", halfsmash_n, "Alphabet size")->required();
    halfsmash->add_option("--cap", halfsmash_cap, "Largest admissible n");
    add_global_flags(halfsmash, g);

    // verify-all
    std::string scale = "small";
    auto* verify = app.add_subcommand("verify-all", "Run the whole verification battery");
    verify->add_option("--scale", scale, "Battery size")->check(CLI::IsMember({"small", "full"}));
    add_global_flags(verify, g);

    CLI11_PARSE(app, argc, argv);

    try {
        if (injwords->parsed())
            return run(g, "injwords", {{"n", std::to_string(injwords_n)}},
                       [&] { return homstab::cli::cmd_injwords(injwords_n, injwords_cap); });
        if (braid->parsed())
            return run(g, "braid-table",
                       {{"n_max", std::to_string(braid_n_max)}, {"deg_max", std::to_string(braid_deg_max)}},
                       [&] { return homstab::cli::cmd_braid_table(braid_n_max, braid_deg_max, g.jobs, braid_cap); });
        if (sphere->parsed()) {
            std::map<std::string, std::string> params{{"n", std::to_string(sphere_n)}};
            std::optional<std::int64_t> characteristic;
            if (char_opt->count() > 0) {
                characteristic = sphere_char;
                params["char"] = std::to_string(sphere_char);
            }
            return run(g, "sphere-h1", params, [&] { return homstab::cli::cmd_sphere_h1(sphere_n, characteristic); });
        }
        if (tau->parsed())
            return run(g, "tau", {{"d", std::to_string(tau_d)}}, [&] { return homstab::cli::cmd_tau(tau_d); });
        if (dold->parsed()) {
            std::string dims;
            for (std::size_t i = 0; i < dold_dims.size(); ++i) dims += (i ? "," : "") + std::to_string(dold_dims[i]);
            return run(g, "dold",
                       {{"seed", std::to_string(dold_seed)}, {"N", std::to_string(dold_length)}, {"dims", dims}},
                       [&] { return homstab::cli::cmd_dold(dold_seed, dold_length, dold_dims); });
        }
        if (halfsmash->parsed())
            return run(g, "halfsmash", {{"n", std::to_string(halfsmash_n)}},
                       [&] { return homstab::cli::cmd_halfsmash(halfsmash_n, halfsmash_cap); });
        if (verify->parsed())
            return run(g, "verify-all", {{"scale", scale}},
                       [&] { return homstab::cli::cmd_verify_all(scale, g.jobs); });
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
