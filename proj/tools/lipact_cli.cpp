#include <fstream>
#include <iostream>
#include <optional>

#include "../vendor/CLI11.hpp"
#include "lipact/suites.hpp"

using namespace lipact;

int main(int argc, char** argv) {
    CLI::App app{"desk-scale verification harness for affine Lipschitz actions on l1(F2)"};
    app.require_subcommand(1);
    // let the global flags (--config, --out, ...) appear after the subcommand
    app.fallthrough();

    std::string config_path, out_path;
    std::optional<uint64_t> seed;
    std::optional<std::string> mode;
    app.add_option("--config", config_path, "experiment config file (key = value)");
    app.add_option("--out", out_path, "write the CSV table to this path");
    app.add_option("--seed", seed, "seed for the sampled suites");
    app.add_option("--mode", mode, "arithmetic mode: exact | float")
        ->check(CLI::IsMember({"exact", "float"}));

    std::optional<int> radius, k, samples;
    std::optional<long> L, K, grid_max;
    std::optional<std::string> word, families, profile_kind, epsilon;

    CLI::App* verify = app.add_subcommand("verify", "identity suite");
    verify->add_option("--radius", radius, "ball radius");
    verify->add_option("--word", word, "report the cocycle of one element");

    CLI::App* defect = app.add_subcommand("defect", "exact defect measurement");
    defect->add_option("--radius", radius, "ball radius");
    defect->add_option("--samples", samples, "sampled bound checks");

    CLI::App* orbit = app.add_subcommand("orbit-growth", "counting norm along powers");
    orbit->add_option("--n", radius, "largest power");

    CLI::App* distf = app.add_subcommand("distance-formula", "projection distance suite");
    distf->add_option("--families", families, "comma-separated axis base words");
    distf->add_option("--radius", radius, "ball radius");
    distf->add_option("--L", L, "truncation threshold");
    distf->add_option("--K", K, "cross-edge length");

    CLI::App* profile = app.add_subcommand("profile", "properness profile");
    profile->add_option("--families", families, "comma-separated axis base words");
    profile->add_option("--mode", profile_kind, "cocycle kind: tripod | decay")
        ->check(CLI::IsMember({"tripod", "decay"}));
    profile->add_option("--k", k, "iterated-log depth");
    profile->add_option("--radius", radius, "profile radius");
    profile->add_option("--epsilon", epsilon, "rescaling target (rational)");

    CLI::App* theta = app.add_subcommand("theta", "growth function property suite");
    theta->add_option("--k", k, "iterated-log depth");
    theta->add_option("--grid-max", grid_max, "grid upper end");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        Config c = config_path.empty() ? Config{} : load_config(config_path);
        if (seed) c.seed = *seed;
        if (mode) c.mode = *mode;
        if (word) c.word = *word;
        if (families) c.families = *families;
        if (profile_kind) c.profile_kind = *profile_kind;
        if (epsilon) c.epsilon = *epsilon;
        if (k) c.k = *k;
        if (samples) c.samples = *samples;
        if (L) c.L = *L;
        if (K) c.K = *K;
        if (grid_max) c.grid_max = *grid_max;

        std::string name;
        if (verify->parsed()) name = "verify";
        else if (defect->parsed()) name = "defect";
        else if (orbit->parsed()) name = "orbit-growth";
        else if (distf->parsed()) name = "distance-formula";
        else if (profile->parsed()) name = "profile";
        else name = "theta";

        if (radius) {
            if (name == "defect") c.defect_radius = *radius;
            else if (name == "orbit-growth") c.orbit_n = *radius;
            else if (name == "profile") c.profile_radius = *radius;
            else c.radius = *radius;
        }
        validate(c);

        SuiteResult res = run_suite(name, c);
        std::string csv = to_csv(res.table);
        if (!out_path.empty()) {
            std::ofstream out(out_path, std::ios::binary);
            if (!out) throw ConfigError("cannot open output file: " + out_path);
            out << csv;
            if (!out) throw ConfigError("write failed: " + out_path);
        } else {
            std::cout << csv;
        }
        std::cout << to_json(res.summary);
        return res.summary.pass ? 0 : 1;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
