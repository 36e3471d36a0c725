#ifndef LIPACT_CONFIG_HPP
#define LIPACT_CONFIG_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "lipact/vec.hpp"

namespace lipact {

// flat `key = value` experiment configuration; every knob of every suite
// lives here, CLI flags override file values
struct Config {
    std::string mode = "exact";      // exact | float
    uint64_t seed = 12345;

    int radius = 3;                  // verify / identity suites
    std::string word;                // optional single element for verify
    int defect_radius = 6;
    int orbit_n = 50;
    std::string brooks_w = "ab";

    std::string families = "ab";     // comma-separated axis base words
    long eps = 2;
    long L = 8;
    long K = 8;
    int cand_radius = 2;
    int net_radius = 0;
    long t_slack = -1;

    std::string profile_kind = "tripod";   // tripod | decay
    int profile_radius = 4;
    long off_distance = 6;

    int k = 1;
    long grid_max = 10000;
    long j_cap = 1000000;
    long j_max = 200;
    double tail_tol = 0.25;

    std::string epsilon = "1/2";     // rescaling target, a rational
    int samples = 1000;

    Rat epsilon_rat() const;
    std::vector<std::string> family_list() const;
};

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// parses the flat format: blank lines and `#` comments ignored, one
// `key = value` per line; unknown keys and malformed lines raise ConfigError
// with the line number
Config parse_config(const std::string& text);

Config load_config(const std::string& path);

// range checks shared by the file parser and the flag layer
void validate(const Config& c);

} // namespace lipact

#endif
