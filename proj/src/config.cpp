#include "lipact/config.hpp"

#include <fstream>
#include <sstream>

namespace lipact {

Rat Config::epsilon_rat() const {
    auto slash = epsilon.find('/');
    try {
        if (slash == std::string::npos) return Rat(boost::multiprecision::cpp_int(epsilon));
        return Rat(boost::multiprecision::cpp_int(epsilon.substr(0, slash)),
                   boost::multiprecision::cpp_int(epsilon.substr(slash + 1)));
    } catch (const std::exception&) {
        throw ConfigError("epsilon is not a rational: " + epsilon);
    }
}

std::vector<std::string> Config::family_list() const {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : families) {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else if (!std::isspace(uint8_t(ch))) {
            cur.push_back(ch);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    if (out.empty()) throw ConfigError("families list is empty");
    return out;
}

static std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

namespace {

struct Setter {
    int line;

    long num(const std::string& v, const char* key) const {
        try {
            size_t used = 0;
            long r = std::stol(v, &used);
            if (used != v.size()) throw std::invalid_argument(v);
            return r;
        } catch (const std::exception&) {
            throw ConfigError("line " + std::to_string(line) + ": " + key +
                              " expects an integer, got '" + v + "'");
        }
    }

    double real(const std::string& v, const char* key) const {
        try {
            size_t used = 0;
            double r = std::stod(v, &used);
            if (used != v.size()) throw std::invalid_argument(v);
            return r;
        } catch (const std::exception&) {
            throw ConfigError("line " + std::to_string(line) + ": " + key +
                              " expects a number, got '" + v + "'");
        }
    }
};

} // namespace

Config parse_config(const std::string& text) {
    Config c;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        size_t eq = s.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line) + ": expected 'key = value'");
        std::string key = trim(s.substr(0, eq));
        std::string val = trim(s.substr(eq + 1));
        if (key.empty())
            throw ConfigError("line " + std::to_string(line) + ": empty key");
        Setter st{line};
        if (key == "mode") c.mode = val;
        else if (key == "seed") c.seed = uint64_t(st.num(val, "seed"));
        else if (key == "radius") c.radius = int(st.num(val, "radius"));
        else if (key == "word") c.word = val;
        else if (key == "defect_radius") c.defect_radius = int(st.num(val, "defect_radius"));
        else if (key == "orbit_n") c.orbit_n = int(st.num(val, "orbit_n"));
        else if (key == "brooks_w") c.brooks_w = val;
        else if (key == "families") c.families = val;
        else if (key == "eps") c.eps = st.num(val, "eps");
        else if (key == "L") c.L = st.num(val, "L");
        else if (key == "K") c.K = st.num(val, "K");
        else if (key == "cand_radius") c.cand_radius = int(st.num(val, "cand_radius"));
        else if (key == "net_radius") c.net_radius = int(st.num(val, "net_radius"));
        else if (key == "t_slack") c.t_slack = st.num(val, "t_slack");
        else if (key == "profile_kind") c.profile_kind = val;
        else if (key == "profile_radius") c.profile_radius = int(st.num(val, "profile_radius"));
        else if (key == "off_distance") c.off_distance = st.num(val, "off_distance");
        else if (key == "k") c.k = int(st.num(val, "k"));
        else if (key == "grid_max") c.grid_max = st.num(val, "grid_max");
        else if (key == "j_cap") c.j_cap = st.num(val, "j_cap");
        else if (key == "j_max") c.j_max = st.num(val, "j_max");
        else if (key == "tail_tol") c.tail_tol = st.real(val, "tail_tol");
        else if (key == "epsilon") c.epsilon = val;
        else if (key == "samples") c.samples = int(st.num(val, "samples"));
        else
            throw ConfigError("line " + std::to_string(line) + ": unknown key '" + key + "'");
    }
    validate(c);
    return c;
}

Config load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str());
}

void validate(const Config& c) {
    if (c.mode != "exact" && c.mode != "float")
        throw ConfigError("mode must be exact or float");
    if (c.radius < 0) throw ConfigError("radius must be nonnegative");
    if (c.defect_radius < 0) throw ConfigError("defect_radius must be nonnegative");
    if (c.orbit_n < 1) throw ConfigError("orbit_n must be positive");
    if (c.eps < 0) throw ConfigError("eps must be nonnegative");
    if (c.L < 1) throw ConfigError("L must be positive");
    if (c.K < 1) throw ConfigError("K must be positive");
    if (c.cand_radius < 1) throw ConfigError("cand_radius must be positive");
    if (c.net_radius < 0) throw ConfigError("net_radius must be nonnegative");
    if (c.profile_kind != "tripod" && c.profile_kind != "decay")
        throw ConfigError("profile_kind must be tripod or decay");
    if (c.profile_radius < 0) throw ConfigError("profile_radius must be nonnegative");
    if (c.off_distance < 1) throw ConfigError("off_distance must be positive");
    if (c.k < 1 || c.k > 3) throw ConfigError("k must be 1, 2 or 3");
    if (c.grid_max < 10) throw ConfigError("grid_max must be at least 10");
    if (c.j_cap < c.grid_max) throw ConfigError("j_cap must be at least grid_max");
    if (c.j_max < 2) throw ConfigError("j_max must be at least 2");
    if (!(c.tail_tol > 0)) throw ConfigError("tail_tol must be positive");
    if (c.samples < 1) throw ConfigError("samples must be positive");
    if (c.epsilon_rat() <= 0) throw ConfigError("epsilon must be positive");
}

} // namespace lipact
