#include "lipact/report.hpp"

#include <cstdio>
#include <sstream>

#include "../vendor/json.hpp"

namespace lipact {

static std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    out += "\"";
    return out;
}

std::string to_csv(const Table& t) {
    std::ostringstream out;
    for (size_t i = 0; i < t.cols.size(); ++i) {
        if (i) out << ',';
        out << csv_cell(t.cols[i]);
    }
    out << '\n';
    for (const auto& r : t.rows) {
        for (size_t i = 0; i < r.size(); ++i) {
            if (i) out << ',';
            out << csv_cell(r[i]);
        }
        out << '\n';
    }
    return out.str();
}

std::string fmt(const Rat& x) {
    std::ostringstream out;
    out << x;
    return out.str();
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string fmt(long x) { return std::to_string(x); }
std::string fmt(uint64_t x) { return std::to_string(x); }

std::string to_json(const Summary& s) {
    nlohmann::ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["suite"] = s.suite;
    j["pass"] = s.pass;
    for (const auto& [k, v] : s.fields) j[k] = v;
    return j.dump(2) + "\n";
}

std::string serialize(const VecQ& v) {
    std::ostringstream out;
    for (const auto& [x, c] : v.m) out << x.str() << '\t' << fmt(c) << '\n';
    return out.str();
}

std::string serialize(const VecD& v) {
    std::ostringstream out;
    for (const auto& [x, c] : v.m) out << x.str() << '\t' << fmt(c) << '\n';
    return out.str();
}

} // namespace lipact
