#ifndef LIPACT_REPORT_HPP
#define LIPACT_REPORT_HPP

#include <map>
#include <string>
#include <vector>

#include "lipact/vec.hpp"

namespace lipact {

inline constexpr int kSchemaVersion = 1;

// one CSV table: header row + string cells, rendered exactly as stored so
// identical runs are byte-identical
struct Table {
    std::string name;
    std::vector<std::string> cols;
    std::vector<std::vector<std::string>> rows;

    void row(std::vector<std::string> cells) { rows.push_back(std::move(cells)); }
};

std::string to_csv(const Table& t);

// numeric cell formatting: rationals as p/q, doubles with round-trip
// precision and a fixed exponent style
std::string fmt(const Rat& x);
std::string fmt(double x);
std::string fmt(long x);
std::string fmt(uint64_t x);

// summary emitted next to the CSV; scalar values only, insertion order kept
struct Summary {
    std::string suite;
    bool pass = true;
    std::vector<std::pair<std::string, std::string>> fields;

    void put(const std::string& key, std::string value) {
        fields.emplace_back(key, std::move(value));
    }
};

std::string to_json(const Summary& s);

} // namespace lipact

#endif
