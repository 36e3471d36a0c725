#ifndef LIPACT_SUITES_HPP
#define LIPACT_SUITES_HPP

#include "lipact/config.hpp"
#include "lipact/report.hpp"

namespace lipact {

// one experiment run: a data table plus a summary; pass mirrors the exit
// code contract (violations present <=> pass false)
struct SuiteResult {
    Table table;
    Summary summary;
};

SuiteResult suite_verify(const Config& c);
SuiteResult suite_defect(const Config& c);
SuiteResult suite_orbit_growth(const Config& c);
SuiteResult suite_distance_formula(const Config& c);
SuiteResult suite_profile(const Config& c);
SuiteResult suite_theta(const Config& c);

SuiteResult run_suite(const std::string& name, const Config& c);

} // namespace lipact

#endif
