#pragma once

// Convergence-study tables: error vs resolution with a least-squares
// empirical order, or a floor marker when every error sits at rounding level.

#include <string>
#include <vector>

#include <json.hpp>

namespace quatcheck {

struct ConvergenceRow {
    double resolution = 0.0;  // rule size, or 1/eps for the sphere limit
    double abs_err = 0.0;
    double rel_err = 0.0;
    double elapsed_seconds = 0.0;
};

struct ConvergenceTable {
    std::vector<ConvergenceRow> rows;  // sorted by resolution ascending
    double fitted_order = 0.0;
    bool at_floor = false;
};

// Least-squares slope of log(abs_err) against log(resolution); the reported
// order is its negation (err ~ C * resolution^-order). Errors below the
// floor threshold are excluded; if none remain the table is marked "floor".
ConvergenceTable fit_convergence(std::vector<ConvergenceRow> rows,
                                 double floor_threshold = 1e-12);

std::string to_csv(const ConvergenceTable& table);
nlohmann::json to_json(const ConvergenceTable& table);

}  // namespace quatcheck
