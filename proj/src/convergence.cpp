#include "quatcheck/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace quatcheck {

ConvergenceTable fit_convergence(std::vector<ConvergenceRow> rows, double floor_threshold) {
    std::sort(rows.begin(), rows.end(),
              [](const ConvergenceRow& a, const ConvergenceRow& b) {
                  return a.resolution < b.resolution;
              });
    ConvergenceTable table;
    table.rows = std::move(rows);

    std::vector<double> lx, ly;
    for (const auto& row : table.rows) {
        if (row.abs_err > floor_threshold) {
            lx.push_back(std::log(row.resolution));
            ly.push_back(std::log(row.abs_err));
        }
    }
    if (lx.size() < 2) {
        table.at_floor = true;
        table.fitted_order = 0.0;
        return table;
    }
    const double n = static_cast<double>(lx.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    const double slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    table.fitted_order = -slope;
    return table;
}

std::string to_csv(const ConvergenceTable& table) {
    std::ostringstream os;
    os.precision(17);
    os << "resolution,abs_err,rel_err,elapsed_seconds\n";
    for (const auto& row : table.rows)
        os << row.resolution << "," << row.abs_err << "," << row.rel_err << ","
           << row.elapsed_seconds << "\n";
    if (table.at_floor)
        os << "# order: floor\n";
    else
        os << "# order: " << table.fitted_order << "\n";
    return os.str();
}

nlohmann::json to_json(const ConvergenceTable& table) {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& row : table.rows) {
        rows.push_back({{"resolution", row.resolution},
                        {"abs_err", row.abs_err},
                        {"rel_err", row.rel_err},
                        {"elapsed_seconds", row.elapsed_seconds}});
    }
    nlohmann::json j;
    j["rows"] = rows;
    if (table.at_floor)
        j["order"] = "floor";
    else
        j["order"] = table.fitted_order;
    return j;
}

}  // namespace quatcheck
