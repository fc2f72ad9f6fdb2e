#pragma once

// Outcome record of one identity verification, serializable to JSON with
// quaternions as 4-element arrays [w,x,y,z].

#include <cstdint>
#include <map>
#include <string>

#include <json.hpp>

#include "quatcheck/quaternion.hpp"

namespace quatcheck {

inline constexpr double kRelErrFloor = 1e-300;

struct CheckReport {
    std::string check_name;
    nlohmann::json parameters = nlohmann::json::object();
    Quaternion lhs;
    Quaternion rhs;
    double abs_err = 0.0;
    double rel_err = 0.0;
    std::map<std::string, std::int64_t> node_counts;
    double elapsed_seconds = 0.0;
    bool pass = false;
};

inline nlohmann::json quaternion_to_json(const Quaternion& q) {
    return nlohmann::json::array({q.w, q.x, q.y, q.z});
}

// abs_err = |lhs - rhs|, rel_err = abs_err / max(|lhs|,|rhs|,floor);
// pass iff abs_err <= tol * scale. The scale is recorded in parameters.
inline void finalize_report(CheckReport& r, double tol, double scale) {
    r.abs_err = norm(r.lhs - r.rhs);
    r.rel_err = r.abs_err / std::max({norm(r.lhs), norm(r.rhs), kRelErrFloor});
    r.parameters["tol"] = tol;
    r.parameters["scale"] = scale;
    r.pass = r.abs_err <= tol * scale;
}

inline nlohmann::json to_json(const CheckReport& r) {
    nlohmann::json j;
    j["check_name"] = r.check_name;
    j["parameters"] = r.parameters;
    j["lhs"] = quaternion_to_json(r.lhs);
    j["rhs"] = quaternion_to_json(r.rhs);
    j["abs_err"] = r.abs_err;
    j["rel_err"] = r.rel_err;
    j["node_counts"] = r.node_counts;
    j["elapsed_seconds"] = r.elapsed_seconds;
    j["pass"] = r.pass;
    return j;
}

}  // namespace quatcheck
