#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "besselsub/version.hpp"

// Machine-readable verification reports: one record per check, each carrying
// the anchor of the identity it exercises, the computed value, its reference
// and the tolerance actually enforced.

namespace besselsub::vfy {

struct CheckRecord {
    std::string id;
    std::string paper_anchor;
    double value = 0.0;
    double reference = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;
};

struct VerificationReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::vector<CheckRecord> checks;

    int failures() const
    {
        int n = 0;
        for (const auto& c : checks)
            if (!c.pass) ++n;
        return n;
    }

    // |value - reference| <= tolerance
    CheckRecord& add_abs(const std::string& id, const std::string& anchor, double value,
                         double reference, double tol, const std::string& detail = "")
    {
        CheckRecord c{id, anchor, value, reference, tol,
                      std::isfinite(value) && std::abs(value - reference) <= tol, detail};
        checks.push_back(std::move(c));
        return checks.back();
    }

    // |value - reference| <= tol * max(|reference|, floor)
    CheckRecord& add_rel(const std::string& id, const std::string& anchor, double value,
                         double reference, double tol, const std::string& detail = "")
    {
        const double scale = std::max(std::abs(reference), 1e-300);
        CheckRecord c{id, anchor, value, reference, tol * scale,
                      std::isfinite(value) && std::abs(value - reference) <= tol * scale, detail};
        checks.push_back(std::move(c));
        return checks.back();
    }

    // value >= threshold (p-values, convergence slopes)
    CheckRecord& add_at_least(const std::string& id, const std::string& anchor, double value,
                              double threshold, const std::string& detail = "")
    {
        CheckRecord c{id, anchor, value, threshold, 0.0, std::isfinite(value) && value >= threshold, detail};
        checks.push_back(std::move(c));
        return checks.back();
    }

    // value <= threshold
    CheckRecord& add_at_most(const std::string& id, const std::string& anchor, double value,
                             double threshold, const std::string& detail = "")
    {
        CheckRecord c{id, anchor, value, threshold, 0.0, std::isfinite(value) && value <= threshold, detail};
        checks.push_back(std::move(c));
        return checks.back();
    }

    // expected failure (negative controls): passes when value > threshold
    CheckRecord& add_must_exceed(const std::string& id, const std::string& anchor, double value,
                                 double threshold, const std::string& detail = "")
    {
        CheckRecord c{id, anchor, value, threshold, 0.0, std::isfinite(value) && value > threshold, detail};
        checks.push_back(std::move(c));
        return checks.back();
    }

    nlohmann::json to_json() const
    {
        nlohmann::json j;
        j["schema_version"] = 1;
        j["suite"] = suite;
        j["environment"] = {
            {"version", kVersion},
            {"seed", seed},
            {"timestamp", static_cast<std::int64_t>(
                 std::chrono::duration_cast<std::chrono::seconds>(
                     std::chrono::system_clock::now().time_since_epoch()).count())}};
        j["checks"] = nlohmann::json::array();
        for (const auto& c : checks)
            j["checks"].push_back({{"id", c.id},
                                   {"paper_anchor", c.paper_anchor},
                                   {"value", c.value},
                                   {"reference", c.reference},
                                   {"tolerance", c.tolerance},
                                   {"pass", c.pass},
                                   {"detail", c.detail}});
        j["summary"] = {{"total", checks.size()},
                        {"passed", checks.size() - failures()},
                        {"failed", failures()}};
        return j;
    }
};

} // namespace besselsub::vfy
