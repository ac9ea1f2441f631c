#include "qvertex/report.hpp"

#include <json.hpp>

namespace qv {

using nlohmann::json;

void CheckReport::fail(const std::string& where, const std::string& left, const std::string& right) {
    status = Status::Fail;
    mismatches.push_back({where, left, right});
}

void CheckReport::error(const std::string& message) {
    status = Status::Error;
    notes.push_back(message);
}

namespace {

const char* status_name(CheckReport::Status s) {
    switch (s) {
        case CheckReport::Status::Pass: return "pass";
        case CheckReport::Status::Fail: return "fail";
        default: return "error";
    }
}

json report_json(const CheckReport& r, bool with_timing) {
    json j;
    j["check"] = r.check;
    json p = json::object();
    for (const auto& [k, v] : r.params) p[k] = v;
    j["params"] = p;
    j["status"] = status_name(r.status);
    json ms = json::array();
    for (const auto& m : r.mismatches) ms.push_back({{"monomial", m.where}, {"left", m.left}, {"right", m.right}});
    j["mismatches"] = ms;
    if (!r.notes.empty()) j["notes"] = r.notes;
    if (with_timing) j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

} // namespace

std::string CheckReport::to_text(bool with_timing) const {
    std::string s = std::string(status_name(status)) + "  " + check;
    for (const auto& [k, v] : params) s += " " + k + "=" + v;
    if (with_timing) s += "  (" + std::to_string(elapsed_ms) + " ms)";
    s += "\n";
    for (const auto& m : mismatches) {
        s += "  mismatch at " + m.where + "\n    left:  " + m.left + "\n    right: " + m.right + "\n";
    }
    for (const auto& n : notes) s += "  note: " + n + "\n";
    return s;
}

std::string CheckReport::to_json(bool with_timing) const {
    return report_json(*this, with_timing).dump(2);
}

std::string reports_to_json(const std::vector<CheckReport>& reports, bool with_timing) {
    json arr = json::array();
    int failures = 0, errors = 0;
    for (const auto& r : reports) {
        arr.push_back(report_json(r, with_timing));
        if (r.status == CheckReport::Status::Fail) ++failures;
        if (r.status == CheckReport::Status::Error) ++errors;
    }
    json j;
    j["checks"] = arr;
    j["total"] = reports.size();
    j["failures"] = failures;
    j["errors"] = errors;
    return j.dump(2);
}

} // namespace qv
