#pragma once

#include <map>
#include <string>
#include <vector>

namespace qv {

/// Result of one identity check, serializable as text or JSON.
struct CheckReport {
    enum class Status { Pass, Fail, Error };

    std::string check;
    std::map<std::string, std::string> params; // deterministic order
    Status status = Status::Pass;
    struct Mismatch {
        std::string where, left, right;
    };
    std::vector<Mismatch> mismatches;
    std::vector<std::string> notes;
    long long elapsed_ms = 0;

    bool passed() const { return status == Status::Pass; }
    void fail(const std::string& where, const std::string& left, const std::string& right);
    void error(const std::string& message);

    std::string to_text(bool with_timing = true) const;
    std::string to_json(bool with_timing = true) const;
};

std::string reports_to_json(const std::vector<CheckReport>& reports, bool with_timing = true);

} // namespace qv
