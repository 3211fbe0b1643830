#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "core/common.hpp"

namespace fuzznorm {

inline constexpr const char* kVerdictPass = "pass";
inline constexpr const char* kVerdictFail = "fail";
inline constexpr const char* kVerdictInconclusive = "inconclusive";
inline constexpr const char* kVerdictPreconditionUnmet = "precondition-unmet";

// One check outcome. Serialized as a single self-describing JSON line with
// stable field names: check, anchor, params, values, verdict, witness,
// tol, seed.
struct ReportRecord {
    std::string check;
    std::string anchor;  // claim-catalog label the check verifies
    Json params;
    Json values;
    std::string verdict = kVerdictPass;
    Json witness;
    std::optional<double> tol;
    std::optional<std::uint64_t> seed;

    Json to_json() const;
    std::string to_line() const;
};

struct PlotSeries {
    std::string name;
    std::vector<std::pair<double, double>> rows;
};

struct RunResult {
    std::vector<ReportRecord> records;
    std::vector<PlotSeries> plots;

    int failures() const;
    int unmet() const;
    void append(RunResult other);
};

// Fixed-width human summary, one row per record.
std::string summary_table(const std::vector<ReportRecord>& records);

}  // namespace fuzznorm
