#include "core/report.hpp"

#include <algorithm>
#include <sstream>

namespace fuzznorm {

Json ReportRecord::to_json() const {
    Json j;
    j["check"] = check;
    j["anchor"] = anchor;
    j["params"] = params.is_null() ? Json::object() : params;
    j["values"] = values.is_null() ? Json::object() : values;
    j["verdict"] = verdict;
    if (!witness.is_null()) j["witness"] = witness;
    if (tol) j["tol"] = *tol;
    if (seed) j["seed"] = *seed;
    return j;
}

std::string ReportRecord::to_line() const { return to_json().dump(); }

int RunResult::failures() const {
    return static_cast<int>(std::count_if(records.begin(), records.end(), [](const auto& r) {
        return r.verdict == kVerdictFail;
    }));
}

int RunResult::unmet() const {
    return static_cast<int>(std::count_if(records.begin(), records.end(), [](const auto& r) {
        return r.verdict == kVerdictPreconditionUnmet;
    }));
}

void RunResult::append(RunResult other) {
    for (auto& r : other.records) records.push_back(std::move(r));
    for (auto& p : other.plots) plots.push_back(std::move(p));
}

std::string summary_table(const std::vector<ReportRecord>& records) {
    std::size_t wc = 5, wa = 6;
    for (const auto& r : records) {
        wc = std::max(wc, r.check.size());
        wa = std::max(wa, r.anchor.size());
    }
    std::ostringstream out;
    auto row = [&](const std::string& c, const std::string& a, const std::string& v) {
        out << c << std::string(wc - c.size() + 2, ' ') << a
            << std::string(wa - a.size() + 2, ' ') << v << '\n';
    };
    row("check", "anchor", "verdict");
    row(std::string(wc, '-'), std::string(wa, '-'), "-------");
    int fails = 0, unmet = 0;
    for (const auto& r : records) {
        row(r.check, r.anchor, r.verdict);
        if (r.verdict == kVerdictFail) ++fails;
        if (r.verdict == kVerdictPreconditionUnmet) ++unmet;
    }
    out << records.size() << " checks, " << fails << " failed, " << unmet
        << " precondition-unmet\n";
    return out.str();
}

}  // namespace fuzznorm
