#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "core/common.hpp"

namespace fuzznorm {

// One axiom (or probe) outcome inside an axiom report. Informational
// findings are surfaced with witnesses but do not gate the verdict.
struct AxiomFinding {
    std::string name;
    bool passed = true;
    bool informational = false;
    double worst = 0.0;  // magnitude of the worst violation seen
    Json witness;        // null when nothing violated
    std::string note;

    Json to_json() const;
};

struct AxiomReport {
    std::string subject;
    std::vector<AxiomFinding> findings;

    bool all_passed() const;  // informational findings excluded
    const AxiomFinding* find(std::string_view name) const;
    Json to_json() const;
};

}  // namespace fuzznorm
