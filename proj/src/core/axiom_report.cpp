#include "core/axiom_report.hpp"

namespace fuzznorm {

Json AxiomFinding::to_json() const {
    Json j;
    j["name"] = name;
    j["passed"] = passed;
    if (informational) j["informational"] = true;
    j["worst"] = worst;
    if (!witness.is_null()) j["witness"] = witness;
    if (!note.empty()) j["note"] = note;
    return j;
}

bool AxiomReport::all_passed() const {
    for (const auto& f : findings) {
        if (!f.informational && !f.passed) return false;
    }
    return true;
}

const AxiomFinding* AxiomReport::find(std::string_view name) const {
    for (const auto& f : findings) {
        if (f.name == name) return &f;
    }
    return nullptr;
}

Json AxiomReport::to_json() const {
    Json j;
    j["subject"] = subject;
    j["all_passed"] = all_passed();
    Json arr = Json::array();
    for (const auto& f : findings) arr.push_back(f.to_json());
    j["findings"] = arr;
    return j;
}

}  // namespace fuzznorm
