#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "core/completeness.hpp"
#include "core/fuzzy_space.hpp"
#include "core/sequences.hpp"

namespace fuzznorm {

// Whitespace-separated plain-text matrix: a "rows cols" header followed by
// row-major entries.
Matrix load_matrix_file(const std::string& path);
Matrix parse_matrix_json(const Json& j);

FuzzySpace space_from_json(const std::string& name, const Json& j);

// Run configuration; every subcommand draws its objects from here. Missing
// sections fall back to the built-in lab (the step/reciprocal space pair,
// the doubling operator, identity fleet, decay sequences).
struct RunConfig {
    std::uint64_t seed = 7;
    std::vector<double> alpha_grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    double tol = 1e-9;
    int sphere_samples = 0;  // 0 = auto per dimension
    int sample_count = 10000;
    int horizon = 1000;
    double seq_tol = 2e-2;   // finite-horizon sequence thresholds
    double alpha_tol = 1e-6; // operator-norm bisection

    struct SpaceDef {
        std::string name;
        FuzzySpace space;
    };
    struct OperatorDef {
        std::string name;
        std::string domain;
        std::string codomain;
        Matrix matrix;
    };
    struct SequenceDef {
        std::string name;
        std::string space;
        SequenceSpec spec;
        std::string expect;         // "", "converges", "diverges", "inconclusive"
        std::string expect_cauchy;  // same values; Cauchy and convergence can differ
    };
    struct OperatorSeqDef {
        std::string name;
        std::string domain;
        std::string codomain;
        OperatorSequence seq;
        std::string expect_cauchy;  // "", "converges", "diverges"
    };
    struct UniquenessDef {
        std::string space;
        SequenceSpec seq;
        std::vector<Vector> decoys;
        double alpha = 0.5;
    };
    struct SweepDef {
        std::string domain;
        std::string codomain;
        int count = 50;
    };
    struct BasisDef {
        std::string space;
        std::vector<Vector> vectors;
        double alpha = 0.5;
    };

    std::vector<SpaceDef> spaces;
    std::vector<OperatorDef> operators;
    std::vector<SequenceDef> sequences;
    std::vector<OperatorSeqDef> operator_sequences;
    std::vector<UniquenessDef> uniqueness;
    std::vector<SweepDef> sweeps;
    std::vector<BasisDef> bases;

    const FuzzySpace& space(const std::string& name) const;
    bool has_space(const std::string& name) const;

    static RunConfig defaults();
    static RunConfig from_json(const Json& j, const std::string& base_dir = ".");
    static RunConfig from_file(const std::string& path);
    // seed / alpha_grid / tol / samples overrides from the CLI
    void apply_overrides(const Json& overrides);
};

}  // namespace fuzznorm
