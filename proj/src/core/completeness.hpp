#pragma once

#include <cstdint>
#include <vector>

#include "core/operator_norm.hpp"

namespace fuzznorm {

// Closed-form operator family T_k = base + a_k * perturbation. InverseK and
// Geometric decay to a limit; Alternating and Linear are the negative
// controls (not Cauchy).
struct OperatorSequence {
    enum class Decay { InverseK, Geometric, Alternating, Linear };

    Decay decay = Decay::InverseK;
    Matrix base;
    Matrix perturbation;
    double rate = 0.5;  // geometric ratio, |r| < 1
    int n_max = 1000;

    double coeff(int k) const;
    Matrix at(int k) const { return base + coeff(k) * perturbation; }
    bool decays() const { return decay == Decay::InverseK || decay == Decay::Geometric; }
};

const char* to_string(OperatorSequence::Decay d);

struct OperatorCauchyVerdict {
    SeqOutcome outcome = SeqOutcome::Inconclusive;
    double tail_worst = 0.0;
    Json witness;
    std::vector<Json> trace;  // per-alpha worst strict level infima
};

// lambda_{n,m}(alpha) = inf{s : N(T_n - T_m, s) > 1 - alpha} over a
// deterministic index ladder; Cauchy when the tail clears tol at every
// grid alpha. Raises PreconditionError when the operator-norm hypotheses
// fail.
OperatorCauchyVerdict operator_seq_cauchy(const OperatorSequence& seq, const FuzzySpace& domain,
                                          const FuzzySpace& codomain,
                                          const std::vector<double>& alpha_grid, double tol,
                                          int sphere_samples, std::uint64_t seed);

struct OperatorLimitResult {
    bool ok = false;
    SeqOutcome cauchy_outcome = SeqOutcome::Inconclusive;
    Matrix limit;
    double model_residual = 0.0;  // family-model validation at a third sample
    bool limit_bounded = false;
    std::vector<double> opnorm_residuals;  // inf{s : N(T_horizon - limit, s) >= alpha}
    Json witness;
};

// Recovers the limit by solving the declared two-parameter decay model from
// two horizon samples (validated against a third), certifies it bounded and
// reports the operator-norm residuals at the horizon.
OperatorLimitResult operator_seq_limit(const OperatorSequence& seq, const FuzzySpace& domain,
                                       const FuzzySpace& codomain,
                                       const std::vector<double>& alpha_grid, double tol,
                                       int sphere_samples, std::uint64_t seed);

struct DecoyFloor {
    Vector decoy;
    double floor = 0.0;       // extrapolated liminf of lambda_n(decoy)
    double tail_min = 0.0;    // raw minimum over the tail, for reference
    bool positive = false;
};

struct UniquenessVerdict {
    bool passed = false;
    double true_limit_final = 0.0;  // lambda at the horizon for the true limit
    std::vector<DecoyFloor> decoys;
    Json witness;
};

// lambda_n(y) = inf{t : N(x_n - y, t) > 1 - alpha} must vanish for the true
// limit and stay above a positive floor for every decoy. Floors are
// estimated by quadratic Richardson extrapolation in the decay coefficient.
// Decoys equal to the limit are rejected; requires a lower-semicontinuous
// t-norm.
UniquenessVerdict limit_uniqueness_probe(const FuzzySpace& sp, const SequenceSpec& seq,
                                         const std::vector<Vector>& decoys, double alpha,
                                         int n_max, double tol);

}  // namespace fuzznorm
