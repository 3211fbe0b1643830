#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/operators.hpp"

namespace fuzznorm {

// Operator fuzzy norm N(T, s) = sup{alpha in (0,1) : g(alpha) <= s}, where
// g(alpha) is the worst-case ratio d^Y_alpha(Tx) / d^X_{1-alpha}(x) over
// directions. Construction requires the domain to satisfy NVI (positive
// denominators) and the codomain t-norm to be lower semicontinuous; both
// are theorem hypotheses and violations raise PreconditionError.
class OperatorNormCalculator {
public:
    OperatorNormCalculator(LinearOperator op, int sphere_samples, std::uint64_t seed);

    // g evaluated from the cached direction supremum; monotone
    // non-decreasing in alpha.
    double g_alpha(double alpha) const;
    // separable oracle: base_gain^p * qY(alpha) / qX(1-alpha)
    double g_alpha_closed_form(double alpha) const;

    // N(T, s) by bisection over alpha against the monotone predicate
    // g(alpha) <= s; 0 for s <= 0, capped at 1.
    double norm(double s, double alpha_tol = kDefaultAlphaTol) const;
    // closed form on reciprocal->reciprocal pairs: s / (s + S*); empty
    // otherwise. Kept as the oracle for the bisection route.
    std::optional<double> norm_closed_form(double s) const;

    // inf{s >= 0 : N(T, s) >= alpha} (strict ">" on request) by bisection
    // on s; the residual notion used by the completeness instances.
    double level_infimum(double alpha, bool strict, double s_tol = 1e-9,
                         double alpha_tol = 1e-8) const;

    const LinearOperator& op() const { return op_; }
    // sampled sup over unit-rho directions of rho_Y(T d)
    double direction_sup() const { return dir_sup_; }
    double direction_sup_closed_form() const;
    int sphere_samples() const { return sphere_samples_; }
    std::uint64_t seed() const { return seed_; }

    static constexpr double kDefaultAlphaTol = 1e-6;

private:
    LinearOperator op_;
    int sphere_samples_;
    std::uint64_t seed_;
    double dir_sup_;
};

struct OperatorNormProfile {
    std::vector<std::pair<double, double>> g;  // (alpha, g(alpha))
    int sphere_samples = 0;
    std::uint64_t seed = 0;
    bool monotone = true;

    Json to_json() const;
};

OperatorNormProfile opnorm_profile(const OperatorNormCalculator& calc,
                                   const std::vector<double>& alpha_grid);

// Samples the fuzzy-norm axioms of the operator norm over a fleet:
// NI zero left of 0, NII only the zero operator is everywhere 1, NIII the
// phi-scaling identity, NIV the K-weighted triangle (via the closed form
// when the space pair admits one, so equality cases are not drowned by
// bisection error), NV monotonicity with limit 1. g-monotonicity on the
// grid is included.
AxiomReport opnorm_axiom_check(const std::vector<LinearOperator>& fleet,
                               const std::vector<double>& scalars,
                               const std::vector<double>& s_grid,
                               const std::vector<double>& alpha_grid, std::uint64_t seed,
                               double alpha_tol, double tol, int sphere_samples);

}  // namespace fuzznorm
