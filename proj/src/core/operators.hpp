#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "core/fuzzy_space.hpp"
#include "core/sequences.hpp"

namespace fuzznorm {

// Matrix acting between two fuzzy spaces. Domain and codomain must share
// the homogeneity phi (same exponent) and b-constant K, as the
// boundedness-ratio scale invariance depends on it.
class LinearOperator {
public:
    LinearOperator(Matrix a, FuzzySpace domain, FuzzySpace codomain);

    Vector apply(const Vector& x) const { return a_ * x; }
    const Matrix& matrix() const { return a_; }
    const FuzzySpace& domain() const { return domain_; }
    const FuzzySpace& codomain() const { return codomain_; }
    bool is_zero() const { return a_.isZero(0.0); }

    // sup ||Ax||_Y / ||x||_X over the base norms, exact via SVD of the
    // weight-whitened matrix; the separable closed forms build on this.
    double base_gain() const { return base_gain_; }

private:
    Matrix a_;
    FuzzySpace domain_;
    FuzzySpace codomain_;
    double base_gain_;
};

// Deterministic unit-base-norm directions: 1 point for n = 1, equiangular
// half-circle for n = 2, Fibonacci hemisphere for n = 3, seeded Gaussian
// otherwise. Antipodes are redundant because every ratio in this module is
// even in x.
std::vector<Vector> unit_sphere_directions(const CrispFunctional& rho, int count,
                                           std::uint64_t seed);
int default_sphere_samples(int dimension);

// B(x, alpha) = (d^Y_alpha(Tx) / K) / d^X_{1-alpha}(x) with the
// conventions 0/anything -> 0 and positive/0 -> +inf.
double boundedness_ratio(const LinearOperator& T, const Vector& x, double alpha,
                         double level_tol = FuzzySpace::kDefaultLevelTol);

struct CertificateEntry {
    double alpha = 0.0;
    bool unbounded = false;
    double m = 0.0;            // certified constant when bounded
    double m_sampled = 0.0;    // raw sphere-sampled supremum
    std::optional<double> m_closed_form;  // separable oracle
    Vector witness_direction;  // attains the supremum / triggers UNBOUNDED

    Json to_json() const;
};

struct BoundednessCertificate {
    std::vector<CertificateEntry> entries;
    int sphere_samples = 0;
    std::uint64_t seed = 0;

    bool all_finite() const;
    std::vector<double> unbounded_alphas() const;
    const CertificateEntry* at(double alpha) const;
    Json to_json() const;
};

// Sphere-sampled supremum of the boundedness ratio per grid alpha.
// UNBOUNDED is declared only on an exact-zero denominator with positive
// numerator or a ratio beyond `ceiling`. The certified m is the larger of
// the sampled supremum and the separable closed form (they agree up to
// direction resolution; keeping the max keeps Eq. 2 valid on fresh samples).
BoundednessCertificate bounded_certificate(const LinearOperator& T,
                                           const std::vector<double>& alpha_grid,
                                           int sphere_samples, std::uint64_t seed,
                                           double ceiling = 1e12);

struct EquivalenceVerdict {
    bool passed = true;
    int violations_eq1 = 0;  // premise of (1) held but conclusion failed
    int violations_eq2 = 0;  // the level-infimum inequality (2) failed
    int premise_hits = 0;
    int samples = 0;
    Json witness;
};

// Checks that the certificate's M_alpha satisfies both sides of the
// definition equivalence on sampled (x, t, s > t). `m_scale` rescales the
// certified constants (0.5 is the documented negative control).
EquivalenceVerdict defn_equivalence_check(const LinearOperator& T,
                                          const BoundednessCertificate& cert, int sample_count,
                                          std::uint64_t seed, double m_scale = 1.0,
                                          double slack = 1e-9);

struct ContinuityVerdict {
    bool continuous = true;
    bool agree_across_points = true;  // identical verdicts at every base point
    std::vector<Json> probes;
    Json witness;
};

// Probes fuzzy continuity along x_k = base + k^{-q} v for every base point
// and direction, checking classical convergence of the images.
ContinuityVerdict continuity_probe(const LinearOperator& T,
                                   const std::vector<Vector>& base_points,
                                   const std::vector<Vector>& directions, double rate_q,
                                   int n_max, double tol);

struct CounterexampleReport {
    bool continuous = false;
    bool bounded = false;
    std::vector<double> unbounded_alphas;
    bool matches_expected = false;  // continuous, unbounded exactly for alpha >= 1/2
    BoundednessCertificate certificate;
    ContinuityVerdict continuity;

    Json to_json() const;
};

// The step(1/2) -> reciprocal doubling operator: fuzzy continuous
// everywhere yet fuzzy bounded at no alpha >= 1/2.
CounterexampleReport counterexample_suite(int dimension, const std::vector<double>& alpha_grid,
                                          int sphere_samples, int n_max, std::uint64_t seed);

struct IndependenceConstant {
    std::vector<Vector> basis;
    double alpha = 0.0;
    double c_alpha = 0.0;
    Vector minimizing_coeffs;
    int grid_resolution = 0;
    bool positivity_checked = false;  // assertion ran (space satisfies NVI)
    bool positivity_ok = false;
};

// c_alpha = min over unit-l1 coefficient vectors of d_{1-alpha}(sum beta_i
// x_i) / K, via a deterministic simplex grid per sign pattern with
// recursive zoom refinement. Rejects rank-deficient bases.
IndependenceConstant independence_constant(const FuzzySpace& sp,
                                           const std::vector<Vector>& basis, double alpha,
                                           int grid_resolution);

struct Lemma21Verdict {
    bool passed = true;
    int violations = 0;
    int samples = 0;
    Json witness;
};

// Random arbitrary-scale coefficient vectors must satisfy
// d_{1-alpha}(sum beta_i x_i)/K >= c_alpha / phi(1 / sum|beta_i|) - tol.
// `c_scale` inflates c_alpha (x2 is the documented negative control).
Lemma21Verdict lemma21_inequality_check(const FuzzySpace& sp, const IndependenceConstant& ic,
                                        int sample_count, std::uint64_t seed, double tol,
                                        double c_scale = 1.0);

struct SubspaceVerdict {
    bool combo_bounded = false;
    bool bound_holds = false;      // M_combo(alpha) <= phi(k1) M1_beta + phi(k2) M2_beta
    bool lemma31_holds = false;
    int lemma31_violations = 0;
    std::vector<double> beta_of_alpha;
    BoundednessCertificate combo_certificate;
    Json witness;
};

// Certifies k1 T1 + k2 T2 bounded and checks the additive level-infimum
// inequality on sampled pairs, with beta(alpha) the smallest grid level
// whose t-norm square clears alpha.
SubspaceVerdict subspace_check(const LinearOperator& T1, const LinearOperator& T2, double k1,
                               double k2, const std::vector<double>& alpha_grid,
                               int sphere_samples, int pair_samples, std::uint64_t seed,
                               double tol);

struct SweepReport {
    bool precondition_ok = false;  // domain satisfies NVI
    int operators_checked = 0;
    int bounded_count = 0;
    bool all_bounded = false;
    Json witness;
};

// Random matrices between NVI-satisfying spaces must all certify bounded
// at every grid alpha (the zero matrix is always included). A non-NVI
// domain yields precondition_ok = false without asserting anything.
SweepReport finite_dim_boundedness_sweep(const FuzzySpace& domain, const FuzzySpace& codomain,
                                         int operator_count,
                                         const std::vector<double>& alpha_grid,
                                         int sphere_samples, std::uint64_t seed);

}  // namespace fuzznorm
