#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <Eigen/Dense>

#include "core/axiom_report.hpp"
#include "core/profile.hpp"
#include "core/scalar_algebra.hpp"

namespace fuzznorm {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

// Crisp carrier rho(x) = ||x||^p (Euclidean or weighted Euclidean base),
// phi-homogeneous with phi = |.|^p and b-triangle constant 2^{p-1}.
class CrispFunctional {
public:
    CrispFunctional(int dimension, double exponent_p, Vector weights = {});

    double base_norm(const Vector& x) const;
    double operator()(const Vector& x) const;  // base_norm^p

    int dimension() const { return dimension_; }
    double exponent() const { return exponent_; }
    bool weighted() const { return weights_.size() > 0; }
    const Vector& weights() const { return weights_; }
    double default_b_constant() const { return std::pow(2.0, exponent_ - 1.0); }
    PhiFunction homogeneity() const;

    bool same_as(const CrispFunctional& other) const;

private:
    int dimension_;
    double exponent_;
    Vector weights_;  // empty for the plain Euclidean base
};

struct LevelValue {
    Vector x;
    double alpha = 0.0;
    bool strict = false;
    double value = 0.0;
};

// Finite-dimensional space with the profile-induced fuzzy strong
// phi-b-norm N(x,t) = s(t / rho(x)) for t > 0 and x != 0, N(0,t) = 1 for
// t > 0 and N(x,t) = 0 for t <= 0.
class FuzzySpace {
public:
    FuzzySpace(std::string name, CrispFunctional rho, Profile profile, TNorm tnorm,
               std::optional<double> b_constant = {});

    double norm(const Vector& x, double t) const;

    // inf{t > 0 : N(x,t) >= alpha} (strict ">" when requested), computed by
    // bisection on t with geometric bracket expansion. An evaluation at a
    // tiny positive t decides the exactly-zero case, so structurally zero
    // infima come back as 0.0 rather than ~tol.
    LevelValue level_infimum(const Vector& x, double alpha, bool strict,
                             double tol = kDefaultLevelTol) const;
    double level_value(const Vector& x, double alpha, bool strict,
                       double tol = kDefaultLevelTol) const;

    // rho(x) * q(alpha): the closed-form oracle for the bisection route.
    double level_closed_form(const Vector& x, double alpha, bool strict) const;

    double quantile(double alpha, bool strict) const { return profile_.quantile(alpha, strict); }
    bool satisfies_nvi() const { return profile_.vanishes_somewhere(); }

    int dimension() const { return rho_.dimension(); }
    double b_constant() const { return b_constant_; }
    const CrispFunctional& rho() const { return rho_; }
    const Profile& profile() const { return profile_; }
    const PhiFunction& phi() const { return phi_; }
    const TNorm& tnorm() const { return tnorm_; }
    const std::string& name() const { return name_; }

    bool same_structure(const FuzzySpace& other) const;

    Json to_json() const;

    static constexpr double kDefaultLevelTol = 1e-10;
    static constexpr int kMaxBracketDoublings = 60;

private:
    std::string name_;
    CrispFunctional rho_;
    Profile profile_;
    PhiFunction phi_;
    TNorm tnorm_;
    double b_constant_;
};

// Samples bN1-bN5 plus the crisp-carrier invariants on random tuples
// (x, y, c, s, t). The b-triangle gate `bn4` uses the symmetric window
// N(x+y, K(s+t)); the skewed window N(x+y, s+Kt) is reported alongside as
// the informational `bn4_skew` finding (identical to the gate when K = 1).
// The NVI flag is reported as an informational finding.
AxiomReport axiom_check_bn(const FuzzySpace& sp, int sample_count, std::uint64_t seed, double tol);

}  // namespace fuzznorm
