#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "core/axiom_report.hpp"

namespace fuzznorm {

enum class TNormKind { StandardIntersection, AlgebraicProduct, BoundedDifference, Drastic, Custom };
enum class ContinuityClass { Continuous, LowerSemicontinuous, None };

const char* to_string(TNormKind k);
const char* to_string(ContinuityClass c);

// Binary operation on [0,1]: associative, commutative, monotone, with
// identity 1. The continuity class is declared, not inferred; the axiom
// checker probes it by sampling.
class TNorm {
public:
    static TNorm standard_intersection();
    static TNorm algebraic_product();
    static TNorm bounded_difference();
    static TNorm drastic();
    static TNorm custom(std::string name,
                        std::function<double(double, double)> fn,
                        ContinuityClass declared);
    // Parses config names ("standard-intersection", "algebraic-product",
    // "bounded-difference", "drastic"); throws ConfigError on unknown names.
    static TNorm from_name(const std::string& name);

    double eval(double a, double b) const;  // throws std::domain_error outside [0,1]^2
    double power(double a, int n) const;    // n-fold fold a * a * ... * a, n >= 1

    TNormKind kind() const { return kind_; }
    ContinuityClass continuity_class() const { return continuity_; }
    bool lower_semicontinuous() const { return continuity_ != ContinuityClass::None; }
    const std::string& name() const { return name_; }

private:
    TNorm(TNormKind kind, ContinuityClass cont, std::string name,
          std::function<double(double, double)> fn);

    TNormKind kind_;
    ContinuityClass continuity_;
    std::string name_;
    std::function<double(double, double)> fn_;  // only set for Custom
};

// Samples the defining axioms plus the (T1) positivity remark ("a > 0
// implies a*a > 0", surfaced but never gating) and, for declared
// lower-semicontinuous custom t-norms, an approach-from-below probe.
// Canonical probe points come first so witnesses are stable.
AxiomReport tnorm_axiom_check(const TNorm& t, int sample_count, std::uint64_t seed, double tol);

enum class PhiKind { Abs, AbsPower, RationalExample, Custom };

const char* to_string(PhiKind k);

// Even scalar reweighting function: phi(1) = 1, strictly increasing and
// continuous on (0, inf), phi -> 0 at 0 and -> inf at inf. Governs scalar
// multiplication in the fuzzy norm.
class PhiFunction {
public:
    static PhiFunction abs();
    static PhiFunction abs_power(double p);      // p > 0
    static PhiFunction rational_example(int n);  // 2 a^{2n} / (|a| + 1), n >= 1
    static PhiFunction custom(std::string name, std::function<double(double)> fn);

    double operator()(double c) const;
    // Returns c > 0 with |phi(c) - y| <= tol, by bisection on the strictly
    // monotone branch; throws std::domain_error when y cannot be bracketed.
    double inverse(double y, double tol) const;

    PhiKind kind() const { return kind_; }
    // Exponent p of the |.|^p family (1 for Abs). Only meaningful when
    // is_power() is true.
    double exponent() const { return exponent_; }
    bool is_power() const { return kind_ == PhiKind::Abs || kind_ == PhiKind::AbsPower; }
    const std::string& name() const { return name_; }

    bool same_as(const PhiFunction& other) const;

private:
    PhiFunction(PhiKind kind, std::string name, double exponent, int n,
                std::function<double(double)> fn);

    PhiKind kind_;
    std::string name_;
    double exponent_ = 1.0;
    int rational_n_ = 1;
    std::function<double(double)> fn_;  // only set for Custom
};

// Checks (phi1)-(phi4) on a log-spaced grid over [1e-6, 1e6]. The limits in
// (phi4) are finite-horizon: phi(1e-6) < 1e-3 and phi(1e6) > 1e3.
AxiomReport phi_axiom_check(const PhiFunction& f, int grid_size, double tol);

}  // namespace fuzznorm
