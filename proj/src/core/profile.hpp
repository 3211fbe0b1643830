#pragma once

#include <utility>
#include <vector>

#include "core/common.hpp"

namespace fuzznorm {

enum class ProfileKind { Step, Reciprocal, PiecewiseLinear };

const char* to_string(ProfileKind k);

// Non-decreasing s : (0, inf) -> [0, 1] with s(u) -> 1 as u -> inf; the
// induced fuzzy norm is N(x, t) = s(t / rho(x)). Quantiles are closed-form
// and serve as the oracle for the bisection-based level infimum.
class Profile {
public:
    // s(u) = h on (0, 1], 1 beyond; h in [0, 1). The value at u = 1 is the
    // left value h, keeping s non-decreasing.
    static Profile step(double h);
    // s(u) = max(0, 1 - 1/u)
    static Profile reciprocal();
    // Knots (u_i, v_i): u strictly increasing and positive, v non-decreasing
    // in [0, 1] with v_last = 1. s is v_0 below the first knot, linear in
    // between, and 1 beyond the last.
    static Profile piecewise_linear(std::vector<std::pair<double, double>> knots);

    double value(double u) const;  // u > 0

    // q(alpha) = inf{u > 0 : s(u) >= alpha}, or with strict ">" when
    // strict is set; alpha in (0, 1).
    double quantile(double alpha, bool strict) const;

    bool vanishes_somewhere() const;  // s(u) == 0 for some u > 0

    ProfileKind kind() const { return kind_; }
    double step_h() const { return h_; }

    Json to_json() const;
    bool same_as(const Profile& other) const;

private:
    Profile(ProfileKind kind, double h, std::vector<std::pair<double, double>> knots);

    ProfileKind kind_;
    double h_ = 0.0;
    std::vector<std::pair<double, double>> knots_;
};

}  // namespace fuzznorm
