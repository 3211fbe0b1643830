#include "core/profile.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fuzznorm {

const char* to_string(ProfileKind k) {
    switch (k) {
        case ProfileKind::Step: return "step";
        case ProfileKind::Reciprocal: return "reciprocal";
        case ProfileKind::PiecewiseLinear: return "piecewise-linear";
    }
    return "?";
}

Profile::Profile(ProfileKind kind, double h, std::vector<std::pair<double, double>> knots)
    : kind_(kind), h_(h), knots_(std::move(knots)) {}

Profile Profile::step(double h) {
    if (!(h >= 0.0 && h < 1.0)) throw std::invalid_argument("step profile requires h in [0,1)");
    return Profile(ProfileKind::Step, h, {});
}

Profile Profile::reciprocal() { return Profile(ProfileKind::Reciprocal, 0.0, {}); }

Profile Profile::piecewise_linear(std::vector<std::pair<double, double>> knots) {
    if (knots.size() < 2) throw std::invalid_argument("piecewise profile needs >= 2 knots");
    for (std::size_t i = 0; i < knots.size(); ++i) {
        auto [u, v] = knots[i];
        if (!(u > 0.0)) throw std::invalid_argument("piecewise profile knot abscissae must be > 0");
        if (!(v >= 0.0 && v <= 1.0))
            throw std::invalid_argument("piecewise profile values must lie in [0,1]");
        if (i > 0) {
            if (!(u > knots[i - 1].first))
                throw std::invalid_argument("piecewise profile knots must be strictly increasing");
            if (v < knots[i - 1].second)
                throw std::invalid_argument("piecewise profile values must be non-decreasing");
        }
    }
    if (knots.back().second != 1.0)
        throw std::invalid_argument("piecewise profile must reach 1 at its last knot");
    return Profile(ProfileKind::PiecewiseLinear, 0.0, std::move(knots));
}

double Profile::value(double u) const {
    if (!(u > 0.0)) throw std::domain_error("profile argument must be > 0");
    switch (kind_) {
        case ProfileKind::Step:
            return u > 1.0 ? 1.0 : h_;
        case ProfileKind::Reciprocal:
            return u <= 1.0 ? 0.0 : 1.0 - 1.0 / u;
        case ProfileKind::PiecewiseLinear: {
            if (u <= knots_.front().first) return knots_.front().second;
            if (u >= knots_.back().first) return 1.0;
            auto it = std::upper_bound(knots_.begin(), knots_.end(), u,
                                       [](double x, const auto& k) { return x < k.first; });
            auto [u1, v1] = *it;
            auto [u0, v0] = *(it - 1);
            return v0 + (v1 - v0) * (u - u0) / (u1 - u0);
        }
    }
    return 0.0;
}

double Profile::quantile(double alpha, bool strict) const {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::domain_error("quantile level must lie in (0,1)");
    switch (kind_) {
        case ProfileKind::Step:
            if (strict) return alpha < h_ ? 0.0 : 1.0;
            return alpha <= h_ ? 0.0 : 1.0;
        case ProfileKind::Reciprocal:
            // both variants coincide: s is continuous and strictly
            // increasing wherever it is in (0,1)
            return 1.0 / (1.0 - alpha);
        case ProfileKind::PiecewiseLinear: {
            double v0 = knots_.front().second;
            if (strict ? v0 > alpha : v0 >= alpha) return 0.0;
            for (std::size_t i = 1; i < knots_.size(); ++i) {
                auto [ua, va] = knots_[i - 1];
                auto [ub, vb] = knots_[i];
                bool reaches = strict ? vb > alpha : vb >= alpha;
                if (!reaches) continue;
                // earlier segments failed the test, so va <= alpha < vb here
                return ua + (alpha - va) * (ub - ua) / (vb - va);
            }
            return knots_.back().first;  // alpha < 1 = v_last, unreachable
        }
    }
    return 0.0;
}

bool Profile::vanishes_somewhere() const {
    switch (kind_) {
        case ProfileKind::Step: return h_ == 0.0;
        case ProfileKind::Reciprocal: return true;
        case ProfileKind::PiecewiseLinear: return knots_.front().second == 0.0;
    }
    return false;
}

Json Profile::to_json() const {
    Json j;
    j["kind"] = to_string(kind_);
    if (kind_ == ProfileKind::Step) j["h"] = h_;
    if (kind_ == ProfileKind::PiecewiseLinear) {
        Json arr = Json::array();
        for (auto [u, v] : knots_) arr.push_back(Json::array({u, v}));
        j["knots"] = arr;
    }
    return j;
}

bool Profile::same_as(const Profile& other) const {
    return kind_ == other.kind_ && h_ == other.h_ && knots_ == other.knots_;
}

}  // namespace fuzznorm
