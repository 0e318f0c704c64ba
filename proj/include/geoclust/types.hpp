#pragma once

#include <Eigen/Dense>
#include <cmath>

#include "geoclust/error.hpp"

namespace geoclust {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

inline Vector uniform_weights(Index n) { return Vector::Constant(n, 1.0 / static_cast<double>(n)); }

// Observation weights: nonnegative, summing to 1 within 1e-12.
inline void validate_weights(const Vector& w) {
    if (w.size() == 0) throw input_error("weights: empty vector");
    for (Index i = 0; i < w.size(); ++i) {
        if (!std::isfinite(w[i]) || w[i] < 0.0)
            throw input_error("weights: entry " + std::to_string(i) + " is negative or not finite");
    }
    if (std::abs(w.sum() - 1.0) > 1e-12) throw input_error("weights: must sum to 1 within 1e-12");
}

}  // namespace geoclust
