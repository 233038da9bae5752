#ifndef COPUFLOW_PROCESSES_REFLECTION_HPP
#define COPUFLOW_PROCESSES_REFLECTION_HPP

#include <Eigen/Dense>
#include <cmath>
#include <utility>

#include "copuflow/core/matrix.hpp"
#include "copuflow/errors.hpp"

namespace copuflow {

/// Positions and velocities of a batch evolving under the reflection process.
struct VelocityState {
    Eigen::MatrixXd positions;   // n x d, entries in [0,1]
    Eigen::MatrixXd velocities;  // n x d
    double time = 0.0;
};

/// Univariate hypercube reflection: folds x back into [0,1], flipping the
/// velocity sign on odd periods. 2-periodic and measure-preserving in x.
inline std::pair<double, double> reflect_1d(double x, double y) {
    if (!std::isfinite(x) || !std::isfinite(y))
        throw DomainError("reflect_1d: non-finite input");
    const double f = std::floor(x);
    const double frac = x - f;
    const bool even = std::fmod(f, 2.0) == 0.0;
    return even ? std::pair{frac, y} : std::pair{1.0 - frac, -y};
}

/// Position branch only; used by the sampler, which re-predicts velocities.
inline double reflect_position(double x) {
    const double f = std::floor(x);
    const double frac = x - f;
    return std::fmod(f, 2.0) == 0.0 ? frac : 1.0 - frac;
}

/// Reflection process at time t: (u_t, v_t) = R(u_0 + t v_0, v_0) per entry.
inline VelocityState reflection_forward(const CopulaMatrix& u0,
                                        const Eigen::MatrixXd& v0, double t) {
    u0.require_scale(Scale::Copula, "reflection_forward");
    if (!(t >= 0.0)) throw DomainError("reflection_forward: need t >= 0");
    if (v0.rows() != u0.n() || v0.cols() != u0.d())
        throw SizeError("reflection_forward: velocity shape mismatch");
    if (!v0.allFinite())
        throw DomainError("reflection_forward: non-finite velocity");

    VelocityState state;
    state.positions.resize(u0.n(), u0.d());
    state.velocities.resize(u0.n(), u0.d());
    state.time = t;
    for (Eigen::Index j = 0; j < u0.d(); ++j) {
        for (Eigen::Index i = 0; i < u0.n(); ++i) {
            auto [p, v] = reflect_1d(u0.values(i, j) + t * v0(i, j), v0(i, j));
            state.positions(i, j) = p;
            state.velocities(i, j) = v;
        }
    }
    return state;
}

}  // namespace copuflow

#endif
