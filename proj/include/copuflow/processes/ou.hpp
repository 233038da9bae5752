#ifndef COPUFLOW_PROCESSES_OU_HPP
#define COPUFLOW_PROCESSES_OU_HPP

#include <Eigen/Dense>
#include <cmath>
#include <optional>

#include "copuflow/core/matrix.hpp"
#include "copuflow/core/rng.hpp"
#include "copuflow/processes/correlation.hpp"

namespace copuflow {

/// Time-t law of the marginal-preserving OU process, one exact draw per row:
///   z_t = e^{-t} z_0 + sqrt(1 - e^{-2t}) eps,  eps ~ N(0, I) or N(0, Sigma).
/// `eps` carries pre-drawn standard normal noise; when a correlation is given
/// it is coloured by the Cholesky factor. No SDE integration takes place.
inline CopulaMatrix ou_forward_with_noise(const CopulaMatrix& z0, double t,
                                          const CorrelationMatrix* sigma,
                                          const Eigen::MatrixXd& eps) {
    z0.require_scale(Scale::Gaussian, "ou_forward");
    if (!(t >= 0.0)) throw DomainError("ou_forward: need t >= 0");
    if (eps.rows() != z0.n() || eps.cols() != z0.d())
        throw SizeError("ou_forward: noise shape mismatch");
    if (sigma && sigma->d() != z0.d())
        throw SizeError("ou_forward: correlation dimension mismatch");

    const double decay = std::exp(-t);
    const double spread = std::sqrt(-std::expm1(-2.0 * t));
    Eigen::MatrixXd z = decay * z0.values;
    if (spread > 0.0) {
        if (sigma && !sigma->is_identity())
            z.noalias() += spread * (eps * sigma->chol().transpose());
        else
            z += spread * eps;
    }
    return {std::move(z), Scale::Gaussian};
}

inline CopulaMatrix ou_forward(const CopulaMatrix& z0, double t,
                               const CorrelationMatrix* sigma, RngStream& rng) {
    Eigen::MatrixXd eps(z0.n(), z0.d());
    for (Eigen::Index i = 0; i < eps.rows(); ++i)
        for (Eigen::Index j = 0; j < eps.cols(); ++j) eps(i, j) = rng.normal();
    return ou_forward_with_noise(z0, t, sigma, eps);
}

inline CopulaMatrix ou_forward(const CopulaMatrix& z0, double t, RngStream& rng) {
    return ou_forward(z0, t, nullptr, rng);
}

}  // namespace copuflow

#endif
