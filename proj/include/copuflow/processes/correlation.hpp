#ifndef COPUFLOW_PROCESSES_CORRELATION_HPP
#define COPUFLOW_PROCESSES_CORRELATION_HPP

#include <Eigen/Dense>
#include <cmath>

#include "copuflow/core/matrix.hpp"
#include "copuflow/core/rng.hpp"
#include "copuflow/errors.hpp"

namespace copuflow {

/// Symmetric positive-definite matrix with unit diagonal, together with its
/// lower Cholesky factor and inverse. Immutable once built.
class CorrelationMatrix {
public:
    static CorrelationMatrix identity(Eigen::Index d) {
        if (d < 1) throw SizeError("CorrelationMatrix: need d >= 1");
        return CorrelationMatrix(Eigen::MatrixXd::Identity(d, d));
    }

    static CorrelationMatrix from_matrix(Eigen::MatrixXd sigma) {
        return CorrelationMatrix(std::move(sigma));
    }

    Eigen::Index d() const { return sigma_.rows(); }
    const Eigen::MatrixXd& sigma() const { return sigma_; }
    const Eigen::MatrixXd& chol() const { return chol_; }
    const Eigen::MatrixXd& inverse() const { return inverse_; }
    double log_det() const { return log_det_; }
    bool is_identity() const {
        return sigma_.isIdentity(0.0);
    }

private:
    explicit CorrelationMatrix(Eigen::MatrixXd sigma) : sigma_(std::move(sigma)) {
        if (sigma_.rows() != sigma_.cols() || sigma_.rows() < 1)
            throw SizeError("CorrelationMatrix: matrix must be square, d >= 1");
        if (!sigma_.isApprox(sigma_.transpose(), 1e-12))
            throw NumericError("CorrelationMatrix: matrix not symmetric");
        for (Eigen::Index i = 0; i < sigma_.rows(); ++i)
            if (std::fabs(sigma_(i, i) - 1.0) > 1e-12)
                throw NumericError("CorrelationMatrix: diagonal entry != 1");
        Eigen::LLT<Eigen::MatrixXd> llt(sigma_);
        if (llt.info() != Eigen::Success)
            throw NumericError("CorrelationMatrix: not positive definite");
        chol_ = llt.matrixL();
        inverse_ = llt.solve(Eigen::MatrixXd::Identity(d(), d()));
        log_det_ = 2.0 * chol_.diagonal().array().log().sum();
    }

    Eigen::MatrixXd sigma_, chol_, inverse_;
    double log_det_ = 0.0;
};

/// Nearest correlation matrix by alternating projections (PSD cone with a
/// Dykstra correction, then unit-diagonal restoration). Converges on a 1e-10
/// Frobenius change or fails after `max_iter` sweeps.
inline Eigen::MatrixXd nearest_correlation(const Eigen::MatrixXd& a,
                                           int max_iter = 100,
                                           double tol = 1e-10) {
    const Eigen::Index d = a.rows();
    if (a.cols() != d) throw SizeError("nearest_correlation: square input required");
    const double eig_floor = 1e-8;

    Eigen::MatrixXd y = 0.5 * (a + a.transpose());
    Eigen::MatrixXd ds = Eigen::MatrixXd::Zero(d, d);
    bool converged = false;
    for (int it = 0; it < max_iter; ++it) {
        Eigen::MatrixXd r = y - ds;
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(r);
        if (es.info() != Eigen::Success)
            throw NumericError("nearest_correlation: eigendecomposition failed");
        Eigen::VectorXd lam = es.eigenvalues().cwiseMax(eig_floor);
        Eigen::MatrixXd x =
            es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().transpose();
        ds = x - r;
        Eigen::MatrixXd y_next = x;
        y_next.diagonal().setOnes();
        const double change = (y_next - y).norm();
        y = y_next;
        if (change < tol) {
            converged = true;
            break;
        }
    }
    if (!converged)
        throw NumericError("nearest_correlation: no convergence within iteration cap");

    // The diagonal restoration can leave marginally indefinite output; verify
    // and re-symmetrise before handing it to the Cholesky.
    y = 0.5 * (y + y.transpose());
    y.diagonal().setOnes();
    Eigen::LLT<Eigen::MatrixXd> llt(y);
    if (llt.info() != Eigen::Success) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(y);
        Eigen::VectorXd lam = es.eigenvalues().cwiseMax(eig_floor);
        y = es.eigenvectors() * lam.asDiagonal() * es.eigenvectors().transpose();
        Eigen::VectorXd scale = y.diagonal().array().rsqrt();
        y = scale.asDiagonal() * y * scale.asDiagonal();
        y = 0.5 * (y + y.transpose());
        y.diagonal().setOnes();
        if (Eigen::LLT<Eigen::MatrixXd>(y).info() != Eigen::Success)
            throw NumericError("nearest_correlation: projection failed to reach PD");
    }
    return y;
}

enum class CorrelationSource { Identity, EmpiricalGaussianScale, RandomEigen };

/// Empirical correlation of Gaussian-scale data, off-diagonals clipped to
/// +/- (1 - 1e-6), projected to the nearest correlation matrix if needed.
inline CorrelationMatrix empirical_correlation(const CopulaMatrix& gaussian_data) {
    gaussian_data.require_scale(Scale::Gaussian, "empirical_correlation");
    const Eigen::Index n = gaussian_data.n(), d = gaussian_data.d();
    if (n < 2) throw SizeError("empirical_correlation: need n >= 2");

    Eigen::MatrixXd centered =
        gaussian_data.values.rowwise() - gaussian_data.values.colwise().mean();
    Eigen::MatrixXd cov =
        centered.transpose() * centered / static_cast<double>(n - 1);
    Eigen::VectorXd sd = cov.diagonal().array().sqrt();
    Eigen::MatrixXd corr(d, d);
    const double cap = 1.0 - 1e-6;
    for (Eigen::Index i = 0; i < d; ++i) {
        for (Eigen::Index j = 0; j < d; ++j) {
            if (i == j) {
                corr(i, j) = 1.0;
                continue;
            }
            const double denom = sd(i) * sd(j);
            double c = denom > 0.0 ? cov(i, j) / denom : 0.0;
            corr(i, j) = std::clamp(c, -cap, cap);
        }
    }
    corr = 0.5 * (corr + corr.transpose());
    if (Eigen::LLT<Eigen::MatrixXd>(corr).info() != Eigen::Success)
        corr = nearest_correlation(corr);
    return CorrelationMatrix::from_matrix(std::move(corr));
}

/// Random correlation with prescribed spectrum mass: d uniform eigenvalues
/// normalised to sum to d, rotated by a Haar orthogonal matrix and projected
/// to the nearest correlation matrix.
inline CorrelationMatrix random_eigen_correlation(Eigen::Index d, RngStream& rng) {
    if (d < 1) throw SizeError("random_eigen_correlation: need d >= 1");
    if (d == 1) return CorrelationMatrix::identity(1);

    Eigen::VectorXd lam(d);
    for (Eigen::Index i = 0; i < d; ++i) lam(i) = rng.uniform_open();
    lam *= static_cast<double>(d) / lam.sum();

    Eigen::MatrixXd g(d, d);
    for (Eigen::Index j = 0; j < d; ++j)
        for (Eigen::Index i = 0; i < d; ++i) g(i, j) = rng.normal();
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ();
    // fix the sign convention so the rotation is a deterministic function
    // of g rather than of the QR implementation
    Eigen::MatrixXd r = qr.matrixQR().triangularView<Eigen::Upper>();
    for (Eigen::Index j = 0; j < d; ++j)
        if (r(j, j) < 0) q.col(j) = -q.col(j);

    Eigen::MatrixXd a = q * lam.asDiagonal() * q.transpose();
    return CorrelationMatrix::from_matrix(nearest_correlation(a));
}

inline CorrelationMatrix build_correlation(Eigen::Index d, CorrelationSource source,
                                           const CopulaMatrix* gaussian_data = nullptr,
                                           RngStream* rng = nullptr) {
    switch (source) {
        case CorrelationSource::Identity:
            return CorrelationMatrix::identity(d);
        case CorrelationSource::EmpiricalGaussianScale:
            if (!gaussian_data)
                throw ConfigError("build_correlation: empirical source needs data");
            if (gaussian_data->d() != d)
                throw SizeError("build_correlation: data dimension mismatch");
            return empirical_correlation(*gaussian_data);
        case CorrelationSource::RandomEigen:
            if (!rng) throw ConfigError("build_correlation: random source needs rng");
            return random_eigen_correlation(d, *rng);
    }
    throw ConfigError("build_correlation: unknown source");
}

}  // namespace copuflow

#endif
