#ifndef COPUFLOW_CORE_MATRIX_HPP
#define COPUFLOW_CORE_MATRIX_HPP

#include <Eigen/Dense>
#include <string>

#include "copuflow/errors.hpp"

namespace copuflow {

/// Which representation a batch of observations is in.
enum class Scale { Data, Copula, Gaussian };

inline const char* scale_name(Scale s) {
    switch (s) {
        case Scale::Data: return "data";
        case Scale::Copula: return "copula";
        case Scale::Gaussian: return "gaussian";
    }
    return "?";
}

/// An n x d batch of observations with a scale tag. Copula-scale entries must
/// lie strictly inside (0,1); every scale requires finite entries and a
/// non-empty shape.
struct CopulaMatrix {
    Eigen::MatrixXd values;
    Scale scale = Scale::Data;

    CopulaMatrix() = default;
    CopulaMatrix(Eigen::MatrixXd v, Scale s) : values(std::move(v)), scale(s) {
        validate();
    }

    Eigen::Index n() const { return values.rows(); }
    Eigen::Index d() const { return values.cols(); }

    void validate() const {
        if (values.rows() < 1 || values.cols() < 1)
            throw SizeError("CopulaMatrix: need n >= 1 and d >= 1");
        if (!values.allFinite())
            throw DomainError("CopulaMatrix: non-finite entry on " +
                              std::string(scale_name(scale)) + " scale");
        if (scale == Scale::Copula &&
            ((values.array() <= 0.0).any() || (values.array() >= 1.0).any()))
            throw DomainError("CopulaMatrix: copula-scale entries must lie in (0,1)");
    }

    void require_scale(Scale s, const char* op) const {
        if (scale != s)
            throw DomainError(std::string(op) + ": expected " + scale_name(s) +
                              "-scale input, got " + scale_name(scale));
    }
};

}  // namespace copuflow

#endif
