#ifndef COPUFLOW_CORE_SCALES_HPP
#define COPUFLOW_CORE_SCALES_HPP

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <numeric>
#include <vector>

#include "copuflow/core/matrix.hpp"
#include "copuflow/core/normal.hpp"

namespace copuflow {

// Copula-scale values are pulled into [kCopulaClampLo, 1-kCopulaClampLo]
// before applying the normal quantile, keeping the Gaussian scale finite
// (|z| <= ~5.2). Each clamped entry bumps a global counter that callers can
// surface as a warning.
inline constexpr double kCopulaClampLo = 1e-7;

inline std::atomic<std::uint64_t>& clamp_counter() {
    static std::atomic<std::uint64_t> counter{0};
    return counter;
}

inline double clamp_copula(double u) {
    if (u < kCopulaClampLo || u > 1.0 - kCopulaClampLo) {
        clamp_counter().fetch_add(1, std::memory_order_relaxed);
        return std::clamp(u, kCopulaClampLo, 1.0 - kCopulaClampLo);
    }
    return u;
}

/// Entrywise normal quantile: copula scale -> Gaussian scale.
inline CopulaMatrix to_gaussian_scale(const CopulaMatrix& m) {
    m.require_scale(Scale::Copula, "to_gaussian_scale");
    Eigen::MatrixXd z(m.n(), m.d());
    for (Eigen::Index j = 0; j < m.d(); ++j)
        for (Eigen::Index i = 0; i < m.n(); ++i)
            z(i, j) = std_normal_quantile(clamp_copula(m.values(i, j)));
    return {std::move(z), Scale::Gaussian};
}

/// Entrywise normal CDF: Gaussian scale -> copula scale.
inline CopulaMatrix to_copula_scale(const CopulaMatrix& m) {
    m.require_scale(Scale::Gaussian, "to_copula_scale");
    Eigen::MatrixXd u(m.n(), m.d());
    for (Eigen::Index j = 0; j < m.d(); ++j)
        for (Eigen::Index i = 0; i < m.n(); ++i)
            u(i, j) = std_normal_cdf(m.values(i, j));
    return {std::move(u), Scale::Copula};
}

/// Per-column empirical-CDF transform: rank/(n+1), ties by average rank.
/// The n+1 denominator keeps every output strictly inside (0,1).
inline CopulaMatrix pseudo_observations(const CopulaMatrix& data) {
    data.require_scale(Scale::Data, "pseudo_observations");
    const Eigen::Index n = data.n(), d = data.d();
    if (n < 2) throw SizeError("pseudo_observations: need n >= 2");

    Eigen::MatrixXd u(n, d);
    std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
    for (Eigen::Index j = 0; j < d; ++j) {
        std::iota(order.begin(), order.end(), Eigen::Index{0});
        std::sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
            return data.values(a, j) < data.values(b, j);
        });
        Eigen::Index i = 0;
        while (i < n) {
            Eigen::Index k = i;
            while (k + 1 < n &&
                   data.values(order[k + 1], j) == data.values(order[i], j))
                ++k;
            // ranks are 1-based; ties share the average rank of their block
            const double avg_rank = 0.5 * static_cast<double>(i + k) + 1.0;
            for (Eigen::Index t = i; t <= k; ++t)
                u(order[t], j) = avg_rank / static_cast<double>(n + 1);
            i = k + 1;
        }
    }
    return {std::move(u), Scale::Copula};
}

}  // namespace copuflow

#endif
