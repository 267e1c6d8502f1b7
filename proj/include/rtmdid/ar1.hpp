#pragma once

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace rtmdid {

/// Marginal variance and lag-1 correlation of an AR(1) error process.
/// Lag-k correlation is rho^k; rho in [0, 1) keeps the implied covariance
/// positive definite.
struct Ar1ErrorSpec {
  double sigma2 = 1.0;
  double rho = 0.0;

  void validate() const {
    if (!(sigma2 > 0.0)) {
      throw std::invalid_argument("Ar1ErrorSpec: sigma2 must be positive, got " +
                                  std::to_string(sigma2));
    }
    if (!(rho >= 0.0) || !(rho < 1.0)) {
      throw std::invalid_argument("Ar1ErrorSpec: rho must lie in [0, 1), got " +
                                  std::to_string(rho));
    }
  }
};

using CovMatrix = Eigen::MatrixXd;

struct NotPositiveDefinite : std::runtime_error {
  explicit NotPositiveDefinite(int pivot_index)
      : std::runtime_error("matrix is not positive definite (pivot " +
                           std::to_string(pivot_index) + ")"),
        pivot(pivot_index) {}
  int pivot;
};

/// Covariance with entry (i, j) = sigma2 * rho^|i-j|.
CovMatrix build_ar1_cov(int n_times, const Ar1ErrorSpec& spec);

/// Lower-triangular L with L*L^T = cov. Throws NotPositiveDefinite with the
/// failing pivot index; also rejects matrices asymmetric beyond 1e-12.
Eigen::MatrixXd cholesky(const CovMatrix& cov);

}  // namespace rtmdid
