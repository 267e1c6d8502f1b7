#include "rtmdid/ar1.hpp"

#include <cmath>

namespace rtmdid {

CovMatrix build_ar1_cov(int n_times, const Ar1ErrorSpec& spec) {
  if (n_times < 1) {
    throw std::invalid_argument("build_ar1_cov: n_times must be >= 1");
  }
  spec.validate();
  Eigen::VectorXd pow(n_times);
  pow(0) = 1.0;
  for (int k = 1; k < n_times; ++k) {
    pow(k) = pow(k - 1) * spec.rho;
  }
  CovMatrix cov(n_times, n_times);
  for (int i = 0; i < n_times; ++i) {
    for (int j = 0; j < n_times; ++j) {
      cov(i, j) = spec.sigma2 * pow(std::abs(i - j));
    }
  }
  return cov;
}

Eigen::MatrixXd cholesky(const CovMatrix& cov) {
  const auto n = cov.rows();
  if (n != cov.cols()) {
    throw std::invalid_argument("cholesky: matrix must be square");
  }
  const double scale = std::max(1.0, cov.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < i; ++j) {
      if (std::abs(cov(i, j) - cov(j, i)) > 1e-12 * scale) {
        throw std::invalid_argument("cholesky: matrix is not symmetric within 1e-12");
      }
    }
  }

  Eigen::MatrixXd L = Eigen::MatrixXd::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double diag = cov(j, j);
    for (Eigen::Index k = 0; k < j; ++k) {
      diag -= L(j, k) * L(j, k);
    }
    if (!(diag > 0.0)) {
      throw NotPositiveDefinite(static_cast<int>(j));
    }
    L(j, j) = std::sqrt(diag);
    for (Eigen::Index i = j + 1; i < n; ++i) {
      double s = cov(i, j);
      for (Eigen::Index k = 0; k < j; ++k) {
        s -= L(i, k) * L(j, k);
      }
      L(i, j) = s / L(j, j);
    }
  }
  return L;
}

}  // namespace rtmdid
