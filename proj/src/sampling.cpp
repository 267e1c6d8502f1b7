#include "rtmdid/sampling.hpp"

#include <cmath>
#include <stdexcept>

namespace rtmdid {

Eigen::VectorXd sample_mvn(const Eigen::VectorXd& mean, const Eigen::MatrixXd& factor,
                           RngStream& rng) {
  if (factor.rows() != factor.cols() || factor.rows() != mean.size()) {
    throw std::invalid_argument("sample_mvn: mean length must match factor dimension");
  }
  Eigen::VectorXd z(mean.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    z(i) = rng.normal();
  }
  return mean + factor * z;
}

Eigen::VectorXd sample_mvt(const Eigen::VectorXd& mean, const Eigen::MatrixXd& factor,
                           double df, RngStream& rng, bool rescale) {
  if (!(df > 0.0)) {
    throw std::invalid_argument("sample_mvt: df must be positive");
  }
  if (std::isinf(df)) {
    return sample_mvn(mean, factor, rng);
  }
  if (factor.rows() != factor.cols() || factor.rows() != mean.size()) {
    throw std::invalid_argument("sample_mvt: mean length must match factor dimension");
  }
  double adjust = 1.0;
  if (rescale) {
    if (!(df > 2.0)) {
      throw std::invalid_argument("sample_mvt: rescaling to unit variance requires df > 2");
    }
    adjust = std::sqrt((df - 2.0) / df);
  }
  Eigen::VectorXd z(mean.size());
  for (Eigen::Index i = 0; i < z.size(); ++i) {
    z(i) = rng.normal();
  }
  const double w = rng.chi_square(df);
  const double scale = adjust / std::sqrt(w / df);
  return mean + scale * (factor * z);
}

}  // namespace rtmdid
