#pragma once

#include <Eigen/Dense>

#include "rtmdid/rng.hpp"

namespace rtmdid {

/// mean + L*z with z i.i.d. standard normal drawn from rng. The factor is the
/// lower Cholesky factor of the target covariance (a zero factor degenerates
/// to the mean, which some tests rely on).
Eigen::VectorXd sample_mvn(const Eigen::VectorXd& mean, const Eigen::MatrixXd& factor,
                           RngStream& rng);

/// Multivariate t with scale matrix L*L^T: mean + (L*z) / sqrt(w/df),
/// w ~ chi-square(df). An infinite df falls back to sample_mvn draw-for-draw.
/// Marginal variance is sigma2 * df/(df-2); `rescale` multiplies by
/// sqrt((df-2)/df) to restore unit-variance margins (requires df > 2).
Eigen::VectorXd sample_mvt(const Eigen::VectorXd& mean, const Eigen::MatrixXd& factor,
                           double df, RngStream& rng, bool rescale = false);

}  // namespace rtmdid
