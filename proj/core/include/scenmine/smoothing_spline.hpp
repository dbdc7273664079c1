#ifndef SCENMINE_SMOOTHING_SPLINE_HPP_
#define SCENMINE_SMOOTHING_SPLINE_HPP_

#include <vector>

namespace scenmine {

// Values of the natural cubic smoothing spline at uniformly spaced sample
// instants. The roughness penalty is chosen so the residual sum of squares
// matches n * noise_sigma^2 (capped at the roughest/smoothest extremes).
//
// Reproduces constant and linear series exactly. Series shorter than 4
// samples, or noise_sigma <= 0, pass through unchanged.
std::vector<double> smooth_series(const std::vector<double>& y, double spacing,
                                  double noise_sigma);

// Same spline with a fixed penalty; exposed for tests.
std::vector<double> smooth_series_fixed_lambda(const std::vector<double>& y, double spacing,
                                               double lambda);

}  // namespace scenmine

#endif  // SCENMINE_SMOOTHING_SPLINE_HPP_
