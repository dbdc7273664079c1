#include "scenmine/smoothing_spline.hpp"

#include <cmath>
#include <cstddef>

namespace scenmine {
namespace {

// Solves the pentadiagonal system (R + lambda Q^T Q) gamma = Q^T y for the
// second-derivative coefficients of the natural smoothing spline, then
// returns the fitted values g = y - lambda Q gamma. Uniform knot spacing
// keeps every band constant.
std::vector<double> fit(const std::vector<double>& y, double h, double lambda,
                        double* rss_out) {
  const std::size_t n = y.size();
  const std::size_t m = n - 2;

  const double a0 = 2.0 * h / 3.0 + lambda * 6.0 / (h * h);
  const double a1 = h / 6.0 - lambda * 4.0 / (h * h);
  const double a2 = lambda / (h * h);

  std::vector<double> b(m);
  for (std::size_t i = 0; i < m; ++i) {
    b[i] = (y[i] - 2.0 * y[i + 1] + y[i + 2]) / h;
  }

  // LDL^T factorization, bandwidth 2.
  std::vector<double> d(m), e(m, 0.0), f(m, 0.0);
  for (std::size_t i = 0; i < m; ++i) {
    double diag = a0;
    if (i >= 2) {
      f[i] = a2 / d[i - 2];
      diag -= f[i] * f[i] * d[i - 2];
    }
    if (i >= 1) {
      double off = a1;
      if (i >= 2) off -= f[i] * e[i - 1] * d[i - 2];
      e[i] = off / d[i - 1];
      diag -= e[i] * e[i] * d[i - 1];
    }
    d[i] = diag;
  }

  std::vector<double> gamma(m);
  for (std::size_t i = 0; i < m; ++i) {
    double z = b[i];
    if (i >= 1) z -= e[i] * gamma[i - 1];
    if (i >= 2) z -= f[i] * gamma[i - 2];
    gamma[i] = z;
  }
  for (std::size_t i = 0; i < m; ++i) gamma[i] /= d[i];
  for (std::size_t i = m; i > 0; --i) {
    const std::size_t k = i - 1;
    if (k + 1 < m) gamma[k] -= e[k + 1] * gamma[k + 1];
    if (k + 2 < m) gamma[k] -= f[k + 2] * gamma[k + 2];
  }

  std::vector<double> g(n);
  double rss = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    double q = 0.0;
    if (k < m) q += gamma[k];
    if (k >= 1 && k - 1 < m) q -= 2.0 * gamma[k - 1];
    if (k >= 2 && k - 2 < m) q += gamma[k - 2];
    const double resid = lambda * q / h;
    g[k] = y[k] - resid;
    rss += resid * resid;
  }
  if (rss_out) *rss_out = rss;
  return g;
}

}  // namespace

std::vector<double> smooth_series_fixed_lambda(const std::vector<double>& y, double spacing,
                                               double lambda) {
  if (y.size() < 4 || lambda <= 0.0) return y;
  return fit(y, spacing, lambda, nullptr);
}

std::vector<double> smooth_series(const std::vector<double>& y, double spacing,
                                  double noise_sigma) {
  const std::size_t n = y.size();
  if (n < 4 || noise_sigma <= 0.0) return y;

  const double target = static_cast<double>(n) * noise_sigma * noise_sigma;

  double lo = 1e-10, hi = 1e10;
  double rss_hi = 0.0;
  std::vector<double> g_hi = fit(y, spacing, hi, &rss_hi);
  if (rss_hi <= target) {
    // Data is smoother than the assumed noise floor; the near-linear fit is
    // as far as the penalty can push.
    return g_hi;
  }
  double rss_lo = 0.0;
  fit(y, spacing, lo, &rss_lo);
  if (rss_lo >= target) {
    return y;
  }

  // RSS(lambda) is monotone increasing; bisect on log lambda.
  std::vector<double> g;
  for (int iter = 0; iter < 60; ++iter) {
    const double mid = std::sqrt(lo * hi);
    double rss = 0.0;
    g = fit(y, spacing, mid, &rss);
    if (std::abs(rss - target) <= 1e-3 * target) break;
    if (rss > target) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return g;
}

}  // namespace scenmine
