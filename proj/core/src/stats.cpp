#include "nsw/stats.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/distributions/students_t.hpp>

namespace nsw::stats {

double mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  double s = 0.0;
  for (double x : xs) s += x;
  return s / double(xs.size());
}

double stdev(std::span<const double> xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return std::sqrt(s / double(xs.size() - 1));
}

double stdev_pop(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  const double m = mean(xs);
  double s = 0.0;
  for (double x : xs) s += (x - m) * (x - m);
  return std::sqrt(s / double(xs.size()));
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  const std::size_t n = std::min(xs.size(), ys.size());
  if (n < 2) return 0.0;
  const double mx = mean(xs.subspan(0, n));
  const double my = mean(ys.subspan(0, n));
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  double r = sxy / std::sqrt(sxx * syy);
  return std::clamp(r, -1.0, 1.0);
}

bool pearson_significant(double r, std::size_t n, double alpha) {
  if (n < 3) return false;
  return std::abs(r) > pearson_critical(n, alpha);
}

double pearson_critical(std::size_t n, double alpha) {
  if (n < 3) return 1.0;
  const double df = double(n - 2);
  boost::math::students_t dist(df);
  const double t = boost::math::quantile(dist, 1.0 - alpha / 2.0);
  return t / std::sqrt(df + t * t);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

double kolmogorov_cdf(double x) {
  if (x <= 0.0) return 0.0;
  // 1 - 2 sum_{j>=1} (-1)^{j-1} exp(-2 j^2 x^2)
  double s = 0.0;
  double sign = 1.0;
  for (int j = 1; j <= 100; ++j) {
    const double term = std::exp(-2.0 * double(j) * double(j) * x * x);
    s += sign * term;
    sign = -sign;
    if (term < 1e-16) break;
  }
  return std::clamp(1.0 - 2.0 * s, 0.0, 1.0);
}

double kolmogorov_critical(double alpha) {
  double lo = 1e-6, hi = 4.0;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (1.0 - kolmogorov_cdf(mid) > alpha)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

double ks_statistic_normal(std::vector<double> xs, double mu, double sigma) {
  if (xs.empty()) return 0.0;
  std::sort(xs.begin(), xs.end());
  const double n = double(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = sigma > 0.0 ? normal_cdf((xs[i] - mu) / sigma)
                                 : (xs[i] >= mu ? 1.0 : 0.0);
    d = std::max(d, std::max((double(i) + 1.0) / n - f, f - double(i) / n));
  }
  return d;
}

}  // namespace nsw::stats
