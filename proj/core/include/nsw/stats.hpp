#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace nsw::stats {

double mean(std::span<const double> xs);

/// Sample standard deviation (n-1 denominator); 0 for fewer than 2 points.
double stdev(std::span<const double> xs);

/// Population standard deviation (n denominator); 0 for empty input.
double stdev_pop(std::span<const double> xs);

/// Pearson correlation; 0 when either side has zero variance.
double pearson(std::span<const double> xs, std::span<const double> ys);

/// Two-sided significance of a Pearson coefficient via the t statistic with
/// n-2 degrees of freedom.
bool pearson_significant(double r, std::size_t n, double alpha);

/// Critical |r| above which a correlation on n points is significant at the
/// two-sided level alpha.
double pearson_critical(std::size_t n, double alpha);

/// Standard normal CDF.
double normal_cdf(double x);

/// CDF of the Kolmogorov distribution K, P(sqrt(N) D <= x).
double kolmogorov_cdf(double x);

/// Upper quantile k(alpha): smallest x with 1 - K(x) <= alpha.
double kolmogorov_critical(double alpha);

/// One-sample Kolmogorov statistic of xs against Normal(mu, sigma).
double ks_statistic_normal(std::vector<double> xs, double mu, double sigma);

}  // namespace nsw::stats
