#pragma once

#include <span>
#include <vector>

namespace forman::stats {

double mean(std::span<const double> xs);
// Population standard deviation (divides by n).
double stddev(std::span<const double> xs);
// Linear interpolation between order statistics, q in [0, 1].
double quantile(std::span<const double> xs, double q);
// Fisher-Pearson g1; 0 for a constant sample.
double skewness(std::span<const double> xs);
// g2 = m4/m2^2 - 3; 0 for a constant sample.
double excess_kurtosis(std::span<const double> xs);

// Average ranks, ties sharing the mean of their positions (1-based).
std::vector<double> ranks(std::span<const double> xs);
double pearson(std::span<const double> xs, std::span<const double> ys);
double spearman(std::span<const double> xs, std::span<const double> ys);

// Wasserstein-1 distance between the empirical distributions of two samples.
double wasserstein1(std::span<const double> xs, std::span<const double> ys);

}  // namespace forman::stats
