#include "forman/stats.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace forman::stats {

double mean(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  return std::accumulate(xs.begin(), xs.end(), 0.0) / static_cast<double>(xs.size());
}

namespace {

double central_moment(std::span<const double> xs, double mu, int k) {
  double s = 0.0;
  for (const double x : xs) s += std::pow(x - mu, k);
  return s / static_cast<double>(xs.size());
}

}  // namespace

double stddev(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  return std::sqrt(central_moment(xs, mean(xs), 2));
}

double quantile(std::span<const double> xs, double q) {
  if (xs.empty()) return 0.0;
  std::vector<double> sorted(xs.begin(), xs.end());
  std::sort(sorted.begin(), sorted.end());
  const double pos = q * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const auto hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

double skewness(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  const double mu = mean(xs);
  const double m2 = central_moment(xs, mu, 2);
  if (m2 == 0.0) return 0.0;
  return central_moment(xs, mu, 3) / std::pow(m2, 1.5);
}

double excess_kurtosis(std::span<const double> xs) {
  if (xs.empty()) return 0.0;
  const double mu = mean(xs);
  const double m2 = central_moment(xs, mu, 2);
  if (m2 == 0.0) return 0.0;
  return central_moment(xs, mu, 4) / (m2 * m2) - 3.0;
}

std::vector<double> ranks(std::span<const double> xs) {
  std::vector<std::size_t> order(xs.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return xs[a] < xs[b]; });
  std::vector<double> r(xs.size());
  std::size_t i = 0;
  while (i < order.size()) {
    std::size_t j = i;
    while (j + 1 < order.size() && xs[order[j + 1]] == xs[order[i]]) ++j;
    const double avg = (static_cast<double>(i) + static_cast<double>(j)) / 2.0 + 1.0;
    for (std::size_t k = i; k <= j; ++k) r[order[k]] = avg;
    i = j + 1;
  }
  return r;
}

double pearson(std::span<const double> xs, std::span<const double> ys) {
  const double mx = mean(xs);
  const double my = mean(ys);
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

double spearman(std::span<const double> xs, std::span<const double> ys) {
  const auto rx = ranks(xs);
  const auto ry = ranks(ys);
  return pearson(rx, ry);
}

double wasserstein1(std::span<const double> xs, std::span<const double> ys) {
  if (xs.empty() || ys.empty()) return 0.0;
  std::vector<double> a(xs.begin(), xs.end());
  std::vector<double> b(ys.begin(), ys.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<double> grid;
  grid.reserve(a.size() + b.size());
  std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(grid));

  // Integrate |F_a - F_b| over the merged support.
  double total = 0.0;
  std::size_t ia = 0, ib = 0;
  for (std::size_t k = 0; k + 1 < grid.size(); ++k) {
    while (ia < a.size() && a[ia] <= grid[k]) ++ia;
    while (ib < b.size() && b[ib] <= grid[k]) ++ib;
    const double fa = static_cast<double>(ia) / static_cast<double>(a.size());
    const double fb = static_cast<double>(ib) / static_cast<double>(b.size());
    total += std::abs(fa - fb) * (grid[k + 1] - grid[k]);
  }
  return total;
}

}  // namespace forman::stats
