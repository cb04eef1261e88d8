#pragma once

#include <cstddef>
#include <vector>

namespace constel {

/// One-sample Kolmogorov-Smirnov statistic of `samples` against the uniform
/// distribution on [lo, hi]: sup_x |F_n(x) - F(x)|.
double ks_statistic_uniform(std::vector<double> samples, double lo, double hi);

/// Asymptotic one-sample KS critical value c(alpha)/sqrt(n) for alpha = 0.01.
double ks_critical_value_alpha01(std::size_t n);

struct SummaryStats {
  double mean = 0.0;
  double stddev = 0.0;   // sample standard deviation (n-1)
  double stderr_mean = 0.0;
  std::size_t count = 0;
};

/// Mean/stddev/stderr of a sample. Uses compensated (Neumaier) summation in
/// index order, so the result does not depend on how the samples were
/// produced or scheduled.
SummaryStats summarize(const std::vector<double>& samples);

}  // namespace constel
