#include "constel/stats.hpp"

#include <algorithm>
#include <cmath>

#include "constel/error.hpp"

namespace constel {

namespace {

double neumaier_sum(const std::vector<double>& xs) {
  double sum = 0.0, comp = 0.0;
  for (double v : xs) {
    const double t = sum + v;
    if (std::abs(sum) >= std::abs(v))
      comp += (sum - t) + v;
    else
      comp += (v - t) + sum;
    sum = t;
  }
  return sum + comp;
}

}  // namespace

double ks_statistic_uniform(std::vector<double> samples, double lo, double hi) {
  if (samples.empty())
    fail(errc::invalid_count, "KS statistic needs at least one sample");
  if (!(hi > lo)) fail(errc::config_invalid, "KS support must satisfy lo < hi");
  std::sort(samples.begin(), samples.end());
  const double n = static_cast<double>(samples.size());
  double d = 0.0;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const double f = (samples[i] - lo) / (hi - lo);
    d = std::max(d, std::max((static_cast<double>(i) + 1.0) / n - f,
                             f - static_cast<double>(i) / n));
  }
  return d;
}

double ks_critical_value_alpha01(std::size_t n) {
  return 1.63 / std::sqrt(static_cast<double>(n));
}

SummaryStats summarize(const std::vector<double>& samples) {
  SummaryStats s;
  s.count = samples.size();
  if (samples.empty()) return s;
  s.mean = neumaier_sum(samples) / static_cast<double>(s.count);
  if (s.count > 1) {
    // Second pass around the mean avoids cancellation in the variance.
    double ss = 0.0, comp = 0.0;
    for (double x : samples) {
      const double v = (x - s.mean) * (x - s.mean);
      const double t = ss + v;
      if (std::abs(ss) >= std::abs(v))
        comp += (ss - t) + v;
      else
        comp += (v - t) + ss;
      ss = t;
    }
    s.stddev = std::sqrt((ss + comp) / static_cast<double>(s.count - 1));
    s.stderr_mean = s.stddev / std::sqrt(static_cast<double>(s.count));
  }
  return s;
}

}  // namespace constel
