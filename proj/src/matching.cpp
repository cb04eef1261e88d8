#include "constel/matching.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "constel/error.hpp"

namespace constel {

namespace {

constexpr std::size_t kBruteForceLimit = 10;

}  // namespace

CostMatrix::CostMatrix(std::size_t n, std::vector<double> entries)
    : n_(n), d_(std::move(entries)) {
  if (n_ == 0) fail(errc::invalid_count, "cost matrix must be at least 1x1");
  if (d_.size() != n_ * n_)
    fail(errc::cardinality_mismatch, "cost matrix entry count must be n*n");
  for (double v : d_) {
    if (!std::isfinite(v) || v < 0.0)
      fail(errc::invalid_cost, "cost matrix entries must be finite and >= 0");
  }
}

CostMatrix build_cost_matrix(const PointConfiguration& source,
                             const PointConfiguration& target) {
  if (source.size() != target.size())
    fail(errc::cardinality_mismatch,
         "source and target must contain the same number of points (" +
             std::to_string(source.size()) + " vs " +
             std::to_string(target.size()) + ")");
  if (source.radius_km() != target.radius_km())
    fail(errc::radius_mismatch,
         "source and target must share the shell radius");
  const std::size_t n = source.size();
  // Chord distances through Cartesian coordinates: one pass of trig per
  // point instead of per pair, identical to the angular form within 1e-9*R.
  std::vector<double> sx(n), sy(n), sz(n), tx(n), ty(n), tz(n);
  for (std::size_t i = 0; i < n; ++i) {
    const CartesianPoint c = to_cartesian(source.points()[i]);
    sx[i] = c.x_km, sy[i] = c.y_km, sz[i] = c.z_km;
    const CartesianPoint t = to_cartesian(target.points()[i]);
    tx[i] = t.x_km, ty[i] = t.y_km, tz[i] = t.z_km;
  }
  std::vector<double> d(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = sx[i], yi = sy[i], zi = sz[i];
    double* out = d.data() + i * n;
    for (std::size_t j = 0; j < n; ++j) {
      const double dx = xi - tx[j];
      const double dy = yi - ty[j];
      const double dz = zi - tz[j];
      out[j] = std::sqrt(dx * dx + dy * dy + dz * dz);
    }
  }
  return CostMatrix(n, std::move(d));
}

bool Assignment::is_permutation() const {
  std::vector<char> seen(target_of.size(), 0);
  for (int j : target_of) {
    if (j < 0 || static_cast<std::size_t>(j) >= target_of.size() || seen[j])
      return false;
    seen[j] = 1;
  }
  return true;
}

double assignment_distance(const CostMatrix& d, const Assignment& a) {
  double total2 = 0.0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    const double v = d.at(i, static_cast<std::size_t>(a.target_of[i]));
    total2 += v * v;
  }
  return std::sqrt(total2);
}

MatchOutcome exact_assignment_bruteforce(const CostMatrix& d) {
  const std::size_t n = d.size();
  if (n > kBruteForceLimit)
    fail(errc::size_limit, "brute force enumeration is limited to n <= " +
                               std::to_string(kBruteForceLimit));
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  double best2 = std::numeric_limits<double>::infinity();
  do {
    double total2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double v = d.at(i, static_cast<std::size_t>(perm[i]));
      total2 += v * v;
    }
    // Strict comparison in lexicographic permutation order keeps the
    // lexicographically smallest assignment among ties.
    if (total2 < best2) {
      best2 = total2;
      best = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {Assignment{std::move(best)}, std::sqrt(best2)};
}

MatchOutcome exact_assignment_poly(const CostMatrix& d) {
  // Hungarian algorithm with row/column potentials on squared costs,
  // O(n^3). 1-based scratch arrays; column 0 is the virtual root.
  const std::size_t n = d.size();
  const double kInf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<std::size_t> match_col(n + 1, 0);  // column -> matched row
  std::vector<std::size_t> way(n + 1, 0);
  auto cost = [&](std::size_t i, std::size_t j) {
    const double c = d.at(i - 1, j - 1);
    return c * c;
  };
  for (std::size_t i = 1; i <= n; ++i) {
    match_col[0] = i;
    std::size_t j0 = 0;
    std::vector<double> minv(n + 1, kInf);
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const std::size_t i0 = match_col[j0];
      double delta = kInf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0, j) - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match_col[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (match_col[j0] != 0);
    // Augment along the alternating path back to the root.
    do {
      const std::size_t j1 = way[j0];
      match_col[j0] = match_col[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  Assignment a;
  a.target_of.assign(n, -1);
  for (std::size_t j = 1; j <= n; ++j)
    a.target_of[match_col[j] - 1] = static_cast<int>(j - 1);
  const double dist = assignment_distance(d, a);
  return {std::move(a), dist};
}

GreedyState GreedyState::fresh(std::size_t n) {
  GreedyState s;
  s.index_vec.assign(n, 0);
  s.count_vec.assign(n, 0);
  s.temp_count_vec.assign(n, 0);
  s.delta_km = 0.0;
  return s;
}

bool GreedyState::complete() const {
  return std::all_of(count_vec.begin(), count_vec.end(),
                     [](int c) { return c == 1; });
}

GreedyState greedy_round(const CostMatrix& d, GreedyState state) {
  const std::size_t n = d.size();
  if (state.index_vec.size() != n || state.count_vec.size() != n)
    fail(errc::cardinality_mismatch, "greedy state size must match the matrix");
  std::fill(state.temp_count_vec.begin(), state.temp_count_vec.end(), 0);
  double delta2 = 0.0;

  // Phase 1: unassociated sources claim the nearest open target.
  for (std::size_t i = 0; i < n; ++i) {
    if (state.index_vec[i] != 0) continue;
    const double* row = d.row(i);
    std::size_t best_j = n;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < n; ++j) {
      if (state.count_vec[j] == 0 && row[j] < best) {
        best = row[j];
        best_j = j;
      }
    }
    if (best_j == n)
      fail(errc::internal_invariant,
           "no open target for an unassociated source");
    state.index_vec[i] = static_cast<int>(best_j) + 1;
    ++state.temp_count_vec[best_j];
  }

  // Phase 2: finalize claimed targets; contested ones keep the closest
  // claimant and reset the rest.
  for (std::size_t j = 0; j < n; ++j) {
    if (state.temp_count_vec[j] == 0) continue;
    state.count_vec[j] = 1;
    std::size_t winner = n;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
      if (state.index_vec[i] == static_cast<int>(j) + 1 && d.at(i, j) < best) {
        best = d.at(i, j);
        winner = i;
      }
    }
    if (state.temp_count_vec[j] > 1) {
      for (std::size_t i = 0; i < n; ++i) {
        if (state.index_vec[i] == static_cast<int>(j) + 1 && i != winner)
          state.index_vec[i] = 0;
      }
    }
    delta2 += best * best;
  }
  state.delta_km = std::sqrt(delta2);
  return state;
}

GreedyRun greedy_match(const CostMatrix& d) {
  const std::size_t n = d.size();
  GreedyState state = GreedyState::fresh(n);
  int rounds = 0;
  while (!state.complete()) {
    state = greedy_round(d, std::move(state));
    ++rounds;
    if (rounds > static_cast<int>(n))
      fail(errc::internal_invariant, "greedy association exceeded n rounds");
  }
  Assignment a;
  a.target_of.reserve(n);
  for (int idx : state.index_vec) a.target_of.push_back(idx - 1);
  // Recompute the total in index order; equals the accumulated per-round
  // increments up to summation order.
  const double dist = assignment_distance(d, a);
  return {{std::move(a), dist}, rounds};
}

MatchOutcome greedy_distance(const PointConfiguration& source,
                             const PointConfiguration& target) {
  return greedy_match(build_cost_matrix(source, target)).outcome;
}

}  // namespace constel
