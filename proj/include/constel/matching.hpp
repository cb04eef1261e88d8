#pragma once

#include <cstddef>
#include <vector>

#include "constel/geometry.hpp"

namespace constel {

/// Dense matrix of chord distances D[i][j] between a source and a target
/// configuration of equal size. Entries must be finite and non-negative.
class CostMatrix {
 public:
  CostMatrix(std::size_t n, std::vector<double> entries);

  std::size_t size() const noexcept { return n_; }
  double at(std::size_t i, std::size_t j) const { return d_[i * n_ + j]; }
  const double* row(std::size_t i) const { return d_.data() + i * n_; }

 private:
  std::size_t n_;
  std::vector<double> d_;
};

/// D[i][j] = chord_distance(source[i], target[j]). The configurations must
/// have equal cardinality and equal radius.
CostMatrix build_cost_matrix(const PointConfiguration& source,
                             const PointConfiguration& target);

/// One-to-one moving scheme: target_of[i] is the 0-based target matched to
/// source i; a valid assignment is a permutation.
struct Assignment {
  std::vector<int> target_of;
  bool is_permutation() const;
};

struct MatchOutcome {
  Assignment assignment;
  double distance_km = 0.0;  // sqrt(sum of squared matched chord distances)
};

/// Recompute sqrt(sum_i D[i][target_of[i]]^2) from scratch.
double assignment_distance(const CostMatrix& d, const Assignment& a);

/// Globally minimal distance by enumerating all permutations; ties broken
/// by the lexicographically smallest target_of. Guarded to n <= 10.
MatchOutcome exact_assignment_bruteforce(const CostMatrix& d);

/// Same optimum in O(n^3) (Hungarian algorithm with potentials on squared
/// costs; the outer square root is monotone, so minimizing the squared sum
/// is equivalent). Under cost ties the assignment may differ from the brute
/// force, the distance may not.
MatchOutcome exact_assignment_poly(const CostMatrix& d);

/// State of the round-based association scheme.
struct GreedyState {
  std::vector<int> index_vec;       // 0 = unassociated, else 1-based target
  std::vector<int> count_vec;       // target association flags, 0 or 1
  std::vector<int> temp_count_vec;  // per-round claim counts
  double delta_km = 0.0;            // distance increment of the last round

  static GreedyState fresh(std::size_t n);
  bool complete() const;  // all count_vec entries are 1
};

/// One association round: every unassociated source claims its nearest
/// still-open target (ties: lowest target index); contested targets keep
/// the closest claimant (ties: lowest source index) and reset the rest.
/// Finalizes at least one target. delta_km carries sqrt(sum of squared
/// distances finalized this round).
GreedyState greedy_round(const CostMatrix& d, GreedyState state);

struct GreedyRun {
  MatchOutcome outcome;
  int rounds = 0;
};

/// Run greedy rounds until every target is associated (at most n rounds).
GreedyRun greedy_match(const CostMatrix& d);

/// Convenience wrapper: cost matrix from the two configurations, then the
/// full greedy association.
MatchOutcome greedy_distance(const PointConfiguration& source,
                             const PointConfiguration& target);

}  // namespace constel
