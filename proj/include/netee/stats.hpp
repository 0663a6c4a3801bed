#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "netee/problems.hpp"

namespace netee {

struct WilcoxonResult {
  double p = 1.0;
  bool equivalent = true;  // p >= alpha: the null of equivalence stands
};

/// Two-sided rank-sum test. Exact permutation null (over the observed
/// midranks) when both samples have at most 10 values; otherwise normal
/// approximation with tie correction and continuity correction.
WilcoxonResult wilcoxon_rank_sum(const std::vector<double>& a,
                                 const std::vector<double>& b, double alpha);

/// Final scores per algorithm: samples[i][r] is algorithm i's score in run r.
struct SampleMatrix {
  std::vector<std::string> algorithms;
  std::vector<std::vector<double>> samples;
  Direction direction = Direction::kMinimize;
};

struct CdResult {
  std::vector<double> avg_ranks;  // one per algorithm, 1 = best
  double cd = 0.0;
  /// Maximal runs of rank-adjacent algorithms whose rank spread is within the
  /// critical difference; singleton runs are omitted.
  std::vector<std::vector<std::size_t>> groups;
};

/// Critical value q_{alpha,k} for the Nemenyi test (infinite degrees of
/// freedom). Only alpha = 0.05 is tabulated, for k in [2, 30].
double nemenyi_critical_value(std::size_t k, double alpha);

/// Friedman average ranks over blocks (runs), with the Nemenyi critical
/// difference CD = q_{alpha,k} * sqrt(k(k+1)/(6N)).
CdResult friedman_nemenyi(const SampleMatrix& m, double alpha);

/// Pairwise Wilcoxon equivalence decisions at the given alpha.
std::vector<std::vector<bool>> pairwise_equivalence(const SampleMatrix& m, double alpha);

/// Symmetric CSV matrix: "=" where the null of equivalence is accepted,
/// empty elsewhere, blank diagonal.
std::string emit_matrix(const std::vector<std::string>& names,
                        const std::vector<std::vector<bool>>& equivalent);

/// Machine-readable description of a critical-difference plot: per-algorithm
/// average ranks sorted ascending, the CD, and the equivalence segments.
std::string emit_cd_plot_data(const std::vector<std::string>& names,
                              const CdResult& cd);

}  // namespace netee
