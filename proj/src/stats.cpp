#include "netee/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace netee {

namespace {

// Midranks of the pooled sample, scaled by 2 so ties stay integral.
std::vector<std::int64_t> midranks_x2(const std::vector<double>& pooled) {
  const std::size_t n = pooled.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pooled[a] < pooled[b]; });
  std::vector<std::int64_t> ranks(n);
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    while (j + 1 < n && pooled[order[j + 1]] == pooled[order[i]]) ++j;
    // ranks i+1 .. j+1 averaged, times two: (i+1 + j+1)
    const std::int64_t r2 = static_cast<std::int64_t>(i + j + 2);
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r2;
    i = j + 1;
  }
  return ranks;
}

struct ExactCounts {
  double total = 0.0;
  double at_most = 0.0;
  double at_least = 0.0;
};

// Walks every n-subset of `ranks` and tallies subsets whose rank sum lies at
// or beyond the observed one.
void count_subsets(const std::vector<std::int64_t>& ranks, std::size_t pos,
                   std::size_t remaining, std::int64_t sum, std::int64_t observed,
                   ExactCounts& out) {
  if (remaining == 0) {
    out.total += 1.0;
    if (sum <= observed) out.at_most += 1.0;
    if (sum >= observed) out.at_least += 1.0;
    return;
  }
  if (ranks.size() - pos < remaining) return;
  count_subsets(ranks, pos + 1, remaining - 1, sum + ranks[pos], observed, out);
  count_subsets(ranks, pos + 1, remaining, sum, observed, out);
}

double normal_sf_two_sided(double z) {
  return std::erfc(z / std::sqrt(2.0));
}

}  // namespace

WilcoxonResult wilcoxon_rank_sum(const std::vector<double>& a,
                                 const std::vector<double>& b, double alpha) {
  if (a.empty() || b.empty())
    throw std::invalid_argument("wilcoxon_rank_sum: empty sample");
  const std::size_t n = a.size(), m = b.size(), total = n + m;

  std::vector<double> pooled = a;
  pooled.insert(pooled.end(), b.begin(), b.end());
  const std::vector<std::int64_t> r2 = midranks_x2(pooled);
  std::int64_t w2 = 0;
  for (std::size_t i = 0; i < n; ++i) w2 += r2[i];

  double p;
  if (n <= 10 && m <= 10) {
    ExactCounts counts;
    count_subsets(r2, 0, n, 0, w2, counts);
    p = std::min(1.0, 2.0 * std::min(counts.at_most, counts.at_least) / counts.total);
  } else {
    const double w = static_cast<double>(w2) / 2.0;
    const double mean = static_cast<double>(n) * (total + 1) / 2.0;
    // Tie correction over the pooled ranks.
    double tie_term = 0.0;
    {
      std::vector<std::int64_t> sorted = r2;
      std::sort(sorted.begin(), sorted.end());
      std::size_t i = 0;
      while (i < sorted.size()) {
        std::size_t j = i;
        while (j + 1 < sorted.size() && sorted[j + 1] == sorted[i]) ++j;
        const double t = static_cast<double>(j - i + 1);
        tie_term += t * t * t - t;
        i = j + 1;
      }
    }
    const double nt = static_cast<double>(total);
    const double var = static_cast<double>(n) * static_cast<double>(m) / 12.0 *
                       ((nt + 1.0) - tie_term / (nt * (nt - 1.0)));
    if (var <= 0.0) {
      p = 1.0;
    } else {
      const double z = std::max(0.0, std::abs(w - mean) - 0.5) / std::sqrt(var);
      p = std::min(1.0, normal_sf_two_sided(z));
    }
  }
  return {p, p >= alpha};
}

namespace {

// Critical values q_{0.05,k} of the studentized range statistic at infinite
// degrees of freedom, divided by sqrt(2); k = 2..30.
constexpr double kNemenyiQ05[] = {
    1.959964, 2.343701, 2.569032, 2.727774, 2.849705, 2.948320, 3.030878,
    3.101730, 3.163684, 3.218654, 3.268004, 3.312739, 3.353618, 3.391230,
    3.426041, 3.458425, 3.488685, 3.517073, 3.543799, 3.569040, 3.592946,
    3.615646, 3.637252, 3.657861, 3.677556, 3.696413, 3.714498, 3.731869,
    3.748578};
constexpr std::size_t kNemenyiQ05Count = sizeof(kNemenyiQ05) / sizeof(double);

}  // namespace

double nemenyi_critical_value(std::size_t k, double alpha) {
  if (alpha != 0.05)
    throw std::invalid_argument("nemenyi critical values tabulated for alpha=0.05 only");
  if (k < 2 || k - 2 >= kNemenyiQ05Count)
    throw std::invalid_argument("nemenyi critical values tabulated for k in [2, 30]");
  return kNemenyiQ05[k - 2];
}

CdResult friedman_nemenyi(const SampleMatrix& m, double alpha) {
  const std::size_t k = m.algorithms.size();
  if (k < 2) throw std::invalid_argument("need at least 2 algorithms");
  if (m.samples.size() != k)
    throw std::invalid_argument("sample rows do not match algorithm labels");
  const std::size_t blocks = m.samples.front().size();
  if (blocks < 2) throw std::invalid_argument("need at least 2 blocks");
  for (const auto& s : m.samples)
    if (s.size() != blocks)
      throw std::invalid_argument("unequal sample lengths across algorithms");

  CdResult result;
  result.avg_ranks.assign(k, 0.0);
  for (std::size_t b = 0; b < blocks; ++b) {
    std::vector<double> scores(k);
    for (std::size_t i = 0; i < k; ++i) {
      // Rank on a common "smaller is better" scale.
      const double s = m.samples[i][b];
      scores[i] = m.direction == Direction::kMinimize ? s : -s;
    }
    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return scores[x] < scores[y]; });
    std::size_t i = 0;
    while (i < k) {
      std::size_t j = i;
      while (j + 1 < k && scores[order[j + 1]] == scores[order[i]]) ++j;
      const double rank = static_cast<double>(i + j + 2) / 2.0;  // midrank
      for (std::size_t t = i; t <= j; ++t) result.avg_ranks[order[t]] += rank;
      i = j + 1;
    }
  }
  for (double& r : result.avg_ranks) r /= static_cast<double>(blocks);

  const double q = nemenyi_critical_value(k, alpha);
  result.cd = q * std::sqrt(static_cast<double>(k) * (k + 1) /
                            (6.0 * static_cast<double>(blocks)));

  // Maximal rank-adjacent segments within the critical difference.
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return result.avg_ranks[x] < result.avg_ranks[y];
  });
  std::size_t prev_end = 0;
  for (std::size_t i = 0; i < k; ++i) {
    std::size_t j = i;
    while (j + 1 < k &&
           result.avg_ranks[order[j + 1]] - result.avg_ranks[order[i]] <= result.cd)
      ++j;
    if (j > i && (result.groups.empty() || j + 1 > prev_end)) {
      result.groups.emplace_back(order.begin() + i, order.begin() + j + 1);
      prev_end = j + 1;
    }
  }
  return result;
}

std::vector<std::vector<bool>> pairwise_equivalence(const SampleMatrix& m, double alpha) {
  const std::size_t k = m.algorithms.size();
  std::vector<std::vector<bool>> eq(k, std::vector<bool>(k, true));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      const bool e = wilcoxon_rank_sum(m.samples[i], m.samples[j], alpha).equivalent;
      eq[i][j] = e;
      eq[j][i] = e;
    }
  }
  return eq;
}

std::string emit_matrix(const std::vector<std::string>& names,
                        const std::vector<std::vector<bool>>& equivalent) {
  std::ostringstream out;
  out << "algorithm";
  for (const auto& name : names) out << "," << name;
  out << "\n";
  for (std::size_t i = 0; i < names.size(); ++i) {
    out << names[i];
    for (std::size_t j = 0; j < names.size(); ++j) {
      out << ",";
      if (i != j && equivalent[i][j]) out << "=";
    }
    out << "\n";
  }
  return out.str();
}

std::string emit_cd_plot_data(const std::vector<std::string>& names,
                              const CdResult& cd) {
  std::ostringstream out;
  out.precision(12);
  out << "cd," << cd.cd << "\n";
  std::vector<std::size_t> order(names.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    if (cd.avg_ranks[x] != cd.avg_ranks[y]) return cd.avg_ranks[x] < cd.avg_ranks[y];
    return names[x] < names[y];
  });
  for (std::size_t i : order)
    out << "rank," << names[i] << "," << cd.avg_ranks[i] << "\n";
  for (const auto& group : cd.groups) {
    out << "group";
    for (std::size_t i : group) out << "," << names[i];
    out << "\n";
  }
  return out.str();
}

}  // namespace netee
