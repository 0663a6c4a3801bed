#include "netee/analysis.hpp"

#include <cmath>
#include <stdexcept>

namespace netee {

Frame neighbor_distance_map(const std::vector<Genotype>& optimal,
                            const GridTopology& grid) {
  if (optimal.size() != grid.node_count())
    throw std::invalid_argument("one optimal genotype per grid cell required");
  Frame map(grid.rows(), grid.cols());
  for (NodeId n = 0; n < optimal.size(); ++n) {
    const std::vector<NodeId> nbrs = grid.moore_neighbors(n);
    if (nbrs.empty()) continue;  // 1x1 grid
    double acc = 0.0;
    for (NodeId m : nbrs) {
      const auto& a = optimal[n].values;
      const auto& b = optimal[m].values;
      if (a.size() != b.size())
        throw std::invalid_argument("optimal genotypes differ in length");
      double gene_acc = 0.0;
      for (std::size_t k = 0; k < a.size(); ++k) gene_acc += std::abs(a[k] - b[k]);
      acc += gene_acc / static_cast<double>(a.size());
    }
    map.v[n] = acc / static_cast<double>(nbrs.size());
  }
  return map;
}

void normalize_jointly(std::vector<Frame*> maps) {
  double peak = 0.0;
  for (const Frame* f : maps) peak = std::max(peak, f->max_value());
  if (peak <= 0.0) return;
  for (Frame* f : maps)
    for (double& x : f->v) x /= peak;
}

ExchangeEstimate expected_exchanged_genes(double cp, double cr, std::size_t len) {
  if (cp < 0.0 || cp > 1.0 || cr < 0.0 || cr > 1.0)
    throw std::invalid_argument("cp and cr must be in [0, 1]");
  ExchangeEstimate e;
  e.per_crossover = cr * static_cast<double>(len);
  e.per_generation = cp * e.per_crossover;
  return e;
}

}  // namespace netee
