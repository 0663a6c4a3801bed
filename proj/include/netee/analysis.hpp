#pragma once

#include <cstddef>
#include <vector>

#include "netee/frame.hpp"
#include "netee/genome.hpp"
#include "netee/topology.hpp"

namespace netee {

/// Per cell: mean absolute gene difference with each Moore neighbor's optimal
/// genotype, averaged over neighbors. Values are raw (unnormalized).
Frame neighbor_distance_map(const std::vector<Genotype>& optimal,
                            const GridTopology& grid);

/// Scales all maps by the single largest value across them, so the maps stay
/// comparable to one another. No-op when everything is zero.
void normalize_jointly(std::vector<Frame*> maps);

struct ExchangeEstimate {
  double per_crossover = 0.0;   // expected genes exchanged when crossover fires
  double per_generation = 0.0;  // expected genes exchanged per attempt (cp gate)
};

ExchangeEstimate expected_exchanged_genes(double cp, double cr, std::size_t len);

}  // namespace netee
