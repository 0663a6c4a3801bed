#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netee/genome.hpp"
#include "netee/problems.hpp"
#include "netee/rng.hpp"
#include "netee/topology.hpp"

namespace netee {

enum class PartnerSelection { kNone, kBestNeighbor, kRandomNeighbor };
enum class Recombination { kSelfOnly, kCopy, kCrossover };

/// One of the five algorithm versions. Only the named combinations are valid.
struct Variant {
  PartnerSelection partner = PartnerSelection::kNone;
  Recombination recombination = Recombination::kSelfOnly;

  static Variant hill_climbing() { return {PartnerSelection::kNone, Recombination::kSelfOnly}; }
  static Variant copy_best() { return {PartnerSelection::kBestNeighbor, Recombination::kCopy}; }
  static Variant copy_rand() { return {PartnerSelection::kRandomNeighbor, Recombination::kCopy}; }
  static Variant xover_best() { return {PartnerSelection::kBestNeighbor, Recombination::kCrossover}; }
  static Variant xover_rand() { return {PartnerSelection::kRandomNeighbor, Recombination::kCrossover}; }

  static Variant from_name(const std::string& name);
  std::string name() const;
  void validate() const;

  bool uses_neighbors() const { return partner != PartnerSelection::kNone; }
};

struct AgentState {
  Genotype genotype;
  double fitness = 0.0;
  double test_metric = 0.0;  // meaningful only when the problem defines one
  Rng rng;                   // base stream; per-generation substreams derive from it
};

/// Fresh generation-0 population: every agent gets an independent substream
/// of `run_key`, a uniform random genotype, and its evaluated fitness.
std::vector<AgentState> make_initial_agents(const Problem& problem,
                                            std::uint64_t run_key);

/// Neighbor with the best fitness under `dir`; ties break to the lowest id.
NodeId best_neighbor(const std::vector<AgentState>& agents, const Topology& topo,
                     NodeId n, Direction dir);

/// Uniform draw over the 1-hop neighborhood using the supplied stream.
NodeId random_neighbor(const Topology& topo, NodeId n, Rng& rng);

/// Synchronous generation update: every agent builds an offspring from the
/// generation-g states (partner selection, copy/crossover gated by cp,
/// Gaussian mutation), evaluates it, and keeps it only on strict improvement.
/// Agents with neighbor-using variants fall back to plain hill climbing when
/// their neighborhood is empty.
std::vector<AgentState> step_generation(const std::vector<AgentState>& agents,
                                        const Topology& topo, const Problem& problem,
                                        const Variant& variant,
                                        const OperatorParams& params, Direction dir,
                                        std::uint64_t generation);

/// Mean fitness across agents.
double collective_fitness(const std::vector<AgentState>& agents);

/// Mean test metric across agents.
double collective_test_metric(const std::vector<AgentState>& agents);

}  // namespace netee
