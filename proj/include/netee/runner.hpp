#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "netee/config.hpp"
#include "netee/engine.hpp"
#include "netee/frame.hpp"
#include "netee/problems.hpp"
#include "netee/stats.hpp"
#include "netee/topology.hpp"

namespace netee {

/// One independent run: the collective-fitness trajectory (generation 0
/// included), the test-accuracy trajectory where defined, requested phenotype
/// snapshots, and the final per-agent scores.
struct RunResult {
  std::vector<double> collective;           // length generations + 1
  std::vector<double> test_metric;          // same length, or empty
  std::vector<std::pair<std::size_t, Frame>> snapshots;
  std::vector<double> final_fitness;        // per agent
  std::vector<double> final_test_metric;    // per agent, or empty
};

std::shared_ptr<Problem> build_problem(const CampaignConfig& cfg);
Topology build_topology(const CampaignConfig& cfg, const Problem& problem);

/// Deterministic in run_key; wall-clock, thread count and scheduling never
/// change the result.
RunResult run_single(const Problem& problem, const Topology& topo,
                     const Variant& variant, const OperatorParams& params,
                     std::size_t generations, std::uint64_t run_key,
                     const std::vector<std::size_t>& snapshot_generations = {},
                     std::size_t snapshot_time = 0, bool collect_agents = false);

/// Seed for (cell, run) inside a campaign.
std::uint64_t campaign_run_key(std::uint64_t master_seed, std::size_t cell_index,
                               std::size_t run_index);

struct CampaignReport {
  std::vector<std::filesystem::path> trajectory_files;
  std::vector<std::filesystem::path> snapshot_files;
};

/// Runs every (cell, run) pair, writing trajectory_<cell>_<run>.csv,
/// snap_<cell>_<run>_g<gen>.pgm and cells.csv under out_dir. Tasks are
/// distributed over `threads` workers; outputs are byte-identical for any
/// thread count.
CampaignReport run_campaign(const CampaignConfig& cfg,
                            const std::filesystem::path& out_dir,
                            unsigned threads = 1);

/// Reads back the final scores of every trajectory CSV in a campaign output
/// directory, grouped by cell label. metric is "fitness" or "test_accuracy".
SampleMatrix collect_final_scores(const std::filesystem::path& dir,
                                  const std::string& metric, Direction direction);

}  // namespace netee
