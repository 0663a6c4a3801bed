#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <string>
#include <vector>

#include "netee/engine.hpp"
#include "netee/genome.hpp"

namespace netee {

/// One algorithm configuration inside a campaign.
struct CellSpec {
  Variant variant;
  OperatorParams params;

  /// Compact label, e.g. "XoverRandCP05MR0001"; CR appears when cr != 0.5.
  std::string label() const;
};

/// Campaign description parsed from the key/value config format. See the
/// project README for the schema; defaults mirror the field initializers.
struct CampaignConfig {
  // problem
  std::string problem = "imitation";  // imitation | illumination_single |
                                      // illumination_vector | presence | activity
  // imitation inputs
  std::string images = "synthetic";  // "synthetic" or an IDX3 file path
  std::size_t image_count = 100;
  std::size_t image_rows = 28;   // synthetic generator size
  std::size_t image_cols = 28;
  std::size_t image_crop = 0;    // optional square center crop, 0 = off
  std::uint64_t image_seed = 7;
  std::size_t tile = 1;

  // illumination grid
  std::size_t rows = 25;
  std::size_t cols = 50;

  // sensor inputs
  std::string sensors = "synthetic";  // "synthetic" or a sensor CSV path
  std::uint64_t sensor_seed = 11;
  std::size_t sensor_nodes = 3;
  std::size_t sensor_samples = 2400;
  double train_fraction = 0.8;
  std::uint64_t split_seed = 5;
  std::string split = "shuffle";  // shuffle | chronological

  // topology: "grid", "path", or a topology file path
  std::string topology = "grid";

  // algorithm cells; sweep lists expand into cells when no explicit cell given
  std::vector<CellSpec> cells;
  std::vector<std::string> sweep_variants;
  std::vector<double> sweep_cp;
  std::vector<double> sweep_cr;
  std::vector<double> sweep_mr;

  // schedule
  std::size_t runs = 10;
  std::size_t generations = 1000;
  std::uint64_t master_seed = 1;
  std::vector<std::size_t> snapshot_generations;
  std::size_t snapshot_time = 0;

  // recorded modeling choices
  std::string collective = "mean";  // mean | sum
  std::string hidden_activation = "sigmoid";
  std::string bound_handling = "clamp";
  bool emit_agents = false;

  void validate() const;
};

CampaignConfig parse_config(std::istream& in);
CampaignConfig load_config(const std::filesystem::path& path);

/// Cross product of sweep_variants x cp x cr x mr. Variants that do not use
/// crossover collapse the cp/cr axes. Duplicate labels are rejected.
std::vector<CellSpec> expand_sweep(const CampaignConfig& cfg);

/// The cells a campaign actually runs: explicit cells when present,
/// otherwise the sweep expansion.
std::vector<CellSpec> campaign_cells(const CampaignConfig& cfg);

}  // namespace netee
