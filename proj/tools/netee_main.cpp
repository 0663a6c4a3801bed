#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "netee/analysis.hpp"
#include "netee/config.hpp"
#include "netee/runner.hpp"
#include "netee/stats.hpp"

namespace fs = std::filesystem;
using namespace netee;

namespace {

int cmd_run(const std::string& config_path, const std::string& out_dir,
            unsigned threads, bool force_sweep) {
  CampaignConfig cfg = load_config(config_path);
  if (force_sweep) cfg.cells.clear();  // expand from the sweep lists
  const CampaignReport report = run_campaign(cfg, out_dir, threads);
  std::cout << "wrote " << report.trajectory_files.size() << " trajectories and "
            << report.snapshot_files.size() << " snapshots to " << out_dir << "\n";
  return 0;
}

// Reads direction/metric recorded by run_campaign, if available.
void read_campaign_meta(const fs::path& dir, std::string& metric,
                        std::string& direction) {
  std::ifstream meta(dir / "cells.csv");
  if (!meta) return;
  std::string header, line;
  std::getline(meta, header);
  if (!std::getline(meta, line)) return;
  std::vector<std::string> cols;
  std::istringstream ls(line);
  std::string tok;
  while (std::getline(ls, tok, ',')) cols.push_back(tok);
  if (cols.size() >= 8) {
    if (direction == "auto") direction = cols[6];
    if (metric == "auto") metric = cols[7];
  }
}

int cmd_stats(const std::string& in_dir, const std::string& out_dir, double alpha,
              std::string metric, std::string direction) {
  read_campaign_meta(in_dir, metric, direction);
  if (metric == "auto") metric = "fitness";
  if (direction == "auto") direction = "min";
  if (direction != "min" && direction != "max")
    throw std::runtime_error("direction must be min or max");

  const SampleMatrix m = collect_final_scores(
      in_dir, metric,
      direction == "min" ? Direction::kMinimize : Direction::kMaximize);

  fs::create_directories(out_dir);
  {
    const auto eq = pairwise_equivalence(m, alpha);
    std::ofstream out(fs::path(out_dir) / "wilcoxon_matrix.csv", std::ios::binary);
    out << emit_matrix(m.algorithms, eq);
  }
  {
    const CdResult cd = friedman_nemenyi(m, alpha);
    std::ofstream out(fs::path(out_dir) / "cd_plot.txt", std::ios::binary);
    out << emit_cd_plot_data(m.algorithms, cd);
  }
  std::cout << "compared " << m.algorithms.size() << " algorithms (metric " << metric
            << ", direction " << direction << ") into " << out_dir << "\n";
  return 0;
}

int cmd_render(const std::string& config_path, std::size_t t,
               const std::string& out_file) {
  const CampaignConfig cfg = load_config(config_path);
  const auto problem = build_problem(cfg);
  save_pgm(problem->truth_frame(t), out_file);
  std::cout << "wrote " << out_file << "\n";
  return 0;
}

int cmd_distmap(const std::string& config_path, const std::vector<std::size_t>& tiles,
                const std::string& out_dir) {
  CampaignConfig cfg = load_config(config_path);
  if (cfg.problem != "imitation")
    throw std::runtime_error("distmap requires an imitation config");
  fs::create_directories(out_dir);

  std::vector<Frame> maps;
  for (std::size_t tile : tiles) {
    cfg.tile = tile;
    const auto problem = build_problem(cfg);
    const auto* imit = dynamic_cast<const ImitationProblem*>(problem.get());
    std::vector<Genotype> optimal;
    optimal.reserve(imit->node_count());
    for (NodeId n = 0; n < imit->node_count(); ++n)
      optimal.push_back(imit->optimal_genotype(n));
    const GridTopology grid(imit->agent_rows(), imit->agent_cols());
    maps.push_back(neighbor_distance_map(optimal, grid));
    save_frame_csv(maps.back(),
                   fs::path(out_dir) / ("distmap_t" + std::to_string(tile) + ".csv"));
  }
  std::vector<Frame*> refs;
  for (Frame& f : maps) refs.push_back(&f);
  normalize_jointly(refs);
  for (std::size_t i = 0; i < tiles.size(); ++i)
    save_pgm(maps[i],
             fs::path(out_dir) / ("distmap_t" + std::to_string(tiles[i]) + ".pgm"));
  std::cout << "wrote " << tiles.size() << " distance maps to " << out_dir << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distributed embodied evolution simulator"};
  app.require_subcommand(1);

  std::string config_path, out_path, in_path;
  unsigned threads = 1;
  double alpha = 0.05;
  std::string metric = "auto";
  std::string direction = "auto";
  std::size_t time_index = 0;
  std::vector<std::size_t> tiles{1, 4};

  auto* run = app.add_subcommand("run", "Run the campaign described by a config file");
  run->add_option("--config", config_path, "campaign config file")->required();
  run->add_option("--out", out_path, "output directory")->required();
  run->add_option("--threads", threads, "worker threads");

  auto* sweep = app.add_subcommand(
      "sweep", "Run the cross product of the config's sweep_* lists");
  sweep->add_option("--config", config_path, "campaign config file")->required();
  sweep->add_option("--out", out_path, "output directory")->required();
  sweep->add_option("--threads", threads, "worker threads");

  auto* render = app.add_subcommand("render", "Render the ground truth at a time index");
  render->add_option("--config", config_path, "campaign config file")->required();
  render->add_option("--time", time_index, "time index (image index or hour)");
  render->add_option("--out", out_path, "output PGM file")->required();

  auto* stats =
      app.add_subcommand("stats", "Pairwise Wilcoxon matrix and critical-difference data");
  stats->add_option("--in", in_path, "campaign output directory")->required();
  stats->add_option("--out", out_path, "analysis output directory")->required();
  stats->add_option("--alpha", alpha, "significance level");
  stats->add_option("--metric", metric, "fitness | test_accuracy | auto");
  stats->add_option("--direction", direction, "min | max | auto");

  auto* analyze = app.add_subcommand("analyze", "Diagnostic computations");
  analyze->require_subcommand(1);
  auto* distmap = analyze->add_subcommand(
      "distmap", "Neighbor distance maps of the optimal behavior parameters");
  distmap->add_option("--config", config_path, "imitation config file")->required();
  distmap->add_option("--tiles", tiles, "tile sizes to compare");
  distmap->add_option("--out", out_path, "output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return cmd_run(config_path, out_path, threads, false);
    if (sweep->parsed()) return cmd_run(config_path, out_path, threads, true);
    if (render->parsed()) return cmd_render(config_path, time_index, out_path);
    if (stats->parsed()) return cmd_stats(in_path, out_path, alpha, metric, direction);
    if (analyze->parsed()) return cmd_distmap(config_path, tiles, out_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
