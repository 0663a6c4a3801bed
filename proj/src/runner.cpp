#include "netee/runner.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "netee/data.hpp"

namespace netee {

namespace {

constexpr std::uint64_t kCampaignSalt = 0xCA4Bu;

std::string fmt_double(double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::vector<Frame> imitation_frames(const CampaignConfig& cfg) {
  IdxImageSet set;
  if (cfg.images == "synthetic") {
    set = synth_image_set(cfg.image_seed, cfg.image_count, cfg.image_rows,
                          cfg.image_cols);
  } else {
    set = load_idx(cfg.images);
  }
  return extract_frames(set, cfg.image_count, cfg.image_crop);
}

std::vector<FfnnProblem::NodeData> sensor_node_data(const CampaignConfig& cfg,
                                                    FfnnProblem::Task task) {
  SplitSpec spec;
  spec.train_fraction = cfg.train_fraction;
  spec.split_seed = cfg.split_seed;
  spec.chronological = cfg.split == "chronological";

  std::vector<SensorSeries> series;
  if (cfg.sensors == "synthetic") {
    series = synth_sensor_rooms(cfg.sensor_seed, cfg.sensor_nodes,
                                cfg.sensor_samples,
                                task == FfnnProblem::Task::kPresence
                                    ? SensorTask::kPresence
                                    : SensorTask::kActivity);
  } else {
    for (auto& [name, s] : load_sensor_csv(cfg.sensors)) series.push_back(std::move(s));
  }
  std::vector<FfnnProblem::NodeData> nodes;
  nodes.reserve(series.size());
  for (std::size_t i = 0; i < series.size(); ++i) {
    // Per-node split seeds stay deterministic but independent.
    SplitSpec node_spec = spec;
    node_spec.split_seed = mix_seed(spec.split_seed, i);
    WindowSplit split = make_windows(series[i], node_spec);
    nodes.push_back({std::move(split.train), std::move(split.test)});
  }
  return nodes;
}

}  // namespace

std::shared_ptr<Problem> build_problem(const CampaignConfig& cfg) {
  if (cfg.problem == "imitation")
    return std::make_shared<ImitationProblem>(imitation_frames(cfg), cfg.tile);
  if (cfg.problem == "illumination_single")
    return std::make_shared<IlluminationProblem>(cfg.rows, cfg.cols,
                                                 IlluminationProblem::Mode::kSingleParam);
  if (cfg.problem == "illumination_vector")
    return std::make_shared<IlluminationProblem>(cfg.rows, cfg.cols,
                                                 IlluminationProblem::Mode::kVector);
  const auto task = cfg.problem == "presence" ? FfnnProblem::Task::kPresence
                                              : FfnnProblem::Task::kActivity;
  return std::make_shared<FfnnProblem>(task, sensor_node_data(cfg, task));
}

Topology build_topology(const CampaignConfig& cfg, const Problem& problem) {
  if (cfg.topology == "grid") {
    if (auto* imit = dynamic_cast<const ImitationProblem*>(&problem))
      return Topology(GridTopology(imit->agent_rows(), imit->agent_cols()));
    if (auto* illum = dynamic_cast<const IlluminationProblem*>(&problem))
      return Topology(GridTopology(illum->rows(), illum->cols()));
    throw std::runtime_error("topology 'grid' needs a grid problem; use 'path' or a file");
  }
  if (cfg.topology == "path") {
    const std::size_t n = problem.node_count();
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Topology(GraphTopology(n, edges));
  }
  GraphTopology g = load_topology(cfg.topology);
  if (g.node_count() != problem.node_count())
    throw std::runtime_error("topology has " + std::to_string(g.node_count()) +
                             " nodes but the problem has " +
                             std::to_string(problem.node_count()));
  return Topology(std::move(g));
}

RunResult run_single(const Problem& problem, const Topology& topo,
                     const Variant& variant, const OperatorParams& params,
                     std::size_t generations, std::uint64_t run_key,
                     const std::vector<std::size_t>& snapshot_generations,
                     std::size_t snapshot_time, bool collect_agents) {
  variant.validate();
  params.validate();
  const Direction dir = problem.direction();

  RunResult result;
  result.collective.reserve(generations + 1);
  const bool has_test = problem.has_test_metric();

  std::vector<AgentState> agents = make_initial_agents(problem, run_key);
  auto record = [&](std::size_t g) {
    result.collective.push_back(collective_fitness(agents));
    if (has_test) result.test_metric.push_back(collective_test_metric(agents));
    if (std::find(snapshot_generations.begin(), snapshot_generations.end(), g) !=
        snapshot_generations.end()) {
      std::vector<Genotype> genomes;
      genomes.reserve(agents.size());
      for (const AgentState& a : agents) genomes.push_back(a.genotype);
      result.snapshots.emplace_back(g, problem.snapshot(genomes, snapshot_time));
    }
  };

  record(0);
  for (std::size_t g = 0; g < generations; ++g) {
    agents = step_generation(agents, topo, problem, variant, params, dir, g);
    record(g + 1);
  }

  if (collect_agents) {
    for (const AgentState& a : agents) {
      result.final_fitness.push_back(a.fitness);
      if (has_test) result.final_test_metric.push_back(a.test_metric);
    }
  }
  return result;
}

std::uint64_t campaign_run_key(std::uint64_t master_seed, std::size_t cell_index,
                               std::size_t run_index) {
  const std::uint64_t campaign_key =
      mix_seed(Rng::from_seed(master_seed).key(), kCampaignSalt);
  return mix_seed(mix_seed(campaign_key, cell_index), run_index);
}

namespace {

void write_trajectory_csv(const std::filesystem::path& path, const RunResult& result,
                          double scale) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "generation,collective_fitness";
  if (!result.test_metric.empty()) out << ",test_accuracy";
  out << "\n";
  for (std::size_t g = 0; g < result.collective.size(); ++g) {
    out << g << "," << fmt_double(result.collective[g] * scale);
    if (!result.test_metric.empty()) out << "," << fmt_double(result.test_metric[g]);
    out << "\n";
  }
}

void write_agents_csv(const std::filesystem::path& path, const RunResult& result) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << "node,fitness";
  if (!result.final_test_metric.empty()) out << ",test_accuracy";
  out << "\n";
  for (std::size_t n = 0; n < result.final_fitness.size(); ++n) {
    out << n << "," << fmt_double(result.final_fitness[n]);
    if (!result.final_test_metric.empty())
      out << "," << fmt_double(result.final_test_metric[n]);
    out << "\n";
  }
}

}  // namespace

CampaignReport run_campaign(const CampaignConfig& cfg,
                            const std::filesystem::path& out_dir, unsigned threads) {
  cfg.validate();
  const std::vector<CellSpec> cells = campaign_cells(cfg);
  if (cells.empty()) throw std::runtime_error("campaign has no cells");
  std::filesystem::create_directories(out_dir);

  const std::shared_ptr<Problem> problem = build_problem(cfg);
  const Topology topo = build_topology(cfg, *problem);
  const double scale = cfg.collective == "sum"
                           ? static_cast<double>(problem->node_count())
                           : 1.0;

  {
    std::ofstream meta(out_dir / "cells.csv", std::ios::binary);
    meta << "cell,label,variant,cp,cr,mr,direction,metric\n";
    for (std::size_t c = 0; c < cells.size(); ++c) {
      const CellSpec& cell = cells[c];
      meta << c << "," << cell.label() << "," << cell.variant.name() << ","
           << fmt_double(cell.params.cp) << "," << fmt_double(cell.params.cr) << ","
           << fmt_double(cell.params.mr) << ","
           << (problem->direction() == Direction::kMinimize ? "min" : "max") << ","
           << (problem->has_test_metric() ? "test_accuracy" : "fitness") << "\n";
    }
  }

  struct Task {
    std::size_t cell;
    std::size_t run;
  };
  std::vector<Task> tasks;
  for (std::size_t c = 0; c < cells.size(); ++c)
    for (std::size_t r = 0; r < cfg.runs; ++r) tasks.push_back({c, r});

  CampaignReport report;
  report.trajectory_files.resize(tasks.size());
  std::vector<std::vector<std::filesystem::path>> snapshot_files(tasks.size());
  std::atomic<std::size_t> next_task{0};
  std::atomic<bool> failed{false};
  std::string first_error;
  std::mutex error_mutex;

  auto worker = [&]() {
    for (;;) {
      const std::size_t t = next_task.fetch_add(1);
      if (t >= tasks.size() || failed.load()) return;
      const Task task = tasks[t];
      const CellSpec& cell = cells[task.cell];
      try {
        const std::uint64_t run_key =
            campaign_run_key(cfg.master_seed, task.cell, task.run);
        const RunResult result =
            run_single(*problem, topo, cell.variant, cell.params, cfg.generations,
                       run_key, cfg.snapshot_generations, cfg.snapshot_time,
                       cfg.emit_agents);
        const std::string base = cell.label() + "_" + std::to_string(task.run);
        const auto traj_path = out_dir / ("trajectory_" + base + ".csv");
        write_trajectory_csv(traj_path, result, scale);
        report.trajectory_files[t] = traj_path;
        for (const auto& [gen, frame] : result.snapshots) {
          const auto snap_path =
              out_dir / ("snap_" + base + "_g" + std::to_string(gen) + ".pgm");
          save_pgm(frame, snap_path);
          snapshot_files[t].push_back(snap_path);
        }
        if (cfg.emit_agents)
          write_agents_csv(out_dir / ("agents_" + base + ".csv"), result);
      } catch (const std::exception& e) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!failed.exchange(true)) first_error = e.what();
      }
    }
  };

  const unsigned worker_count =
      std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
  if (worker_count == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(worker_count);
    for (unsigned i = 0; i < worker_count; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failed.load()) throw std::runtime_error("campaign failed: " + first_error);

  for (auto& files : snapshot_files)
    report.snapshot_files.insert(report.snapshot_files.end(), files.begin(),
                                 files.end());
  return report;
}

SampleMatrix collect_final_scores(const std::filesystem::path& dir,
                                  const std::string& metric, Direction direction) {
  if (metric != "fitness" && metric != "test_accuracy")
    throw std::invalid_argument("metric must be fitness or test_accuracy");
  std::map<std::string, std::map<std::size_t, double>> by_label;

  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (!name.starts_with("trajectory_") || !name.ends_with(".csv")) continue;
    const std::string stem = name.substr(11, name.size() - 11 - 4);
    const auto us = stem.rfind('_');
    if (us == std::string::npos)
      throw std::runtime_error("unexpected trajectory file name: " + name);
    const std::string label = stem.substr(0, us);
    const std::size_t run = std::stoul(stem.substr(us + 1));

    std::ifstream in(entry.path());
    if (!in) throw std::runtime_error("cannot open " + entry.path().string());
    std::string line, header, last;
    std::getline(in, header);
    while (std::getline(in, line))
      if (!line.empty()) last = line;
    if (last.empty()) throw std::runtime_error("empty trajectory: " + name);

    std::vector<std::string> cols, vals;
    {
      std::istringstream hs(header), ls(last);
      std::string tok;
      while (std::getline(hs, tok, ',')) cols.push_back(tok);
      while (std::getline(ls, tok, ',')) vals.push_back(tok);
    }
    const auto it = std::find(cols.begin(), cols.end(),
                              metric == "fitness" ? "collective_fitness" : metric);
    if (it == cols.end())
      throw std::runtime_error(name + " has no column for metric " + metric);
    const std::size_t idx = static_cast<std::size_t>(it - cols.begin());
    if (idx >= vals.size()) throw std::runtime_error(name + ": short final row");
    by_label[label][run] = std::stod(vals[idx]);
  }
  if (by_label.empty())
    throw std::runtime_error("no trajectory_*.csv files in " + dir.string());

  SampleMatrix m;
  m.direction = direction;
  for (const auto& [label, runs] : by_label) {
    m.algorithms.push_back(label);
    std::vector<double> scores;
    scores.reserve(runs.size());
    for (const auto& [run, score] : runs) scores.push_back(score);
    m.samples.push_back(std::move(scores));
  }
  return m;
}

}  // namespace netee
