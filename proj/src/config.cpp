#include "netee/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace netee {

namespace {

// "0.5" -> "05", "1" -> "1", "0.001" -> "0001"; used for cell labels.
std::string compact_number(double v) {
  std::ostringstream ss;
  ss.precision(10);
  ss << std::fixed << v;
  std::string s = ss.str();
  while (s.size() > 1 && s.back() == '0') s.pop_back();
  if (!s.empty() && s.back() == '.') s.pop_back();
  s.erase(std::remove(s.begin(), s.end(), '.'), s.end());
  return s;
}

std::vector<std::string> split_ws(const std::string& s) {
  std::istringstream ss(s);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

}  // namespace

std::string CellSpec::label() const {
  std::string s = variant.name();
  if (variant.recombination == Recombination::kCrossover) {
    s += "CP" + compact_number(params.cp);
    if (params.cr != 0.5) s += "CR" + compact_number(params.cr);
  }
  s += "MR" + compact_number(params.mr);
  return s;
}

namespace {

CellSpec parse_cell(const std::string& value, std::size_t line_no) {
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error("config line " + std::to_string(line_no) +
                             ": cell: " + msg);
  };
  const std::vector<std::string> toks = split_ws(value);
  if (toks.empty()) fail("expected '<Variant> [cp=..] [cr=..] mr=..'");
  CellSpec cell;
  cell.variant = Variant::from_name(toks[0]);
  cell.params.cp = 0.0;
  cell.params.cr = 0.5;
  bool have_mr = false, have_cp = false;
  for (std::size_t i = 1; i < toks.size(); ++i) {
    const auto eq = toks[i].find('=');
    if (eq == std::string::npos) fail("expected key=value, got '" + toks[i] + "'");
    const std::string key = toks[i].substr(0, eq);
    double v = 0.0;
    try {
      v = std::stod(toks[i].substr(eq + 1));
    } catch (const std::exception&) {
      fail("bad number in '" + toks[i] + "'");
    }
    if (key == "cp") {
      cell.params.cp = v;
      have_cp = true;
    } else if (key == "cr") {
      cell.params.cr = v;
    } else if (key == "mr") {
      cell.params.mr = v;
      have_mr = true;
    } else {
      fail("unknown parameter '" + key + "'");
    }
  }
  if (!have_mr) fail("mr is required");
  if (cell.variant.recombination == Recombination::kCrossover && !have_cp)
    fail("crossover variants require cp");
  cell.params.validate();
  return cell;
}

}  // namespace

CampaignConfig parse_config(std::istream& in) {
  CampaignConfig cfg;
  std::string line;
  std::size_t line_no = 0;
  std::set<std::string> seen;

  auto fail = [&](const std::string& msg) {
    throw std::runtime_error("config line " + std::to_string(line_no) + ": " + msg);
  };
  auto to_u64 = [&](const std::string& v) -> std::uint64_t {
    try {
      return std::stoull(v);
    } catch (const std::exception&) {
      fail("expected a non-negative integer, got '" + v + "'");
      return 0;
    }
  };
  auto to_double = [&](const std::string& v) -> double {
    try {
      return std::stod(v);
    } catch (const std::exception&) {
      fail("expected a number, got '" + v + "'");
      return 0;
    }
  };

  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      if (!split_ws(line).empty()) fail("expected 'key = value'");
      continue;
    }
    std::string key = line.substr(0, eq);
    std::string value = line.substr(eq + 1);
    auto trim = [](std::string& s) {
      const auto b = s.find_first_not_of(" \t\r");
      const auto e = s.find_last_not_of(" \t\r");
      s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
    };
    trim(key);
    trim(value);
    if (key.empty()) fail("empty key");
    if (value.empty()) fail("empty value for '" + key + "'");
    if (key != "cell" && !seen.insert(key).second) fail("duplicate key '" + key + "'");

    if (key == "problem") cfg.problem = value;
    else if (key == "images") cfg.images = value;
    else if (key == "image_count") cfg.image_count = to_u64(value);
    else if (key == "image_rows") cfg.image_rows = to_u64(value);
    else if (key == "image_cols") cfg.image_cols = to_u64(value);
    else if (key == "image_crop") cfg.image_crop = to_u64(value);
    else if (key == "image_seed") cfg.image_seed = to_u64(value);
    else if (key == "tile") cfg.tile = to_u64(value);
    else if (key == "rows") cfg.rows = to_u64(value);
    else if (key == "cols") cfg.cols = to_u64(value);
    else if (key == "sensors") cfg.sensors = value;
    else if (key == "sensor_seed") cfg.sensor_seed = to_u64(value);
    else if (key == "sensor_nodes") cfg.sensor_nodes = to_u64(value);
    else if (key == "sensor_samples") cfg.sensor_samples = to_u64(value);
    else if (key == "train_fraction") cfg.train_fraction = to_double(value);
    else if (key == "split_seed") cfg.split_seed = to_u64(value);
    else if (key == "split") cfg.split = value;
    else if (key == "topology") cfg.topology = value;
    else if (key == "cell") cfg.cells.push_back(parse_cell(value, line_no));
    else if (key == "sweep_variants") cfg.sweep_variants = split_ws(value);
    else if (key == "sweep_cp") {
      for (const auto& t : split_ws(value)) cfg.sweep_cp.push_back(to_double(t));
    } else if (key == "sweep_cr") {
      for (const auto& t : split_ws(value)) cfg.sweep_cr.push_back(to_double(t));
    } else if (key == "sweep_mr") {
      for (const auto& t : split_ws(value)) cfg.sweep_mr.push_back(to_double(t));
    } else if (key == "runs") cfg.runs = to_u64(value);
    else if (key == "generations") cfg.generations = to_u64(value);
    else if (key == "master_seed") cfg.master_seed = to_u64(value);
    else if (key == "snapshot_generations") {
      for (const auto& t : split_ws(value))
        cfg.snapshot_generations.push_back(to_u64(t));
    } else if (key == "snapshot_time") cfg.snapshot_time = to_u64(value);
    else if (key == "collective") cfg.collective = value;
    else if (key == "hidden_activation") cfg.hidden_activation = value;
    else if (key == "bound_handling") cfg.bound_handling = value;
    else if (key == "emit_agents") {
      if (value == "true") cfg.emit_agents = true;
      else if (value == "false") cfg.emit_agents = false;
      else fail("emit_agents must be true or false");
    } else fail("unknown key '" + key + "'");
  }
  cfg.validate();
  return cfg;
}

CampaignConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path.string());
  try {
    return parse_config(in);
  } catch (const std::exception& e) {
    throw std::runtime_error(path.string() + ": " + e.what());
  }
}

void CampaignConfig::validate() const {
  static const std::set<std::string> kProblems{
      "imitation", "illumination_single", "illumination_vector", "presence",
      "activity"};
  if (!kProblems.count(problem))
    throw std::runtime_error("unknown problem '" + problem + "'");
  if (runs < 1) throw std::runtime_error("runs must be >= 1");
  if (collective != "mean" && collective != "sum")
    throw std::runtime_error("collective must be mean or sum");
  if (split != "shuffle" && split != "chronological")
    throw std::runtime_error("split must be shuffle or chronological");
  if (hidden_activation != "sigmoid")
    throw std::runtime_error("hidden_activation: only sigmoid is supported");
  if (bound_handling != "clamp")
    throw std::runtime_error("bound_handling: only clamp is supported");
  if (!(train_fraction > 0.0 && train_fraction < 1.0))
    throw std::runtime_error("train_fraction must be in (0, 1)");
  for (std::size_t g : snapshot_generations)
    if (g > generations)
      throw std::runtime_error("snapshot generation " + std::to_string(g) +
                               " beyond the last generation");
  for (const CellSpec& c : cells) c.params.validate();
}

std::vector<CellSpec> expand_sweep(const CampaignConfig& cfg) {
  if (cfg.sweep_variants.empty() || cfg.sweep_mr.empty())
    throw std::runtime_error("sweep requires sweep_variants and sweep_mr");
  std::vector<CellSpec> cells;
  std::set<std::string> labels;
  for (const std::string& name : cfg.sweep_variants) {
    const Variant variant = Variant::from_name(name);
    const bool crossover = variant.recombination == Recombination::kCrossover;
    const std::vector<double> cps =
        crossover ? (cfg.sweep_cp.empty()
                         ? throw std::runtime_error("sweep_cp required for " + name)
                         : cfg.sweep_cp)
                  : std::vector<double>{0.0};
    const std::vector<double> crs =
        crossover && !cfg.sweep_cr.empty() ? cfg.sweep_cr : std::vector<double>{0.5};
    for (double mr : cfg.sweep_mr) {
      for (double cp : cps) {
        for (double cr : crs) {
          CellSpec cell{variant, OperatorParams{cp, cr, mr}};
          cell.params.validate();
          if (labels.insert(cell.label()).second) cells.push_back(cell);
        }
      }
    }
  }
  return cells;
}

std::vector<CellSpec> campaign_cells(const CampaignConfig& cfg) {
  std::vector<CellSpec> cells = cfg.cells.empty() ? expand_sweep(cfg) : cfg.cells;
  std::set<std::string> labels;
  for (const CellSpec& c : cells)
    if (!labels.insert(c.label()).second)
      throw std::runtime_error("duplicate cell '" + c.label() + "'");
  return cells;
}

}  // namespace netee
