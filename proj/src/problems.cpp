#include "netee/problems.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace netee {

double Problem::test_metric(NodeId, const Genotype&) const {
  throw std::logic_error("problem has no test metric");
}

Frame Problem::snapshot(const std::vector<Genotype>&, std::size_t) const {
  throw std::logic_error("snapshots require a grid problem");
}

Frame Problem::truth_frame(std::size_t) const {
  throw std::logic_error("problem has no ground-truth frames");
}

ImitationProblem::ImitationProblem(std::vector<Frame> images, std::size_t tile)
    : images_(std::move(images)), tile_(tile) {
  if (images_.empty()) throw std::invalid_argument("imitation needs >= 1 image");
  if (tile_ == 0) throw std::invalid_argument("tile must be >= 1");
  const std::size_t rows = images_.front().rows;
  const std::size_t cols = images_.front().cols;
  for (const Frame& f : images_)
    if (f.rows != rows || f.cols != cols)
      throw std::invalid_argument("imitation images differ in size");
  if (rows % tile_ != 0 || cols % tile_ != 0)
    throw std::invalid_argument("image size must be divisible by tile");
  agent_rows_ = rows / tile_;
  agent_cols_ = cols / tile_;
}

GenomeSpec ImitationProblem::genome_spec(NodeId) const {
  return {tile_ * tile_ * images_.size(), 0.0, 1.0};
}

double ImitationProblem::evaluate(NodeId n, const Genotype& g) const {
  const std::size_t expect = tile_ * tile_ * images_.size();
  if (g.size() != expect)
    throw std::invalid_argument("imitation genotype length " +
                                std::to_string(g.size()) + ", expected " +
                                std::to_string(expect));
  const std::size_t ai = n / agent_cols_;
  const std::size_t aj = n % agent_cols_;
  double sum = 0.0;
  for (std::size_t t = 0; t < images_.size(); ++t) {
    const Frame& img = images_[t];
    for (std::size_t r = 0; r < tile_; ++r) {
      for (std::size_t c = 0; c < tile_; ++c) {
        const double truth = img.at(ai * tile_ + r, aj * tile_ + c);
        const double gene = g.values[t * tile_ * tile_ + r * tile_ + c];
        sum += std::abs(truth - gene);
      }
    }
  }
  return sum / static_cast<double>(expect);
}

Frame ImitationProblem::snapshot(const std::vector<Genotype>& genomes,
                                 std::size_t t) const {
  if (genomes.size() != node_count())
    throw std::invalid_argument("snapshot needs one genotype per agent");
  if (t >= images_.size()) throw std::out_of_range("snapshot time out of range");
  Frame f(agent_rows_ * tile_, agent_cols_ * tile_);
  for (std::size_t n = 0; n < genomes.size(); ++n) {
    const std::size_t ai = n / agent_cols_;
    const std::size_t aj = n % agent_cols_;
    for (std::size_t r = 0; r < tile_; ++r)
      for (std::size_t c = 0; c < tile_; ++c)
        f.at(ai * tile_ + r, aj * tile_ + c) =
            genomes[n].values[t * tile_ * tile_ + r * tile_ + c];
  }
  return f;
}

Genotype ImitationProblem::optimal_genotype(NodeId n) const {
  const std::size_t ai = n / agent_cols_;
  const std::size_t aj = n % agent_cols_;
  Genotype g;
  g.lb = 0.0;
  g.ub = 1.0;
  g.values.resize(tile_ * tile_ * images_.size());
  for (std::size_t t = 0; t < images_.size(); ++t)
    for (std::size_t r = 0; r < tile_; ++r)
      for (std::size_t c = 0; c < tile_; ++c)
        g.values[t * tile_ * tile_ + r * tile_ + c] =
            images_[t].at(ai * tile_ + r, aj * tile_ + c);
  return g;
}

double illumination_truth(std::size_t n, std::size_t j, std::size_t t) {
  const double raw = std::sin(2.0 * M_PI * static_cast<double>(j) / static_cast<double>(n) +
                              2.0 * M_PI * static_cast<double>(t) / 24.0);
  return (raw + 1.0) / 2.0;
}

namespace {
double agent_sine_scaled(double x, std::size_t n, std::size_t t) {
  const double raw = std::sin(2.0 * M_PI * x / static_cast<double>(n) +
                              2.0 * M_PI * static_cast<double>(t) / 24.0);
  return (raw + 1.0) / 2.0;
}
}  // namespace

double illumination_single_fitness(double x, std::size_t j, std::size_t n) {
  double sum = 0.0;
  for (std::size_t t = 0; t < kHoursPerDay; ++t)
    sum += std::abs(illumination_truth(n, j, t) - agent_sine_scaled(x, n, t));
  return sum / static_cast<double>(kHoursPerDay);
}

double illumination_vector_fitness(const std::vector<double>& values, std::size_t j,
                                   std::size_t n) {
  if (values.size() != kHoursPerDay)
    throw std::invalid_argument("vector illumination genotype must have 24 values");
  double sum = 0.0;
  for (std::size_t t = 0; t < kHoursPerDay; ++t)
    sum += std::abs(illumination_truth(n, j, t) - values[t]);
  return sum / static_cast<double>(kHoursPerDay);
}

IlluminationProblem::IlluminationProblem(std::size_t rows, std::size_t cols, Mode mode)
    : rows_(rows), cols_(cols), mode_(mode) {
  if (rows == 0 || cols == 0)
    throw std::invalid_argument("illumination grid dimensions must be >= 1");
}

GenomeSpec IlluminationProblem::genome_spec(NodeId) const {
  if (mode_ == Mode::kSingleParam) return {1, 0.0, 50.0};
  return {kHoursPerDay, 0.0, 1.0};
}

double IlluminationProblem::evaluate(NodeId n, const Genotype& g) const {
  const std::size_t j = n % cols_;
  if (mode_ == Mode::kSingleParam) {
    if (g.size() != 1)
      throw std::invalid_argument("single-parameter genotype must have 1 value");
    return illumination_single_fitness(g.values[0], j, cols_);
  }
  return illumination_vector_fitness(g.values, j, cols_);
}

Frame IlluminationProblem::snapshot(const std::vector<Genotype>& genomes,
                                    std::size_t t) const {
  if (genomes.size() != node_count())
    throw std::invalid_argument("snapshot needs one genotype per agent");
  if (t >= kHoursPerDay) throw std::out_of_range("snapshot time out of range");
  Frame f(rows_, cols_);
  for (std::size_t n = 0; n < genomes.size(); ++n) {
    const double value = mode_ == Mode::kSingleParam
                             ? agent_sine_scaled(genomes[n].values[0], cols_, t)
                             : genomes[n].values[t];
    f.v[n] = value;
  }
  return f;
}

Frame IlluminationProblem::truth_frame(std::size_t t) const {
  if (t >= kHoursPerDay) throw std::out_of_range("truth time out of range");
  Frame f(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      f.at(i, j) = illumination_truth(cols_, j, t);
  return f;
}

FfnnProblem::FfnnProblem(Task task, std::vector<NodeData> nodes)
    : task_(task), nodes_(std::move(nodes)) {
  if (nodes_.empty()) throw std::invalid_argument("ffnn needs >= 1 node");
  for (const NodeData& nd : nodes_) {
    if (nd.train.empty()) throw std::invalid_argument("ffnn node has no training windows");
    for (const Window& w : nd.train)
      if (w.features.size() != kFfnnInputs)
        throw std::invalid_argument("window must have 300 features");
    for (const Window& w : nd.test)
      if (w.features.size() != kFfnnInputs)
        throw std::invalid_argument("window must have 300 features");
  }
}

std::size_t FfnnProblem::output_count(Task task) {
  return task == Task::kPresence ? 2 : 4;
}

std::size_t FfnnProblem::weight_count(Task task) {
  return (kFfnnInputs + 1) * kFfnnHidden + (kFfnnHidden + 1) * output_count(task);
}

int FfnnProblem::forward(const std::vector<double>& weights, const Window& w,
                         std::size_t outputs) {
  const std::size_t expect = (kFfnnInputs + 1) * kFfnnHidden + (kFfnnHidden + 1) * outputs;
  if (weights.size() != expect)
    throw std::invalid_argument("weight vector length " + std::to_string(weights.size()) +
                                ", expected " + std::to_string(expect));
  if (w.features.size() != kFfnnInputs)
    throw std::invalid_argument("window must have 300 features");

  double hidden[kFfnnHidden];
  const double* wp = weights.data();
  for (std::size_t h = 0; h < kFfnnHidden; ++h, wp += kFfnnInputs + 1) {
    double acc = wp[kFfnnInputs];  // bias
    for (std::size_t k = 0; k < kFfnnInputs; ++k) acc += wp[k] * w.features[k];
    hidden[h] = 1.0 / (1.0 + std::exp(-acc));
  }
  int best = 0;
  double best_act = -std::numeric_limits<double>::infinity();
  for (std::size_t o = 0; o < outputs; ++o, wp += kFfnnHidden + 1) {
    double acc = wp[kFfnnHidden];  // bias
    for (std::size_t h = 0; h < kFfnnHidden; ++h) acc += wp[h] * hidden[h];
    if (acc > best_act) {
      best_act = acc;
      best = static_cast<int>(o);
    }
  }
  return best;
}

double FfnnProblem::accuracy(const std::vector<double>& weights,
                             const std::vector<Window>& windows, std::size_t outputs) {
  if (windows.empty()) throw std::invalid_argument("accuracy needs >= 1 window");
  std::size_t correct = 0;
  for (const Window& w : windows)
    if (forward(weights, w, outputs) == w.label) ++correct;
  return static_cast<double>(correct) / static_cast<double>(windows.size());
}

GenomeSpec FfnnProblem::genome_spec(NodeId) const {
  return {weight_count(task_), -1.0, 1.0};
}

double FfnnProblem::evaluate(NodeId n, const Genotype& g) const {
  return accuracy(g.values, nodes_.at(n).train, output_count(task_));
}

double FfnnProblem::test_metric(NodeId n, const Genotype& g) const {
  return accuracy(g.values, nodes_.at(n).test, output_count(task_));
}

}  // namespace netee
