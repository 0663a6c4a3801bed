#pragma once

#include <cstddef>
#include <memory>
#include <vector>

#include "netee/data.hpp"
#include "netee/frame.hpp"
#include "netee/genome.hpp"
#include "netee/topology.hpp"

namespace netee {

enum class Direction { kMinimize, kMaximize };

struct GenomeSpec {
  std::size_t length = 1;
  double lb = 0.0;
  double ub = 1.0;
};

/// Per-agent fitness evaluator. Immutable after construction; evaluators are
/// pure and safe to call from multiple threads.
class Problem {
 public:
  virtual ~Problem() = default;

  virtual std::size_t node_count() const = 0;
  virtual GenomeSpec genome_spec(NodeId n) const = 0;
  virtual Direction direction() const = 0;
  virtual double evaluate(NodeId n, const Genotype& g) const = 0;

  /// Held-out score (test accuracy) where the problem defines one.
  virtual bool has_test_metric() const { return false; }
  virtual double test_metric(NodeId, const Genotype&) const;

  /// Grid problems can render agent phenotypes and ground truth at a time
  /// index; others throw.
  virtual bool has_frames() const { return false; }
  virtual std::size_t time_steps() const { return 0; }
  virtual Frame snapshot(const std::vector<Genotype>& genomes, std::size_t t) const;
  virtual Frame truth_frame(std::size_t t) const;
};

/// Each agent reproduces the pixel intensities of its grid cell (or its
/// tile of cells) across a sequence of images. Gene layout per agent:
/// index = t * tile^2 + local_row * tile + local_col.
class ImitationProblem : public Problem {
 public:
  ImitationProblem(std::vector<Frame> images, std::size_t tile);

  std::size_t agent_rows() const { return agent_rows_; }
  std::size_t agent_cols() const { return agent_cols_; }
  std::size_t tile() const { return tile_; }
  std::size_t image_count() const { return images_.size(); }

  std::size_t node_count() const override { return agent_rows_ * agent_cols_; }
  GenomeSpec genome_spec(NodeId) const override;
  Direction direction() const override { return Direction::kMinimize; }
  double evaluate(NodeId n, const Genotype& g) const override;

  bool has_frames() const override { return true; }
  std::size_t time_steps() const override { return images_.size(); }
  Frame snapshot(const std::vector<Genotype>& genomes, std::size_t t) const override;
  Frame truth_frame(std::size_t t) const override { return images_.at(t); }

  /// The genotype that reproduces the ground truth exactly.
  Genotype optimal_genotype(NodeId n) const;

 private:
  std::vector<Frame> images_;
  std::size_t tile_;
  std::size_t agent_rows_;
  std::size_t agent_cols_;
};

constexpr std::size_t kHoursPerDay = 24;

/// Scaled sinusoidal illumination target, on [0, 1]:
/// (sin(2*pi*j/n + 2*pi*t/24) + 1) / 2.
double illumination_truth(std::size_t n, std::size_t j, std::size_t t);

/// Mean absolute deviation over the 24 hours between the scaled truth at
/// column j and the scaled agent sine with phase parameter x (period n).
double illumination_single_fitness(double x, std::size_t j, std::size_t n);

/// Mean absolute deviation between the scaled truth and a 24-value genotype.
double illumination_vector_fitness(const std::vector<double>& values, std::size_t j,
                                   std::size_t n);

class IlluminationProblem : public Problem {
 public:
  enum class Mode { kSingleParam, kVector };

  IlluminationProblem(std::size_t rows, std::size_t cols, Mode mode);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Mode mode() const { return mode_; }

  std::size_t node_count() const override { return rows_ * cols_; }
  GenomeSpec genome_spec(NodeId) const override;
  Direction direction() const override { return Direction::kMinimize; }
  double evaluate(NodeId n, const Genotype& g) const override;

  bool has_frames() const override { return true; }
  std::size_t time_steps() const override { return kHoursPerDay; }
  Frame snapshot(const std::vector<Genotype>& genomes, std::size_t t) const override;
  Frame truth_frame(std::size_t t) const override;

 private:
  std::size_t rows_;
  std::size_t cols_;
  Mode mode_;
};

constexpr std::size_t kFfnnInputs = 300;
constexpr std::size_t kFfnnHidden = 100;

/// Per-node feed-forward classifier (300 -> 100 sigmoid -> outputs, biases on
/// both layers, argmax readout) whose weights are the genotype. Fitness is
/// training accuracy; the test metric is held-out accuracy.
class FfnnProblem : public Problem {
 public:
  enum class Task { kPresence, kActivity };

  struct NodeData {
    std::vector<Window> train;
    std::vector<Window> test;
  };

  FfnnProblem(Task task, std::vector<NodeData> nodes);

  static std::size_t output_count(Task task);
  static std::size_t weight_count(Task task);

  /// Argmax class of one window; ties resolve to the lowest index.
  static int forward(const std::vector<double>& weights, const Window& w,
                     std::size_t outputs);
  static double accuracy(const std::vector<double>& weights,
                         const std::vector<Window>& windows, std::size_t outputs);

  Task task() const { return task_; }
  const NodeData& node_data(NodeId n) const { return nodes_.at(n); }

  std::size_t node_count() const override { return nodes_.size(); }
  GenomeSpec genome_spec(NodeId) const override;
  Direction direction() const override { return Direction::kMaximize; }
  double evaluate(NodeId n, const Genotype& g) const override;

  bool has_test_metric() const override { return true; }
  double test_metric(NodeId n, const Genotype& g) const override;

 private:
  Task task_;
  std::vector<NodeData> nodes_;
};

}  // namespace netee
