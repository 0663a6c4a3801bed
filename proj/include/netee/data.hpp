#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "netee/frame.hpp"

namespace netee {

/// IDX3 image container; pixels stay as raw bytes, normalization happens on
/// extraction.
struct IdxImageSet {
  std::size_t count = 0;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint8_t> pixels;  // count * rows * cols bytes

  /// Image i scaled to [0, 1] (byte / 255).
  Frame image(std::size_t i) const;
};

/// Big-endian IDX3 reader (magic 0x00000803).
IdxImageSet load_idx(const std::filesystem::path& path);
void write_idx(const IdxImageSet& set, const std::filesystem::path& path);

/// First `count` images as frames; optional square center crop (0 = none).
std::vector<Frame> extract_frames(const IdxImageSet& set, std::size_t count,
                                  std::size_t crop = 0);

/// Deterministic stand-in for a handwritten-digit sequence: dark background
/// with bright stroke paths wandering near the image center. Used when no
/// IDX file is configured.
IdxImageSet synth_image_set(std::uint64_t seed, std::size_t count,
                            std::size_t rows, std::size_t cols);

/// One classification instance: 150 temperature samples followed by 150
/// humidity samples, scaled to [0, 1].
struct Window {
  std::vector<double> features;
  int label = 0;
};

/// Aligned per-node sensor streams.
struct SensorSeries {
  std::vector<double> temperature;
  std::vector<double> humidity;
  std::vector<int> labels;

  std::size_t size() const { return temperature.size(); }
  void validate() const;
};

struct SplitSpec {
  std::size_t window_len = 150;
  std::size_t stride = 30;
  double train_fraction = 0.8;
  std::uint64_t split_seed = 0;
  bool chronological = false;

  void validate() const;
};

struct WindowSplit {
  std::vector<Window> train;
  std::vector<Window> test;
};

/// Slices the series into windows (offsets 0, stride, 2*stride, ...), labels
/// each window by majority vote, splits train/test, then min-max scales each
/// modality using the training windows only. Test features are clamped to
/// [0, 1] afterwards.
WindowSplit make_windows(const SensorSeries& series, const SplitSpec& spec);

enum class SensorTask { kPresence, kActivity };

/// Synthetic room recording: a room-level label stream drives temperature and
/// humidity shifts per class; nodes share a spatially correlated noise field
/// whose correlation decays with index distance, plus per-node offsets.
std::vector<SensorSeries> synth_sensor_rooms(std::uint64_t seed, std::size_t nodes,
                                             std::size_t samples, SensorTask task);

/// CSV with header "node,timestamp,temperature,humidity,label"; rows must be
/// sorted by timestamp within each node. Returns series keyed by node name,
/// ordered by first appearance.
std::vector<std::pair<std::string, SensorSeries>> load_sensor_csv(
    const std::filesystem::path& path);

}  // namespace netee
