#pragma once

#include <cstddef>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace netee {

/// Row-major grayscale frame with values in [0, 1].
struct Frame {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> v;

  Frame() = default;
  Frame(std::size_t r, std::size_t c, double fill = 0.0)
      : rows(r), cols(c), v(r * c, fill) {}

  double& at(std::size_t i, std::size_t j) { return v[i * cols + j]; }
  double at(std::size_t i, std::size_t j) const { return v[i * cols + j]; }

  double max_value() const;
};

/// 8-bit ASCII PGM (P2); values clamped to [0, 1] and quantized to 0..255.
void write_pgm(const Frame& f, std::ostream& out);
void save_pgm(const Frame& f, const std::filesystem::path& path);
std::string to_pgm(const Frame& f);

/// Plain CSV, one image row per line.
void write_frame_csv(const Frame& f, std::ostream& out);
void save_frame_csv(const Frame& f, const std::filesystem::path& path);

}  // namespace netee
