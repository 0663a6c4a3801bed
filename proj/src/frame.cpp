#include "netee/frame.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace netee {

double Frame::max_value() const {
  double m = 0.0;
  for (double x : v) m = std::max(m, x);
  return m;
}

void write_pgm(const Frame& f, std::ostream& out) {
  out << "P2\n" << f.cols << " " << f.rows << "\n255\n";
  for (std::size_t i = 0; i < f.rows; ++i) {
    for (std::size_t j = 0; j < f.cols; ++j) {
      const double x = std::clamp(f.at(i, j), 0.0, 1.0);
      const int q = static_cast<int>(std::lround(x * 255.0));
      out << q << (j + 1 == f.cols ? '\n' : ' ');
    }
  }
}

void save_pgm(const Frame& f, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_pgm(f, out);
}

std::string to_pgm(const Frame& f) {
  std::ostringstream ss;
  write_pgm(f, ss);
  return ss.str();
}

namespace {
void append_double(std::string& s, double x) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  s.append(buf, res.ptr);
}
}  // namespace

void write_frame_csv(const Frame& f, std::ostream& out) {
  std::string line;
  for (std::size_t i = 0; i < f.rows; ++i) {
    line.clear();
    for (std::size_t j = 0; j < f.cols; ++j) {
      if (j) line.push_back(',');
      append_double(line, f.at(i, j));
    }
    line.push_back('\n');
    out << line;
  }
}

void save_frame_csv(const Frame& f, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_frame_csv(f, out);
}

}  // namespace netee
