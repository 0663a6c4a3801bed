#include "netee/data.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "netee/rng.hpp"

namespace netee {

namespace {

constexpr std::uint32_t kIdx3Magic = 0x00000803;

std::uint32_t read_be32(std::istream& in) {
  std::array<unsigned char, 4> b{};
  in.read(reinterpret_cast<char*>(b.data()), 4);
  if (!in) throw std::runtime_error("idx: truncated header");
  return (std::uint32_t(b[0]) << 24) | (std::uint32_t(b[1]) << 16) |
         (std::uint32_t(b[2]) << 8) | std::uint32_t(b[3]);
}

void write_be32(std::ostream& out, std::uint32_t v) {
  const std::array<unsigned char, 4> b{static_cast<unsigned char>(v >> 24),
                                       static_cast<unsigned char>(v >> 16),
                                       static_cast<unsigned char>(v >> 8),
                                       static_cast<unsigned char>(v)};
  out.write(reinterpret_cast<const char*>(b.data()), 4);
}

}  // namespace

Frame IdxImageSet::image(std::size_t i) const {
  if (i >= count) throw std::out_of_range("image index out of range");
  Frame f(rows, cols);
  const std::uint8_t* src = pixels.data() + i * rows * cols;
  for (std::size_t k = 0; k < rows * cols; ++k)
    f.v[k] = static_cast<double>(src[k]) / 255.0;
  return f;
}

IdxImageSet load_idx(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  const std::uint32_t magic = read_be32(in);
  if (magic != kIdx3Magic) {
    std::ostringstream msg;
    msg << path.string() << ": bad idx magic 0x" << std::hex << magic;
    throw std::runtime_error(msg.str());
  }
  IdxImageSet set;
  set.count = read_be32(in);
  set.rows = read_be32(in);
  set.cols = read_be32(in);
  if (set.rows == 0 || set.cols == 0)
    throw std::runtime_error(path.string() + ": zero image dimensions");
  set.pixels.resize(set.count * set.rows * set.cols);
  in.read(reinterpret_cast<char*>(set.pixels.data()),
          static_cast<std::streamsize>(set.pixels.size()));
  if (static_cast<std::size_t>(in.gcount()) != set.pixels.size())
    throw std::runtime_error(path.string() + ": truncated pixel data");
  return set;
}

void write_idx(const IdxImageSet& set, const std::filesystem::path& path) {
  if (set.pixels.size() != set.count * set.rows * set.cols)
    throw std::invalid_argument("idx: pixel buffer size mismatch");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_be32(out, kIdx3Magic);
  write_be32(out, static_cast<std::uint32_t>(set.count));
  write_be32(out, static_cast<std::uint32_t>(set.rows));
  write_be32(out, static_cast<std::uint32_t>(set.cols));
  out.write(reinterpret_cast<const char*>(set.pixels.data()),
            static_cast<std::streamsize>(set.pixels.size()));
}

std::vector<Frame> extract_frames(const IdxImageSet& set, std::size_t count,
                                  std::size_t crop) {
  if (count > set.count)
    throw std::invalid_argument("requested more images than the set holds");
  std::vector<Frame> frames;
  frames.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Frame full = set.image(i);
    if (crop == 0 || (crop == set.rows && crop == set.cols)) {
      frames.push_back(std::move(full));
      continue;
    }
    if (crop > set.rows || crop > set.cols)
      throw std::invalid_argument("crop larger than image");
    const std::size_t r0 = (set.rows - crop) / 2;
    const std::size_t c0 = (set.cols - crop) / 2;
    Frame f(crop, crop);
    for (std::size_t i2 = 0; i2 < crop; ++i2)
      for (std::size_t j2 = 0; j2 < crop; ++j2)
        f.at(i2, j2) = full.at(r0 + i2, c0 + j2);
    frames.push_back(std::move(f));
  }
  return frames;
}

IdxImageSet synth_image_set(std::uint64_t seed, std::size_t count,
                            std::size_t rows, std::size_t cols) {
  if (count == 0 || rows == 0 || cols == 0)
    throw std::invalid_argument("synth_image_set: dimensions must be positive");
  IdxImageSet set;
  set.count = count;
  set.rows = rows;
  set.cols = cols;
  set.pixels.assign(count * rows * cols, 0);

  const Rng root = Rng::from_seed(seed);
  const double brush = std::max(1.0, std::min(rows, cols) / 12.0);
  for (std::size_t t = 0; t < count; ++t) {
    Rng rng = root.substream(t);
    Frame f(rows, cols);
    const std::size_t strokes = 2 + rng.uniform_index(2);
    for (std::size_t s = 0; s < strokes; ++s) {
      // Stroke = short random walk starting near the center.
      double y = rows * (0.35 + 0.3 * rng.uniform01());
      double x = cols * (0.35 + 0.3 * rng.uniform01());
      double heading = rng.uniform(0.0, 2.0 * M_PI);
      const std::size_t steps = 3 * std::min(rows, cols);
      for (std::size_t step = 0; step < steps; ++step) {
        heading += rng.gaussian(0.35);
        y += 0.5 * std::sin(heading);
        x += 0.5 * std::cos(heading);
        y = std::clamp(y, rows * 0.12, rows * 0.88);
        x = std::clamp(x, cols * 0.12, cols * 0.88);
        const long long i0 = std::llround(y - brush), i1 = std::llround(y + brush);
        const long long j0 = std::llround(x - brush), j1 = std::llround(x + brush);
        for (long long i = std::max(0LL, i0);
             i <= std::min<long long>(rows - 1, i1); ++i) {
          for (long long j = std::max(0LL, j0);
               j <= std::min<long long>(cols - 1, j1); ++j) {
            const double d2 = (i - y) * (i - y) + (j - x) * (j - x);
            const double ink = std::exp(-d2 / (0.6 * brush * brush));
            auto& px = f.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
            px = std::min(1.0, px + ink);
          }
        }
      }
    }
    for (std::size_t k = 0; k < rows * cols; ++k)
      set.pixels[t * rows * cols + k] =
          static_cast<std::uint8_t>(std::lround(std::clamp(f.v[k], 0.0, 1.0) * 255.0));
  }
  return set;
}

void SensorSeries::validate() const {
  if (temperature.size() != humidity.size() || temperature.size() != labels.size())
    throw std::invalid_argument("sensor series streams differ in length");
}

void SplitSpec::validate() const {
  if (stride == 0 || window_len <= stride)
    throw std::invalid_argument("split spec requires window_len > stride > 0");
  if (!(train_fraction > 0.0 && train_fraction < 1.0))
    throw std::invalid_argument("train_fraction must be in (0, 1)");
}

namespace {

int majority_label(const std::vector<int>& labels, std::size_t begin, std::size_t len) {
  std::map<int, std::size_t> counts;
  for (std::size_t k = begin; k < begin + len; ++k) ++counts[labels[k]];
  int best = 0;
  std::size_t best_count = 0;
  for (const auto& [label, n] : counts) {
    if (n > best_count) {  // map iterates ascending, so ties keep the smaller label
      best = label;
      best_count = n;
    }
  }
  return best;
}

struct MinMax {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();
  void add(double x) {
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  double scale(double x) const {
    if (!(hi > lo)) return 0.0;  // degenerate range maps to 0
    return (x - lo) / (hi - lo);
  }
};

}  // namespace

WindowSplit make_windows(const SensorSeries& series, const SplitSpec& spec) {
  series.validate();
  spec.validate();
  const std::size_t len = series.size();
  if (len < spec.window_len)
    throw std::invalid_argument("series shorter than one window");

  const std::size_t n = (len - spec.window_len) / spec.stride + 1;
  std::vector<Window> raw(n);
  for (std::size_t w = 0; w < n; ++w) {
    const std::size_t off = w * spec.stride;
    Window& win = raw[w];
    win.features.reserve(2 * spec.window_len);
    win.features.insert(win.features.end(), series.temperature.begin() + off,
                        series.temperature.begin() + off + spec.window_len);
    win.features.insert(win.features.end(), series.humidity.begin() + off,
                        series.humidity.begin() + off + spec.window_len);
    win.label = majority_label(series.labels, off, spec.window_len);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  if (!spec.chronological) {
    Rng rng = Rng::from_seed(spec.split_seed);
    for (std::size_t i = n - 1; i > 0; --i)
      std::swap(order[i], order[rng.uniform_index(i + 1)]);
  }
  const auto n_train = static_cast<std::size_t>(
      std::min<double>(n, std::lround(spec.train_fraction * static_cast<double>(n))));

  WindowSplit split;
  for (std::size_t k = 0; k < n; ++k)
    (k < n_train ? split.train : split.test).push_back(std::move(raw[order[k]]));

  // Scale each modality with min-max fitted on the training windows.
  MinMax temp_range, hum_range;
  for (const Window& w : split.train) {
    for (std::size_t k = 0; k < spec.window_len; ++k) temp_range.add(w.features[k]);
    for (std::size_t k = spec.window_len; k < 2 * spec.window_len; ++k)
      hum_range.add(w.features[k]);
  }
  auto apply = [&](std::vector<Window>& windows, bool clamp) {
    for (Window& w : windows) {
      for (std::size_t k = 0; k < 2 * spec.window_len; ++k) {
        const MinMax& r = k < spec.window_len ? temp_range : hum_range;
        double x = r.scale(w.features[k]);
        if (clamp) x = std::clamp(x, 0.0, 1.0);
        w.features[k] = x;
      }
    }
  };
  apply(split.train, false);
  apply(split.test, true);
  return split;
}

std::vector<SensorSeries> synth_sensor_rooms(std::uint64_t seed, std::size_t nodes,
                                             std::size_t samples, SensorTask task) {
  if (nodes == 0) throw std::invalid_argument("nodes must be >= 1");
  if (samples < 150) throw std::invalid_argument("samples must be >= 150");

  const Rng root = Rng::from_seed(seed);

  // Room-level label stream: one label per dwell segment.
  const int classes = task == SensorTask::kPresence ? 2 : 4;
  std::vector<int> labels(samples);
  {
    Rng rng = root.substream(0xA1);
    std::size_t t = 0;
    while (t < samples) {
      const std::size_t dwell = 120 + rng.uniform_index(120);
      const int label = static_cast<int>(rng.uniform_index(classes));
      for (std::size_t k = 0; k < dwell && t < samples; ++k, ++t) labels[t] = label;
    }
  }

  // Class signatures: additive shifts on top of the node baseline.
  static constexpr double kPresenceTemp[] = {0.0, 1.6};
  static constexpr double kPresenceHum[] = {0.0, 3.5};
  static constexpr double kActivityTemp[] = {0.0, 1.2, 2.4, 3.6};
  static constexpr double kActivityHum[] = {0.0, 3.2, -1.8, 1.4};
  const double* temp_shift = task == SensorTask::kPresence ? kPresenceTemp : kActivityTemp;
  const double* hum_shift = task == SensorTask::kPresence ? kPresenceHum : kActivityHum;

  // Noise: spatial AR(1) across node index (corr phi^|i-j|) smoothed by a
  // temporal AR(1), built separately for each modality.
  constexpr double kPhi = 0.6;   // spatial decay
  constexpr double kPsi = 0.9;   // temporal smoothing
  auto build_field = [&](std::uint64_t tag) {
    std::vector<std::vector<double>> field(nodes, std::vector<double>(samples));
    std::vector<Rng> node_rng;
    node_rng.reserve(nodes);
    for (std::size_t i = 0; i < nodes; ++i)
      node_rng.push_back(root.substream(tag + i));
    std::vector<double> prev(nodes, 0.0);
    for (std::size_t t = 0; t < samples; ++t) {
      double chain = 0.0;
      for (std::size_t i = 0; i < nodes; ++i) {
        const double e = node_rng[i].gaussian(1.0);
        chain = i == 0 ? e : kPhi * chain + std::sqrt(1.0 - kPhi * kPhi) * e;
        const double z = t == 0 ? chain
                                : kPsi * prev[i] + std::sqrt(1.0 - kPsi * kPsi) * chain;
        field[i][t] = z;
        prev[i] = z;
      }
    }
    return field;
  };
  const auto temp_field = build_field(0x1000);
  const auto hum_field = build_field(0x2000);

  std::vector<SensorSeries> rooms(nodes);
  for (std::size_t i = 0; i < nodes; ++i) {
    SensorSeries& s = rooms[i];
    s.temperature.resize(samples);
    s.humidity.resize(samples);
    s.labels = labels;
    for (std::size_t t = 0; t < samples; ++t) {
      s.temperature[t] =
          21.0 + 0.4 * static_cast<double>(i) + temp_shift[labels[t]] + 0.8 * temp_field[i][t];
      s.humidity[t] =
          55.0 - 0.6 * static_cast<double>(i) + hum_shift[labels[t]] + 2.0 * hum_field[i][t];
    }
  }
  return rooms;
}

std::vector<std::pair<std::string, SensorSeries>> load_sensor_csv(
    const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());

  std::string line;
  std::size_t line_no = 0;
  auto fail = [&](const std::string& msg) {
    throw std::runtime_error(path.string() + " line " + std::to_string(line_no) +
                             ": " + msg);
  };

  if (!std::getline(in, line)) fail("empty file");
  ++line_no;
  if (line.ends_with("\r")) line.pop_back();
  if (line != "node,timestamp,temperature,humidity,label")
    fail("expected header 'node,timestamp,temperature,humidity,label'");

  std::vector<std::pair<std::string, SensorSeries>> out;
  std::map<std::string, std::size_t> index;
  std::map<std::string, double> last_ts;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.ends_with("\r")) line.pop_back();
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::string node, ts_s, temp_s, hum_s, label_s;
    if (!std::getline(ls, node, ',') || !std::getline(ls, ts_s, ',') ||
        !std::getline(ls, temp_s, ',') || !std::getline(ls, hum_s, ',') ||
        !std::getline(ls, label_s))
      fail("expected 5 comma-separated fields");
    double ts, temp, hum;
    int label;
    try {
      ts = std::stod(ts_s);
      temp = std::stod(temp_s);
      hum = std::stod(hum_s);
      label = std::stoi(label_s);
    } catch (const std::exception&) {
      fail("malformed numeric field");
      return out;  // unreachable
    }
    if (label < 0) fail("negative label");
    auto [it, inserted] = index.emplace(node, out.size());
    if (inserted) out.emplace_back(node, SensorSeries{});
    if (!inserted && ts < last_ts[node]) fail("timestamps not sorted for node " + node);
    last_ts[node] = ts;
    SensorSeries& s = out[it->second].second;
    s.temperature.push_back(temp);
    s.humidity.push_back(hum);
    s.labels.push_back(label);
  }
  if (out.empty()) throw std::runtime_error(path.string() + ": no data rows");
  return out;
}

}  // namespace netee
