#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace ttft {

/// Dense rank-3 grid of values, stored channel-major, row-major within a
/// channel. Used for heatmaps, regression targets, weight maps and their
/// gradients. Values live in double precision in memory; the on-disk tensor
/// format stores 32-bit floats (see ingest.hpp).
struct DenseMap {
  int channels = 0;
  int height = 0;
  int width = 0;
  std::vector<double> values;

  DenseMap() = default;
  DenseMap(int c, int h, int w) : channels(c), height(h), width(w) {
    if (c <= 0 || h <= 0 || w <= 0) {
      throw std::invalid_argument("DenseMap dimensions must be positive");
    }
    values.assign(static_cast<size_t>(c) * h * w, 0.0);
  }

  size_t index(int c, int y, int x) const {
    return (static_cast<size_t>(c) * height + y) * width + x;
  }
  double& at(int c, int y, int x) { return values[index(c, y, x)]; }
  double at(int c, int y, int x) const { return values[index(c, y, x)]; }
  size_t size() const { return values.size(); }
  bool same_shape(const DenseMap& o) const {
    return channels == o.channels && height == o.height && width == o.width;
  }
};

/// Integer grid used for per-cell annotation ownership (-1 = unowned).
struct IntGrid {
  int height = 0;
  int width = 0;
  std::vector<int32_t> values;

  IntGrid() = default;
  IntGrid(int h, int w, int32_t fill = -1) : height(h), width(w) {
    if (h <= 0 || w <= 0) {
      throw std::invalid_argument("IntGrid dimensions must be positive");
    }
    values.assign(static_cast<size_t>(h) * w, fill);
  }

  int32_t& at(int y, int x) { return values[static_cast<size_t>(y) * width + x]; }
  int32_t at(int y, int x) const { return values[static_cast<size_t>(y) * width + x]; }
};

}  // namespace ttft
