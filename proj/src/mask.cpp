#include "vidaug/mask.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "vidaug/clip.hpp"
#include "vidaug/error.hpp"

namespace vidaug {

namespace {

void check_bounds(int lo, int hi, int dim, const char* axis) {
  if (lo < 0 || hi > dim || lo > hi) {
    throw ValueError(std::string("mask geometry out of bounds on ") + axis + ": [" +
                     std::to_string(lo) + ", " + std::to_string(hi) + ") in dim " +
                     std::to_string(dim));
  }
}

// Uniform center over the pixel grid, then the box is shifted inward so the
// requested length always fits.
int place_side(int dim, int len, RngStream& rng) {
  const int center = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(dim)));
  return std::clamp(center - len / 2, 0, dim - len);
}

int round_side(double ratio, int dim) {
  return std::clamp(static_cast<int>(std::lround(ratio * dim)), 0, dim);
}

}  // namespace

std::string_view mask_kind_name(MaskKind kind) {
  switch (kind) {
    case MaskKind::SpatialBox:
      return "spatial-box";
    case MaskKind::FrameSet:
      return "frame-set";
    case MaskKind::Cube:
      return "cube";
  }
  return "";
}

std::optional<MaskKind> mask_kind_from_name(std::string_view name) {
  if (name == "spatial-box") return MaskKind::SpatialBox;
  if (name == "frame-set") return MaskKind::FrameSet;
  if (name == "cube") return MaskKind::Cube;
  return std::nullopt;
}

bool MixMask::contains(int frame, int y, int x) const {
  switch (kind) {
    case MaskKind::SpatialBox:
      return y >= y0 && y < y1 && x >= x0 && x < x1;
    case MaskKind::FrameSet:
      return std::binary_search(frames.begin(), frames.end(), frame);
    case MaskKind::Cube:
      return frame >= t0 && frame < t1 && y >= y0 && y < y1 && x >= x0 && x < x1;
  }
  return false;
}

bool MixMask::touches_frame(int frame) const {
  switch (kind) {
    case MaskKind::SpatialBox:
      return y1 > y0 && x1 > x0;
    case MaskKind::FrameSet:
      return std::binary_search(frames.begin(), frames.end(), frame);
    case MaskKind::Cube:
      return frame >= t0 && frame < t1 && y1 > y0 && x1 > x0;
  }
  return false;
}

MixMask MixMask::spatial_box(int t, int h, int w, int y0, int y1, int x0, int x1) {
  validate_dims(t, h, w, 1);
  check_bounds(y0, y1, h, "y");
  check_bounds(x0, x1, w, "x");
  MixMask m;
  m.kind = MaskKind::SpatialBox;
  m.t = t;
  m.h = h;
  m.w = w;
  m.y0 = y0;
  m.y1 = y1;
  m.x0 = x0;
  m.x1 = x1;
  m.masked_pixels = std::int64_t(y1 - y0) * (x1 - x0) * t;
  m.total_pixels = std::int64_t(t) * h * w;
  return m;
}

MixMask MixMask::frame_set(int t, int h, int w, std::vector<int> frames) {
  validate_dims(t, h, w, 1);
  std::sort(frames.begin(), frames.end());
  for (std::size_t i = 0; i < frames.size(); ++i) {
    if (frames[i] < 0 || frames[i] >= t || (i > 0 && frames[i] == frames[i - 1])) {
      throw ValueError("invalid frame index " + std::to_string(frames[i]) +
                       " in frame set");
    }
  }
  MixMask m;
  m.kind = MaskKind::FrameSet;
  m.t = t;
  m.h = h;
  m.w = w;
  m.frames = std::move(frames);
  m.masked_pixels = std::int64_t(m.frames.size()) * h * w;
  m.total_pixels = std::int64_t(t) * h * w;
  return m;
}

MixMask MixMask::cube(int t, int h, int w, int t0, int t1, int y0, int y1, int x0,
                      int x1) {
  validate_dims(t, h, w, 1);
  check_bounds(t0, t1, t, "t");
  check_bounds(y0, y1, h, "y");
  check_bounds(x0, x1, w, "x");
  MixMask m;
  m.kind = MaskKind::Cube;
  m.t = t;
  m.h = h;
  m.w = w;
  m.t0 = t0;
  m.t1 = t1;
  m.y0 = y0;
  m.y1 = y1;
  m.x0 = x0;
  m.x1 = x1;
  m.masked_pixels = std::int64_t(t1 - t0) * (y1 - y0) * (x1 - x0);
  m.total_pixels = std::int64_t(t) * h * w;
  return m;
}

std::vector<int> sample_index_subset(int n, int k, RngStream& rng) {
  std::vector<int> idx(static_cast<std::size_t>(n));
  std::iota(idx.begin(), idx.end(), 0);
  // Partial Fisher-Yates: the first k entries are a uniform k-subset.
  for (int i = 0; i < k; ++i) {
    const int j = i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n - i)));
    std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
  }
  idx.resize(static_cast<std::size_t>(k));
  std::sort(idx.begin(), idx.end());
  return idx;
}

MixMask make_mask(MaskKind kind, double target_fraction, int t, int h, int w,
                  bool contiguous_frames, RngStream& rng) {
  if (!(target_fraction >= 0.0 && target_fraction <= 1.0)) {
    throw ValueError("mask fraction " + std::to_string(target_fraction) +
                     " outside [0, 1]");
  }
  validate_dims(t, h, w, 1);
  switch (kind) {
    case MaskKind::SpatialBox: {
      const double side = std::sqrt(target_fraction);
      const int bh = round_side(side, h);
      const int bw = round_side(side, w);
      const int y0 = place_side(h, bh, rng);
      const int x0 = place_side(w, bw, rng);
      return MixMask::spatial_box(t, h, w, y0, y0 + bh, x0, x0 + bw);
    }
    case MaskKind::FrameSet: {
      const int k = round_side(target_fraction, t);
      if (contiguous_frames) {
        const int start = static_cast<int>(rng.next_int(0, t - k));
        std::vector<int> frames(static_cast<std::size_t>(k));
        std::iota(frames.begin(), frames.end(), start);
        return MixMask::frame_set(t, h, w, std::move(frames));
      }
      return MixMask::frame_set(t, h, w, sample_index_subset(t, k, rng));
    }
    case MaskKind::Cube: {
      const double side = std::cbrt(target_fraction);
      const int bt = round_side(side, t);
      const int bh = round_side(side, h);
      const int bw = round_side(side, w);
      const int t0 = static_cast<int>(rng.next_int(0, t - bt));
      const int y0 = place_side(h, bh, rng);
      const int x0 = place_side(w, bw, rng);
      return MixMask::cube(t, h, w, t0, t0 + bt, y0, y0 + bh, x0, x0 + bw);
    }
  }
  throw ValueError("unknown mask kind");
}

}  // namespace vidaug
