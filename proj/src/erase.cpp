#include "vidaug/erase.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

#include "vidaug/error.hpp"

namespace vidaug {

namespace {

// Cutout-style box: uniform center, truncated against the frame, so border
// draws produce partial boxes.
struct Box {
  int y0, y1, x0, x1;
};

Box draw_truncated_box(int h, int w, int box_h, int box_w, RngStream& rng) {
  const int cy = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(h)));
  const int cx = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(w)));
  Box b;
  b.y0 = std::max(cy - box_h / 2, 0);
  b.y1 = std::min(cy - box_h / 2 + box_h, h);
  b.x0 = std::max(cx - box_w / 2, 0);
  b.x1 = std::min(cx - box_w / 2 + box_w, w);
  if (b.y1 < b.y0) b.y1 = b.y0;
  if (b.x1 < b.x0) b.x1 = b.x0;
  return b;
}

void check_box(int box_h, int box_w, int h, int w) {
  if (box_h < 0 || box_w < 0 || box_h > h || box_w > w) {
    throw ValueError("invalid erase box " + std::to_string(box_h) + "x" +
                     std::to_string(box_w) + " for frame " + std::to_string(h) + "x" +
                     std::to_string(w));
  }
}

}  // namespace

Clip zero_fill(const Clip& clip, const MixMask& mask) {
  Clip out = clip;
  std::vector<char> frame_hit(static_cast<std::size_t>(clip.t));
  for (int f = 0; f < clip.t; ++f) {
    frame_hit[static_cast<std::size_t>(f)] = mask.touches_frame(f);
  }
  for (int f = 0; f < clip.t; ++f) {
    if (!frame_hit[static_cast<std::size_t>(f)]) {
      continue;
    }
    if (mask.kind == MaskKind::FrameSet) {
      std::fill_n(out.frame_data(f), clip.frame_samples(), std::uint8_t{0});
      continue;
    }
    for (int y = mask.y0; y < mask.y1; ++y) {
      auto* row = out.frame_data(f) + (std::int64_t(y) * clip.w + mask.x0) * clip.c;
      std::fill_n(row, std::int64_t(mask.x1 - mask.x0) * clip.c, std::uint8_t{0});
    }
  }
  return out;
}

EraseResult cutout(const Clip& clip, int box_h, int box_w, RngStream& rng) {
  check_box(box_h, box_w, clip.h, clip.w);
  const Box b = draw_truncated_box(clip.h, clip.w, box_h, box_w, rng);
  MixMask mask = MixMask::spatial_box(clip.t, clip.h, clip.w, b.y0, b.y1, b.x0, b.x1);
  return EraseResult{zero_fill(clip, mask), std::move(mask)};
}

EraseResult frame_cutout(const Clip& clip, int n_frames, RngStream& rng,
                         bool contiguous) {
  if (n_frames < 0 || n_frames > clip.t) {
    throw ValueError("invalid frame count " + std::to_string(n_frames) + " for clip with " +
                     std::to_string(clip.t) + " frames");
  }
  std::vector<int> frames;
  if (contiguous) {
    const int start = static_cast<int>(rng.next_int(0, clip.t - n_frames));
    frames.resize(static_cast<std::size_t>(n_frames));
    std::iota(frames.begin(), frames.end(), start);
  } else {
    frames = sample_index_subset(clip.t, n_frames, rng);
  }
  MixMask mask = MixMask::frame_set(clip.t, clip.h, clip.w, std::move(frames));
  return EraseResult{zero_fill(clip, mask), std::move(mask)};
}

EraseResult cube_cutout(const Clip& clip, int box_h, int box_w, int n_frames,
                        RngStream& rng) {
  check_box(box_h, box_w, clip.h, clip.w);
  if (n_frames < 0 || n_frames > clip.t) {
    throw ValueError("invalid frame count " + std::to_string(n_frames) + " for clip with " +
                     std::to_string(clip.t) + " frames");
  }
  const int t0 = static_cast<int>(rng.next_int(0, clip.t - n_frames));
  const Box b = draw_truncated_box(clip.h, clip.w, box_h, box_w, rng);
  MixMask mask =
      MixMask::cube(clip.t, clip.h, clip.w, t0, t0 + n_frames, b.y0, b.y1, b.x0, b.x1);
  return EraseResult{zero_fill(clip, mask), std::move(mask)};
}

}  // namespace vidaug
