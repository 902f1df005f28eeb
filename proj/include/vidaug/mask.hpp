#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "vidaug/rng.hpp"

namespace vidaug {

enum class MaskKind { SpatialBox, FrameSet, Cube };

std::string_view mask_kind_name(MaskKind kind);
std::optional<MaskKind> mask_kind_from_name(std::string_view name);

// A region of a t x h x w pixel volume together with its exact size.
// SpatialBox masks the box [y0,y1) x [x0,x1) in every frame; FrameSet masks
// whole frames; Cube masks the box over the frame window [t0,t1).
// masked_pixels / total_pixels is the exact volume fraction (channels are
// not counted; a masked pixel masks all its channels).
struct MixMask {
  MaskKind kind = MaskKind::SpatialBox;
  int t = 0, h = 0, w = 0;
  int y0 = 0, y1 = 0, x0 = 0, x1 = 0;
  int t0 = 0, t1 = 0;
  std::vector<int> frames;  // FrameSet members, strictly ascending

  std::int64_t masked_pixels = 0;
  std::int64_t total_pixels = 0;

  double volume_fraction() const {
    return static_cast<double>(masked_pixels) / static_cast<double>(total_pixels);
  }

  bool contains(int frame, int y, int x) const;

  // Per-frame coverage: true if the mask covers any pixel of the frame.
  bool touches_frame(int frame) const;

  static MixMask spatial_box(int t, int h, int w, int y0, int y1, int x0, int x1);
  static MixMask frame_set(int t, int h, int w, std::vector<int> frames);
  static MixMask cube(int t, int h, int w, int t0, int t1, int y0, int y1, int x0,
                      int x1);
};

// Draws a mask with volume close to target_fraction of t*h*w:
//
//   spatial-box  side ratio sqrt(f) per spatial axis (rounded); center drawn
//                uniformly over the pixel grid, then the box is shifted to
//                lie fully inside, so the realized size always equals the
//                rounded request (fraction 1 masks everything)
//   frame-set    round(f * t) frames; a uniform subset, or a uniform
//                contiguous window when contiguous_frames is set
//   cube         per-axis ratio cbrt(f) (rounded); temporal window start
//                uniform, spatial placement as spatial-box
//
// volume_fraction() reports the exact realized fraction, which differs from
// target_fraction only by integer rounding of the axis lengths.
// Throws ValueError if target_fraction is outside [0, 1].
MixMask make_mask(MaskKind kind, double target_fraction, int t, int h, int w,
                  bool contiguous_frames, RngStream& rng);

// Uniform subset of k distinct values from {0..n-1}, ascending.
std::vector<int> sample_index_subset(int n, int k, RngStream& rng);

}  // namespace vidaug
