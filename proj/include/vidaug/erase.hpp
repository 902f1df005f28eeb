#pragma once

#include "vidaug/clip.hpp"
#include "vidaug/mask.hpp"
#include "vidaug/rng.hpp"

namespace vidaug {

struct EraseResult {
  Clip clip;
  MixMask mask;
};

// Zero-fills every channel of every masked pixel; pixels outside the mask
// are copied untouched.
Clip zero_fill(const Clip& clip, const MixMask& mask);

// Zeroes one box_h x box_w box at a uniformly drawn center, the same box in
// every frame. The box is clipped against the frame, so draws near the
// border erase less than box_h * box_w. Throws ValueError if the box
// exceeds the frame.
EraseResult cutout(const Clip& clip, int box_h, int box_w, RngStream& rng);

// Zeroes exactly n_frames whole frames: a uniform subset by default, a
// uniform contiguous run when contiguous is set. Throws ValueError if
// n_frames > t.
EraseResult frame_cutout(const Clip& clip, int n_frames, RngStream& rng,
                         bool contiguous = false);

// Zeroes a cutout-style spatial box over a contiguous window of exactly
// n_frames with uniform start. Throws ValueError when dims exceed bounds.
EraseResult cube_cutout(const Clip& clip, int box_h, int box_w, int n_frames,
                        RngStream& rng);

}  // namespace vidaug
