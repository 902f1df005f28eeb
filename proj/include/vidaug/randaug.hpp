#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>

#include "vidaug/clip.hpp"
#include "vidaug/frame_ops.hpp"
#include "vidaug/rng.hpp"

namespace vidaug {

// How the magnitude endpoints (m1, m2) are derived from a base magnitude m:
//
//   spatial    (m, m)                        no temporal variation
//   temporal   m2 = m, m1 ~ Uniform(min(0.1, m), m)
//   temporal+  delta ~ Uniform(0, 0.5 * m), (m - delta, m + delta),
//              both clamped to [0, 10]
//   mix        fair coin between the spatial and temporal+ rules
enum class RangeMode { Spatial, Temporal, TemporalPlus, Mix };

std::string_view range_mode_name(RangeMode mode);
std::optional<RangeMode> range_mode_from_name(std::string_view name);

struct RandAugConfig {
  int n = 1;
  RangeMode mode = RangeMode::Spatial;
  double m = 5.0;
};

// Draw order: mix draws its coin first, then the chosen rule's uniforms.
// Throws ValueError if m is outside [0, 10].
std::pair<double, double> sample_magnitude_range(RangeMode mode, double m,
                                                 RngStream& rng);

// One op over all frames, frame f at levels[f]. Parameterless kinds ignore
// the levels. levels.size() must equal clip.t.
Clip apply_op_scheduled(const Clip& clip, OpKind kind, std::span<const double> levels,
                        int sign);

// Plain frame-wise RandAugment: n ops drawn uniformly with replacement
// (kind then sign, one sign per op), each applied to every frame at the
// constant level m.
Clip randaugment(const Clip& clip, int n, double m, RngStream& rng);

// Temporal variant: identical draws, but each op is applied at the
// per-frame levels linspace(m1, m2, t), so m1 == m2 reproduces plain
// RandAugment bit for bit under the same stream.
Clip randaugment_t(const Clip& clip, int n, double m1, double m2, RngStream& rng);

}  // namespace vidaug
