#pragma once

#include <cstdint>
#include <optional>

#include "vidaug/clip.hpp"
#include "vidaug/label.hpp"
#include "vidaug/mix.hpp"
#include "vidaug/randaug.hpp"
#include "vidaug/rng.hpp"

namespace vidaug {

struct MixSpec {
  MixMethod method = MixMethod::Mixup;
  double alpha = 2.0;
};

struct PipelineConfig {
  int crop_size = 160;
  int jitter_lo = 160;
  int jitter_hi = 200;
  double hflip_prob = 0.5;
  std::optional<RandAugConfig> randaug;
  std::optional<MixSpec> mix;
  double mix_prob = 0.5;

  // Consumed by the CLI, carried here so one JSON config describes a run.
  std::uint64_t seed = 0;
  int num_classes = 101;

  // crop_size <= jitter_lo <= jitter_hi, probabilities in [0, 1].
  void validate() const;
};

struct Sample {
  Clip clip;
  LabelDist label;
};

// Stream derivation table for augment_sample: rng_derive(seed, clip_id, op).
inline constexpr std::uint64_t kOpBaselineA = 0;
inline constexpr std::uint64_t kOpBaselineB = 1;
inline constexpr std::uint64_t kOpRandAugA = 2;
inline constexpr std::uint64_t kOpRandAugB = 3;
inline constexpr std::uint64_t kOpMixGate = 4;
inline constexpr std::uint64_t kOpMix = 5;

// Bilinear resize (half-pixel centers, edge-clamped taps), same mapping for
// every frame. Identity when the size is unchanged.
Clip resize_bilinear(const Clip& clip, int new_h, int new_w);

// Axis-aligned crop shared by all frames; box must lie inside the clip.
Clip crop(const Clip& clip, int y0, int x0, int crop_h, int crop_w);

// Horizontal mirror of every frame.
Clip hflip(const Clip& clip);

// Baseline spatial pipeline: resize so the short side equals a uniform
// integer draw in [jitter_lo, jitter_hi] (aspect preserved), take a
// uniformly placed crop_size^2 crop shared across frames, then flip
// horizontally with hflip_prob. Draw order: side, crop y, crop x, flip.
Clip baseline(const Clip& clip, const PipelineConfig& cfg, RngStream& rng);

// Full per-sample pipeline: baseline on each input, RandAugment(-T) if
// configured (magnitude range drawn then ops, one stream per input), then
// with probability mix_prob the configured mix op. Without mixing the
// result carries clip A and label_a unchanged. Pure function of
// (inputs, cfg, seed, clip_id); partner b must be present exactly when
// cfg.mix is set.
MixResult augment_sample(const Sample& a, const std::optional<Sample>& b,
                         const PipelineConfig& cfg, std::uint64_t seed,
                         std::uint64_t clip_id);

}  // namespace vidaug
