#include "vidaug/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "vidaug/error.hpp"
#include "vidaug/frame_ops.hpp"

namespace vidaug {

void PipelineConfig::validate() const {
  if (crop_size < 1 || jitter_lo < 1 || jitter_hi < jitter_lo) {
    throw ValueError("invalid jitter range [" + std::to_string(jitter_lo) + ", " +
                     std::to_string(jitter_hi) + "] / crop " + std::to_string(crop_size));
  }
  if (crop_size > jitter_lo) {
    throw ValueError("crop size " + std::to_string(crop_size) +
                     " exceeds jitter lower bound " + std::to_string(jitter_lo));
  }
  if (!(hflip_prob >= 0.0 && hflip_prob <= 1.0)) {
    throw ValueError("hflip probability " + std::to_string(hflip_prob) +
                     " outside [0, 1]");
  }
  if (!(mix_prob >= 0.0 && mix_prob <= 1.0)) {
    throw ValueError("mix probability " + std::to_string(mix_prob) + " outside [0, 1]");
  }
  if (randaug) {
    if (randaug->n < 1) {
      throw ValueError("randaug op count must be >= 1");
    }
    if (!(randaug->m >= 0.0 && randaug->m <= 10.0)) {
      throw ValueError("randaug magnitude " + std::to_string(randaug->m) +
                       " outside [0, 10]");
    }
  }
  if (mix && !(mix->alpha > 0.0)) {
    throw ValueError("mix alpha must be > 0");
  }
  if (num_classes < 1) {
    throw ValueError("num_classes must be >= 1");
  }
}

Clip resize_bilinear(const Clip& clip, int new_h, int new_w) {
  if (new_h < 1 || new_w < 1) {
    throw ValueError("invalid resize target " + std::to_string(new_h) + "x" +
                     std::to_string(new_w));
  }
  if (new_h == clip.h && new_w == clip.w) {
    return clip;
  }
  Clip out(clip.t, new_h, new_w, clip.c);
  const double sy_scale = static_cast<double>(clip.h) / new_h;
  const double sx_scale = static_cast<double>(clip.w) / new_w;
  // Half-pixel centers, taps clamped to the frame.
  std::vector<int> x0s(static_cast<std::size_t>(new_w)), x1s(static_cast<std::size_t>(new_w));
  std::vector<double> fxs(static_cast<std::size_t>(new_w));
  for (int x = 0; x < new_w; ++x) {
    const double sx = (x + 0.5) * sx_scale - 0.5;
    const double fl = std::floor(sx);
    x0s[static_cast<std::size_t>(x)] = std::clamp(static_cast<int>(fl), 0, clip.w - 1);
    x1s[static_cast<std::size_t>(x)] =
        std::clamp(static_cast<int>(fl) + 1, 0, clip.w - 1);
    fxs[static_cast<std::size_t>(x)] = std::clamp(sx - fl, 0.0, 1.0);
  }
  for (int f = 0; f < clip.t; ++f) {
    const FrameView src = clip.frame(f);
    std::uint8_t* dst = out.frame_data(f);
    for (int y = 0; y < new_h; ++y) {
      const double sy = (y + 0.5) * sy_scale - 0.5;
      const double fl = std::floor(sy);
      const int y0 = std::clamp(static_cast<int>(fl), 0, clip.h - 1);
      const int y1 = std::clamp(static_cast<int>(fl) + 1, 0, clip.h - 1);
      const double fy = std::clamp(sy - fl, 0.0, 1.0);
      for (int x = 0; x < new_w; ++x) {
        const int x0 = x0s[static_cast<std::size_t>(x)];
        const int x1 = x1s[static_cast<std::size_t>(x)];
        const double fx = fxs[static_cast<std::size_t>(x)];
        for (int ch = 0; ch < clip.c; ++ch) {
          const double top =
              (1.0 - fx) * src.at(y0, x0, ch) + fx * src.at(y0, x1, ch);
          const double bot =
              (1.0 - fx) * src.at(y1, x0, ch) + fx * src.at(y1, x1, ch);
          dst[(std::int64_t(y) * new_w + x) * clip.c + ch] =
              round_u8((1.0 - fy) * top + fy * bot);
        }
      }
    }
  }
  return out;
}

Clip crop(const Clip& clip, int y0, int x0, int crop_h, int crop_w) {
  if (y0 < 0 || x0 < 0 || crop_h < 1 || crop_w < 1 || y0 + crop_h > clip.h ||
      x0 + crop_w > clip.w) {
    throw ValueError("crop " + std::to_string(crop_h) + "x" + std::to_string(crop_w) +
                     "+" + std::to_string(y0) + "+" + std::to_string(x0) +
                     " outside clip " + std::to_string(clip.h) + "x" +
                     std::to_string(clip.w));
  }
  Clip out(clip.t, crop_h, crop_w, clip.c);
  for (int f = 0; f < clip.t; ++f) {
    for (int y = 0; y < crop_h; ++y) {
      const std::uint8_t* src =
          clip.frame_data(f) + (std::int64_t(y0 + y) * clip.w + x0) * clip.c;
      std::copy_n(src, std::int64_t(crop_w) * clip.c, out.frame_data(f) +
                                                          std::int64_t(y) * crop_w *
                                                              clip.c);
    }
  }
  return out;
}

Clip hflip(const Clip& clip) {
  Clip out(clip.t, clip.h, clip.w, clip.c);
  for (int f = 0; f < clip.t; ++f) {
    for (int y = 0; y < clip.h; ++y) {
      for (int x = 0; x < clip.w; ++x) {
        for (int ch = 0; ch < clip.c; ++ch) {
          out.at(f, y, x, ch) = clip.at(f, y, clip.w - 1 - x, ch);
        }
      }
    }
  }
  return out;
}

Clip baseline(const Clip& clip, const PipelineConfig& cfg, RngStream& rng) {
  cfg.validate();
  const int side = static_cast<int>(rng.next_int(cfg.jitter_lo, cfg.jitter_hi));
  int new_h, new_w;
  if (clip.h <= clip.w) {
    new_h = side;
    new_w = static_cast<int>(
        std::lround(static_cast<double>(clip.w) * side / clip.h));
  } else {
    new_w = side;
    new_h = static_cast<int>(
        std::lround(static_cast<double>(clip.h) * side / clip.w));
  }
  Clip resized = resize_bilinear(clip, new_h, new_w);
  if (resized.h < cfg.crop_size || resized.w < cfg.crop_size) {
    throw ValueError("clip smaller than crop after resize: " + std::to_string(resized.h) +
                     "x" + std::to_string(resized.w) + " vs crop " +
                     std::to_string(cfg.crop_size));
  }
  const int y0 = static_cast<int>(rng.next_int(0, resized.h - cfg.crop_size));
  const int x0 = static_cast<int>(rng.next_int(0, resized.w - cfg.crop_size));
  Clip cropped = crop(resized, y0, x0, cfg.crop_size, cfg.crop_size);
  if (rng.next_double() < cfg.hflip_prob) {
    return hflip(cropped);
  }
  return cropped;
}

MixResult augment_sample(const Sample& a, const std::optional<Sample>& b,
                         const PipelineConfig& cfg, std::uint64_t seed,
                         std::uint64_t clip_id) {
  cfg.validate();
  if (cfg.mix && !b) {
    throw ValueError("mix method configured but no partner sample given");
  }
  if (!cfg.mix && b) {
    throw ValueError("partner sample given but no mix method configured");
  }

  auto run_single = [&](const Clip& clip, std::uint64_t base_op,
                        std::uint64_t randaug_op) {
    RngStream base_rng = rng_derive(seed, clip_id, base_op);
    Clip out = baseline(clip, cfg, base_rng);
    if (cfg.randaug) {
      RngStream aug_rng = rng_derive(seed, clip_id, randaug_op);
      const auto [m1, m2] =
          sample_magnitude_range(cfg.randaug->mode, cfg.randaug->m, aug_rng);
      out = randaugment_t(out, cfg.randaug->n, m1, m2, aug_rng);
    }
    return out;
  };

  Clip aug_a = run_single(a.clip, kOpBaselineA, kOpRandAugA);
  if (cfg.mix) {
    RngStream gate = rng_derive(seed, clip_id, kOpMixGate);
    if (gate.next_double() < cfg.mix_prob) {
      Clip aug_b = run_single(b->clip, kOpBaselineB, kOpRandAugB);
      RngStream mix_rng = rng_derive(seed, clip_id, kOpMix);
      return apply_mix(cfg.mix->method, aug_a, aug_b, a.label, b->label,
                       cfg.mix->alpha, mix_rng);
    }
  }
  return MixResult{std::move(aug_a), a.label, 1.0, std::nullopt, std::nullopt};
}

}  // namespace vidaug
