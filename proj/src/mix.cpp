#include "vidaug/mix.hpp"

#include <string>
#include <utility>
#include <vector>

#include "vidaug/error.hpp"
#include "vidaug/frame_ops.hpp"

namespace vidaug {

namespace {

void check_same_dims(const Clip& a, const Clip& b) {
  if (!a.same_dims(b)) {
    throw ValueError("incompatible clips: " + std::to_string(a.t) + "x" +
                     std::to_string(a.h) + "x" + std::to_string(a.w) + "x" +
                     std::to_string(a.c) + " vs " + std::to_string(b.t) + "x" +
                     std::to_string(b.h) + "x" + std::to_string(b.w) + "x" +
                     std::to_string(b.c));
  }
}

void check_labels(const LabelDist& a, const LabelDist& b) {
  if (a.num_classes() != b.num_classes()) {
    throw ValueError("incompatible labels: " + std::to_string(a.num_classes()) +
                     " vs " + std::to_string(b.num_classes()) + " classes");
  }
}

// Per-frame blend at the frame's ratio; lambda applies to A.
Clip blend_scheduled(const Clip& a, const Clip& b, const std::vector<double>& lambdas) {
  Clip out(a.t, a.h, a.w, a.c);
  const std::int64_t fs = a.frame_samples();
  for (int f = 0; f < a.t; ++f) {
    const double lam = lambdas[static_cast<std::size_t>(f)];
    const std::uint8_t* pa = a.frame_data(f);
    const std::uint8_t* pb = b.frame_data(f);
    std::uint8_t* po = out.frame_data(f);
    for (std::int64_t i = 0; i < fs; ++i) {
      po[i] = round_u8(lam * pa[i] + (1.0 - lam) * pb[i]);
    }
  }
  return out;
}

}  // namespace

std::string_view mix_method_name(MixMethod method) {
  switch (method) {
    case MixMethod::Mixup:
      return "mixup";
    case MixMethod::FadeMixup:
      return "fademixup";
    case MixMethod::CutMix:
      return "cutmix";
    case MixMethod::FrameCutMix:
      return "framecutmix";
    case MixMethod::CubeCutMix:
      return "cubecutmix";
    case MixMethod::CutMixup:
      return "cutmixup";
    case MixMethod::FrameCutMixup:
      return "framecutmixup";
    case MixMethod::CubeCutMixup:
      return "cubecutmixup";
  }
  return "";
}

std::optional<MixMethod> mix_method_from_name(std::string_view name) {
  if (name == "mixup") return MixMethod::Mixup;
  if (name == "fademixup") return MixMethod::FadeMixup;
  if (name == "cutmix") return MixMethod::CutMix;
  if (name == "framecutmix") return MixMethod::FrameCutMix;
  if (name == "cubecutmix") return MixMethod::CubeCutMix;
  if (name == "cutmixup") return MixMethod::CutMixup;
  if (name == "framecutmixup" || name == "framemixup") return MixMethod::FrameCutMixup;
  if (name == "cubecutmixup" || name == "cubemixup") return MixMethod::CubeCutMixup;
  return std::nullopt;
}

MixResult mixup_at(const Clip& a, const Clip& b, const LabelDist& label_a,
                   const LabelDist& label_b, double lambda) {
  check_same_dims(a, b);
  check_labels(label_a, label_b);
  std::vector<double> lambdas(static_cast<std::size_t>(a.t), lambda);
  return MixResult{blend_scheduled(a, b, lambdas), label_mix(label_a, label_b, lambda),
                   lambda, std::nullopt, std::nullopt};
}

MixResult mixup(const Clip& a, const Clip& b, const LabelDist& label_a,
                const LabelDist& label_b, double alpha, RngStream& rng) {
  const double lambda = sample_beta(rng, alpha, alpha);
  return mixup_at(a, b, label_a, label_b, lambda);
}

MixResult fademixup_at(const Clip& a, const Clip& b, const LabelDist& label_a,
                       const LabelDist& label_b, double lambda, double gamma) {
  check_same_dims(a, b);
  check_labels(label_a, label_b);
  const std::vector<double> lambdas =
      linspace(lambda - gamma, lambda + gamma, static_cast<std::size_t>(a.t));
  MixResult res{blend_scheduled(a, b, lambdas), label_mix(label_a, label_b, lambda),
                lambda, std::nullopt, gamma};
  return res;
}

MixResult fademixup(const Clip& a, const Clip& b, const LabelDist& label_a,
                    const LabelDist& label_b, double alpha, RngStream& rng) {
  const double lambda = sample_beta(rng, alpha, alpha);
  const double gamma = sample_uniform(rng, 0.0, std::min(lambda, 1.0 - lambda));
  return fademixup_at(a, b, label_a, label_b, lambda, gamma);
}

MixResult cutmix_at(const Clip& a, const Clip& b, const LabelDist& label_a,
                    const LabelDist& label_b, const MixMask& mask) {
  check_same_dims(a, b);
  check_labels(label_a, label_b);
  Clip out = a;
  for (int f = 0; f < a.t; ++f) {
    if (!mask.touches_frame(f)) {
      continue;
    }
    if (mask.kind == MaskKind::FrameSet) {
      std::copy_n(b.frame_data(f), b.frame_samples(), out.frame_data(f));
      continue;
    }
    for (int y = mask.y0; y < mask.y1; ++y) {
      const std::int64_t off = (std::int64_t(y) * a.w + mask.x0) * a.c;
      std::copy_n(b.frame_data(f) + off, std::int64_t(mask.x1 - mask.x0) * a.c,
                  out.frame_data(f) + off);
    }
  }
  const double lambda_used = 1.0 - mask.volume_fraction();
  return MixResult{std::move(out), label_mix(label_a, label_b, lambda_used),
                   lambda_used, mask, std::nullopt};
}

MixResult cutmix(const Clip& a, const Clip& b, const LabelDist& label_a,
                 const LabelDist& label_b, double alpha, MaskKind kind, RngStream& rng,
                 bool contiguous_frames) {
  const double lambda = sample_beta(rng, alpha, alpha);
  const MixMask mask =
      make_mask(kind, 1.0 - lambda, a.t, a.h, a.w, contiguous_frames, rng);
  return cutmix_at(a, b, label_a, label_b, mask);
}

MixResult cutmixup_at(const Clip& a, const Clip& b, const LabelDist& label_a,
                      const LabelDist& label_b, double lambda1, const MixMask& mask) {
  check_same_dims(a, b);
  check_labels(label_a, label_b);
  const bool outside_is_a = lambda1 < 0.5;
  Clip out = outside_is_a ? a : b;
  for (int f = 0; f < a.t; ++f) {
    if (!mask.touches_frame(f)) {
      continue;
    }
    const std::uint8_t* pa = a.frame_data(f);
    const std::uint8_t* pb = b.frame_data(f);
    std::uint8_t* po = out.frame_data(f);
    const bool whole_frame = mask.kind == MaskKind::FrameSet;
    const int y0 = whole_frame ? 0 : mask.y0;
    const int y1 = whole_frame ? a.h : mask.y1;
    const int x0 = whole_frame ? 0 : mask.x0;
    const int x1 = whole_frame ? a.w : mask.x1;
    for (int y = y0; y < y1; ++y) {
      for (std::int64_t i = (std::int64_t(y) * a.w + x0) * a.c;
           i < (std::int64_t(y) * a.w + x1) * a.c; ++i) {
        po[i] = round_u8(lambda1 * pa[i] + (1.0 - lambda1) * pb[i]);
      }
    }
  }
  const double f = mask.volume_fraction();
  const double weight_a = outside_is_a ? 1.0 - f + lambda1 * f : lambda1 * f;
  return MixResult{std::move(out), label_mix(label_a, label_b, weight_a), weight_a,
                   mask, std::nullopt};
}

MixResult cutmixup(const Clip& a, const Clip& b, const LabelDist& label_a,
                   const LabelDist& label_b, double alpha1, MaskKind kind,
                   RngStream& rng, bool contiguous_frames) {
  const double lambda1 = sample_beta(rng, alpha1, alpha1);
  const double lambda2 = sample_beta(rng, 2.0, 2.0);
  const MixMask mask = make_mask(kind, lambda2, a.t, a.h, a.w, contiguous_frames, rng);
  return cutmixup_at(a, b, label_a, label_b, lambda1, mask);
}

MixResult apply_mix(MixMethod method, const Clip& a, const Clip& b,
                    const LabelDist& label_a, const LabelDist& label_b, double alpha,
                    RngStream& rng) {
  switch (method) {
    case MixMethod::Mixup:
      return mixup(a, b, label_a, label_b, alpha, rng);
    case MixMethod::FadeMixup:
      return fademixup(a, b, label_a, label_b, alpha, rng);
    case MixMethod::CutMix:
      return cutmix(a, b, label_a, label_b, alpha, MaskKind::SpatialBox, rng);
    case MixMethod::FrameCutMix:
      return cutmix(a, b, label_a, label_b, alpha, MaskKind::FrameSet, rng);
    case MixMethod::CubeCutMix:
      return cutmix(a, b, label_a, label_b, alpha, MaskKind::Cube, rng);
    case MixMethod::CutMixup:
      return cutmixup(a, b, label_a, label_b, alpha, MaskKind::SpatialBox, rng);
    case MixMethod::FrameCutMixup:
      return cutmixup(a, b, label_a, label_b, alpha, MaskKind::FrameSet, rng);
    case MixMethod::CubeCutMixup:
      return cutmixup(a, b, label_a, label_b, alpha, MaskKind::Cube, rng);
  }
  throw ValueError("unknown mix method");
}

}  // namespace vidaug
