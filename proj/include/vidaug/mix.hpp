#pragma once

#include <optional>
#include <string_view>

#include "vidaug/clip.hpp"
#include "vidaug/label.hpp"
#include "vidaug/mask.hpp"
#include "vidaug/rng.hpp"

namespace vidaug {

// Output of every two-clip mixing op. lambda_used is the realized weight of
// clip A after mask quantization (never the raw Beta draw), and the label
// weights always equal the exact pixel-provenance fractions it implies.
struct MixResult {
  Clip clip;
  LabelDist label;
  double lambda_used = 1.0;
  std::optional<MixMask> mask;
  std::optional<double> fade_gamma;
};

enum class MixMethod {
  Mixup,
  FadeMixup,
  CutMix,
  FrameCutMix,
  CubeCutMix,
  CutMixup,
  FrameCutMixup,
  CubeCutMixup,
};

std::string_view mix_method_name(MixMethod method);
// Accepts canonical names (mixup, fademixup, cutmix, framecutmix, cubecutmix,
// cutmixup, framecutmixup, cubecutmixup) plus the aliases framemixup and
// cubemixup for the blend+cut-and-paste pair.
std::optional<MixMethod> mix_method_from_name(std::string_view name);

// Whole-clip blend at lambda ~ Beta(alpha, alpha):
// every sample is round(lambda * A + (1 - lambda) * B).
MixResult mixup(const Clip& a, const Clip& b, const LabelDist& label_a,
                const LabelDist& label_b, double alpha, RngStream& rng);
MixResult mixup_at(const Clip& a, const Clip& b, const LabelDist& label_a,
                   const LabelDist& label_b, double lambda);

// Blend whose ratio ramps linearly across frames from lambda - gamma to
// lambda + gamma, gamma ~ Uniform(0, min(lambda, 1 - lambda)). The ramp is
// symmetric about lambda, so the label equals the plain mixup label.
MixResult fademixup(const Clip& a, const Clip& b, const LabelDist& label_a,
                    const LabelDist& label_b, double alpha, RngStream& rng);
MixResult fademixup_at(const Clip& a, const Clip& b, const LabelDist& label_a,
                       const LabelDist& label_b, double lambda, double gamma);

// Cut-and-paste: B replaces A inside a mask drawn at target fraction
// 1 - lambda, lambda ~ Beta(alpha, alpha). lambda_used = 1 - realized
// fraction and the label mixes at lambda_used exactly.
MixResult cutmix(const Clip& a, const Clip& b, const LabelDist& label_a,
                 const LabelDist& label_b, double alpha, MaskKind kind, RngStream& rng,
                 bool contiguous_frames = false);
MixResult cutmix_at(const Clip& a, const Clip& b, const LabelDist& label_a,
                    const LabelDist& label_b, const MixMask& mask);

// Blend + cut-and-paste: inside a mask drawn at target fraction
// lambda2 ~ Beta(2, 2), A and B are blended at lambda1 ~ Beta(alpha1, alpha1);
// outside, the clip is pure A when lambda1 < 0.5 and pure B otherwise.
// With f the realized mask fraction, the label is
//
//   lambda1 >= 0.5:  { A: lambda1 * f,            B: 1 - lambda1 * f }
//   lambda1 <  0.5:  { A: 1 - f + lambda1 * f,    B: (1 - lambda1) * f }
//
// The low branch uses the coefficients that keep the label a distribution
// and equal to the exact pixel provenance; lambda_used reports the total
// A weight.
MixResult cutmixup(const Clip& a, const Clip& b, const LabelDist& label_a,
                   const LabelDist& label_b, double alpha1, MaskKind kind,
                   RngStream& rng, bool contiguous_frames = false);
MixResult cutmixup_at(const Clip& a, const Clip& b, const LabelDist& label_a,
                      const LabelDist& label_b, double lambda1, const MixMask& mask);

// Dispatch by method; alpha feeds the method's Beta draw (alpha1 for the
// cutmixup family, whose mask fraction always comes from Beta(2, 2)).
MixResult apply_mix(MixMethod method, const Clip& a, const Clip& b,
                    const LabelDist& label_a, const LabelDist& label_b, double alpha,
                    RngStream& rng);

}  // namespace vidaug
