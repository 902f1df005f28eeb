#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "vidaug/clip.hpp"

namespace vidaug {

// The 14 per-frame operations. Enum order is load-bearing: op sampling maps
// a uniform draw in [0, 14) onto this order.
enum class OpKind {
  Identity,
  Autocontrast,
  Equalize,
  Rotate,
  ShearX,
  ShearY,
  TranslateX,
  TranslateY,
  Solarize,
  Color,
  Posterize,
  Contrast,
  Brightness,
  Sharpness,
};

inline constexpr int kNumOpKinds = 14;

bool is_geometric(OpKind kind);      // rotate, shear-x/y, translate-x/y
bool is_photometric(OpKind kind);    // solarize, color, posterize, contrast, brightness, sharpness
bool is_parameterless(OpKind kind);  // identity, autocontrast, equalize

std::string_view op_name(OpKind kind);
std::optional<OpKind> op_from_name(std::string_view name);

// Level-to-parameter mapping on the 0-10 magnitude scale:
//
//   rotate        sign * 3 * level            degrees, max 30
//   shear-x/y     sign * 0.03 * level         shear factor, max 0.3
//   translate-x/y sign * 0.03 * level         fraction of width/height, max 0.3
//   brightness, color, contrast, sharpness
//                 1 + sign * 0.09 * level     enhancement factor in [0.1, 1.9]
//   posterize     8 - round(0.4 * level)      bits kept, in [4, 8]
//   solarize      256 - round(25.6 * level)   threshold in [0, 256]; 256 = no-op
//   identity, autocontrast, equalize: no parameter (returns 0)
//
// Throws ValueError if level is outside [0, 10].
double level_to_param(OpKind kind, double level, int sign);

// Photometric and parameterless ops. Pixel math runs in double and each
// output sample is rounded to nearest (half away from zero) then clamped
// to [0, 255].
//
//   brightness  blends toward black:          factor * p
//   contrast    blends toward mean luma:      mean + factor * (p - mean),
//               luma = 0.299 R + 0.587 G + 0.114 B (the pixel itself for c == 1)
//   color       blends toward the grayscale pixel (its luma)
//   sharpness   blends toward a 3x3 smoothing of the frame, kernel
//               [1 1 1; 1 5 1; 1 1 1] / 13, replicate border
//   posterize   keeps the top `bits` of each sample
//   solarize    inverts samples >= threshold
//   equalize    per-channel cumulative-histogram remap:
//               lut(v) = round(255 * (cdf(v) - cdf_min) / (n - cdf_min))
//               where cdf(v) counts samples <= v and cdf_min = cdf(min);
//               identity when every sample is equal
//   autocontrast  per-channel linear stretch min -> 0, max -> 255;
//               identity when min == max
//
// Throws ValueError if kind is geometric.
std::vector<std::uint8_t> apply_photometric(FrameView frame, OpKind kind, double level,
                                            int sign);

// Geometric ops: inverse-mapped affine warp about the frame center
// ((w-1)/2, (h-1)/2) with bilinear interpolation; taps outside the frame
// read as mid-gray 128. Sampling maps (dx = x - cx, dy = y - cy):
//
//   rotate(theta)     src = (cx + cos*dx - sin*dy, cy + sin*dx + cos*dy)
//   shear-x(s)        src = (x + s * dy, y)
//   shear-y(s)        src = (x, y + s * dx)
//   translate-x(d)    src = (x - d, y)   content moves right by d = frac * w
//   translate-y(d)    src = (x, y - d)   content moves down by d = frac * h
//
// Level 0 is an exact identity (integer-grid sampling), bit-identical.
// Throws ValueError if kind is not geometric.
std::vector<std::uint8_t> apply_geometric(FrameView frame, OpKind kind, double level,
                                          int sign);

// Dispatches on the op class.
std::vector<std::uint8_t> apply_op(FrameView frame, OpKind kind, double level, int sign);

std::uint8_t round_u8(double v);

}  // namespace vidaug
