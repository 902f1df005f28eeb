#include "vidaug/frame_ops.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "vidaug/error.hpp"

namespace vidaug {

namespace {

constexpr double kFillGray = 128.0;

constexpr std::array<std::string_view, kNumOpKinds> kOpNames = {
    "identity",    "autocontrast", "equalize",  "rotate",   "shear-x",
    "shear-y",     "translate-x",  "translate-y", "solarize", "color",
    "posterize",   "contrast",     "brightness", "sharpness",
};

double luma(const std::uint8_t* px, int c) {
  if (c == 1) {
    return px[0];
  }
  return 0.299 * px[0] + 0.587 * px[1] + 0.114 * px[2];
}

void check_level(double level) {
  if (!(level >= 0.0 && level <= 10.0)) {
    throw ValueError("invalid level " + std::to_string(level) + ": must be in [0, 10]");
  }
}

// out = round(toward + factor * (p - toward)) per sample.
std::vector<std::uint8_t> blend_toward(FrameView f, double factor,
                                       const std::vector<double>& toward) {
  std::vector<std::uint8_t> out(static_cast<std::size_t>(f.samples()));
  for (std::int64_t i = 0; i < f.samples(); ++i) {
    out[static_cast<std::size_t>(i)] =
        round_u8(toward[static_cast<std::size_t>(i)] +
                 factor * (f.data[i] - toward[static_cast<std::size_t>(i)]));
  }
  return out;
}

std::vector<std::uint8_t> apply_brightness(FrameView f, double factor) {
  std::vector<std::uint8_t> out(static_cast<std::size_t>(f.samples()));
  for (std::int64_t i = 0; i < f.samples(); ++i) {
    out[static_cast<std::size_t>(i)] = round_u8(factor * f.data[i]);
  }
  return out;
}

std::vector<std::uint8_t> apply_contrast(FrameView f, double factor) {
  double sum = 0.0;
  for (int y = 0; y < f.h; ++y) {
    for (int x = 0; x < f.w; ++x) {
      sum += luma(f.data + (std::int64_t(y) * f.w + x) * f.c, f.c);
    }
  }
  const double mean = sum / (static_cast<double>(f.h) * f.w);
  std::vector<double> toward(static_cast<std::size_t>(f.samples()), mean);
  return blend_toward(f, factor, toward);
}

std::vector<std::uint8_t> apply_color(FrameView f, double factor) {
  std::vector<double> toward(static_cast<std::size_t>(f.samples()));
  for (int y = 0; y < f.h; ++y) {
    for (int x = 0; x < f.w; ++x) {
      const std::int64_t base = (std::int64_t(y) * f.w + x) * f.c;
      const double g = luma(f.data + base, f.c);
      for (int ch = 0; ch < f.c; ++ch) {
        toward[static_cast<std::size_t>(base + ch)] = g;
      }
    }
  }
  return blend_toward(f, factor, toward);
}

std::vector<std::uint8_t> apply_sharpness(FrameView f, double factor) {
  // 3x3 kernel [1 1 1; 1 5 1; 1 1 1] / 13, replicate border.
  std::vector<double> smooth(static_cast<std::size_t>(f.samples()));
  for (int y = 0; y < f.h; ++y) {
    for (int x = 0; x < f.w; ++x) {
      for (int ch = 0; ch < f.c; ++ch) {
        double acc = 0.0;
        for (int dy = -1; dy <= 1; ++dy) {
          for (int dx = -1; dx <= 1; ++dx) {
            const int yy = std::clamp(y + dy, 0, f.h - 1);
            const int xx = std::clamp(x + dx, 0, f.w - 1);
            const double wgt = (dy == 0 && dx == 0) ? 5.0 : 1.0;
            acc += wgt * f.at(yy, xx, ch);
          }
        }
        smooth[static_cast<std::size_t>((std::int64_t(y) * f.w + x) * f.c + ch)] =
            acc / 13.0;
      }
    }
  }
  return blend_toward(f, factor, smooth);
}

std::vector<std::uint8_t> apply_posterize(FrameView f, int bits) {
  const auto mask = static_cast<std::uint8_t>(0xFF << (8 - bits));
  std::vector<std::uint8_t> out(static_cast<std::size_t>(f.samples()));
  for (std::int64_t i = 0; i < f.samples(); ++i) {
    out[static_cast<std::size_t>(i)] = f.data[i] & mask;
  }
  return out;
}

std::vector<std::uint8_t> apply_solarize(FrameView f, int threshold) {
  std::vector<std::uint8_t> out(static_cast<std::size_t>(f.samples()));
  for (std::int64_t i = 0; i < f.samples(); ++i) {
    const std::uint8_t p = f.data[i];
    out[static_cast<std::size_t>(i)] =
        p >= threshold ? static_cast<std::uint8_t>(255 - p) : p;
  }
  return out;
}

std::vector<std::uint8_t> apply_equalize(FrameView f) {
  std::vector<std::uint8_t> out(static_cast<std::size_t>(f.samples()));
  const std::int64_t n = std::int64_t(f.h) * f.w;
  for (int ch = 0; ch < f.c; ++ch) {
    std::array<std::int64_t, 256> hist{};
    for (std::int64_t p = 0; p < n; ++p) {
      hist[f.data[p * f.c + ch]] += 1;
    }
    std::array<std::int64_t, 256> cdf{};
    std::int64_t run = 0;
    std::int64_t cdf_min = 0;
    for (int v = 0; v < 256; ++v) {
      run += hist[v];
      cdf[v] = run;
      if (cdf_min == 0 && hist[v] > 0) {
        cdf_min = run;
      }
    }
    std::array<std::uint8_t, 256> lut{};
    if (n == cdf_min) {  // single occupied bin: nothing to spread
      for (int v = 0; v < 256; ++v) {
        lut[v] = static_cast<std::uint8_t>(v);
      }
    } else {
      const double scale = 255.0 / static_cast<double>(n - cdf_min);
      for (int v = 0; v < 256; ++v) {
        const double mapped = static_cast<double>(cdf[v] - cdf_min) * scale;
        lut[v] = round_u8(mapped);
      }
    }
    for (std::int64_t p = 0; p < n; ++p) {
      out[static_cast<std::size_t>(p * f.c + ch)] = lut[f.data[p * f.c + ch]];
    }
  }
  return out;
}

std::vector<std::uint8_t> apply_autocontrast(FrameView f) {
  std::vector<std::uint8_t> out(static_cast<std::size_t>(f.samples()));
  const std::int64_t n = std::int64_t(f.h) * f.w;
  for (int ch = 0; ch < f.c; ++ch) {
    std::uint8_t lo = 255, hi = 0;
    for (std::int64_t p = 0; p < n; ++p) {
      const std::uint8_t v = f.data[p * f.c + ch];
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    std::array<std::uint8_t, 256> lut{};
    if (lo == hi) {
      for (int v = 0; v < 256; ++v) {
        lut[v] = static_cast<std::uint8_t>(v);
      }
    } else {
      const double scale = 255.0 / (hi - lo);
      for (int v = 0; v < 256; ++v) {
        lut[v] = round_u8((v - lo) * scale);
      }
    }
    for (std::int64_t p = 0; p < n; ++p) {
      out[static_cast<std::size_t>(p * f.c + ch)] = lut[f.data[p * f.c + ch]];
    }
  }
  return out;
}

struct Affine {
  // Sampling map: src = (cx + a00*dx + a01*dy + tx, cy + a10*dx + a11*dy + ty).
  double a00 = 1, a01 = 0, a10 = 0, a11 = 1, tx = 0, ty = 0;
};

std::vector<std::uint8_t> warp_bilinear(FrameView f, const Affine& m) {
  std::vector<std::uint8_t> out(static_cast<std::size_t>(f.samples()));
  const double cx = (f.w - 1) / 2.0;
  const double cy = (f.h - 1) / 2.0;
  for (int y = 0; y < f.h; ++y) {
    const double dy = y - cy;
    for (int x = 0; x < f.w; ++x) {
      const double dx = x - cx;
      const double sx = cx + m.a00 * dx + m.a01 * dy + m.tx;
      const double sy = cy + m.a10 * dx + m.a11 * dy + m.ty;
      const int x0 = static_cast<int>(std::floor(sx));
      const int y0 = static_cast<int>(std::floor(sy));
      const double fx = sx - x0;
      const double fy = sy - y0;
      for (int ch = 0; ch < f.c; ++ch) {
        auto tap = [&](int yy, int xx) -> double {
          if (yy < 0 || yy >= f.h || xx < 0 || xx >= f.w) {
            return kFillGray;
          }
          return f.at(yy, xx, ch);
        };
        const double top = (1.0 - fx) * tap(y0, x0) + fx * tap(y0, x0 + 1);
        const double bot = (1.0 - fx) * tap(y0 + 1, x0) + fx * tap(y0 + 1, x0 + 1);
        out[static_cast<std::size_t>((std::int64_t(y) * f.w + x) * f.c + ch)] =
            round_u8((1.0 - fy) * top + fy * bot);
      }
    }
  }
  return out;
}

}  // namespace

bool is_geometric(OpKind kind) {
  switch (kind) {
    case OpKind::Rotate:
    case OpKind::ShearX:
    case OpKind::ShearY:
    case OpKind::TranslateX:
    case OpKind::TranslateY:
      return true;
    default:
      return false;
  }
}

bool is_parameterless(OpKind kind) {
  return kind == OpKind::Identity || kind == OpKind::Autocontrast ||
         kind == OpKind::Equalize;
}

bool is_photometric(OpKind kind) {
  return !is_geometric(kind) && !is_parameterless(kind);
}

std::string_view op_name(OpKind kind) {
  return kOpNames[static_cast<std::size_t>(kind)];
}

std::optional<OpKind> op_from_name(std::string_view name) {
  for (int i = 0; i < kNumOpKinds; ++i) {
    if (kOpNames[static_cast<std::size_t>(i)] == name) {
      return static_cast<OpKind>(i);
    }
  }
  return std::nullopt;
}

std::uint8_t round_u8(double v) {
  const long r = std::lround(v);
  return static_cast<std::uint8_t>(std::clamp(r, 0L, 255L));
}

double level_to_param(OpKind kind, double level, int sign) {
  check_level(level);
  switch (kind) {
    case OpKind::Rotate:
      return sign * 3.0 * level;
    case OpKind::ShearX:
    case OpKind::ShearY:
    case OpKind::TranslateX:
    case OpKind::TranslateY:
      return sign * 0.03 * level;
    case OpKind::Brightness:
    case OpKind::Color:
    case OpKind::Contrast:
    case OpKind::Sharpness:
      return 1.0 + sign * 0.09 * level;
    case OpKind::Posterize:
      return 8.0 - static_cast<double>(std::lround(0.4 * level));
    case OpKind::Solarize:
      return 256.0 - static_cast<double>(std::lround(25.6 * level));
    case OpKind::Identity:
    case OpKind::Autocontrast:
    case OpKind::Equalize:
      return 0.0;
  }
  return 0.0;
}

std::vector<std::uint8_t> apply_photometric(FrameView frame, OpKind kind, double level,
                                            int sign) {
  if (is_geometric(kind)) {
    throw ValueError(std::string("wrong op class: ") + std::string(op_name(kind)) +
                     " is geometric");
  }
  check_level(level);
  switch (kind) {
    case OpKind::Identity:
      return std::vector<std::uint8_t>(frame.data, frame.data + frame.samples());
    case OpKind::Autocontrast:
      return apply_autocontrast(frame);
    case OpKind::Equalize:
      return apply_equalize(frame);
    case OpKind::Brightness:
      return apply_brightness(frame, level_to_param(kind, level, sign));
    case OpKind::Contrast:
      return apply_contrast(frame, level_to_param(kind, level, sign));
    case OpKind::Color:
      return apply_color(frame, level_to_param(kind, level, sign));
    case OpKind::Sharpness:
      return apply_sharpness(frame, level_to_param(kind, level, sign));
    case OpKind::Posterize:
      return apply_posterize(frame,
                             static_cast<int>(level_to_param(kind, level, sign)));
    case OpKind::Solarize:
      return apply_solarize(frame,
                            static_cast<int>(level_to_param(kind, level, sign)));
    default:
      break;
  }
  throw ValueError("unhandled photometric op");
}

std::vector<std::uint8_t> apply_geometric(FrameView frame, OpKind kind, double level,
                                          int sign) {
  if (!is_geometric(kind)) {
    throw ValueError(std::string("wrong op class: ") + std::string(op_name(kind)) +
                     " is not geometric");
  }
  const double param = level_to_param(kind, level, sign);
  Affine m;
  switch (kind) {
    case OpKind::Rotate: {
      const double rad = param * std::numbers::pi / 180.0;
      const double cs = std::cos(rad);
      const double sn = std::sin(rad);
      m = Affine{cs, -sn, sn, cs, 0.0, 0.0};
      break;
    }
    case OpKind::ShearX:
      m = Affine{1.0, param, 0.0, 1.0, 0.0, 0.0};
      break;
    case OpKind::ShearY:
      m = Affine{1.0, 0.0, param, 1.0, 0.0, 0.0};
      break;
    case OpKind::TranslateX:
      m = Affine{1.0, 0.0, 0.0, 1.0, -param * frame.w, 0.0};
      break;
    case OpKind::TranslateY:
      m = Affine{1.0, 0.0, 0.0, 1.0, 0.0, -param * frame.h};
      break;
    default:
      break;
  }
  return warp_bilinear(frame, m);
}

std::vector<std::uint8_t> apply_op(FrameView frame, OpKind kind, double level, int sign) {
  return is_geometric(kind) ? apply_geometric(frame, kind, level, sign)
                            : apply_photometric(frame, kind, level, sign);
}

}  // namespace vidaug
