#include "vidaug/randaug.hpp"

#include <algorithm>
#include <string>

#include "vidaug/error.hpp"

namespace vidaug {

namespace {

void check_magnitude(double m) {
  if (!(m >= 0.0 && m <= 10.0)) {
    throw ValueError("invalid magnitude " + std::to_string(m) + ": must be in [0, 10]");
  }
}

void check_op_count(int n) {
  if (n < 1) {
    throw ValueError("op count must be >= 1, got " + std::to_string(n));
  }
}

}  // namespace

std::string_view range_mode_name(RangeMode mode) {
  switch (mode) {
    case RangeMode::Spatial:
      return "spatial";
    case RangeMode::Temporal:
      return "temporal";
    case RangeMode::TemporalPlus:
      return "temporal+";
    case RangeMode::Mix:
      return "mix";
  }
  return "";
}

std::optional<RangeMode> range_mode_from_name(std::string_view name) {
  if (name == "spatial") return RangeMode::Spatial;
  if (name == "temporal") return RangeMode::Temporal;
  if (name == "temporal+") return RangeMode::TemporalPlus;
  if (name == "mix") return RangeMode::Mix;
  return std::nullopt;
}

std::pair<double, double> sample_magnitude_range(RangeMode mode, double m,
                                                 RngStream& rng) {
  check_magnitude(m);
  switch (mode) {
    case RangeMode::Spatial:
      return {m, m};
    case RangeMode::Temporal:
      // Lower bound drops to m when m < 0.1 so the range stays valid.
      return {sample_uniform(rng, std::min(0.1, m), m), m};
    case RangeMode::TemporalPlus: {
      const double delta = sample_uniform(rng, 0.0, 0.5 * m);
      return {std::clamp(m - delta, 0.0, 10.0), std::clamp(m + delta, 0.0, 10.0)};
    }
    case RangeMode::Mix:
      return rng.next_double() < 0.5
                 ? sample_magnitude_range(RangeMode::Spatial, m, rng)
                 : sample_magnitude_range(RangeMode::TemporalPlus, m, rng);
  }
  throw ValueError("unknown range mode");
}

Clip apply_op_scheduled(const Clip& clip, OpKind kind, std::span<const double> levels,
                        int sign) {
  if (levels.size() != static_cast<std::size_t>(clip.t)) {
    throw ValueError("schedule length " + std::to_string(levels.size()) +
                     " does not match frame count " + std::to_string(clip.t));
  }
  Clip out(clip.t, clip.h, clip.w, clip.c);
  for (int f = 0; f < clip.t; ++f) {
    const auto frame = apply_op(clip.frame(f), kind, levels[static_cast<std::size_t>(f)],
                                sign);
    std::copy(frame.begin(), frame.end(), out.frame_data(f));
  }
  return out;
}

Clip randaugment(const Clip& clip, int n, double m, RngStream& rng) {
  check_op_count(n);
  check_magnitude(m);
  Clip out = clip;
  for (int j = 0; j < n; ++j) {
    const auto kind = static_cast<OpKind>(rng.next_below(kNumOpKinds));
    const int sign = rng.next_sign();
    for (int f = 0; f < out.t; ++f) {
      const auto frame = apply_op(out.frame(f), kind, m, sign);
      std::copy(frame.begin(), frame.end(), out.frame_data(f));
    }
  }
  return out;
}

Clip randaugment_t(const Clip& clip, int n, double m1, double m2, RngStream& rng) {
  check_op_count(n);
  check_magnitude(m1);
  check_magnitude(m2);
  const std::vector<double> schedule =
      linspace(m1, m2, static_cast<std::size_t>(clip.t));
  Clip out = clip;
  for (int j = 0; j < n; ++j) {
    const auto kind = static_cast<OpKind>(rng.next_below(kNumOpKinds));
    const int sign = rng.next_sign();
    out = apply_op_scheduled(out, kind, schedule, sign);
  }
  return out;
}

}  // namespace vidaug
