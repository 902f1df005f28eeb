#include "vidaug/rng.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "vidaug/error.hpp"

namespace vidaug {

namespace {

constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

constexpr std::uint64_t mix64(std::uint64_t z) {
  z ^= z >> 30;
  z *= 0xBF58476D1CE4E5B9ULL;
  z ^= z >> 27;
  z *= 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return z;
}

// Standard normal via Box-Muller; consumes exactly two uniforms.
double sample_normal(RngStream& rng) {
  double u1 = 1.0 - rng.next_double();  // (0, 1], keeps the log finite
  double u2 = rng.next_double();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

// Marsaglia-Tsang for shape >= 1; shape < 1 boosted via Gamma(a+1) * U^(1/a).
double sample_gamma(RngStream& rng, double shape) {
  if (shape < 1.0) {
    double u = 1.0 - rng.next_double();
    return sample_gamma(rng, shape + 1.0) * std::pow(u, 1.0 / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x, v;
    do {
      x = sample_normal(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = 1.0 - rng.next_double();
    if (u < 1.0 - 0.0331 * x * x * x * x) {
      return d * v;
    }
    if (std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) {
      return d * v;
    }
  }
}

}  // namespace

std::uint64_t RngStream::next_u64() {
  counter += 1;
  return mix64(key + counter * kGamma);
}

double RngStream::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RngStream::next_below(std::uint64_t n) {
  // Multiply-shift range reduction; bias is < n / 2^64.
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(next_u64()) * n) >> 64);
}

std::int64_t RngStream::next_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) {
    throw ValueError("invalid integer range [" + std::to_string(lo) + ", " +
                     std::to_string(hi) + "]");
  }
  return lo + static_cast<std::int64_t>(
                  next_below(static_cast<std::uint64_t>(hi - lo) + 1));
}

int RngStream::next_sign() { return next_below(2) == 0 ? 1 : -1; }

RngStream rng_derive(std::uint64_t seed, std::uint64_t clip_id, std::uint64_t op_index) {
  std::uint64_t key = mix64(seed + kGamma);
  key = mix64(key + clip_id);
  key = mix64(key + op_index);
  return RngStream{key, 0};
}

double sample_uniform(RngStream& rng, double lo, double hi) {
  if (lo > hi) {
    throw ValueError("invalid range: lo " + std::to_string(lo) + " > hi " +
                     std::to_string(hi));
  }
  if (lo == hi) {
    return lo;
  }
  double v = lo + rng.next_double() * (hi - lo);
  if (v >= hi) {  // guard the half-open contract against rounding
    v = std::nextafter(hi, lo);
  }
  return v;
}

double sample_beta(RngStream& rng, double alpha, double beta) {
  if (!(alpha > 0.0) || !(beta > 0.0)) {
    throw ValueError("invalid beta shape (" + std::to_string(alpha) + ", " +
                     std::to_string(beta) + "): both must be > 0");
  }
  const double x = sample_gamma(rng, alpha);
  const double y = sample_gamma(rng, beta);
  double r = x / (x + y);
  if (r <= 0.0) {
    r = std::nextafter(0.0, 1.0);
  } else if (r >= 1.0) {
    r = std::nextafter(1.0, 0.0);
  }
  return r;
}

std::vector<double> linspace(double a, double b, std::size_t n) {
  if (n == 0) {
    throw ValueError("linspace needs at least one point");
  }
  std::vector<double> out(n);
  out.front() = a;
  if (n == 1) {
    return out;
  }
  const double span = b - a;
  const double denom = static_cast<double>(n - 1);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    out[i] = a + span * (static_cast<double>(i) / denom);
  }
  out.back() = b;
  return out;
}

}  // namespace vidaug
