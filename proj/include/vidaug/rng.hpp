#pragma once

#include <cstdint>
#include <vector>

namespace vidaug {

// Deterministic counter-based random stream.
//
// A stream is keyed by (seed, clip_id, op_index). Derivation folds each
// component through the SplitMix64 finalizer:
//
//   key = mix64(mix64(mix64(seed + GAMMA) + clip_id) + op_index)
//
// and draw i is mix64(key + i * GAMMA) with GAMMA = 0x9E3779B97F4A7C15
// (the 64-bit golden-ratio increment) and mix64 the SplitMix64 avalanche
//
//   z ^= z >> 30;  z *= 0xBF58476D1CE4E5B9;
//   z ^= z >> 27;  z *= 0x94D049BB133111EB;
//   z ^= z >> 31;
//
// Every draw is a pure function of (key, counter), so identical derivations
// replay bit-identical sequences on any platform and advancing one stream
// never touches another.
struct RngStream {
  std::uint64_t key = 0;
  std::uint64_t counter = 0;

  std::uint64_t next_u64();

  // Uniform in [0, 1), 53 significant bits.
  double next_double();

  // Uniform in [0, n) via 128-bit multiply-shift; n must be > 0.
  std::uint64_t next_below(std::uint64_t n);

  // Uniform integer in [lo, hi], inclusive.
  std::int64_t next_int(std::int64_t lo, std::int64_t hi);

  // +1 or -1, one bit consumed.
  int next_sign();
};

RngStream rng_derive(std::uint64_t seed, std::uint64_t clip_id, std::uint64_t op_index);

// Uniform real in [lo, hi); lo == hi returns lo. Throws ValueError if lo > hi.
double sample_uniform(RngStream& rng, double lo, double hi);

// Beta(alpha, beta) via the gamma-ratio construction X/(X+Y) with
// X ~ Gamma(alpha), Y ~ Gamma(beta). Gamma variates use the
// Marsaglia-Tsang squeeze method (shape >= 1; smaller shapes are boosted
// by Gamma(a+1) * U^(1/a)), with Box-Muller normals underneath, so seeded
// draws are reproducible bit-for-bit. Result is clamped to the open
// interval (0, 1). Throws ValueError on non-positive shape.
double sample_beta(RngStream& rng, double alpha, double beta);

// n evenly spaced values from a to b; endpoints are exact. n == 1 gives {a}.
// Throws ValueError if n == 0.
std::vector<double> linspace(double a, double b, std::size_t n);

}  // namespace vidaug
