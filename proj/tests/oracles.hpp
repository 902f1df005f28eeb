#pragma once

// Brute-force oracles, written straight from the definitions and sharing no
// code with the library paths they check.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <vector>

namespace vidaug::testutil {

// Histogram equalization: for every sample, counts how many samples of its
// channel are <= it, then applies
//   map(p) = round(255 * (count_le(p) - count_le(min)) / (n - count_le(min))),
// identity when every sample is equal. No LUT, no incremental cdf.
inline std::vector<std::uint8_t> equalize_oracle(const std::vector<std::uint8_t>& frame,
                                                 int h, int w, int c) {
  std::vector<std::uint8_t> out(frame.size());
  const int n = h * w;
  for (int ch = 0; ch < c; ++ch) {
    int min_v = 256;
    for (int p = 0; p < n; ++p) {
      min_v = std::min(min_v, static_cast<int>(frame[std::size_t(p) * c + ch]));
    }
    auto count_le = [&](int v) {
      int count = 0;
      for (int p = 0; p < n; ++p) {
        if (frame[std::size_t(p) * c + ch] <= v) ++count;
      }
      return count;
    };
    const int cdf_min = count_le(min_v);
    for (int p = 0; p < n; ++p) {
      const int v = frame[std::size_t(p) * c + ch];
      if (n == cdf_min) {
        out[std::size_t(p) * c + ch] = static_cast<std::uint8_t>(v);
      } else {
        const double mapped =
            255.0 * static_cast<double>(count_le(v) - cdf_min) / (n - cdf_min);
        out[std::size_t(p) * c + ch] =
            static_cast<std::uint8_t>(std::clamp<long>(std::lround(mapped), 0, 255));
      }
    }
  }
  return out;
}

// Min/max linear stretch per channel.
inline std::vector<std::uint8_t> autocontrast_oracle(
    const std::vector<std::uint8_t>& frame, int h, int w, int c) {
  std::vector<std::uint8_t> out(frame.size());
  const int n = h * w;
  for (int ch = 0; ch < c; ++ch) {
    int lo = 255, hi = 0;
    for (int p = 0; p < n; ++p) {
      const int v = frame[std::size_t(p) * c + ch];
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    for (int p = 0; p < n; ++p) {
      const int v = frame[std::size_t(p) * c + ch];
      if (lo == hi) {
        out[std::size_t(p) * c + ch] = static_cast<std::uint8_t>(v);
      } else {
        const double mapped = (v - lo) * 255.0 / (hi - lo);
        out[std::size_t(p) * c + ch] =
            static_cast<std::uint8_t>(std::clamp<long>(std::lround(mapped), 0, 255));
      }
    }
  }
  return out;
}

}  // namespace vidaug::testutil
