#pragma once

#include <cstdint>
#include <vector>

namespace vidaug {

// Read-only view of one frame inside a clip: h x w pixels, c interleaved channels.
struct FrameView {
  const std::uint8_t* data = nullptr;
  int h = 0, w = 0, c = 0;

  std::uint8_t at(int y, int x, int ch) const {
    return data[(std::int64_t(y) * w + x) * c + ch];
  }
  std::int64_t samples() const { return std::int64_t(h) * w * c; }
};

// A video clip: t frames of h x w pixels with c interleaved 8-bit channels,
// stored frame-major, row-major. c is 1 (grayscale) or 3 (RGB).
struct Clip {
  int t = 0, h = 0, w = 0, c = 0;
  std::vector<std::uint8_t> data;

  Clip() = default;
  Clip(int t, int h, int w, int c, std::uint8_t fill = 0);
  Clip(int t, int h, int w, int c, std::vector<std::uint8_t> payload);

  std::int64_t samples() const { return std::int64_t(t) * h * w * c; }
  std::int64_t pixels() const { return std::int64_t(t) * h * w; }
  std::int64_t frame_samples() const { return std::int64_t(h) * w * c; }

  std::int64_t index(int frame, int y, int x, int ch) const {
    return ((std::int64_t(frame) * h + y) * w + x) * c + ch;
  }
  std::uint8_t& at(int frame, int y, int x, int ch) {
    return data[index(frame, y, x, ch)];
  }
  std::uint8_t at(int frame, int y, int x, int ch) const {
    return data[index(frame, y, x, ch)];
  }

  std::uint8_t* frame_data(int frame) { return data.data() + frame * frame_samples(); }
  const std::uint8_t* frame_data(int frame) const {
    return data.data() + frame * frame_samples();
  }
  FrameView frame(int frame) const { return FrameView{frame_data(frame), h, w, c}; }

  bool same_dims(const Clip& other) const {
    return t == other.t && h == other.h && w == other.w && c == other.c;
  }

  bool operator==(const Clip&) const = default;
};

// Throws ValueError unless t,h,w >= 1 and c is 1 or 3.
void validate_dims(int t, int h, int w, int c);

}  // namespace vidaug
