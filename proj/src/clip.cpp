#include "vidaug/clip.hpp"

#include <string>
#include <utility>

#include "vidaug/error.hpp"

namespace vidaug {

void validate_dims(int t, int h, int w, int c) {
  if (t < 1 || h < 1 || w < 1) {
    throw ValueError("invalid clip dims " + std::to_string(t) + "x" + std::to_string(h) +
                     "x" + std::to_string(w) + ": all dims must be >= 1");
  }
  if (c != 1 && c != 3) {
    throw ValueError("invalid channel count " + std::to_string(c) + ": must be 1 or 3");
  }
}

Clip::Clip(int t, int h, int w, int c, std::uint8_t fill) : t(t), h(h), w(w), c(c) {
  validate_dims(t, h, w, c);
  data.assign(static_cast<std::size_t>(samples()), fill);
}

Clip::Clip(int t, int h, int w, int c, std::vector<std::uint8_t> payload)
    : t(t), h(h), w(w), c(c), data(std::move(payload)) {
  validate_dims(t, h, w, c);
  if (static_cast<std::int64_t>(data.size()) != samples()) {
    throw ValueError("payload size " + std::to_string(data.size()) +
                     " does not match dims (expected " + std::to_string(samples()) + ")");
  }
}

}  // namespace vidaug
