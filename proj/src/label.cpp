#include "vidaug/label.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "vidaug/error.hpp"

namespace vidaug {

namespace {
constexpr double kSumTolerance = 1e-9;
}

LabelDist::LabelDist(int num_classes, std::map<int, double> weights)
    : num_classes_(num_classes), weights_(std::move(weights)) {
  if (num_classes_ < 1) {
    throw ValueError("num_classes must be >= 1, got " + std::to_string(num_classes_));
  }
  double sum = 0.0;
  for (auto it = weights_.begin(); it != weights_.end();) {
    const auto [cls, w] = *it;
    if (cls < 0 || cls >= num_classes_) {
      throw ValueError("class index " + std::to_string(cls) + " outside [0, " +
                       std::to_string(num_classes_) + ")");
    }
    if (w < 0.0 || w > 1.0 || !std::isfinite(w)) {
      throw ValueError("weight " + std::to_string(w) + " for class " +
                       std::to_string(cls) + " outside [0, 1]");
    }
    if (w == 0.0) {
      it = weights_.erase(it);
      continue;
    }
    sum += w;
    ++it;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    throw ValueError("label weights sum to " + std::to_string(sum) + ", expected 1");
  }
}

LabelDist LabelDist::one_hot(int num_classes, int cls) {
  return LabelDist(num_classes, {{cls, 1.0}});
}

double LabelDist::weight(int cls) const {
  auto it = weights_.find(cls);
  return it == weights_.end() ? 0.0 : it->second;
}

LabelDist label_mix(const LabelDist& a, const LabelDist& b, double weight_a) {
  if (a.num_classes() != b.num_classes()) {
    throw ValueError("incompatible labels: " + std::to_string(a.num_classes()) +
                     " vs " + std::to_string(b.num_classes()) + " classes");
  }
  if (!(weight_a >= 0.0 && weight_a <= 1.0)) {
    throw ValueError("mix weight " + std::to_string(weight_a) + " outside [0, 1]");
  }
  std::map<int, double> mixed;
  for (const auto& [cls, w] : a.weights()) {
    mixed[cls] += weight_a * w;
  }
  for (const auto& [cls, w] : b.weights()) {
    mixed[cls] += (1.0 - weight_a) * w;
  }
  return LabelDist(a.num_classes(), std::move(mixed));
}

}  // namespace vidaug
