#pragma once

#include <map>

namespace vidaug {

// Sparse class distribution: class index -> weight. Weights are in (0, 1],
// sum to 1 within 1e-9, and zero entries are never stored.
class LabelDist {
 public:
  LabelDist(int num_classes, std::map<int, double> weights);

  static LabelDist one_hot(int num_classes, int cls);

  int num_classes() const { return num_classes_; }
  const std::map<int, double>& weights() const { return weights_; }

  // Weight of a class, 0 when absent.
  double weight(int cls) const;

  bool operator==(const LabelDist&) const = default;

 private:
  int num_classes_;
  std::map<int, double> weights_;
};

// Convex combination: result(k) = weight_a * a(k) + (1 - weight_a) * b(k).
// Throws ValueError on class-count mismatch or weight_a outside [0, 1].
LabelDist label_mix(const LabelDist& a, const LabelDist& b, double weight_a);

}  // namespace vidaug
