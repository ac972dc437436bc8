#pragma once

#include <stdexcept>
#include <vector>

namespace dpstab {

// Weight system c_1 >= c_2 >= ... >= c_n >= 1 of a weighted projective space.
class WeightSystem {
public:
  explicit WeightSystem(std::vector<int> weights) : c_(std::move(weights)) {
    if (c_.size() < 2) throw std::invalid_argument("WeightSystem: need n >= 2");
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] < 1) throw std::invalid_argument("WeightSystem: weights must be positive");
      if (i > 0 && c_[i] > c_[i - 1])
        throw std::invalid_argument("WeightSystem: weights must be nonincreasing");
    }
  }

  int n() const { return static_cast<int>(c_.size()); }
  int weight(int i) const { return c_[static_cast<size_t>(i)]; }
  const std::vector<int>& weights() const { return c_; }

  // number of weights > 1
  int s() const {
    int k = 0;
    for (int c : c_)
      if (c > 1) ++k;
    return k;
  }

  int weight_sum() const {
    int t = 0;
    for (int c : c_) t += c;
    return t;
  }

  bool fermat_admissible(int d) const {
    if (d <= 0) return false;
    for (int c : c_)
      if (d % c != 0) return false;
    return true;
  }

  friend bool operator==(const WeightSystem& a, const WeightSystem& b) { return a.c_ == b.c_; }

private:
  std::vector<int> c_;
};

}  // namespace dpstab
