#pragma once

#include <cmath>
#include <span>

namespace fofana {

// Kahan-Babuska (Neumaier) compensated accumulator. The summation order is
// the caller's responsibility; every loop in this library traverses cells in
// ascending index order so results do not depend on thread count.
class NeumaierSum {
 public:
  void add(double x) {
    const double t = sum_ + x;
    if (std::abs(sum_) >= std::abs(x)) {
      comp_ += (sum_ - t) + x;
    } else {
      comp_ += (x - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

inline double compensated_total(std::span<const double> xs) {
  NeumaierSum acc;
  for (double x : xs) acc.add(x);
  return acc.value();
}

}  // namespace fofana
