#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace hyperavg {

// Neumaier's improved Kahan summation: running compensated sum whose error
// is O(eps) relative to the sum of magnitudes, independent of term count.
class NeumaierSum {
 public:
  void add(double v) {
    double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }

  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

// Plain left-to-right sum. Process code that must agree bitwise with the
// edge-averaging rule (which sums an edge's coordinates in index order)
// uses this rather than the compensated version.
inline double plain_sum(const std::vector<double>& x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s;
}

inline double compensated_sum(const std::vector<double>& x) {
  NeumaierSum s;
  for (double v : x) s.add(v);
  return s.value();
}

}  // namespace hyperavg
