#pragma once

#include <vector>

#include "orlicz/orlicz_function.hpp"

namespace orlicz {

struct Level {
  double value = 0;
  double mass = 0;
};

// Finite level-set descriptor of a measurable function: (value, mass) pairs
// over a non-atomic measure, or unit-mass atoms over the counting measure.
// Canonical form: |value| descending, zero values dropped.
class StepFunction {
 public:
  static StepFunction non_atomic(double total_mass, std::vector<Level> levels);
  static StepFunction counting(std::vector<double> values);
  static StepFunction zero(Measure m);

  const Measure& measure() const { return measure_; }
  const std::vector<Level>& levels() const { return levels_; }
  bool is_zero() const { return levels_.empty(); }
  double max_abs() const { return levels_.empty() ? 0.0 : std::abs(levels_.front().value); }
  double support_mass() const;
  double l1_norm() const;

  StepFunction scaled(double c) const;

 private:
  StepFunction() = default;
  Measure measure_;
  std::vector<Level> levels_;
};

}  // namespace orlicz
