#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace orlicz {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Product with the measure-theoretic convention 0 * inf = 0.
inline double xmul(double a, double b) {
  if (a == 0.0 || b == 0.0) return 0.0;
  return a * b;
}

inline bool finite(double x) { return std::isfinite(x); }

inline void require(bool cond, const char* msg) {
  if (!cond) throw std::domain_error(msg);
}

}  // namespace orlicz
