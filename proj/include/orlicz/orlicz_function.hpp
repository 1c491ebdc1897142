#pragma once

#include <array>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "orlicz/extended_real.hpp"

namespace orlicz {

enum class Family {
  Power,           // k * u^p, p >= 1, k > 0
  Linear,          // k * u
  ExpMinusOne,     // e^u - 1
  ULogU,           // u * ln(1 + u)
  Entropy,         // max(0, u ln u - u + 1); conjugate of e^u - 1
  PiecewiseLinear, // validated breakpoint data, last slope extrapolated
  Sampled,         // numeric grid (log-log interpolation); used for numeric conjugates
  Capped,          // inner on [0, b], +inf beyond
};

enum class Delta2Kind { Global, AtInfinity, AtZero };

struct CriticalConstants {
  double a = 0;        // sup{t : phi(t) = 0}
  double d = 0;        // sup{u : phi = k*u on [0,u], k >= 0}
  double c = 0;        // sup{u : phi(u) <= 1}
  double b = kInf;     // sup{u : phi(u) < inf}
  double d_strict = 0; // the k > 0 reading of d; reported, never used in rules
};

struct NFunctionClass {
  bool at_zero = false;
  bool at_infinity = false;
  bool exact = true; // false when decided by the sampled limit detector
};

struct GrowthVerdict {
  Delta2Kind condition = Delta2Kind::Global;
  enum class Verdict { Holds, Fails, EmpiricalHolds, EmpiricalFails } verdict = Verdict::Fails;
  std::optional<double> constant_K;
  std::optional<double> threshold_u0;
  std::optional<double> witness_u;
  double grid_lo = 0, grid_hi = 0; // sampled range for empirical verdicts
  std::string note;

  bool holds() const {
    return verdict == Verdict::Holds || verdict == Verdict::EmpiricalHolds;
  }
  bool exact() const {
    return verdict == Verdict::Holds || verdict == Verdict::Fails;
  }
};

std::string to_string(GrowthVerdict::Verdict v);
std::string to_string(Delta2Kind k);

// Tail behaviour of a Sampled descriptor past its last grid point.
struct SampledTail {
  bool infinite = false; // phi = +inf beyond the last point
  double slope = 0;      // linear extrapolation slope when finite
};

// Convex, left-continuous phi : [0, inf) -> [0, inf], phi(0) = 0, immutable
// after construction.  Invalid data is rejected, never repaired.
class OrliczFunction {
 public:
  static OrliczFunction power(double p, double k = 1.0);
  static OrliczFunction linear(double k);
  static OrliczFunction exp_minus_one();
  static OrliczFunction u_log_u();
  static OrliczFunction entropy();
  // points = {(u_i, phi_i)}, u_0 = 0, phi_0 = 0, slopes nondecreasing
  static OrliczFunction piecewise_linear(std::vector<std::array<double, 2>> points);
  static OrliczFunction sampled(std::vector<std::array<double, 2>> points, SampledTail tail);
  static OrliczFunction capped(OrliczFunction inner, double b);

  Family family() const { return family_; }
  double param_p() const { return p_; }
  double param_k() const { return k_; }
  double domain_bound() const { return b_; }
  const std::vector<std::array<double, 2>>& points() const { return points_; }
  const SampledTail& tail() const { return tail_; }
  const OrliczFunction& inner() const;

  // Closed-form families admit exact growth/constant computations.
  bool closed_form() const;

  double operator()(double u) const; // evaluate; +inf past the domain bound
  double right_derivative(double u) const;       // requires u < b
  double generalized_inverse(double y) const;    // inf{u >= 0 : phi(u) >= y}
  CriticalConstants critical_constants() const;
  NFunctionClass n_function_class() const;
  GrowthVerdict check_delta2(Delta2Kind cond) const;

  bool is_linear_family() const;

 private:
  OrliczFunction() = default;
  void validate() const;
  double eval_points(double u) const; // PiecewiseLinear / Sampled paths

  Family family_ = Family::Power;
  double p_ = 2, k_ = 1;
  double b_ = kInf;
  std::vector<std::array<double, 2>> points_;
  SampledTail tail_;
  std::shared_ptr<const OrliczFunction> inner_;
};

struct Measure {
  enum class Kind { NonAtomic, Counting } kind = Kind::NonAtomic;
  double total = kInf; // NonAtomic mass; Counting has unit atoms, total = inf

  static Measure non_atomic(double total) { return {Kind::NonAtomic, total}; }
  static Measure counting() { return {Kind::Counting, kInf}; }
};

Delta2Kind appropriate_delta2_kind(const Measure& m);
GrowthVerdict appropriate_delta2(const OrliczFunction& f, const Measure& m);

}  // namespace orlicz
