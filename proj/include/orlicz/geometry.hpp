#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "orlicz/norms.hpp"

namespace orlicz {

// sup over [lo, hi] of 2 phi(u/2) / phi(u); the interval must sit inside
// (d_phi, b_phi] with phi(lo) > 0, where the lemma guarantees sigma < 1.
double sigma_bound(const OrliczFunction& f, double lo, double hi);

struct RenormingInterval {
  double lower = 0, upper = 0;
};
// interval ((1-delta)(|alpha|+|beta|), |alpha|+|beta|] containing
// ||alpha x +- beta y|| whenever ||x +- y|| > 2 - delta on the unit sphere
RenormingInterval renorming_bounds(double norm_plus, double norm_minus, double delta,
                                   double alpha, double beta);

struct Witness {
  bool applicable = false;
  double a = 0;     // level with phi(a) * mass = 1
  double mass = 0;  // mu(A)
  Measure measure;
};
Witness construct_witness(const OrliczFunction& f, const Measure& m);

struct ChallengeRecord {
  double observed_min = 0;
  double certified_bound = 2.0;
  double epsilon = 0;
  double sigma = 0;
  double gamma = 0;
  double delta = 0;
  double d = 0;
  double b_mass = 0;  // mass of A intersect B
  bool degenerate = false;
};
// Re-runs the uniformly-non-l12 proof for one unit-norm challenger y and
// certifies min{||x+y||, ||x-y||} <= 2 - eps/(1+eps).  Layout convention:
// both x = a chi_A and y are packed from 0 in canonical level order.
ChallengeRecord challenge_witness(const OrliczFunction& f, const Witness& w, const StepFunction& y);

struct SliceSpec {
  size_t dimension = 0;
  std::vector<double> functional;  // unit dual norm
  double epsilon = 0;              // in (0, 1)
  enum class Side { SliceOfBall, WeakStarSlice } side = Side::SliceOfBall;
};

// finite-dimensional l_phi norms over {1..n}
double vector_luxemburg_norm(const OrliczFunction& f, const std::vector<double>& v);
double vector_dual_norm(const OrliczFunction& f, const OrliczFunction& conj,
                        const std::vector<double>& v);

bool slice_membership(const OrliczFunction& f, const SliceSpec& s, const std::vector<double>& point);

struct DiameterEstimate {
  double lower_bound = 0;
  size_t samples_used = 0;
  bool empty_slice = false;
  std::vector<double> best_a, best_b;
};
DiameterEstimate slice_diameter_lower_bound(const OrliczFunction& f, const SliceSpec& s,
                                            size_t budget, uint64_t seed);

// 2 - sup over sampled unit y of min{||x+y||, ||x-y||}; over-estimates the
// true uniform gap (the sup is under-sampled)
double uniformly_non_l12_gap(const OrliczFunction& f, const std::vector<double>& x, size_t n,
                             size_t budget, uint64_t seed);

}  // namespace orlicz
