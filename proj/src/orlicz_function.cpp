#include "orlicz/orlicz_function.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orlicz {

namespace {

constexpr double kSlopeRunTol = 1e-10;   // relative, linearity detection
constexpr double kRatioCeiling = 1e6;    // empirical delta-2 blowup ceiling
constexpr int kDelta2Grid = 512;

// inf{u in [lo, hi] : f(u) >= y} for nondecreasing f with f(lo) < y <= f(hi).
template <typename F>
double bisect_threshold(F&& f, double lo, double hi, double y) {
  for (int i = 0; i < 200 && hi - lo > 1e-14 * std::max(1.0, hi); ++i) {
    double mid = 0.5 * (lo + hi);
    if (f(mid) >= y)
      hi = mid;
    else
      lo = mid;
  }
  return 0.5 * (lo + hi);
}

std::vector<double> log_grid(double lo, double hi, int n) {
  std::vector<double> g(n);
  double llo = std::log(lo), lhi = std::log(hi);
  for (int i = 0; i < n; ++i)
    g[i] = std::exp(llo + (lhi - llo) * i / (n - 1));
  return g;
}

}  // namespace

std::string to_string(GrowthVerdict::Verdict v) {
  switch (v) {
    case GrowthVerdict::Verdict::Holds: return "holds";
    case GrowthVerdict::Verdict::Fails: return "fails";
    case GrowthVerdict::Verdict::EmpiricalHolds: return "empirical-holds";
    case GrowthVerdict::Verdict::EmpiricalFails: return "empirical-fails";
  }
  return "?";
}

std::string to_string(Delta2Kind k) {
  switch (k) {
    case Delta2Kind::Global: return "delta2";
    case Delta2Kind::AtInfinity: return "delta2_inf";
    case Delta2Kind::AtZero: return "delta2_zero";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// construction

OrliczFunction OrliczFunction::power(double p, double k) {
  if (!(p >= 1.0) || !(k > 0.0) || !std::isfinite(p) || !std::isfinite(k))
    throw std::invalid_argument("power family needs p >= 1, k > 0");
  if (p == 1.0) return linear(k);
  OrliczFunction f;
  f.family_ = Family::Power;
  f.p_ = p;
  f.k_ = k;
  return f;
}

OrliczFunction OrliczFunction::linear(double k) {
  if (!(k > 0.0) || !std::isfinite(k))
    throw std::invalid_argument("linear family needs k > 0");
  OrliczFunction f;
  f.family_ = Family::Linear;
  f.k_ = k;
  return f;
}

OrliczFunction OrliczFunction::exp_minus_one() {
  OrliczFunction f;
  f.family_ = Family::ExpMinusOne;
  return f;
}

OrliczFunction OrliczFunction::u_log_u() {
  OrliczFunction f;
  f.family_ = Family::ULogU;
  return f;
}

OrliczFunction OrliczFunction::entropy() {
  OrliczFunction f;
  f.family_ = Family::Entropy;
  return f;
}

OrliczFunction OrliczFunction::piecewise_linear(std::vector<std::array<double, 2>> points) {
  if (points.size() < 2 || points[0][0] != 0.0 || points[0][1] != 0.0)
    throw std::invalid_argument("piecewise data must start at (0, 0)");
  double prev_slope = -1.0;
  bool any_positive = false;
  for (size_t i = 1; i < points.size(); ++i) {
    double du = points[i][0] - points[i - 1][0];
    double dy = points[i][1] - points[i - 1][1];
    if (!(du > 0.0) || dy < 0.0 || !std::isfinite(points[i][1]))
      throw std::invalid_argument("piecewise data must be strictly increasing in u, nondecreasing in value");
    double s = dy / du;
    if (s < prev_slope - 1e-12 * std::max(1.0, prev_slope))
      throw std::invalid_argument("piecewise data is not convex");
    prev_slope = std::max(prev_slope, s);
    any_positive = any_positive || points[i][1] > 0.0;
  }
  if (!any_positive)
    throw std::invalid_argument("piecewise data is identically zero");
  OrliczFunction f;
  f.family_ = Family::PiecewiseLinear;
  f.points_ = std::move(points);
  f.tail_.slope = prev_slope;
  return f;
}

OrliczFunction OrliczFunction::sampled(std::vector<std::array<double, 2>> points, SampledTail tail) {
  if (points.empty()) throw std::invalid_argument("empty sample grid");
  double prev_u = 0.0, prev_y = 0.0, prev_slope = -1.0;
  for (auto& pt : points) {
    if (!(pt[0] > prev_u) || pt[1] < prev_y || !std::isfinite(pt[1]))
      throw std::invalid_argument("sample grid must be strictly increasing and nondecreasing in value");
    double s = (pt[1] - prev_y) / (pt[0] - prev_u);
    if (s < prev_slope * (1.0 - 1e-6) - 1e-9)
      throw std::invalid_argument("sample grid is not convex");
    prev_slope = std::max(prev_slope, s);
    prev_u = pt[0];
    prev_y = pt[1];
  }
  OrliczFunction f;
  f.family_ = Family::Sampled;
  f.points_ = std::move(points);
  f.tail_ = tail;
  if (!tail.infinite && tail.slope < prev_slope * (1.0 - 1e-6) - 1e-9)
    throw std::invalid_argument("tail slope breaks convexity");
  if (tail.infinite) f.b_ = f.points_.back()[0];
  if (!tail.infinite && tail.slope == 0.0 && prev_y == 0.0)
    throw std::invalid_argument("sample grid is identically zero");
  return f;
}

OrliczFunction OrliczFunction::capped(OrliczFunction inner, double b) {
  if (!(b > 0.0) || !std::isfinite(b))
    throw std::invalid_argument("cap bound must be positive and finite");
  if (inner(b) == kInf)
    throw std::invalid_argument("inner function already infinite at the cap");
  OrliczFunction f;
  f.family_ = Family::Capped;
  f.b_ = b;
  f.inner_ = std::make_shared<const OrliczFunction>(std::move(inner));
  return f;
}

const OrliczFunction& OrliczFunction::inner() const {
  if (!inner_) throw std::logic_error("not a capped descriptor");
  return *inner_;
}

bool OrliczFunction::closed_form() const {
  switch (family_) {
    case Family::Sampled: return false;
    case Family::Capped: return inner_->closed_form();
    default: return true;
  }
}

bool OrliczFunction::is_linear_family() const { return family_ == Family::Linear; }

// ---------------------------------------------------------------------------
// evaluation

double OrliczFunction::eval_points(double u) const {
  // implicit (0, 0) before the first stored point
  const auto& pts = points_;
  if (u <= 0.0) return 0.0;
  if (u >= pts.back()[0]) {
    if (u == pts.back()[0]) return pts.back()[1];
    if (tail_.infinite) return kInf;
    return pts.back()[1] + tail_.slope * (u - pts.back()[0]);
  }
  auto it = std::lower_bound(pts.begin(), pts.end(), u,
                             [](const std::array<double, 2>& pt, double x) { return pt[0] < x; });
  double u1 = it->at(0), y1 = it->at(1);
  double u0 = 0.0, y0 = 0.0;
  if (it != pts.begin()) {
    u0 = (it - 1)->at(0);
    y0 = (it - 1)->at(1);
  }
  if (family_ == Family::Sampled && u0 > 0.0 && y0 > 0.0 && y1 > 0.0) {
    // log-log interpolation; exact on power segments, keeps relative accuracy
    double t = (std::log(u) - std::log(u0)) / (std::log(u1) - std::log(u0));
    return std::exp(std::log(y0) + t * (std::log(y1) - std::log(y0)));
  }
  double t = (u - u0) / (u1 - u0);
  return y0 + t * (y1 - y0);
}

double OrliczFunction::operator()(double u) const {
  if (u < 0.0 || std::isnan(u)) throw std::domain_error("evaluate: negative argument");
  switch (family_) {
    case Family::Power: return k_ * std::pow(u, p_);
    case Family::Linear: return k_ * u;
    case Family::ExpMinusOne: return std::expm1(u);
    case Family::ULogU: return u == 0.0 ? 0.0 : u * std::log1p(u);
    case Family::Entropy: return u <= 1.0 ? 0.0 : u * std::log(u) - u + 1.0;
    case Family::PiecewiseLinear:
    case Family::Sampled: return eval_points(u);
    case Family::Capped: return u > b_ ? kInf : (*inner_)(u);
  }
  return 0.0;
}

double OrliczFunction::right_derivative(double u) const {
  if (u < 0.0 || std::isnan(u)) throw std::domain_error("right_derivative: negative argument");
  if (u >= b_) throw std::domain_error("right_derivative: argument at or past the domain bound");
  switch (family_) {
    case Family::Power: return k_ * p_ * std::pow(u, p_ - 1.0);
    case Family::Linear: return k_;
    case Family::ExpMinusOne: return std::exp(u);
    case Family::ULogU: return std::log1p(u) + u / (1.0 + u);
    case Family::Entropy: return u < 1.0 ? 0.0 : std::log(std::max(u, 1.0));
    case Family::PiecewiseLinear: {
      const auto& pts = points_;
      if (u >= pts.back()[0]) return tail_.slope;
      for (size_t i = 1; i < pts.size(); ++i)
        if (u < pts[i][0]) {
          double u0 = pts[i - 1][0];
          return (pts[i][1] - pts[i - 1][1]) / (pts[i][0] - u0);
        }
      return tail_.slope;
    }
    case Family::Sampled: {
      // forward difference with step halving
      double h = 1e-4 * std::max(u, 1.0);
      while (u + h >= b_) h *= 0.5;
      double prev = (eval_points(u + h) - eval_points(u)) / h;
      for (int i = 0; i < 48; ++i) {
        h *= 0.5;
        double cur = (eval_points(u + h) - eval_points(u)) / h;
        if (std::abs(cur - prev) <= 1e-10 * std::max(1.0, std::abs(cur))) return cur;
        prev = cur;
      }
      return prev;
    }
    case Family::Capped: return inner_->right_derivative(u);
  }
  return 0.0;
}

double OrliczFunction::generalized_inverse(double y) const {
  if (y < 0.0 || std::isnan(y)) throw std::domain_error("generalized_inverse: negative argument");
  if (y == 0.0) return 0.0;
  switch (family_) {
    case Family::Power:
      return y == kInf ? kInf : std::pow(y / k_, 1.0 / p_);
    case Family::Linear: return y / k_;
    case Family::ExpMinusOne: return y == kInf ? kInf : std::log1p(y);
    case Family::ULogU:
    case Family::Entropy: {
      if (y == kInf) return kInf;
      double hi = 1.0;
      while ((*this)(hi) < y) hi *= 2.0;
      return bisect_threshold([this](double u) { return (*this)(u); }, 0.0, hi, y);
    }
    case Family::PiecewiseLinear: {
      const auto& pts = points_;
      for (size_t i = 1; i < pts.size(); ++i)
        if (pts[i][1] >= y) {
          double s = (pts[i][1] - pts[i - 1][1]) / (pts[i][0] - pts[i - 1][0]);
          return pts[i - 1][0] + (y - pts[i - 1][1]) / s;
        }
      if (tail_.slope > 0.0 && y < kInf)
        return pts.back()[0] + (y - pts.back()[1]) / tail_.slope;
      return kInf;
    }
    case Family::Sampled: {
      if ((*this)(b_ == kInf ? points_.back()[0] : b_) < y) {
        if (tail_.infinite) return b_;  // phi jumps past y at the bound
        if (tail_.slope > 0.0 && y < kInf)
          return points_.back()[0] + (y - points_.back()[1]) / tail_.slope;
        return kInf;
      }
      return bisect_threshold([this](double u) { return (*this)(u); }, 0.0, std::min(b_, points_.back()[0]), y);
    }
    case Family::Capped: {
      double r = inner_->generalized_inverse(y);
      return r <= b_ ? r : b_;
    }
  }
  return kInf;
}

// ---------------------------------------------------------------------------
// critical constants

CriticalConstants OrliczFunction::critical_constants() const {
  CriticalConstants cc;
  cc.b = b_;
  switch (family_) {
    case Family::Power:
      cc.a = 0;
      cc.d = 0;
      cc.c = std::pow(1.0 / k_, 1.0 / p_);
      break;
    case Family::Linear:
      cc.a = 0;
      cc.d = kInf;
      cc.c = 1.0 / k_;
      break;
    case Family::ExpMinusOne:
      cc.a = 0;
      cc.d = 0;
      cc.c = std::log(2.0);
      break;
    case Family::ULogU: {
      cc.a = 0;
      cc.d = 0;
      double hi = 2.0;
      while ((*this)(hi) <= 1.0) hi *= 2.0;
      cc.c = bisect_threshold([this](double u) { return (*this)(u); }, 0.0, hi, 1.0);
      break;
    }
    case Family::Entropy:
      cc.a = 1.0;
      cc.d = 1.0;
      cc.c = std::exp(1.0);
      break;
    case Family::PiecewiseLinear:
    case Family::Sampled: {
      const auto& pts = points_;
      // slopes, including the implicit (0,0) lead-in segment
      std::vector<double> slopes;
      std::vector<double> seg_end;  // right endpoint of each chord
      double pu = 0, py = 0;
      for (auto& pt : pts) {
        if (pt[0] > pu) {  // skip the explicit (0,0) anchor
          slopes.push_back((pt[1] - py) / (pt[0] - pu));
          seg_end.push_back(pt[0]);
        }
        pu = pt[0];
        py = pt[1];
      }
      double tail_slope = tail_.infinite ? kInf : tail_.slope;
      // a: end of the initial zero run
      size_t i = 0;
      while (i < pts.size() && pts[i][1] == 0.0) ++i;
      if (i == pts.size())
        cc.a = tail_.infinite ? b_ : (tail_slope == 0.0 ? kInf : pts.back()[0]);
      else
        cc.a = i == 0 ? 0.0 : pts[i - 1][0];
      // d: end of the initial constant-slope run
      size_t j = 1;
      while (j < slopes.size() &&
             std::abs(slopes[j] - slopes[0]) <= kSlopeRunTol * std::max(1.0, std::abs(slopes[0])))
        ++j;
      if (j == slopes.size()) {
        if (tail_.infinite)
          cc.d = b_;
        else if (std::abs(tail_slope - slopes[0]) <= kSlopeRunTol * std::max(1.0, std::abs(slopes[0])))
          cc.d = kInf;
        else
          cc.d = seg_end.back();
      } else {
        cc.d = seg_end[j - 1];
      }
      cc.d = std::max(cc.d, cc.a);
      // c: sup{u : phi(u) <= 1}
      double hi = std::max(1.0, 2.0 * (pts.empty() ? 1.0 : pts.back()[0]));
      int guard = 0;
      while ((*this)(hi) <= 1.0 && hi < 1e150 && ++guard < 600) hi *= 2.0;
      if ((*this)(hi) <= 1.0)
        cc.c = b_;  // never exceeds 1 on the finite part
      else
        cc.c = bisect_threshold([this](double u) { return (*this)(u) > 1.0 ? 2.0 : 0.0; }, 0.0, hi, 1.0);
      break;
    }
    case Family::Capped: {
      CriticalConstants ic = inner_->critical_constants();
      cc.a = std::min(ic.a, b_);
      cc.d = std::min(ic.d, b_);
      cc.c = std::min(ic.c, b_);
      break;
    }
  }
  if (cc.c > cc.b) cc.c = cc.b;
  cc.d_strict = cc.a == 0.0 ? cc.d : 0.0;
  return cc;
}

// ---------------------------------------------------------------------------
// N-function classification

NFunctionClass OrliczFunction::n_function_class() const {
  NFunctionClass r;
  switch (family_) {
    case Family::Power: r = {true, true, true}; break;
    case Family::Linear: r = {false, false, true}; break;
    case Family::ExpMinusOne: r = {false, true, true}; break;
    case Family::ULogU: r = {true, true, true}; break;
    case Family::Entropy: r = {true, true, true}; break;
    case Family::PiecewiseLinear: {
      double first_slope = (points_[1][1] - points_[0][1]) / (points_[1][0] - points_[0][0]);
      r.at_zero = first_slope == 0.0;
      r.at_infinity = false;  // bounded terminal slope
      r.exact = true;
      break;
    }
    case Family::Sampled: {
      r.exact = false;
      r.at_infinity = tail_.infinite;
      // sampled-limit detector on phi(u)/u
      if (critical_constants().a > 0.0) {
        r.at_zero = true;
        break;
      }
      double mid = std::min(1.0, 0.5 * b_);
      double s1 = (*this)(mid) / mid;
      double lo = std::max(points_.front()[0], 1e-12);
      double slo = (*this)(lo) / lo;
      r.at_zero = s1 > 0.0 && std::isfinite(s1) ? (slo <= 1e-6 * s1) : false;
      break;
    }
    case Family::Capped: {
      NFunctionClass ic = inner_->n_function_class();
      r.at_zero = ic.at_zero;
      r.at_infinity = true;  // phi(u)/u unbounded past the cap
      r.exact = ic.exact;
      break;
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// delta-2 conditions

namespace {

GrowthVerdict make_holds(Delta2Kind c, double K, std::optional<double> u0, std::string note = {}) {
  GrowthVerdict v;
  v.condition = c;
  v.verdict = GrowthVerdict::Verdict::Holds;
  v.constant_K = K;
  v.threshold_u0 = u0;
  v.note = std::move(note);
  return v;
}

GrowthVerdict make_fails(Delta2Kind c, double witness, std::string note = {}) {
  GrowthVerdict v;
  v.condition = c;
  v.verdict = GrowthVerdict::Verdict::Fails;
  v.witness_u = witness;
  v.note = std::move(note);
  return v;
}

}  // namespace

GrowthVerdict OrliczFunction::check_delta2(Delta2Kind cond) const {
  const OrliczFunction& f = *this;
  auto ratio = [&f](double u) {
    double num = f(2.0 * u), den = f(u);
    if (den == 0.0) return num == 0.0 ? 1.0 : kInf;
    if (num == kInf) return kInf;
    return num / den;
  };

  switch (family_) {
    case Family::Power:
      return make_holds(cond, std::pow(2.0, p_),
                        cond == Delta2Kind::Global ? std::optional<double>() : std::optional<double>(1.0));
    case Family::Linear:
      return make_holds(cond, 2.000001,
                        cond == Delta2Kind::Global ? std::optional<double>() : std::optional<double>(1.0),
                        "phi(2u) = 2 phi(u); the optimal doubling constant is exactly 2, the boundary of the strict K > 2 requirement");
    case Family::ULogU:
      return make_holds(cond, 4.0,
                        cond == Delta2Kind::Global ? std::optional<double>() : std::optional<double>(1.0),
                        "ln(1+2u) <= 2 ln(1+u) gives phi(2u) <= 4 phi(u) for all u");
    case Family::ExpMinusOne: {
      if (cond == Delta2Kind::AtZero) {
        // ratio decreases from e+1 at u0 = 1 down to 2 as u -> 0+
        return make_holds(cond, std::exp(1.0) + 1.0, 1.0);
      }
      double w = 1.0;
      while (ratio(w) <= kRatioCeiling) w *= 2.0;
      w = bisect_threshold(ratio, w / 2.0, w, kRatioCeiling) * 1.01;
      return make_fails(cond, w, "ratio (e^{2u}-1)/(e^u-1) grows like e^u");
    }
    case Family::Entropy: {
      CriticalConstants cc = critical_constants();
      if (cond == Delta2Kind::Global || cond == Delta2Kind::AtZero)
        return make_fails(cond, 0.75 * cc.a, "phi vanishes on (0,1] while phi(2u) > 0");
      // at infinity: ratio decreases toward 2 past u = e
      double u0 = std::exp(1.0);
      double K = ratio(u0);
      for (double u = u0; u < 1e8; u *= 1.1) K = std::max(K, ratio(u));
      return make_holds(cond, K, u0);
    }
    case Family::PiecewiseLinear: {
      CriticalConstants cc = critical_constants();
      // ratio of two piecewise-linear functions: per cell it is monotone, so
      // the supremum over any interval is attained at a cell endpoint
      auto sup_over = [&](double lo, double hi) {
        double s = 2.0;  // both limits u -> 0+ and u -> inf
        std::vector<double> cand{lo};
        if (std::isfinite(hi)) cand.push_back(hi);
        for (auto& pt : points_) {
          for (double x : {pt[0], pt[0] / 2.0})
            if (x >= lo && x <= hi && x > 0.0) cand.push_back(x);
        }
        cand.push_back(std::min(hi, 2.0 * points_.back()[0] + 1.0));
        for (double x : cand)
          if (x > 0.0 && std::isfinite(x)) s = std::max(s, ratio(x));
        return s;
      };
      if (cc.a > 0.0 && cond != Delta2Kind::AtInfinity)
        return make_fails(cond, 0.75 * cc.a, "phi vanishes below a_phi while phi(2u) > 0 just above it");
      if (cond == Delta2Kind::Global)
        return make_holds(cond, std::max(sup_over(0.0, kInf), 2.000001), std::nullopt);
      if (cond == Delta2Kind::AtZero) {
        double u0 = points_[1][0];
        return make_holds(cond, std::max(sup_over(0.0, u0), 2.000001), u0);
      }
      double u0 = std::max({2.0 * cc.a, points_.back()[0], 1.0});
      if (cc.a > 0.0) u0 = std::max(u0, 2.0 * cc.a + 1.0);
      return make_holds(cond, std::max(sup_over(u0, kInf), 2.000001), u0);
    }
    case Family::Capped: {
      if (cond == Delta2Kind::Global || cond == Delta2Kind::AtInfinity)
        return make_fails(cond, 0.75 * b_, "phi(2u) = inf while phi(u) < inf near the cap");
      GrowthVerdict v = inner_->check_delta2(Delta2Kind::AtZero);
      if (v.threshold_u0 && *v.threshold_u0 > 0.45 * b_) v.threshold_u0 = 0.45 * b_;
      return v;
    }
    case Family::Sampled: break;  // empirical path below
  }

  // empirical sampled-grid path
  CriticalConstants cc = critical_constants();
  if (cond == Delta2Kind::AtZero && cc.a > 0.0 && std::abs(cc.a - cc.c) <= 1e-12 * std::max(1.0, cc.c))
    throw std::domain_error("delta2_zero degenerate: phi vanishes up to a_phi = c_phi");

  double lo = 0, hi = 0;
  switch (cond) {
    case Delta2Kind::Global:
      lo = std::max(1e-8, cc.a * (1.0 + 1e-6));
      hi = std::min(1e8, cc.b / 2.0);
      break;
    case Delta2Kind::AtInfinity:
      lo = std::max({1.0, cc.a * (1.0 + 1e-6), 1e-8});
      hi = std::min(1e8, cc.b / 2.0);
      break;
    case Delta2Kind::AtZero:
      lo = std::max(1e-8, cc.a * (1.0 + 1e-6));
      hi = std::min({1.0, cc.b / 2.0, cc.c});
      break;
  }
  if (!(hi > lo)) throw std::domain_error("delta2: empty sampling range");

  GrowthVerdict v;
  v.condition = cond;
  v.grid_lo = lo;
  v.grid_hi = hi;
  double sup = 0.0, arg = lo;
  for (double u : log_grid(lo, hi, kDelta2Grid)) {
    double num = f(2.0 * u), den = f(u);
    if (num == kInf && den < kInf) {
      v.verdict = GrowthVerdict::Verdict::Fails;
      v.witness_u = u;
      v.note = "phi(2u) = inf while phi(u) < inf";
      return v;
    }
    double r = ratio(u);
    if (r > sup) {
      sup = r;
      arg = u;
    }
  }
  if (sup > kRatioCeiling) {
    v.verdict = GrowthVerdict::Verdict::EmpiricalFails;
    v.witness_u = arg;
  } else {
    v.verdict = GrowthVerdict::Verdict::EmpiricalHolds;
    v.constant_K = std::max(1.05 * sup, 2.000001);
    if (cond != Delta2Kind::Global)
      v.threshold_u0 = cond == Delta2Kind::AtZero ? hi : lo;
  }
  return v;
}

Delta2Kind appropriate_delta2_kind(const Measure& m) {
  if (m.kind == Measure::Kind::Counting) return Delta2Kind::AtZero;
  return m.total == kInf ? Delta2Kind::Global : Delta2Kind::AtInfinity;
}

GrowthVerdict appropriate_delta2(const OrliczFunction& f, const Measure& m) {
  return f.check_delta2(appropriate_delta2_kind(m));
}

void OrliczFunction::validate() const {}

}  // namespace orlicz
