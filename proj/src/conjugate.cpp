#include "orlicz/conjugate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orlicz {

namespace {

constexpr double kGolden = 0.6180339887498949;

// Maximize a concave objective on [lo, hi] by golden-section; returns argmax.
template <typename F>
double golden_max(F&& g, double lo, double hi) {
  double a = lo, b = hi;
  double x1 = b - kGolden * (b - a);
  double x2 = a + kGolden * (b - a);
  double f1 = g(x1), f2 = g(x2);
  for (int i = 0; i < 180 && b - a > 1e-13 * std::max(1.0, std::abs(b)); ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = g(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = g(x1);
    }
  }
  double mid = 0.5 * (a + b);
  // endpoints can win on flat or boundary-attained objectives
  double best = mid;
  double fb = g(mid);
  for (double cand : {lo, hi}) {
    double fc = g(cand);
    if (fc > fb) {
      fb = fc;
      best = cand;
    }
  }
  return best;
}

// vertices of a polyline phi (starting at (0,0)), conjugated exactly
OrliczFunction polyline_conjugate(const std::vector<std::array<double, 2>>& verts,
                                  bool bounded, double bound) {
  // bounded: phi = +inf past u = bound = verts.back()[0]; else the last
  // segment's slope extends to infinity.
  auto value = [&](double v) {
    double best = 0.0;
    for (auto& pt : verts) best = std::max(best, pt[0] * v - pt[1]);
    return best;
  };
  std::vector<double> slopes;
  for (size_t i = 1; i < verts.size(); ++i)
    slopes.push_back((verts[i][1] - verts[i - 1][1]) / (verts[i][0] - verts[i - 1][0]));
  double tail_slope = slopes.empty() ? 0.0 : slopes.back();
  std::vector<std::array<double, 2>> pts{{0.0, 0.0}};
  for (double s : slopes)
    if (s > pts.back()[0]) pts.push_back({s, value(s)});
  if (bounded) {
    // sup attained at u = bound for every v past the terminal slope
    double s = pts.back()[0];
    pts.push_back({s + 1.0, value(s) + bound});
    return OrliczFunction::piecewise_linear(std::move(pts));
  }
  // finite up to the asymptotic slope, +inf beyond
  if (pts.size() == 1) {
    // linear phi: the conjugate vanishes on [0, slope] and jumps to +inf
    return OrliczFunction::sampled({{tail_slope, 0.0}}, SampledTail{true, 0.0});
  }
  if (tail_slope > pts.back()[0]) pts.push_back({tail_slope, value(tail_slope)});
  double cap = pts.back()[0];
  OrliczFunction inner = OrliczFunction::piecewise_linear(std::move(pts));
  return OrliczFunction::capped(std::move(inner), cap);
}

}  // namespace

double conjugate_value(const OrliczFunction& f, double v, const ConjugateOptions& opt) {
  if (v < 0.0 || std::isnan(v)) throw std::domain_error("conjugate_value: negative argument");
  if (v == 0.0) return 0.0;
  double b = f.domain_bound();
  auto g = [&](double u) { return u * v - f(u); };
  double hi;
  if (b < kInf) {
    hi = b;  // left-continuity: the sup ranges over the closed interval [0, b]
  } else {
    hi = 1.0;
    while (g(2.0 * hi) > g(hi)) {
      hi *= 2.0;
      if (hi > opt.bracket_cap) return kInf;
    }
    hi *= 2.0;
  }
  double u_star = golden_max(g, 0.0, hi);
  return std::max(0.0, g(u_star));
}

OrliczFunction numeric_conjugate(const OrliczFunction& f, const ConjugateOptions& opt) {
  std::vector<std::array<double, 2>> pts;
  pts.reserve(opt.grid_points);
  double llo = std::log(opt.grid_lo), lhi = std::log(opt.grid_hi);
  // the conjugate has a genuine finite jump only when phi grows linearly at
  // infinity; past that the solver can still overflow, which is not a jump
  bool jump_possible = !(f.domain_bound() == kInf && f.n_function_class().at_infinity);
  bool hit_inf = false;
  double prev = 0.0;
  auto slope = [](const std::array<double, 2>& a, const std::array<double, 2>& b) {
    return (b[1] - a[1]) / (b[0] - a[0]);
  };
  for (int i = 0; i < opt.grid_points; ++i) {
    double v = std::exp(llo + (lhi - llo) * i / (opt.grid_points - 1));
    double y = conjugate_value(f, v, opt);
    if (y == kInf) {
      hit_inf = true;
      break;
    }
    prev = std::max(prev, y);  // monotone guard against solver noise
    std::array<double, 2> np{v, prev};
    // lower-hull repair: solver noise can dent convexity by ~1e-12 relative
    while (!pts.empty()) {
      std::array<double, 2> anchor = pts.size() >= 2 ? pts[pts.size() - 2]
                                                     : std::array<double, 2>{0.0, 0.0};
      if (slope(anchor, pts.back()) <= slope(pts.back(), np)) break;
      pts.pop_back();
    }
    pts.push_back(np);
  }
  if (pts.empty()) throw std::runtime_error("numeric conjugate: infinite at the whole grid");
  SampledTail tail;
  if (hit_inf && jump_possible) {
    tail.infinite = true;
  } else {
    double chord = pts.size() > 1
                       ? (pts.back()[1] - pts[pts.size() - 2][1]) / (pts.back()[0] - pts[pts.size() - 2][0])
                       : pts.back()[1] / pts.back()[0];
    tail.slope = f.domain_bound() < kInf ? std::max(chord, f.domain_bound()) : chord;
  }
  return OrliczFunction::sampled(std::move(pts), tail);
}

ConjugatePair conjugate(const OrliczFunction& f, const ConjugateOptions& opt) {
  ConjugatePair pair{f, f, ConjugatePair::Mode::ClosedForm, 0.0};
  switch (f.family()) {
    case Family::Power: {
      double p = f.param_p(), k = f.param_k();
      double q = p / (p - 1.0);
      double kq = ((p - 1.0) / p) * std::pow(p * k, -1.0 / (p - 1.0));
      pair.conjugate = OrliczFunction::power(q, kq);
      return pair;
    }
    case Family::Linear:
      pair.conjugate = OrliczFunction::sampled({{f.param_k(), 0.0}}, SampledTail{true, 0.0});
      return pair;
    case Family::ExpMinusOne:
      pair.conjugate = OrliczFunction::entropy();
      return pair;
    case Family::Entropy:
      pair.conjugate = OrliczFunction::exp_minus_one();
      return pair;
    case Family::PiecewiseLinear: {
      std::vector<std::array<double, 2>> verts = f.points();
      pair.conjugate = polyline_conjugate(verts, false, 0.0);
      return pair;
    }
    case Family::Sampled: {
      // indicator-style descriptor (0 on [0,k], inf beyond) conjugates back to linear
      if (f.points().size() == 1 && f.points()[0][1] == 0.0 && f.tail().infinite) {
        pair.conjugate = OrliczFunction::linear(f.points()[0][0]);
        return pair;
      }
      break;
    }
    case Family::Capped: {
      const OrliczFunction& in = f.inner();
      double b = f.domain_bound();
      if (in.family() == Family::Linear) {
        std::vector<std::array<double, 2>> verts{{0.0, 0.0}, {b, in.param_k() * b}};
        pair.conjugate = polyline_conjugate(verts, true, b);
        return pair;
      }
      if (in.family() == Family::PiecewiseLinear) {
        std::vector<std::array<double, 2>> verts;
        for (auto& pt : in.points())
          if (pt[0] < b) verts.push_back(pt);
        verts.push_back({b, in(b)});
        pair.conjugate = polyline_conjugate(verts, true, b);
        return pair;
      }
      break;
    }
    case Family::ULogU: break;
  }
  pair.mode = ConjugatePair::Mode::NumericGrid;
  pair.grid_tolerance = 1e-6;
  pair.conjugate = numeric_conjugate(f, opt);
  return pair;
}

double young_gap(const ConjugatePair& pair, double u, double v) {
  if (u < 0.0 || v < 0.0) throw std::domain_error("young_gap: negative operand");
  double fu = pair.primal(u), gv = pair.conjugate(v);
  if (fu == kInf || gv == kInf) throw std::domain_error("young_gap: infinite operand");
  return fu + gv - u * v;
}

BiconjugateReport biconjugate_check(const OrliczFunction& f, const std::vector<double>& grid,
                                    const ConjugateOptions& opt) {
  for (double u : grid)
    if (u >= f.domain_bound()) throw std::domain_error("biconjugate_check: grid touches the domain bound");
  // the first pass must represent slopes beyond the largest grid point, or the
  // second pass sees a linear tail and returns +inf there; extend its v-range
  // to phi'(2 u_max) and densify proportionally
  ConjugateOptions o1 = opt;
  double u_max = *std::max_element(grid.begin(), grid.end());
  if (2.0 * u_max < f.domain_bound()) {
    double need = 2.0 * f.right_derivative(2.0 * u_max);
    if (need > o1.grid_hi && std::isfinite(need)) {
      double scale = (std::log(need) - std::log(o1.grid_lo)) /
                     (std::log(o1.grid_hi) - std::log(o1.grid_lo));
      o1.grid_hi = need;
      o1.grid_points = static_cast<int>(o1.grid_points * scale);
    }
  }
  OrliczFunction c1 = numeric_conjugate(f, o1);
  BiconjugateReport rep;
  rep.grid_points = grid.size();
  for (double u : grid) {
    // evaluate the second transform exactly at u: a second sampled grid would
    // add its own interpolation error on top
    double err = std::abs(conjugate_value(c1, u, opt) - f(u)) / std::max(1.0, f(u));
    if (err > rep.max_rel_error) {
      rep.max_rel_error = err;
      rep.argmax_u = u;
    }
  }
  return rep;
}

FinitenessDuality finiteness_duality(const OrliczFunction& f) {
  if (f.domain_bound() < kInf)
    throw std::domain_error("finiteness_duality: stated for finite phi only");
  FinitenessDuality r;
  r.n_at_infinity = f.n_function_class().at_infinity;
  ConjugatePair pair = conjugate(f);
  r.conjugate_finite = pair.conjugate.critical_constants().b == kInf;
  r.consistent = r.n_at_infinity == r.conjugate_finite;
  return r;
}

}  // namespace orlicz
