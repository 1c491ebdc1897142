#include "orlicz/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace orlicz {

namespace {

constexpr double kGolden = 0.6180339887498949;

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

// ---------------------------------------------------------------------------
// sigma bound

double sigma_bound(const OrliczFunction& f, double lo, double hi) {
  CriticalConstants cc = f.critical_constants();
  if (!(lo > 0.0) || !(hi >= lo)) throw std::domain_error("sigma_bound: bad interval");
  if (lo <= cc.d) throw std::domain_error("sigma_bound: interval touches the linear region");
  if (hi > cc.b || (hi == cc.b && f(cc.b) == kInf))
    throw std::domain_error("sigma_bound: interval leaves the finiteness region");
  if (f(lo) <= 0.0) throw std::domain_error("sigma_bound: phi vanishes on the interval");
  if (f.family() == Family::Power) return std::pow(2.0, 1.0 - f.param_p());

  auto ratio = [&f](double u) {
    double den = f(u);
    return den > 0.0 ? 2.0 * f(0.5 * u) / den : 1.0;
  };
  const int n = 1024;
  double best = 0.0, arg = lo;
  for (int i = 0; i < n; ++i) {
    double u = lo + (hi - lo) * i / (n - 1);
    double r = ratio(u);
    if (r > best) {
      best = r;
      arg = u;
    }
  }
  // golden refinement around the grid argmax
  double a = std::max(lo, arg - (hi - lo) / (n - 1));
  double b = std::min(hi, arg + (hi - lo) / (n - 1));
  double x1 = b - kGolden * (b - a), x2 = a + kGolden * (b - a);
  double f1 = ratio(x1), f2 = ratio(x2);
  for (int i = 0; i < 100 && b - a > 1e-14 * std::max(1.0, b); ++i) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + kGolden * (b - a);
      f2 = ratio(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - kGolden * (b - a);
      f1 = ratio(x1);
    }
  }
  best = std::max(best, ratio(0.5 * (a + b)));
  if (best >= 1.0 - 1e-9)
    throw std::domain_error("sigma_bound: ratio reaches 1, d_phi was misdetected");
  return best;
}

RenormingInterval renorming_bounds(double norm_plus, double norm_minus, double delta,
                                   double alpha, double beta) {
  if (!(norm_plus > 2.0 - delta) || !(norm_minus > 2.0 - delta))
    throw std::domain_error("renorming_bounds: attestation ||x +- y|| > 2 - delta fails");
  double s = std::abs(alpha) + std::abs(beta);
  return {(1.0 - delta) * s, s};
}

// ---------------------------------------------------------------------------
// witness construction

Witness construct_witness(const OrliczFunction& f, const Measure& m) {
  Witness w;
  w.measure = m;
  CriticalConstants cc = f.critical_constants();
  if (m.kind == Measure::Kind::NonAtomic) {
    double phi_at_b = cc.b == kInf ? kInf : f(cc.b);
    if (!(xmul(phi_at_b, m.total) > 1.0) || !(cc.d < cc.b)) return w;  // theorem boundary
    double a = cc.b == kInf ? std::max(2.0 * cc.d, 1.0) : 0.5 * (cc.d + cc.b);
    int guard = 0;
    while (xmul(f(a), m.total) <= 1.0 && ++guard < 400)
      a = cc.b == kInf ? 2.0 * a : 0.5 * (a + cc.b);
    if (xmul(f(a), m.total) <= 1.0) return w;
    w.applicable = true;
    w.a = a;
    w.mass = 1.0 / f(a);
    return w;
  }
  // counting: d_phi < c_phi and phi(c_phi) = 1
  if (!(cc.d < cc.c) || std::abs(f(cc.c) - 1.0) > 1e-9) return w;
  for (int mm = 1; mm <= 64; ++mm) {
    double a = f.generalized_inverse(1.0 / mm);
    if (a > cc.d && a <= cc.c * (1.0 + 1e-12)) {
      w.applicable = true;
      w.a = std::min(a, cc.c);
      w.mass = mm;
      return w;
    }
  }
  return w;
}

// ---------------------------------------------------------------------------
// challenge: re-run the proof for one unit challenger

namespace {

// mass of {t in A : |y(t)| <= d} under the packed-from-0 layout convention
double overlap_mass(const StepFunction& y, double mass_a, double d) {
  double pos = 0.0, inside = 0.0;
  for (auto& lv : y.levels()) {
    double lo = pos, hi = pos + lv.mass;
    pos = hi;
    double cut = std::min(hi, mass_a) - std::min(lo, mass_a);
    if (cut > 0.0 && std::abs(lv.value) <= d) inside += cut;
  }
  inside += std::max(0.0, mass_a - pos);  // y vanishes past its support
  return inside;
}

// x +- y combined on the common refinement of the packed layout
StepFunction combine(const Witness& w, const StepFunction& y, double sign) {
  std::vector<double> cuts{0.0, w.mass};
  double pos = 0.0;
  for (auto& lv : y.levels()) {
    pos += lv.mass;
    cuts.push_back(pos);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  auto y_at = [&](double t) {
    double p = 0.0;
    for (auto& lv : y.levels()) {
      if (t < p + lv.mass) return lv.value;
      p += lv.mass;
    }
    return 0.0;
  };
  if (w.measure.kind == Measure::Kind::Counting) {
    size_t n = static_cast<size_t>(std::lround(cuts.back()));
    std::vector<double> vals(n, 0.0);
    for (size_t i = 0; i < n; ++i) {
      double t = static_cast<double>(i);
      double xv = t < w.mass ? w.a : 0.0;
      vals[i] = xv + sign * y_at(t + 0.5);
    }
    return StepFunction::counting(std::move(vals));
  }
  std::vector<Level> levels;
  for (size_t i = 0; i + 1 < cuts.size(); ++i) {
    double mid = 0.5 * (cuts[i] + cuts[i + 1]);
    double xv = mid < w.mass ? w.a : 0.0;
    levels.push_back({xv + sign * y_at(mid), cuts[i + 1] - cuts[i]});
  }
  return StepFunction::non_atomic(w.measure.total, std::move(levels));
}

}  // namespace

ChallengeRecord challenge_witness(const OrliczFunction& f, const Witness& w, const StepFunction& y) {
  if (!w.applicable) throw std::invalid_argument("challenge_witness: witness not applicable");
  double ny = luxemburg_norm(f, y);
  if (std::abs(ny - 1.0) > 1e-6)
    throw std::invalid_argument("challenge_witness: challenger must have unit Luxemburg norm");

  ChallengeRecord rec;
  CriticalConstants cc = f.critical_constants();
  double a = w.a, mass_a = w.mass;

  // condition (4.1): d in (a, b_phi) with mass{t in A : |y| <= d} positive;
  // prefer the smallest d covering at least 10% of A
  std::vector<double> cands;
  if (cc.b == kInf) {
    double base = std::floor(2.0 * a) + 1.0;
    if (base <= 2.0 * a) base += 1.0;
    for (auto& lv : y.levels()) cands.push_back(std::max(base, std::abs(lv.value)));
    for (int j = 0; j < 64; ++j) cands.push_back(base + j);
  } else {
    for (int j = 1; j <= 60; ++j) {
      double d = cc.b - (cc.b - a) / std::pow(2.0, j);
      if (d > a) cands.push_back(d);
    }
    if (f(cc.b) < kInf) cands.push_back(cc.b);  // closed-interval form of the lemma
  }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());
  double d = 0.0, inter = 0.0;
  bool found = false;
  for (double cand : cands) {
    if (!(cand > a)) continue;
    double om = overlap_mass(y, mass_a, cand);
    if (om >= 0.1 * mass_a) {
      d = cand;
      inter = om;
      found = true;
      break;
    }
  }
  if (!found) throw std::logic_error("challenge_witness: no admissible d; layout invariant broken");

  rec.d = d;
  rec.b_mass = inter;
  rec.gamma = f(a) * (mass_a - inter);
  rec.sigma = sigma_bound(f, a, d);
  rec.delta = (1.0 - rec.sigma) * (1.0 - rec.gamma) / 4.0;

  // largest epsilon <= 1 with phi((1+eps) a) mass_A <= 1 + delta and (1+eps) a < d
  double eps_max = std::min(1.0, (d / a - 1.0) * (1.0 - 1e-9));
  auto ok = [&](double e) { return f((1.0 + e) * a) * mass_a <= 1.0 + rec.delta; };
  double eps;
  if (ok(eps_max)) {
    eps = eps_max;
  } else {
    double lo = 0.0, hi = eps_max;
    for (int i = 0; i < 100; ++i) {
      double mid = 0.5 * (lo + hi);
      if (ok(mid))
        lo = mid;
      else
        hi = mid;
    }
    eps = lo;
  }
  rec.epsilon = eps;
  if (eps < 1e-12) {
    rec.degenerate = true;
    rec.certified_bound = 2.0;  // vacuous
  } else {
    rec.certified_bound = 2.0 - eps / (1.0 + eps);
  }

  double plus = luxemburg_norm(f, combine(w, y, +1.0));
  double minus = luxemburg_norm(f, combine(w, y, -1.0));
  rec.observed_min = std::min(plus, minus);
  if (rec.observed_min > rec.certified_bound + 1e-9)
    throw std::logic_error("challenge_witness: certified bound violated");
  return rec;
}

// ---------------------------------------------------------------------------
// slices

double vector_luxemburg_norm(const OrliczFunction& f, const std::vector<double>& v) {
  return luxemburg_norm(f, StepFunction::counting(v));
}

double vector_dual_norm(const OrliczFunction& /*f*/, const OrliczFunction& conj,
                        const std::vector<double>& v) {
  return amemiya_norm(conj, StepFunction::counting(v)).value;
}

namespace {

struct SliceContext {
  const OrliczFunction& f;
  const SliceSpec& spec;
  OrliczFunction conj;

  explicit SliceContext(const OrliczFunction& f_, const SliceSpec& s)
      : f(f_), spec(s), conj(conjugate(f_).conjugate) {
    if (s.functional.size() != s.dimension) throw std::invalid_argument("slice: dimension mismatch");
    if (!(s.epsilon > 0.0) || !(s.epsilon < 1.0)) throw std::invalid_argument("slice: epsilon in (0,1)");
    double fn = s.side == SliceSpec::Side::SliceOfBall ? vector_dual_norm(f, conj, s.functional)
                                                       : vector_luxemburg_norm(f, s.functional);
    if (std::abs(fn - 1.0) > 1e-6)
      throw std::invalid_argument("slice: functional must have unit (dual) norm");
  }

  double point_norm(const std::vector<double>& p) const {
    return spec.side == SliceSpec::Side::SliceOfBall ? vector_luxemburg_norm(f, p)
                                                     : vector_dual_norm(f, conj, p);
  }
  bool member(const std::vector<double>& p) const {
    return point_norm(p) <= 1.0 + 1e-12 && dot(spec.functional, p) > 1.0 - spec.epsilon;
  }
};

}  // namespace

bool slice_membership(const OrliczFunction& f, const SliceSpec& s, const std::vector<double>& point) {
  SliceContext ctx(f, s);
  if (point.size() != s.dimension) throw std::invalid_argument("slice: dimension mismatch");
  return ctx.member(point);
}

DiameterEstimate slice_diameter_lower_bound(const OrliczFunction& f, const SliceSpec& s,
                                            size_t budget, uint64_t seed) {
  if (s.dimension > 64) throw std::invalid_argument("slice sampler: dimension capped at 64");
  SliceContext ctx(f, s);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  size_t n = s.dimension;
  DiameterEstimate est;

  // a point deep inside the slice: ascend the pairing from the functional itself
  std::vector<double> face = s.functional;
  {
    double nm = ctx.point_norm(face);
    for (auto& c : face) c /= nm;
    double step = 0.25;
    for (int it = 0; it < 200; ++it) {
      bool moved = false;
      for (size_t i = 0; i < n; ++i) {
        for (double sg : {1.0, -1.0}) {
          std::vector<double> cand = face;
          cand[i] += sg * step;
          double cn = ctx.point_norm(cand);
          if (cn > 1.0) {
            for (auto& c : cand) c /= cn * (1.0 + 1e-12);
          }
          if (dot(s.functional, cand) > dot(s.functional, face)) {
            face = cand;
            moved = true;
          }
        }
      }
      if (!moved) step *= 0.5;
      if (step < 1e-10) break;
    }
  }

  auto sample = [&]() -> std::vector<double> {
    std::vector<double> z(n);
    for (auto& c : z) c = gauss(rng);
    double nm = ctx.point_norm(z);
    if (nm <= 0.0) return {};
    for (auto& c : z) c /= nm;
    if (dot(s.functional, z) < 0.0)
      for (auto& c : z) c = -c;
    // blend toward the face point until the pairing constraint admits it
    for (double t : {0.0, 0.25, 0.5, 0.75, 0.9}) {
      std::vector<double> cand(n);
      for (size_t i = 0; i < n; ++i) cand[i] = (1.0 - t) * z[i] + t * face[i];
      double cn = ctx.point_norm(cand);
      if (cn > 0.0)
        for (auto& c : cand) c /= cn;
      if (ctx.member(cand)) return cand;
    }
    return {};
  };

  // reflection across the functional's support: Orlicz norms only see |coords|
  // and the pairing ignores the flipped entries, so members map to members
  auto mirror = [&](const std::vector<double>& p) {
    std::vector<double> m = p;
    for (size_t i = 0; i < n; ++i)
      if (s.functional[i] == 0.0) m[i] = -m[i];
    return m;
  };

  size_t restarts = std::max<size_t>(1, budget / 1000);
  size_t used = 0;
  bool any = false;
  std::vector<double> best_a, best_b;
  double best = 0.0;
  for (size_t r = 0; r < restarts; ++r) {
    std::vector<double> p, q;
    for (int tries = 0; tries < 64 && p.empty(); ++tries, ++used) p = sample();
    for (int tries = 0; tries < 64 && q.empty(); ++tries, ++used) q = sample();
    if (p.empty() || q.empty()) continue;
    any = true;
    auto dist = [&](const std::vector<double>& u, const std::vector<double>& v) {
      std::vector<double> diff(n);
      for (size_t i = 0; i < n; ++i) diff[i] = u[i] - v[i];
      return ctx.point_norm(diff);
    };
    // seed with the best of (p, q) and the mirrored pairings
    double cur = dist(p, q);
    for (auto* pt : {&p, &q}) {
      std::vector<double> m = mirror(*pt);
      ++used;
      if (ctx.member(m)) {
        double dm = dist(*pt, m);
        if (dm > cur) {
          cur = dm;
          if (pt == &p)
            q = m;
          else
            p = m;
        }
      }
    }
    double step = 0.05;
    for (int it = 0; it < 200; ++it) {
      bool improved = false;
      for (auto* pt : {&p, &q}) {
        for (size_t i = 0; i < n; ++i) {
          for (double sg : {1.0, -1.0}) {
            std::vector<double> cand = *pt;
            cand[i] += sg * step;
            if (!ctx.member(cand)) continue;
            double nd = pt == &p ? dist(cand, q) : dist(p, cand);
            ++used;
            if (nd > cur) {
              *pt = cand;
              cur = nd;
              improved = true;
            }
          }
        }
      }
      if (!improved) {
        step *= 0.5;
        if (step < 1e-6) break;
      }
    }
    if (cur > best) {
      best = cur;
      best_a = p;
      best_b = q;
    }
  }
  est.samples_used = used;
  if (!any) {
    est.empty_slice = true;
    return est;
  }
  est.lower_bound = best;
  est.best_a = std::move(best_a);
  est.best_b = std::move(best_b);
  return est;
}

double uniformly_non_l12_gap(const OrliczFunction& f, const std::vector<double>& x, size_t n,
                             size_t budget, uint64_t seed) {
  if (x.size() != n) throw std::invalid_argument("dimension mismatch");
  if (std::abs(vector_luxemburg_norm(f, x) - 1.0) > 1e-6)
    throw std::invalid_argument("uniformly_non_l12_gap: x must have unit norm");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);

  auto score = [&](const std::vector<double>& y) {
    std::vector<double> plus(n), minus(n);
    for (size_t i = 0; i < n; ++i) {
      plus[i] = x[i] + y[i];
      minus[i] = x[i] - y[i];
    }
    return std::min(vector_luxemburg_norm(f, plus), vector_luxemburg_norm(f, minus));
  };

  double sup = 0.0;
  size_t restarts = std::max<size_t>(1, budget / 1000);
  for (size_t r = 0; r < restarts; ++r) {
    std::vector<double> y(n);
    for (auto& c : y) c = gauss(rng);
    double nm = vector_luxemburg_norm(f, y);
    if (nm <= 0.0) continue;
    for (auto& c : y) c /= nm;
    double cur = score(y);
    double step = 0.1;
    for (int it = 0; it < 160; ++it) {
      bool improved = false;
      for (size_t i = 0; i < n; ++i) {
        for (double sg : {1.0, -1.0}) {
          std::vector<double> cand = y;
          cand[i] += sg * step;
          double cn = vector_luxemburg_norm(f, cand);
          if (cn <= 0.0) continue;
          for (auto& c : cand) c /= cn;
          double sc = score(cand);
          if (sc > cur) {
            y = cand;
            cur = sc;
            improved = true;
          }
        }
      }
      if (!improved) {
        step *= 0.5;
        if (step < 1e-7) break;
      }
    }
    sup = std::max(sup, cur);
  }
  return std::max(0.0, 2.0 - sup);
}

}  // namespace orlicz
