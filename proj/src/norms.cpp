#include "orlicz/norms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace orlicz {

// ---------------------------------------------------------------------------
// StepFunction

StepFunction StepFunction::non_atomic(double total_mass, std::vector<Level> levels) {
  if (!(total_mass > 0.0)) throw std::invalid_argument("total mass must be positive");
  double used = 0.0;
  for (auto& lv : levels) {
    if (!(lv.mass > 0.0) || !std::isfinite(lv.mass) || !std::isfinite(lv.value))
      throw std::invalid_argument("levels need finite values and positive masses");
    used += lv.mass;
  }
  if (used > total_mass * (1.0 + 1e-12))
    throw std::invalid_argument("level masses exceed the total mass");
  StepFunction x;
  x.measure_ = Measure::non_atomic(total_mass);
  for (auto& lv : levels)
    if (lv.value != 0.0) x.levels_.push_back(lv);
  std::sort(x.levels_.begin(), x.levels_.end(), [](const Level& a, const Level& b) {
    if (std::abs(a.value) != std::abs(b.value)) return std::abs(a.value) > std::abs(b.value);
    return a.value > b.value;
  });
  return x;
}

StepFunction StepFunction::counting(std::vector<double> values) {
  StepFunction x;
  x.measure_ = Measure::counting();
  for (double v : values) {
    if (!std::isfinite(v)) throw std::invalid_argument("values must be finite");
    if (v != 0.0) x.levels_.push_back({v, 1.0});
  }
  std::sort(x.levels_.begin(), x.levels_.end(), [](const Level& a, const Level& b) {
    if (std::abs(a.value) != std::abs(b.value)) return std::abs(a.value) > std::abs(b.value);
    return a.value > b.value;
  });
  return x;
}

StepFunction StepFunction::zero(Measure m) {
  StepFunction x;
  x.measure_ = m;
  return x;
}

double StepFunction::support_mass() const {
  double s = 0;
  for (auto& lv : levels_) s += lv.mass;
  return s;
}

double StepFunction::l1_norm() const {
  double s = 0;
  for (auto& lv : levels_) s += std::abs(lv.value) * lv.mass;
  return s;
}

StepFunction StepFunction::scaled(double c) const {
  StepFunction x = *this;
  if (c == 0.0) {
    x.levels_.clear();
    return x;
  }
  for (auto& lv : x.levels_) lv.value *= c;
  return x;
}

// ---------------------------------------------------------------------------
// modular and norms

double modular(const OrliczFunction& f, const StepFunction& x, double lambda) {
  double s = 0.0;
  for (auto& lv : x.levels()) {
    double term = f(lambda * std::abs(lv.value));
    if (term == kInf) return kInf;
    s += term * lv.mass;
  }
  return s;
}

double luxemburg_norm(const OrliczFunction& f, const StepFunction& x) {
  if (x.is_zero()) return 0.0;
  auto feasible = [&](double eps) { return modular(f, x, 1.0 / eps) <= 1.0; };
  double hi = std::max(x.max_abs(), 1.0);
  int guard = 0;
  while (!feasible(hi)) {
    hi *= 2.0;
    if (++guard > 2000) throw std::domain_error("luxemburg_norm: function not in the space");
  }
  double lo = hi;
  while (feasible(lo) && lo > 1e-300) lo *= 0.5;
  for (int i = 0; i < 300 && hi - lo > 1e-13 * hi; ++i) {
    double mid = 0.5 * (lo + hi);
    if (feasible(mid))
      hi = mid;
    else
      lo = mid;
  }
  // infimum of the feasible set: left endpoint of the terminal bracket
  return lo;
}

AmemiyaResult amemiya_norm(const OrliczFunction& f, const StepFunction& x) {
  AmemiyaResult res;
  if (x.is_zero()) return res;
  double b = f.domain_bound();
  double maxv = x.max_abs();
  double k_cap = b == kInf ? 1.099511627776e12 /* 2^40 */ : b / maxv;
  auto h = [&](double k) {
    double m = modular(f, x, k);
    return m == kInf ? kInf : (1.0 + m) / k;
  };
  // h can be infinite on the right part of the bracket (capped phi, or
  // evaluation overflow for fast-growing phi): bisect to the finite boundary
  if (h(k_cap) == kInf) {
    double k_fin = 1.0 / maxv;  // modular = phi(values <= 1) * masses, finite
    while (k_fin > 1e-300 && h(k_fin) == kInf) k_fin *= 0.5;
    double bad = k_cap;
    for (int i = 0; i < 200; ++i) {
      double mid = std::sqrt(k_fin * bad);
      if (h(mid) == kInf)
        bad = mid;
      else
        k_fin = mid;
    }
    k_cap = k_fin;
  }
  double k_lo = std::min(k_cap * 0.5, 1e-10 * std::max(f.critical_constants().c, 1e-30) / maxv);
  double la = std::log(k_lo), lb = std::log(k_cap);
  const double gr = 0.6180339887498949;
  double x1 = lb - gr * (lb - la), x2 = la + gr * (lb - la);
  double f1 = h(std::exp(x1)), f2 = h(std::exp(x2));
  for (int i = 0; i < 260 && lb - la > 1e-14; ++i) {
    if (f1 > f2) {
      la = x1;
      x1 = x2;
      f1 = f2;
      x2 = la + gr * (lb - la);
      f2 = h(std::exp(x2));
    } else {
      lb = x2;
      x2 = x1;
      f2 = f1;
      x1 = lb - gr * (lb - la);
      f1 = h(std::exp(x1));
    }
  }
  res.k_opt = std::exp(0.5 * (la + lb));
  res.value = h(res.k_opt);
  double boundary = h(k_cap);
  if (boundary <= res.value) {
    res.k_opt = k_cap;
    res.value = boundary;
    if (b == kInf) res.inf_not_attained = true;  // infimum approached as k -> inf
  }
  return res;
}

double orlicz_norm_dual(const OrliczFunction& f, const StepFunction& x, int budget) {
  return orlicz_norm_dual(f, conjugate(f).conjugate, x, budget);
}

double orlicz_norm_dual(const OrliczFunction& /*f*/, const OrliczFunction& conj,
                        const StepFunction& x, int budget) {
  if (x.is_zero()) return 0.0;
  const auto& lvls = x.levels();
  size_t n = lvls.size();
  // the optimal g is constant on level sets: maximize sum |v_i| g_i m_i
  // subject to sum phi_*(g_i) m_i <= 1 via a scalar multiplier search
  std::vector<double> cap(n);
  for (size_t i = 0; i < n; ++i) {
    cap[i] = conj.generalized_inverse(1.0 / lvls[i].mass);
    if (cap[i] == kInf) cap[i] = 1e30;
    if (cap[i] > 0.0 && conj(cap[i]) * lvls[i].mass > 1.0 + 1e-9) {
      double lo = 0.0, hi = cap[i];
      for (int it = 0; it < 120; ++it) {
        double mid = 0.5 * (lo + hi);
        if (conj(mid) * lvls[i].mass <= 1.0)
          lo = mid;
        else
          hi = mid;
      }
      cap[i] = lo;
    }
  }
  const double gr = 0.6180339887498949;
  auto best_g = [&](size_t i, double lam) {
    double v = std::abs(lvls[i].value);
    auto obj = [&](double g) { return v * g - lam * conj(g); };
    double a = 0.0, b2 = cap[i];
    double x1 = b2 - gr * (b2 - a), x2 = a + gr * (b2 - a);
    double f1 = obj(x1), f2 = obj(x2);
    for (int it = 0; it < 120 && b2 - a > 1e-14 * std::max(1.0, cap[i]); ++it) {
      if (f1 < f2) {
        a = x1;
        x1 = x2;
        f1 = f2;
        x2 = a + gr * (b2 - a);
        f2 = obj(x2);
      } else {
        b2 = x2;
        x2 = x1;
        f2 = f1;
        x1 = b2 - gr * (b2 - a);
        f1 = obj(x1);
      }
    }
    double mid = 0.5 * (a + b2);
    if (obj(cap[i]) >= obj(mid)) return cap[i];
    return mid;
  };
  auto dual_modular = [&](double lam, std::vector<double>& g) {
    double s = 0.0;
    for (size_t i = 0; i < n; ++i) {
      g[i] = best_g(i, lam);
      double t = conj(g[i]);
      s += (t == kInf ? 1e30 : t) * lvls[i].mass;
    }
    return s;
  };
  std::vector<double> g(n, 0.0);
  double lam_lo = 1e-12, lam_hi = 1.0;
  if (dual_modular(lam_lo, g) > 1.0) {
    int guard = 0;
    while (dual_modular(lam_hi, g) > 1.0 && ++guard < 200) lam_hi *= 2.0;
    for (int i = 0; i < std::max(budget, 60); ++i) {
      double mid = 0.5 * (lam_lo + lam_hi);
      if (dual_modular(mid, g) > 1.0)
        lam_lo = mid;
      else
        lam_hi = mid;
    }
    dual_modular(lam_hi, g);  // feasible side
  }
  // radial polish: scale g up to the boundary of the dual modular ball
  auto mod_of = [&](double s) {
    double t = 0.0;
    for (size_t i = 0; i < n; ++i) {
      double term = conj(s * g[i]);
      if (term == kInf) return kInf;
      t += term * lvls[i].mass;
    }
    return t;
  };
  double s_lo = 1.0, s_hi = 1.0;
  if (mod_of(1.0) < 1.0) {
    int guard = 0;
    while (mod_of(s_hi * 2.0) <= 1.0 && ++guard < 100) s_hi *= 2.0;
    s_hi *= 2.0;
    for (int i = 0; i < 100; ++i) {
      double mid = 0.5 * (s_lo + s_hi);
      if (mod_of(mid) <= 1.0)
        s_lo = mid;
      else
        s_hi = mid;
    }
  }
  double payoff = 0.0;
  for (size_t i = 0; i < n; ++i) payoff += std::abs(lvls[i].value) * s_lo * g[i] * lvls[i].mass;
  return payoff;
}

double fundamental_function(const OrliczFunction& f, double t) {
  if (!(t > 0.0)) throw std::domain_error("fundamental_function: t must be positive");
  double inv = f.generalized_inverse(1.0 / t);
  return inv == 0.0 ? kInf : (inv == kInf ? 0.0 : 1.0 / inv);
}

NormReport norm_report(const OrliczFunction& f, const StepFunction& x) {
  NormReport rep;
  rep.luxemburg = luxemburg_norm(f, x);
  AmemiyaResult am = amemiya_norm(f, x);
  rep.amemiya = am.value;
  rep.inf_not_attained = am.inf_not_attained;
  rep.orlicz_sup = orlicz_norm_dual(f, x);
  rep.duality_gap = std::abs(rep.amemiya - rep.orlicz_sup);
  return rep;
}

L1Equivalence l1_equivalence_constants(const OrliczFunction& f, const Measure& m) {
  if (m.kind != Measure::Kind::NonAtomic)
    throw std::domain_error("l1_equivalence_constants: non-atomic measure required");
  if (f.domain_bound() < kInf)
    throw std::domain_error("l1_equivalence_constants: phi must be finite");
  L1Equivalence r;
  if (f.n_function_class().at_infinity) return r;  // not applicable
  r.applicable = true;
  // asymptotic slope K with phi(u) <= K u for all u
  switch (f.family()) {
    case Family::Linear: r.K = f.param_k(); break;
    case Family::PiecewiseLinear: r.K = f.tail().slope; break;
    case Family::Sampled: r.K = std::max(f.tail().slope, f(1e12) / 1e12); break;
    default: r.K = f(1e12) / 1e12 * (1.0 + 1e-9); break;
  }
  // smallest u0 with phi(u)/u >= K/2 beyond it (phi(u)/u is nondecreasing)
  double target = r.K / 2.0;
  if (f(1.0) >= target) {
    r.u0 = 1.0;
  } else {
    double hi = 2.0;
    int guard = 0;
    while (f(hi) / hi < target && ++guard < 200) hi *= 2.0;
    double lo = hi / 2.0;
    for (int i = 0; i < 200 && hi - lo > 1e-13 * hi; ++i) {
      double mid = 0.5 * (lo + hi);
      if (f(mid) / mid >= target)
        hi = mid;
      else
        lo = mid;
    }
    r.u0 = hi;
  }
  r.M = f(r.u0) / r.u0;
  r.A_mass = std::min(m.total, 1.0 / (r.M * r.u0));
  return r;
}

}  // namespace orlicz
