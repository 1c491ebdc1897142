#include "orlicz/verify.hpp"

#include <cmath>
#include <stdexcept>

namespace orlicz {

namespace {

struct CatalogEntry {
  std::string name;
  OrliczFunction f;
};

std::vector<CatalogEntry> norm_catalog() {
  return {{"power_1.5", OrliczFunction::power(1.5)},
          {"power_2", OrliczFunction::power(2.0)},
          {"power_4", OrliczFunction::power(4.0)},
          {"exp_minus_one", OrliczFunction::exp_minus_one()},
          {"u_log_u", OrliczFunction::u_log_u()}};
}

void push(SuiteResult& res, CaseRecord rec) {
  ++res.run;
  if (rec.passed) {
    ++res.passed;
    rec.inputs = json();  // replay inputs only kept for failures
  } else {
    ++res.failed;
  }
  res.cases.push_back(std::move(rec));
}

}  // namespace

StepFunction random_step_function(std::mt19937_64& rng, const Measure& m, double max_value,
                                  int max_levels) {
  std::uniform_int_distribution<int> nl(1, max_levels);
  std::uniform_real_distribution<double> val(0.05 * max_value, max_value);
  std::uniform_real_distribution<double> mass(0.05, 2.0);
  std::uniform_int_distribution<int> sign(0, 1);
  int n = nl(rng);
  if (m.kind == Measure::Kind::Counting) {
    std::vector<double> vals(n);
    for (auto& v : vals) v = (sign(rng) ? 1.0 : -1.0) * val(rng);
    return StepFunction::counting(std::move(vals));
  }
  std::vector<Level> levels(n);
  double budget = m.total == kInf ? kInf : m.total;
  double used = 0.0;
  for (auto& lv : levels) {
    double mm = mass(rng);
    if (budget < kInf) mm = std::min(mm, 0.9 * (budget - used) / n);
    if (mm <= 0.0) mm = 1e-3;
    used += mm;
    lv = {(sign(rng) ? 1.0 : -1.0) * val(rng), mm};
  }
  return StepFunction::non_atomic(m.total, std::move(levels));
}

StepFunction random_unit_challenger(const OrliczFunction& f, std::mt19937_64& rng,
                                    const Measure& m, double max_value) {
  for (int tries = 0; tries < 64; ++tries) {
    StepFunction y = random_step_function(rng, m, max_value);
    double n = luxemburg_norm(f, y);
    if (n > 1e-8 && n < kInf) {
      StepFunction u = y.scaled(1.0 / n);
      // rescale once more: scaling error compounds through the bisection
      double n2 = luxemburg_norm(f, u);
      if (n2 > 0.0) u = u.scaled(1.0 / n2);
      if (std::abs(luxemburg_norm(f, u) - 1.0) <= 1e-8) return u;
    }
  }
  throw std::runtime_error("random_unit_challenger: could not normalize a sample");
}

namespace {

SuiteResult suite_norms(uint64_t seed, size_t budget) {
  SuiteResult res;
  res.suite = "norms";
  size_t per_family = budget ? budget : 1000;
  std::mt19937_64 rng(seed);
  Measure m = Measure::non_atomic(kInf);
  for (auto& entry : norm_catalog()) {
    for (size_t i = 0; i < per_family; ++i) {
      StepFunction x = random_step_function(rng, m, 3.0);
      double lux = luxemburg_norm(entry.f, x);
      double am = amemiya_norm(entry.f, x).value;
      CaseRecord rec;
      rec.invariant = "norm-sandwich";
      rec.id = entry.name + "/" + std::to_string(i);
      double s1 = am - lux;                      // >= 0
      double s2 = 2.0 * lux + 1e-8 - am;         // >= 0
      rec.slack = std::min(s1 + 1e-9, s2);
      rec.passed = s1 >= -1e-9 && s2 >= 0.0;
      rec.inputs = {{"function", emit_function(entry.f)}, {"x", emit_step_function(x)}};
      push(res, std::move(rec));

      if (i % 10 == 0) {
        double c = 0.25 + 3.0 * (i % 7) / 7.0;
        double hom = std::abs(luxemburg_norm(entry.f, x.scaled(c)) - c * lux);
        CaseRecord h;
        h.invariant = "norm-homogeneity";
        h.id = entry.name + "/c/" + std::to_string(i);
        h.slack = 1e-10 * std::max(1.0, c * lux) - hom;
        h.passed = h.slack >= -1e-12;
        h.inputs = {{"function", emit_function(entry.f)}, {"x", emit_step_function(x)}, {"c", c}};
        push(res, std::move(h));
      }
    }
    // fundamental function vs direct indicator norm
    for (int k = -3; k <= 3; ++k) {
      double t = std::pow(10.0, k);
      double direct = luxemburg_norm(entry.f, StepFunction::non_atomic(kInf, {{1.0, t}}));
      double formula = fundamental_function(entry.f, t);
      CaseRecord rec;
      rec.invariant = "fundamental-function";
      rec.id = entry.name + "/t=1e" + std::to_string(k);
      rec.slack = 1e-9 - std::abs(direct - formula) / std::max(1e-300, formula);
      rec.passed = rec.slack >= 0.0;
      rec.inputs = {{"function", emit_function(entry.f)}, {"t", t}};
      push(res, std::move(rec));
    }
  }
  return res;
}

SuiteResult suite_conjugacy(uint64_t seed, size_t budget) {
  SuiteResult res;
  res.suite = "conjugacy";
  size_t pairs = budget ? budget : 2000;
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 4.0);
  for (auto& entry : norm_catalog()) {
    ConjugatePair pair = conjugate(entry.f);
    double worst = kInf;
    for (size_t i = 0; i < pairs; ++i) {
      double u = unif(rng), v = unif(rng);
      if (pair.conjugate(v) == kInf) continue;
      worst = std::min(worst, young_gap(pair, u, v));
    }
    CaseRecord rec;
    rec.invariant = "young-nonnegative";
    rec.id = entry.name;
    rec.slack = worst + 1e-9;
    rec.passed = rec.slack >= 0.0;
    rec.inputs = {{"function", emit_function(entry.f)}};
    push(res, std::move(rec));
  }
  for (auto& entry : {CatalogEntry{"power_2", OrliczFunction::power(2.0)},
                      CatalogEntry{"power_4", OrliczFunction::power(4.0)},
                      CatalogEntry{"exp_minus_one", OrliczFunction::exp_minus_one()},
                      CatalogEntry{"u_log_u", OrliczFunction::u_log_u()}}) {
    std::vector<double> grid;  // below the first pass's terminal slope
    for (int i = 0; i < 64; ++i) grid.push_back(std::pow(10.0, -2.0 + 3.0 * i / 63.0));
    BiconjugateReport rep = biconjugate_check(entry.f, grid);
    CaseRecord rec;
    rec.invariant = "biconjugacy";
    rec.id = entry.name;
    rec.slack = 1e-5 - rep.max_rel_error;
    rec.passed = rec.slack >= 0.0;
    rec.inputs = {{"function", emit_function(entry.f)}, {"argmax_u", rep.argmax_u}};
    push(res, std::move(rec));
  }
  for (auto& entry : norm_catalog()) {
    FinitenessDuality fd = finiteness_duality(entry.f);
    CaseRecord rec;
    rec.invariant = "finiteness-duality";
    rec.id = entry.name;
    rec.passed = fd.consistent;
    rec.slack = fd.consistent ? 1.0 : -1.0;
    rec.inputs = {{"function", emit_function(entry.f)}};
    push(res, std::move(rec));
  }
  return res;
}

SuiteResult suite_witness(uint64_t seed, size_t budget) {
  SuiteResult res;
  res.suite = "witness";
  size_t challengers = budget ? budget : 1000;
  std::vector<CatalogEntry> fams = {{"power_2", OrliczFunction::power(2.0)},
                                    {"power_4", OrliczFunction::power(4.0)},
                                    {"exp_minus_one", OrliczFunction::exp_minus_one()}};
  std::vector<std::pair<std::string, Measure>> measures = {
      {"nonatomic_inf", Measure::non_atomic(kInf)}, {"counting", Measure::counting()}};
  std::mt19937_64 rng(seed);
  for (auto& entry : fams) {
    for (auto& [mname, m] : measures) {
      Witness w = construct_witness(entry.f, m);
      if (!w.applicable) {
        CaseRecord rec;
        rec.invariant = "witness-applicable";
        rec.id = entry.name + "/" + mname;
        rec.passed = false;
        rec.slack = -1.0;
        rec.inputs = {{"function", emit_function(entry.f)}, {"measure", emit_measure(m)}};
        push(res, std::move(rec));
        continue;
      }
      double worst = kInf;
      size_t violations = 0;
      for (size_t i = 0; i < challengers; ++i) {
        StepFunction y = random_unit_challenger(entry.f, rng, m, 3.0 * std::max(1.0, w.a));
        ChallengeRecord cr = challenge_witness(entry.f, w, y);
        double s = cr.certified_bound - cr.observed_min;
        worst = std::min(worst, s);
        if (s < -1e-9 || (!cr.degenerate && cr.certified_bound >= 2.0)) ++violations;
      }
      CaseRecord rec;
      rec.invariant = "witness-soundness";
      rec.id = entry.name + "/" + mname;
      rec.slack = worst;
      rec.passed = violations == 0;
      rec.inputs = {{"function", emit_function(entry.f)},
                    {"measure", emit_measure(m)},
                    {"challengers", challengers}};
      push(res, std::move(rec));
    }
  }
  return res;
}

SuiteResult suite_slices(uint64_t seed, size_t budget) {
  SuiteResult res;
  res.suite = "slices";
  size_t b = budget ? budget : 20000;

  {
    SliceSpec s;
    s.dimension = 4;
    s.functional = {1, 0, 0, 0};
    s.epsilon = 0.05;
    s.side = SliceSpec::Side::WeakStarSlice;
    OrliczFunction l1 = OrliczFunction::linear(1.0);
    DiameterEstimate est = slice_diameter_lower_bound(l1, s, b, seed);
    CaseRecord rec;
    rec.invariant = "slice-l1-weakstar-diameter";
    rec.id = "l1_4/e1/eps=0.05";
    rec.slack = est.lower_bound - 1.99;
    rec.passed = rec.slack >= 0.0;
    rec.inputs = {{"budget", b}, {"seed", seed}};
    push(res, std::move(rec));

    DiameterEstimate est2 = slice_diameter_lower_bound(l1, s, b, seed);
    CaseRecord det;
    det.invariant = "slice-determinism";
    det.id = "l1_4/repeat";
    det.passed = est2.lower_bound == est.lower_bound && est2.best_a == est.best_a &&
                 est2.best_b == est.best_b;
    det.slack = det.passed ? 0.0 : -1.0;
    det.inputs = {{"budget", b}, {"seed", seed}};
    push(res, std::move(det));
  }
  {
    SliceSpec s;
    s.dimension = 4;
    s.functional = {1, 0, 0, 0};
    s.epsilon = 0.02;
    s.side = SliceSpec::Side::SliceOfBall;
    OrliczFunction l2 = OrliczFunction::power(2.0);
    DiameterEstimate est = slice_diameter_lower_bound(l2, s, b, seed);
    double cap = 2.0 * std::sqrt(2.0 * s.epsilon - s.epsilon * s.epsilon);
    CaseRecord rec;
    rec.invariant = "slice-l2-cap-diameter";
    rec.id = "l2_4/e1/eps=0.02";
    rec.passed = est.lower_bound >= 0.35 && est.lower_bound <= cap + 1e-6;
    rec.slack = std::min(est.lower_bound - 0.35, cap + 1e-6 - est.lower_bound);
    rec.inputs = {{"budget", b}, {"seed", seed}, {"cap_diameter", cap}};
    push(res, std::move(rec));
  }
  return res;
}

}  // namespace

SuiteResult run_suite(const std::string& suite, uint64_t seed, size_t budget) {
  if (suite == "norms") return suite_norms(seed, budget);
  if (suite == "conjugacy") return suite_conjugacy(seed, budget);
  if (suite == "witness") return suite_witness(seed, budget);
  if (suite == "slices") return suite_slices(seed, budget);
  throw std::invalid_argument("unknown suite '" + suite + "'");
}

std::vector<SuiteResult> run_verify(const std::string& suite, uint64_t seed, size_t budget) {
  if (suite == "all") {
    std::vector<SuiteResult> all;
    for (const char* s : {"norms", "conjugacy", "witness", "slices"})
      all.push_back(run_suite(s, seed, budget));
    return all;
  }
  return {run_suite(suite, seed, budget)};
}

}  // namespace orlicz
