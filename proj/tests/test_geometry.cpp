#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "orlicz/geometry.hpp"
#include "orlicz/verify.hpp"

using namespace orlicz;

TEST_CASE("sigma bound: power families are exact") {
  CHECK(sigma_bound(OrliczFunction::power(2.0), 1.0, 5.0) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(sigma_bound(OrliczFunction::power(3.0), 1.0, 5.0) ==
        doctest::Approx(0.25).epsilon(1e-12));
  CHECK(sigma_bound(OrliczFunction::power(2.0), 0.01, 500.0) ==
        doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("sigma bound: piecewise ratio peaks at the right endpoint") {
  auto f = OrliczFunction::piecewise_linear({{0, 0}, {1, 0}, {2, 1}});
  // sup over [2,4] of 2(u/2-1)/(u-1) = 2/3 at u = 4
  CHECK(sigma_bound(f, 2.0, 4.0) == doctest::Approx(2.0 / 3.0).epsilon(1e-6));
}

TEST_CASE("sigma bound: preconditions") {
  auto f = OrliczFunction::piecewise_linear({{0, 0}, {1, 0}, {2, 1}});
  CHECK_THROWS_AS(sigma_bound(f, 0.5, 4.0), std::domain_error);  // touches the linear region
  CHECK_THROWS_AS(sigma_bound(OrliczFunction::linear(1.0), 1.0, 2.0), std::domain_error);
  auto capped = OrliczFunction::capped(OrliczFunction::power(2.0), 2.0);
  CHECK(sigma_bound(capped, 1.0, 2.0) == doctest::Approx(0.5).epsilon(1e-9));  // closed interval
  CHECK_THROWS_AS(sigma_bound(capped, 1.0, 2.5), std::domain_error);
}

TEST_CASE("sigma bound: below one on random admissible intervals") {
  std::mt19937_64 rng(41);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<OrliczFunction> fams = {OrliczFunction::power(1.5), OrliczFunction::power(2.0),
                                      OrliczFunction::power(4.0), OrliczFunction::exp_minus_one(),
                                      OrliczFunction::u_log_u(),
                                      OrliczFunction::piecewise_linear({{0, 0}, {1, 0}, {2, 1}})};
  for (auto& f : fams) {
    double d = f.critical_constants().d;
    for (int i = 0; i < 20; ++i) {
      double lo = d + 0.1 + 3.0 * unif(rng);
      double hi = lo + 0.1 + 5.0 * unif(rng);
      double s = sigma_bound(f, lo, hi);
      CHECK(s >= 0.0);  // zero is legitimate when phi vanishes at every midpoint
      CHECK(s < 1.0);
    }
  }
}

TEST_CASE("renorming bounds") {
  auto r = renorming_bounds(2.0, 2.0, 0.1, 1.0, 1.0);
  CHECK(r.lower == doctest::Approx(1.8));
  CHECK(r.upper == doctest::Approx(2.0));
  CHECK_THROWS_AS(renorming_bounds(1.8, 2.0, 0.1, 1.0, 1.0), std::domain_error);

  // l1^2 with x = e1, y = e2: ||2 e1 +- 3 e2||_1 = 5 in ((1-1e-6) 5, 5]
  auto l1 = OrliczFunction::linear(1.0);
  StepFunction plus = StepFunction::counting({2.0, 3.0});
  double norm = luxemburg_norm(l1, plus);
  auto iv = renorming_bounds(2.0, 2.0, 1e-6, 2.0, 3.0);
  CHECK(norm > iv.lower);
  CHECK(norm <= iv.upper + 1e-12);
}

TEST_CASE("renorming membership: random coefficients in l1") {
  // x = e1, y = e2 attest ||x +- y|| = 2 > 2 - delta for every delta
  auto l1 = OrliczFunction::linear(1.0);
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> coef(-5.0, 5.0);
  for (int i = 0; i < 1000; ++i) {
    double a = coef(rng), b = coef(rng);
    if (std::abs(a) + std::abs(b) < 1e-6) continue;
    auto iv = renorming_bounds(2.0, 2.0, 0.05, a, b);
    double norm = luxemburg_norm(l1, StepFunction::counting({a, b}));
    CHECK(norm > iv.lower);
    CHECK(norm <= iv.upper + 1e-10);
  }
}

TEST_CASE("witness construction") {
  auto w = construct_witness(OrliczFunction::power(2.0), Measure::non_atomic(kInf));
  REQUIRE(w.applicable);
  CHECK(w.a == doctest::Approx(1.0));
  CHECK(w.mass == doctest::Approx(1.0));
  CHECK(OrliczFunction::power(2.0)(w.a) * w.mass == doctest::Approx(1.0).epsilon(1e-9));

  auto wc = construct_witness(OrliczFunction::power(2.0), Measure::counting());
  REQUIRE(wc.applicable);
  CHECK(wc.a == doctest::Approx(1.0));
  CHECK(wc.mass == doctest::Approx(1.0));

  CHECK_FALSE(construct_witness(OrliczFunction::linear(1.0), Measure::non_atomic(kInf)).applicable);
}

TEST_CASE("witness: normalization and indicator norm across families") {
  for (auto& f : {OrliczFunction::power(2.0), OrliczFunction::power(4.0),
                  OrliczFunction::exp_minus_one(), OrliczFunction::u_log_u()}) {
    for (auto& m : {Measure::non_atomic(kInf), Measure::counting()}) {
      Witness w = construct_witness(f, m);
      REQUIRE(w.applicable);
      CHECK(f(w.a) * w.mass == doctest::Approx(1.0).epsilon(1e-9));
      StepFunction x = m.kind == Measure::Kind::Counting
                           ? StepFunction::counting(std::vector<double>(
                                 static_cast<size_t>(std::lround(w.mass)), w.a))
                           : StepFunction::non_atomic(m.total, {{w.a, w.mass}});
      CHECK(luxemburg_norm(f, x) == doctest::Approx(1.0).epsilon(1e-8));
    }
  }
}

TEST_CASE("challenge: hilbert examples over the counting measure") {
  auto f = OrliczFunction::power(2.0);
  Witness w = construct_witness(f, Measure::counting());
  REQUIRE(w.applicable);

  // y = (e1 + e2)/sqrt(2): the canonical packing overlaps A = {atom 0}, so the
  // minimum is attained at x - y with value sqrt((1 - s)^2 + s^2) = sqrt(2 - sqrt 2)
  double s = 1.0 / std::sqrt(2.0);
  auto rec = challenge_witness(f, w, StepFunction::counting({s, s}));
  CHECK(rec.observed_min == doctest::Approx(std::sqrt(2.0 - std::sqrt(2.0))).epsilon(1e-9));
  CHECK(rec.observed_min <= rec.certified_bound + 1e-9);
  CHECK(rec.certified_bound < 2.0);
  CHECK(rec.epsilon > 0.0);
  CHECK(rec.sigma == doctest::Approx(0.5).epsilon(1e-9));

  // y = e1 = x: min(2, 0) = 0
  auto rec2 = challenge_witness(f, w, StepFunction::counting({1.0}));
  CHECK(rec2.observed_min == doctest::Approx(0.0).epsilon(1e-12));

  CHECK_THROWS_AS(challenge_witness(f, w, StepFunction::counting({0.0, 0.5})),
                  std::invalid_argument);
}

TEST_CASE("challenge: certified bounds hold for random challengers") {
  std::mt19937_64 rng(43);
  for (auto& f : {OrliczFunction::power(2.0), OrliczFunction::power(4.0),
                  OrliczFunction::exp_minus_one()}) {
    for (auto& m : {Measure::non_atomic(kInf), Measure::counting()}) {
      Witness w = construct_witness(f, m);
      REQUIRE(w.applicable);
      for (int i = 0; i < 300; ++i) {
        StepFunction y = random_unit_challenger(f, rng, m, 3.0 * std::max(1.0, w.a));
        ChallengeRecord rec = challenge_witness(f, w, y);
        CHECK(rec.observed_min <= rec.certified_bound + 1e-9);
        if (!rec.degenerate) CHECK(rec.certified_bound < 2.0);
        CHECK(rec.sigma > 0.0);
        CHECK(rec.sigma < 1.0);
        CHECK(rec.gamma >= 0.0);
        CHECK(rec.gamma < 1.0);
        CHECK(rec.d > w.a);
      }
    }
  }
}

TEST_CASE("slice membership examples") {
  auto l1 = OrliczFunction::linear(1.0);
  SliceSpec s;
  s.dimension = 3;
  s.functional = {1.0, 0.0, 0.0};  // unit in l_inf = dual of l1
  s.epsilon = 0.1;
  s.side = SliceSpec::Side::SliceOfBall;
  CHECK(slice_membership(l1, s, {1.0, 0.0, 0.0}));
  CHECK_FALSE(slice_membership(l1, s, {0.85, 0.1, 0.0}));  // pairing 0.85 < 0.9

  auto l2 = OrliczFunction::power(2.0);
  SliceSpec ws;
  ws.dimension = 3;
  ws.functional = {1.0, 0.0, 0.0};
  ws.epsilon = 0.05;
  ws.side = SliceSpec::Side::WeakStarSlice;
  CHECK(slice_membership(l2, ws, {0.97, 0.24, 0.0}));  // ||.||_2 = 0.99925, pairing 0.97
}

TEST_CASE("slice diameter: l1 weak*-slice certifies nearly 2") {
  SliceSpec s;
  s.dimension = 4;
  s.functional = {1, 0, 0, 0};
  s.epsilon = 0.05;
  s.side = SliceSpec::Side::WeakStarSlice;
  auto est = slice_diameter_lower_bound(OrliczFunction::linear(1.0), s, 5000, 1);
  CHECK_FALSE(est.empty_slice);
  CHECK(est.lower_bound >= 1.99);
  CHECK(est.lower_bound <= 2.0 + 1e-9);
  // both endpoints are genuine members
  CHECK(slice_membership(OrliczFunction::linear(1.0), s, est.best_a));
  CHECK(slice_membership(OrliczFunction::linear(1.0), s, est.best_b));
}

TEST_CASE("slice diameter: l2 cap stays within the spherical-cap bound") {
  SliceSpec s;
  s.dimension = 4;
  s.functional = {1, 0, 0, 0};
  s.epsilon = 0.02;
  s.side = SliceSpec::Side::SliceOfBall;
  auto est = slice_diameter_lower_bound(OrliczFunction::power(2.0), s, 5000, 1);
  double cap = 2.0 * std::sqrt(2.0 * s.epsilon - s.epsilon * s.epsilon);
  CHECK(est.lower_bound >= 0.35);
  CHECK(est.lower_bound <= cap + 1e-6);
}

TEST_CASE("slice diameter: wide slice approaches the ball diameter") {
  SliceSpec s;
  s.dimension = 3;
  s.functional = {1, 0, 0};
  s.epsilon = 0.999;
  s.side = SliceSpec::Side::SliceOfBall;
  auto est = slice_diameter_lower_bound(OrliczFunction::power(2.0), s, 5000, 2);
  CHECK(est.lower_bound >= 1.9);
}

TEST_CASE("slice determinism: identical seeds reproduce results bit-for-bit") {
  SliceSpec s;
  s.dimension = 4;
  s.functional = {1, 0, 0, 0};
  s.epsilon = 0.05;
  s.side = SliceSpec::Side::WeakStarSlice;
  auto a = slice_diameter_lower_bound(OrliczFunction::linear(1.0), s, 3000, 99);
  auto b = slice_diameter_lower_bound(OrliczFunction::linear(1.0), s, 3000, 99);
  CHECK(a.lower_bound == b.lower_bound);
  CHECK(a.best_a == b.best_a);
  CHECK(a.best_b == b.best_b);
  CHECK(a.samples_used == b.samples_used);
}

TEST_CASE("uniformly non-l1^2 gap") {
  // l2^8, x = e1: the sup of min{||x+y||,||x-y||} is sqrt(2)
  std::vector<double> e1(8, 0.0);
  e1[0] = 1.0;
  double gap = uniformly_non_l12_gap(OrliczFunction::power(2.0), e1, 8, 20000, 5);
  CHECK(gap == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(0.02));

  // l1^8, x = e1: y = e2 attains min = 2, so the gap collapses
  double gap1 = uniformly_non_l12_gap(OrliczFunction::linear(1.0), e1, 8, 20000, 5);
  CHECK(gap1 <= 1e-9);
}

TEST_CASE("gap determinism") {
  std::vector<double> e1(4, 0.0);
  e1[0] = 1.0;
  double a = uniformly_non_l12_gap(OrliczFunction::power(2.0), e1, 4, 5000, 7);
  double b = uniformly_non_l12_gap(OrliczFunction::power(2.0), e1, 4, 5000, 7);
  CHECK(a == b);
}

TEST_CASE("cross-module: challenge bounds dominate the sampled gap") {
  // phi = u^4 over counting: witness x = e1-style indicator; the sampled sup of
  // min{||x+y||} can never exceed any per-challenger certified bound pipeline
  auto f = OrliczFunction::power(4.0);
  Witness w = construct_witness(f, Measure::counting());
  REQUIRE(w.applicable);
  size_t n = static_cast<size_t>(std::lround(w.mass)) + 4;
  std::vector<double> x(n, 0.0);
  for (size_t i = 0; i < static_cast<size_t>(std::lround(w.mass)); ++i) x[i] = w.a;
  double gap = uniformly_non_l12_gap(f, x, n, 20000, 9);
  CHECK(gap > 0.0);  // the witness is uniformly non-l1^2
}
