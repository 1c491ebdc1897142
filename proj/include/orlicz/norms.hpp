#pragma once

#include "orlicz/conjugate.hpp"
#include "orlicz/step_function.hpp"

namespace orlicz {

// I_phi(lambda x) = sum phi(lambda |value_i|) mass_i, extended-real
double modular(const OrliczFunction& f, const StepFunction& x, double lambda = 1.0);

// inf{eps > 0 : I_phi(x / eps) <= 1}
double luxemburg_norm(const OrliczFunction& f, const StepFunction& x);

struct AmemiyaResult {
  double value = 0;
  double k_opt = 0;
  bool inf_not_attained = false;  // minimizer ran to the bracket ceiling
};
AmemiyaResult amemiya_norm(const OrliczFunction& f, const StepFunction& x);

// sup{ sum x g : I_{phi_*}(g) <= 1 }, solved over level-constant g; a lower
// bound converging to the Amemiya value.
double orlicz_norm_dual(const OrliczFunction& f, const StepFunction& x, int budget = 80);
double orlicz_norm_dual(const OrliczFunction& f, const OrliczFunction& conj, const StepFunction& x,
                        int budget = 80);

// ||chi_A||_phi for mu(A) = t over a non-atomic measure
double fundamental_function(const OrliczFunction& f, double t);

struct NormReport {
  double luxemburg = 0;
  double amemiya = 0;
  double orlicz_sup = 0;
  double duality_gap = 0;
  bool inf_not_attained = false;
};
NormReport norm_report(const OrliczFunction& f, const StepFunction& x);

struct L1Equivalence {
  bool applicable = false;
  double M = 0, K = 0, u0 = 0, A_mass = 0;
};
// Equivalence constants M ||x||_1 <= ||x||_phi <= K ||x||_1 on sets of mass
// <= A_mass, available exactly when phi is not an N-function at infinity.
L1Equivalence l1_equivalence_constants(const OrliczFunction& f, const Measure& m);

}  // namespace orlicz
