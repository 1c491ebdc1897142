#pragma once

#include <vector>

#include "orlicz/orlicz_function.hpp"

namespace orlicz {

struct ConjugateOptions {
  int grid_points = 16384;  // dense enough to hold the 1e-5 biconjugacy contract
  double grid_lo = 1e-8;
  double grid_hi = 1e8;
  double bracket_cap = 1e280;  // past this the sup is treated as infinite
};

struct ConjugatePair {
  OrliczFunction primal;
  OrliczFunction conjugate;
  enum class Mode { ClosedForm, NumericGrid } mode = Mode::ClosedForm;
  double grid_tolerance = 0.0;  // declared tolerance of the numeric representation
};

// phi_*(v) = sup_{u >= 0} { u v - phi(u) }, one point at a time.
double conjugate_value(const OrliczFunction& f, double v, const ConjugateOptions& opt = {});

// Closed form for the built-in families (including piecewise-linear data and
// caps over linear pieces); sampled log-grid transform otherwise.
ConjugatePair conjugate(const OrliczFunction& f, const ConjugateOptions& opt = {});

// Always takes the sampled-grid route; used by the biconjugacy check.
OrliczFunction numeric_conjugate(const OrliczFunction& f, const ConjugateOptions& opt = {});

// phi(u) + phi_*(v) - u v; >= 0 with equality at v = phi'_+(u).
double young_gap(const ConjugatePair& pair, double u, double v);

struct BiconjugateReport {
  double max_rel_error = 0.0;
  double argmax_u = 0.0;
  size_t grid_points = 0;
};
BiconjugateReport biconjugate_check(const OrliczFunction& f, const std::vector<double>& grid,
                                    const ConjugateOptions& opt = {});

struct FinitenessDuality {
  bool n_at_infinity = false;
  bool conjugate_finite = false;
  bool consistent = false;
};
FinitenessDuality finiteness_duality(const OrliczFunction& f);

}  // namespace orlicz
