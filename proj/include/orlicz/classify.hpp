#pragma once

#include <string>

#include "orlicz/geometry.hpp"

namespace orlicz {

enum class NormKind { Luxemburg, Orlicz };

enum class Verdict { Holds, Fails, NotCovered };
std::string to_string(Verdict v);
std::string to_string(NormKind k);

struct RuleVerdict {
  Verdict verdict = Verdict::NotCovered;
  std::string rule;      // the characterization that fired
  bool empirical = false;  // relied on an empirical growth verdict
};

struct ClassificationReport {
  NormKind norm_kind = NormKind::Luxemburg;
  Measure measure;
  RuleVerdict rnp, daugavet, ld2p, d2p, sd2p, orlicz_norm_ld2p;
  std::string octahedral_note;
  GrowthVerdict growth;      // the appropriate doubling condition, as checked
  NFunctionClass n_class;
};

// Theorem-driven property classifier; requires phi finite on [0, inf).
ClassificationReport classify(const OrliczFunction& f, const Measure& m, NormKind norm_kind);

}  // namespace orlicz
