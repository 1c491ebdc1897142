#include "orlicz/classify.hpp"

#include <cmath>
#include <stdexcept>

namespace orlicz {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Fails: return "fails";
    case Verdict::NotCovered: return "not-covered";
  }
  return "?";
}

std::string to_string(NormKind k) {
  return k == NormKind::Luxemburg ? "luxemburg" : "orlicz";
}

ClassificationReport classify(const OrliczFunction& f, const Measure& m, NormKind norm_kind) {
  if (f.domain_bound() < kInf)
    throw std::domain_error("classify: the characterizations assume a finite Orlicz function");

  ClassificationReport rep;
  rep.norm_kind = norm_kind;
  rep.measure = m;
  rep.growth = appropriate_delta2(f, m);
  rep.n_class = f.n_function_class();
  bool emp = !rep.growth.exact();
  bool doubling = rep.growth.holds();
  bool counting = m.kind == Measure::Kind::Counting;

  // RNP
  if (counting) {
    rep.rnp = {doubling ? Verdict::Holds : Verdict::Fails,
               "l_phi has RNP iff phi satisfies Delta_2^0", emp};
  } else {
    bool hold = rep.n_class.at_infinity && doubling;
    rep.rnp = {hold ? Verdict::Holds : Verdict::Fails,
               "L_phi has RNP iff phi is an N-function at infinity and satisfies the appropriate "
               "Delta_2 condition",
               emp && rep.n_class.at_infinity};
  }

  // Daugavet
  if (counting) {
    rep.daugavet = {Verdict::Fails,
                    "rearrangement-invariant sequence spaces never have the Daugavet property",
                    false};
  } else {
    rep.daugavet = {f.is_linear_family() ? Verdict::Holds : Verdict::Fails,
                    "L_phi has the Daugavet property iff phi is linear", false};
  }

  // diameter-two chain under the Luxemburg norm
  auto set_chain = [&](Verdict v, const std::string& rule, bool e) {
    rep.ld2p = rep.d2p = rep.sd2p = {v, rule, e};
  };
  if (counting) {
    set_chain(doubling ? Verdict::Fails : Verdict::Holds,
              "for l_phi the LD2P, D2P and SD2P are each equivalent to the failure of Delta_2^0",
              emp);
  } else if (rep.n_class.at_infinity) {
    set_chain(doubling ? Verdict::Fails : Verdict::Holds,
              "for L_phi with phi an N-function at infinity the LD2P, D2P and SD2P are each "
              "equivalent to the failure of the appropriate Delta_2 condition",
              emp);
  } else if (rep.daugavet.verdict == Verdict::Holds) {
    set_chain(Verdict::Holds, "the Daugavet property implies the SD2P, hence the D2P and LD2P",
              false);
  } else if (!doubling) {
    set_chain(Verdict::Holds,
              "failure of the appropriate Delta_2 condition gives the SD2P, hence the D2P and "
              "LD2P, without the N-function hypothesis",
              emp);
  } else {
    set_chain(Verdict::NotCovered,
              "phi doubling but not an N-function at infinity: the equivalence is not asserted "
              "in this direction",
              emp);
  }

  // LD2P under the Orlicz norm
  if (rep.n_class.at_infinity) {
    rep.orlicz_norm_ld2p = {Verdict::Fails,
                            "finite N-functions at infinity give Orlicz-norm spaces without the "
                            "LD2P",
                            false};
  } else {
    ConjugatePair pair = conjugate(f);
    CriticalConstants cc = pair.conjugate.critical_constants();
    bool fired = false;
    if (!counting) {
      double phi_b = cc.b == kInf ? kInf : pair.conjugate(cc.b);
      fired = cc.d < cc.b && xmul(phi_b, m.total) > 1.0;
    } else {
      fired = cc.d < cc.c && std::abs(pair.conjugate(cc.c) - 1.0) <= 1e-9;
    }
    if (fired) {
      rep.orlicz_norm_ld2p = {Verdict::Holds,
                              "the conjugate constants admit a uniformly non-l1^2 witness, so "
                              "every weak*-slice of the predual has diameter two",
                              pair.mode == ConjugatePair::Mode::NumericGrid};
    } else {
      rep.orlicz_norm_ld2p = {Verdict::NotCovered,
                              "no Orlicz-norm diameter-two rule applies to these conjugate "
                              "constants",
                              pair.mode == ConjugatePair::Mode::NumericGrid};
    }
  }

  rep.octahedral_note =
      "every unit point uniformly l1^2 iff the space is locally octahedral; cross-check with "
      "the witness subcommand";
  return rep;
}

}  // namespace orlicz
