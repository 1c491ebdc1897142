#include "orlicz/json_io.hpp"

#include <cmath>
#include <stdexcept>

namespace orlicz {

void require_fields(const json& j, const std::string& path,
                    std::initializer_list<const char*> allowed) {
  if (!j.is_object()) throw std::invalid_argument(path + ": expected an object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool ok = false;
    for (const char* a : allowed)
      if (it.key() == a) ok = true;
    if (!ok) throw std::invalid_argument(path + "." + it.key() + ": unknown field");
  }
}

double parse_extended(const json& j, const std::string& path) {
  if (j.is_string()) {
    if (j.get<std::string>() == "inf") return kInf;
    throw std::invalid_argument(path + ": expected a number or \"inf\"");
  }
  if (!j.is_number()) throw std::invalid_argument(path + ": expected a number or \"inf\"");
  return j.get<double>();
}

json emit_extended(double v) {
  if (v == kInf) return "inf";
  return v;
}

namespace {

double get_number(const json& j, const std::string& path, const char* field) {
  if (!j.contains(field)) throw std::invalid_argument(path + "." + field + ": missing field");
  if (!j[field].is_number()) throw std::invalid_argument(path + "." + field + ": expected a number");
  return j[field].get<double>();
}

std::vector<std::array<double, 2>> get_points(const json& j, const std::string& path) {
  if (!j.contains("points") || !j["points"].is_array())
    throw std::invalid_argument(path + ".points: expected an array of [u, phi] pairs");
  std::vector<std::array<double, 2>> pts;
  for (auto& p : j["points"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number() || !p[1].is_number())
      throw std::invalid_argument(path + ".points: expected [u, phi] number pairs");
    pts.push_back({p[0].get<double>(), p[1].get<double>()});
  }
  return pts;
}

}  // namespace

OrliczFunction parse_function(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("family") || !j["family"].is_string())
    throw std::invalid_argument(path + ".family: missing or non-string");
  std::string fam = j["family"].get<std::string>();
  if (fam == "power") {
    require_fields(j, path, {"family", "p", "k"});
    double k = j.contains("k") ? get_number(j, path, "k") : 1.0;
    return OrliczFunction::power(get_number(j, path, "p"), k);
  }
  if (fam == "linear") {
    require_fields(j, path, {"family", "k"});
    return OrliczFunction::linear(get_number(j, path, "k"));
  }
  if (fam == "exp_minus_one") {
    require_fields(j, path, {"family"});
    return OrliczFunction::exp_minus_one();
  }
  if (fam == "u_log_u") {
    require_fields(j, path, {"family"});
    return OrliczFunction::u_log_u();
  }
  if (fam == "entropy") {
    require_fields(j, path, {"family"});
    return OrliczFunction::entropy();
  }
  if (fam == "piecewise_linear") {
    require_fields(j, path, {"family", "points"});
    return OrliczFunction::piecewise_linear(get_points(j, path));
  }
  if (fam == "sampled") {
    require_fields(j, path, {"family", "points", "tail"});
    SampledTail tail;
    if (j.contains("tail")) {
      require_fields(j["tail"], path + ".tail", {"infinite", "slope"});
      tail.infinite = j["tail"].value("infinite", false);
      tail.slope = j["tail"].value("slope", 0.0);
    }
    return OrliczFunction::sampled(get_points(j, path), tail);
  }
  if (fam == "capped") {
    require_fields(j, path, {"family", "inner", "b"});
    if (!j.contains("inner")) throw std::invalid_argument(path + ".inner: missing field");
    return OrliczFunction::capped(parse_function(j["inner"], path + ".inner"),
                                  get_number(j, path, "b"));
  }
  throw std::invalid_argument(path + ".family: unknown family '" + fam + "'");
}

Measure parse_measure(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw std::invalid_argument(path + ".kind: missing or non-string");
  std::string kind = j["kind"].get<std::string>();
  if (kind == "counting") {
    require_fields(j, path, {"kind"});
    return Measure::counting();
  }
  if (kind == "nonatomic") {
    require_fields(j, path, {"kind", "total"});
    if (!j.contains("total")) throw std::invalid_argument(path + ".total: missing field");
    double total = parse_extended(j["total"], path + ".total");
    if (!(total > 0.0)) throw std::invalid_argument(path + ".total: must be positive");
    return Measure::non_atomic(total);
  }
  throw std::invalid_argument(path + ".kind: unknown kind '" + kind + "'");
}

StepFunction parse_step_function(const json& j, const std::string& path) {
  if (!j.is_object() || !j.contains("measure"))
    throw std::invalid_argument(path + ".measure: missing field");
  Measure m = parse_measure(j["measure"], path + ".measure");
  if (m.kind == Measure::Kind::Counting) {
    require_fields(j, path, {"measure", "values"});
    if (!j.contains("values") || !j["values"].is_array())
      throw std::invalid_argument(path + ".values: expected an array");
    std::vector<double> vals;
    for (auto& v : j["values"]) {
      if (!v.is_number()) throw std::invalid_argument(path + ".values: expected numbers");
      vals.push_back(v.get<double>());
    }
    return StepFunction::counting(std::move(vals));
  }
  require_fields(j, path, {"measure", "levels"});
  if (!j.contains("levels") || !j["levels"].is_array())
    throw std::invalid_argument(path + ".levels: expected an array of [value, mass] pairs");
  std::vector<Level> levels;
  for (auto& lv : j["levels"]) {
    if (!lv.is_array() || lv.size() != 2 || !lv[0].is_number() || !lv[1].is_number())
      throw std::invalid_argument(path + ".levels: expected [value, mass] number pairs");
    levels.push_back({lv[0].get<double>(), lv[1].get<double>()});
  }
  return StepFunction::non_atomic(m.total, std::move(levels));
}

json emit_function(const OrliczFunction& f) {
  json j;
  switch (f.family()) {
    case Family::Power:
      j["family"] = "power";
      j["p"] = f.param_p();
      j["k"] = f.param_k();
      break;
    case Family::Linear:
      j["family"] = "linear";
      j["k"] = f.param_k();
      break;
    case Family::ExpMinusOne: j["family"] = "exp_minus_one"; break;
    case Family::ULogU: j["family"] = "u_log_u"; break;
    case Family::Entropy: j["family"] = "entropy"; break;
    case Family::PiecewiseLinear:
      j["family"] = "piecewise_linear";
      j["points"] = f.points();
      break;
    case Family::Sampled:
      j["family"] = "sampled";
      j["points"] = f.points();
      j["tail"] = {{"infinite", f.tail().infinite}, {"slope", f.tail().slope}};
      break;
    case Family::Capped:
      j["family"] = "capped";
      j["inner"] = emit_function(f.inner());
      j["b"] = f.domain_bound();
      break;
  }
  return j;
}

json emit_measure(const Measure& m) {
  if (m.kind == Measure::Kind::Counting) return {{"kind", "counting"}};
  return {{"kind", "nonatomic"}, {"total", emit_extended(m.total)}};
}

json emit_step_function(const StepFunction& x) {
  json j;
  j["measure"] = emit_measure(x.measure());
  if (x.measure().kind == Measure::Kind::Counting) {
    // atoms in canonical order
    json vals = json::array();
    for (auto& lv : x.levels())
      for (int i = 0; i < static_cast<int>(std::lround(lv.mass)); ++i) vals.push_back(lv.value);
    j["values"] = vals;
  } else {
    json lvls = json::array();
    for (auto& lv : x.levels()) lvls.push_back({lv.value, lv.mass});
    j["levels"] = lvls;
  }
  return j;
}

json emit_growth(const GrowthVerdict& v) {
  json j;
  j["condition"] = to_string(v.condition);
  j["verdict"] = to_string(v.verdict);
  if (v.constant_K) j["constant_K"] = *v.constant_K;
  if (v.threshold_u0) j["threshold_u0"] = *v.threshold_u0;
  if (v.witness_u) j["witness_u"] = *v.witness_u;
  if (!v.exact()) j["grid"] = {v.grid_lo, v.grid_hi};
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

namespace {

json emit_rule_verdict(const RuleVerdict& r) {
  json j;
  j["verdict"] = to_string(r.verdict);
  j["rule"] = r.rule;
  j["empirical"] = r.empirical;
  return j;
}

}  // namespace

json emit_classification(const ClassificationReport& r) {
  json j;
  j["norm"] = to_string(r.norm_kind);
  j["measure"] = emit_measure(r.measure);
  j["rnp"] = emit_rule_verdict(r.rnp);
  j["daugavet"] = emit_rule_verdict(r.daugavet);
  j["ld2p"] = emit_rule_verdict(r.ld2p);
  j["d2p"] = emit_rule_verdict(r.d2p);
  j["sd2p"] = emit_rule_verdict(r.sd2p);
  j["orlicz_norm_ld2p"] = emit_rule_verdict(r.orlicz_norm_ld2p);
  j["growth"] = emit_growth(r.growth);
  j["n_function"] = {{"at_zero", r.n_class.at_zero},
                     {"at_infinity", r.n_class.at_infinity},
                     {"exact", r.n_class.exact}};
  j["octahedral_note"] = r.octahedral_note;
  return j;
}

json emit_norm_report(const NormReport& r) {
  return {{"luxemburg", r.luxemburg},
          {"amemiya", r.amemiya},
          {"orlicz_sup", r.orlicz_sup},
          {"duality_gap", r.duality_gap},
          {"inf_not_attained", r.inf_not_attained},
          {"tolerances", {{"norm_root", 1e-10}, {"modular", 1e-9}, {"duality_gap", 1e-4}}}};
}

json emit_conjugate(const ConjugatePair& p) {
  json j;
  j["primal"] = emit_function(p.primal);
  j["conjugate"] = emit_function(p.conjugate);
  j["mode"] = p.mode == ConjugatePair::Mode::ClosedForm ? "closed_form" : "numeric_grid";
  j["tolerance"] = p.grid_tolerance;
  return j;
}

json emit_witness(const Witness& w) {
  json j;
  j["applicable"] = w.applicable;
  if (w.applicable) {
    j["a"] = w.a;
    j["mass"] = w.mass;
    j["measure"] = emit_measure(w.measure);
  }
  return j;
}

json emit_challenge(const ChallengeRecord& r) {
  return {{"observed_min", r.observed_min}, {"certified_bound", r.certified_bound},
          {"epsilon", r.epsilon},           {"sigma", r.sigma},
          {"gamma", r.gamma},               {"delta", r.delta},
          {"d", r.d},                       {"b_mass", r.b_mass},
          {"degenerate", r.degenerate}};
}

json emit_diameter(const DiameterEstimate& e) {
  json j;
  j["lower_bound"] = e.lower_bound;
  j["samples_used"] = e.samples_used;
  j["empty_slice"] = e.empty_slice;
  if (!e.empty_slice) {
    j["best_a"] = e.best_a;
    j["best_b"] = e.best_b;
  }
  return j;
}

}  // namespace orlicz
