#include <CLI11.hpp>
#include <fstream>
#include <iomanip>
#include <iostream>

#include "orlicz/verify.hpp"

namespace {

using orlicz::json;

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open config file '" + path + "'");
  return json::parse(in);
}

void emit_record(const json& j) { std::cout << j.dump() << "\n"; }

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(10) << v;
  return os.str();
}

// ---------------------------------------------------------------------------

int cmd_classify(const json& cfg, const std::string& format) {
  orlicz::require_fields(cfg, "config", {"function", "measure", "norm"});
  orlicz::OrliczFunction f = orlicz::parse_function(cfg.at("function"));
  orlicz::Measure m = orlicz::parse_measure(cfg.at("measure"));
  std::string nk = cfg.value("norm", "luxemburg");
  if (nk != "luxemburg" && nk != "orlicz")
    throw std::invalid_argument("config.norm: expected 'luxemburg' or 'orlicz'");
  auto rep = orlicz::classify(
      f, m, nk == "luxemburg" ? orlicz::NormKind::Luxemburg : orlicz::NormKind::Orlicz);
  json out = orlicz::emit_classification(rep);
  out["function"] = orlicz::emit_function(f);
  if (format == "records") {
    emit_record(out);
    return 0;
  }
  auto line = [&](const char* name, const orlicz::RuleVerdict& v) {
    std::cout << "  " << std::left << std::setw(18) << name << std::setw(13)
              << orlicz::to_string(v.verdict) << (v.empirical ? "[empirical] " : "") << v.rule
              << "\n";
  };
  std::cout << "classification (" << nk << " norm)\n";
  line("RNP", rep.rnp);
  line("Daugavet", rep.daugavet);
  line("LD2P", rep.ld2p);
  line("D2P", rep.d2p);
  line("SD2P", rep.sd2p);
  line("orlicz-norm LD2P", rep.orlicz_norm_ld2p);
  std::cout << "  growth: " << out["growth"].dump() << "\n";
  std::cout << "  note:   " << rep.octahedral_note << "\n";
  return 0;
}

int cmd_norm(const json& cfg, const std::string& format) {
  orlicz::require_fields(cfg, "config", {"function", "x"});
  orlicz::OrliczFunction f = orlicz::parse_function(cfg.at("function"));
  orlicz::StepFunction x = orlicz::parse_step_function(cfg.at("x"));
  orlicz::NormReport rep = orlicz::norm_report(f, x);
  json out = orlicz::emit_norm_report(rep);
  out["function"] = orlicz::emit_function(f);
  out["x"] = orlicz::emit_step_function(x);
  if (format == "records") {
    emit_record(out);
    return 0;
  }
  std::cout << "luxemburg  " << fmt(rep.luxemburg) << "\n"
            << "amemiya    " << fmt(rep.amemiya)
            << (rep.inf_not_attained ? "  (infimum not attained)" : "") << "\n"
            << "orlicz sup " << fmt(rep.orlicz_sup) << "\n"
            << "gap        " << fmt(rep.duality_gap) << "\n";
  return 0;
}

int cmd_conjugate(const json& cfg, const std::string& format) {
  orlicz::require_fields(cfg, "config", {"function", "points"});
  orlicz::OrliczFunction f = orlicz::parse_function(cfg.at("function"));
  orlicz::ConjugatePair pair = orlicz::conjugate(f);
  json out = orlicz::emit_conjugate(pair);
  if (cfg.contains("points")) {
    json samples = json::array();
    for (auto& p : cfg["points"]) {
      double v = p.get<double>();
      samples.push_back({v, orlicz::emit_extended(pair.conjugate(v))});
    }
    out["samples"] = samples;
  }
  if (format == "records") {
    emit_record(out);
    return 0;
  }
  std::cout << "mode      " << out["mode"].get<std::string>() << "\n"
            << "conjugate " << out["conjugate"].dump() << "\n";
  if (out.contains("samples"))
    for (auto& s : out["samples"])
      std::cout << "  phi_*(" << s[0].dump() << ") = " << s[1].dump() << "\n";
  return 0;
}

int cmd_witness(const json& cfg, const std::string& format, uint64_t seed, size_t budget) {
  orlicz::require_fields(cfg, "config", {"function", "measure", "challengers"});
  orlicz::OrliczFunction f = orlicz::parse_function(cfg.at("function"));
  orlicz::Measure m = orlicz::parse_measure(cfg.at("measure"));
  orlicz::Witness w = orlicz::construct_witness(f, m);
  json out = orlicz::emit_witness(w);
  out["function"] = orlicz::emit_function(f);
  int violations = 0;
  json records = json::array();
  if (w.applicable) {
    std::vector<orlicz::StepFunction> challengers;
    if (cfg.contains("challengers")) {
      size_t i = 0;
      for (auto& c : cfg["challengers"])
        challengers.push_back(
            orlicz::parse_step_function(c, "config.challengers[" + std::to_string(i++) + "]"));
    } else {
      std::mt19937_64 rng(seed);
      size_t n = budget ? budget : 100;
      for (size_t i = 0; i < n; ++i)
        challengers.push_back(
            orlicz::random_unit_challenger(f, rng, m, 3.0 * std::max(1.0, w.a)));
    }
    for (auto& y : challengers) {
      double n = orlicz::luxemburg_norm(f, y);
      orlicz::StepFunction yu = n > 0 ? y.scaled(1.0 / n) : y;
      orlicz::ChallengeRecord cr = orlicz::challenge_witness(f, w, yu);
      if (cr.observed_min > cr.certified_bound + 1e-9) ++violations;
      json r = orlicz::emit_challenge(cr);
      r["challenger"] = orlicz::emit_step_function(yu);
      records.push_back(std::move(r));
    }
  }
  out["challenges"] = records;
  out["violations"] = violations;
  if (format == "records") {
    emit_record(out);
  } else {
    if (!w.applicable) {
      std::cout << "witness: not applicable (theorem hypotheses fail)\n";
      return 0;
    }
    std::cout << "witness a = " << fmt(w.a) << ", mass = " << fmt(w.mass) << "\n";
    std::cout << "challengers " << records.size() << ", violations " << violations << "\n";
    for (auto& r : records)
      std::cout << "  observed " << fmt(r["observed_min"].get<double>()) << "  certified "
                << fmt(r["certified_bound"].get<double>()) << "  eps "
                << fmt(r["epsilon"].get<double>()) << "\n";
  }
  return violations == 0 ? 0 : 1;
}

int cmd_slice(const json& cfg, const std::string& format, uint64_t seed, size_t budget) {
  orlicz::require_fields(cfg, "config", {"function", "slice", "point"});
  orlicz::OrliczFunction f = orlicz::parse_function(cfg.at("function"));
  const json& sj = cfg.at("slice");
  orlicz::require_fields(sj, "config.slice", {"dimension", "functional", "epsilon", "side"});
  orlicz::SliceSpec s;
  s.dimension = sj.at("dimension").get<size_t>();
  s.functional = sj.at("functional").get<std::vector<double>>();
  s.epsilon = sj.at("epsilon").get<double>();
  std::string side = sj.value("side", "slice_of_ball");
  if (side == "slice_of_ball")
    s.side = orlicz::SliceSpec::Side::SliceOfBall;
  else if (side == "weak_star_slice")
    s.side = orlicz::SliceSpec::Side::WeakStarSlice;
  else
    throw std::invalid_argument("config.slice.side: expected 'slice_of_ball' or 'weak_star_slice'");

  if (cfg.contains("point")) {
    auto point = cfg["point"].get<std::vector<double>>();
    bool in = orlicz::slice_membership(f, s, point);
    if (format == "records")
      emit_record({{"member", in}});
    else
      std::cout << (in ? "member" : "not a member") << "\n";
    return 0;
  }
  orlicz::DiameterEstimate est =
      orlicz::slice_diameter_lower_bound(f, s, budget ? budget : 20000, seed);
  json out = orlicz::emit_diameter(est);
  out["seed"] = seed;
  if (format == "records") {
    emit_record(out);
  } else {
    if (est.empty_slice)
      std::cout << "empty slice (no sample admitted)\n";
    else
      std::cout << "diameter lower bound " << fmt(est.lower_bound) << "  (samples "
                << est.samples_used << ")\n";
  }
  return 0;
}

int cmd_verify(const json& cfg, const std::string& format, uint64_t seed, size_t budget) {
  orlicz::require_fields(cfg, "config", {"suite"});
  std::string suite = cfg.value("suite", "all");
  auto results = orlicz::run_verify(suite, seed, budget);
  size_t failed = 0;
  for (auto& res : results) {
    failed += res.failed;
    if (format == "records") {
      for (auto& c : res.cases) {
        json r = {{"suite", res.suite},
                  {"invariant", c.invariant},
                  {"id", c.id},
                  {"passed", c.passed},
                  {"slack", c.slack}};
        if (!c.passed) r["inputs"] = c.inputs;
        emit_record(r);
      }
    } else {
      std::cout << "suite " << res.suite << ": " << res.passed << "/" << res.run << " passed\n";
      for (auto& c : res.cases)
        if (!c.passed)
          std::cout << "  FAIL " << c.invariant << " " << c.id << " slack " << fmt(c.slack)
                    << "\n    replay: " << c.inputs.dump() << "\n";
    }
  }
  return failed == 0 ? 0 : 1;
}

int cmd_catalog(const std::string& format) {
  struct Row {
    std::string name;
    orlicz::OrliczFunction f;
  };
  std::vector<Row> fams = {
      {"linear", orlicz::OrliczFunction::linear(1.0)},
      {"u^1.5", orlicz::OrliczFunction::power(1.5)},
      {"u^2", orlicz::OrliczFunction::power(2.0)},
      {"u^4", orlicz::OrliczFunction::power(4.0)},
      {"e^u-1", orlicz::OrliczFunction::exp_minus_one()},
      {"u ln(1+u)", orlicz::OrliczFunction::u_log_u()},
      {"max(0,u-1)", orlicz::OrliczFunction::piecewise_linear({{0, 0}, {1, 0}, {2, 1}})},
      {"capped(u^2,b=1)", orlicz::OrliczFunction::capped(orlicz::OrliczFunction::power(2.0), 1.0)},
  };
  std::vector<std::pair<std::string, orlicz::Measure>> measures = {
      {"nonatomic(1)", orlicz::Measure::non_atomic(1.0)},
      {"nonatomic(inf)", orlicz::Measure::non_atomic(orlicz::kInf)},
      {"counting", orlicz::Measure::counting()}};
  if (format != "records") {
    std::cout << std::left << std::setw(17) << "family" << std::setw(15) << "measure"
              << std::setw(10) << "norm" << std::setw(13) << "RNP" << std::setw(13) << "Daugavet"
              << std::setw(13) << "LD2P" << std::setw(13) << "D2P" << std::setw(13) << "SD2P"
              << std::setw(13) << "O-LD2P" << "growth\n";
  }
  for (auto& row : fams) {
    for (auto& [mname, m] : measures) {
      for (auto nk : {orlicz::NormKind::Luxemburg, orlicz::NormKind::Orlicz}) {
        if (row.f.domain_bound() < orlicz::kInf) {
          if (format == "records")
            emit_record({{"family", row.name},
                         {"measure", mname},
                         {"norm", orlicz::to_string(nk)},
                         {"verdict", "not-applicable (phi not finite)"}});
          else
            std::cout << std::left << std::setw(17) << row.name << std::setw(15) << mname
                      << std::setw(10) << orlicz::to_string(nk)
                      << "not-applicable (phi not finite)\n";
          continue;
        }
        auto rep = orlicz::classify(row.f, m, nk);
        if (format == "records") {
          json r = orlicz::emit_classification(rep);
          r["family"] = row.name;
          r["measure_name"] = mname;
          emit_record(r);
        } else {
          auto cell = [](const orlicz::RuleVerdict& v) {
            return orlicz::to_string(v.verdict) + (v.empirical ? "*" : "");
          };
          std::cout << std::left << std::setw(17) << row.name << std::setw(15) << mname
                    << std::setw(10) << orlicz::to_string(nk) << std::setw(13) << cell(rep.rnp)
                    << std::setw(13) << cell(rep.daugavet) << std::setw(13) << cell(rep.ld2p)
                    << std::setw(13) << cell(rep.d2p) << std::setw(13) << cell(rep.sd2p)
                    << std::setw(13) << cell(rep.orlicz_norm_ld2p)
                    << orlicz::to_string(rep.growth.verdict) << "\n";
        }
      }
    }
  }
  if (format != "records")
    std::cout << "(* = verdict relies on an empirical growth check)\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Orlicz-space toolkit: norms, conjugation, growth conditions, slice geometry"};
  app.require_subcommand(1);

  std::string config_path, format = "table";
  uint64_t seed = 42;
  size_t budget = 0;
  app.add_option("--seed", seed, "RNG seed for randomized operations");
  app.add_option("--budget", budget, "sample/iteration budget (0 = per-command default)");
  app.add_option("--format", format, "output format")
      ->check(CLI::IsMember({"table", "records"}));

  auto add = [&](const char* name, const char* desc, bool needs_config) {
    CLI::App* sub = app.add_subcommand(name, desc);
    sub->fallthrough();  // let --seed/--budget/--format follow the subcommand
    if (needs_config)
      sub->add_option("--config", config_path, "JSON config file")->required();
    return sub;
  };
  CLI::App* c_classify = add("classify", "geometric-property classifier", true);
  CLI::App* c_norm = add("norm", "Luxemburg / Orlicz norms of a step function", true);
  CLI::App* c_conj = add("conjugate", "complementary function", true);
  CLI::App* c_witness = add("witness", "uniformly non-l1^2 witness with certified bounds", true);
  CLI::App* c_slice = add("slice", "slice membership / diameter lower bound", true);
  CLI::App* c_verify = add("verify", "invariant suites", true);
  CLI::App* c_catalog = add("catalog", "classify the built-in catalog", false);

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_catalog->parsed()) return cmd_catalog(format);
    json cfg = load_config(config_path);
    if (c_classify->parsed()) return cmd_classify(cfg, format);
    if (c_norm->parsed()) return cmd_norm(cfg, format);
    if (c_conj->parsed()) return cmd_conjugate(cfg, format);
    if (c_witness->parsed()) return cmd_witness(cfg, format, seed, budget);
    if (c_slice->parsed()) return cmd_slice(cfg, format, seed, budget);
    if (c_verify->parsed()) return cmd_verify(cfg, format, seed, budget);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
