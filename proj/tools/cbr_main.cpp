// Command-line front end: load choice documents, run analyses, emit reports.
//
// Exit codes: 0 success/pass, 1 axiom-or-verification failure, 2 input error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cbr/json_io.hpp"

namespace {

using namespace cbr;

constexpr int kExitOk = 0;
constexpr int kExitFail = 1;
constexpr int kExitInput = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ChoiceFunction load(const std::string& path) { return parse_choice_document(slurp(path)); }

std::string pair_text(const BinaryRelation& rel, const Universe& u) {
  std::string out;
  for (auto [a, b] : rel.pairs()) {
    if (!out.empty()) out += " ";
    out += u.label(a) + ">" + u.label(b);
  }
  return out.empty() ? "(empty)" : out;
}

void print_witness(const AxiomWitness& w, const Universe& u) {
  if (!w.menus.empty()) {
    std::printf("    menus:");
    for (Mask m : w.menus) std::printf(" %s", u.menu_label(m).c_str());
    std::printf("\n");
  }
  if (!w.alternatives.empty()) {
    std::printf("    alternatives:");
    for (Alt a : w.alternatives) std::printf(" %s", u.label(a).c_str());
    std::printf("\n");
  }
  if (!w.chain.empty()) {
    std::printf("    chain:");
    for (Alt a : w.chain) std::printf(" %s", u.label(a).c_str());
    std::printf("\n");
  }
  for (const Reversal& r : w.reversals) {
    std::printf("    %s (%s,%s) reversal due %s on %s\n",
                r.kind == ReversalKind::Weak ? "weak" : "strong", u.label(r.x).c_str(),
                u.label(r.y).c_str(), u.label(r.trigger).c_str(), u.menu_label(r.base).c_str());
  }
}

int run_validate(const std::string& file, bool json) {
  const ChoiceFunction c = load(file);
  if (json) {
    nlohmann::json out = {{"valid", true},
                          {"alternatives", c.universe().labels()},
                          {"menus", (1l << c.size()) - 1 - c.size()}};
    std::printf("%s\n", out.dump(2).c_str());
  } else {
    std::printf("valid choice function over %d alternatives (%ld non-singleton menus)\n",
                c.size(), (1l << c.size()) - 1 - c.size());
  }
  return kExitOk;
}

int run_axioms(const std::string& file, bool json) {
  const ChoiceFunction c = load(file);
  const AnalysisReport report = analyze(c);
  if (json) {
    std::printf("%s\n", analysis_to_json(report, c.universe()).dump(2).c_str());
  } else {
    for (const AxiomVerdict& v : report.verdicts) {
      std::printf("%-18s %s\n", to_string(v.axiom).c_str(), v.pass ? "PASS" : "FAIL");
      if (v.witness) print_witness(*v.witness, c.universe());
    }
    std::printf("reversals: %d weak, %d strong, %zu double pair(s)\n",
                report.reversals.weak_count, report.reversals.strong_count,
                report.reversals.double_pairs.size());
    std::printf("CBR representable (A1-A4): %s\n", report.cbr_representable ? "yes" : "no");
    std::printf("T-CBR representable (A1-A3, A4'): %s\n",
                report.tcbr_representable ? "yes" : "no");
  }
  return report.cbr_representable ? kExitOk : kExitFail;
}

int run_reversals(const std::string& file, bool json) {
  const ChoiceFunction c = load(file);
  const Universe& u = c.universe();
  const auto reversals = find_reversals(c);
  const auto full = revealed_r(c, RevealedMode::FullMenu);
  const auto small = revealed_r(c, RevealedMode::SmallMenu);
  const auto smp = check_smp(c);
  const auto exclusivity = check_exclusivity(c);
  if (json) {
    nlohmann::json items = nlohmann::json::array();
    for (const Reversal& r : reversals) items.push_back(reversal_to_json(r, u));
    nlohmann::json out = {{"reversals", items},
                          {"revealed_full", relation_to_json(full, u)},
                          {"revealed_small", relation_to_json(small, u)},
                          {"smp", smp.pass},
                          {"exclusivity", exclusivity.pass}};
    std::printf("%s\n", out.dump(2).c_str());
  } else {
    if (reversals.empty()) std::printf("no reversals\n");
    for (const Reversal& r : reversals) {
      std::printf("%s (%s,%s) reversal due %s on %s\n",
                  r.kind == ReversalKind::Weak ? "weak" : "strong", u.label(r.x).c_str(),
                  u.label(r.y).c_str(), u.label(r.trigger).c_str(), u.menu_label(r.base).c_str());
    }
    std::printf("revealed relation (full menus):  %s\n", pair_text(full, u).c_str());
    std::printf("revealed relation (small menus): %s\n", pair_text(small, u).c_str());
    std::printf("small menu property: %s\n", smp.pass ? "PASS" : "FAIL");
    std::printf("exclusivity: %s\n", exclusivity.pass ? "PASS" : "FAIL");
  }
  return kExitOk;
}

int run_represent(const std::string& file, bool json, bool transitive_p, bool with_oracle) {
  const ChoiceFunction c = load(file);
  const Universe& u = c.universe();
  const SynthesisOutcome outcome = transitive_p ? synthesize_tcbr(c) : synthesize_cbr(c);
  if (!outcome.ok()) {
    if (json) {
      nlohmann::json out = {{"ok", false}};
      if (outcome.failure) {
        out["failed_axiom"] = to_string(outcome.failure->axiom);
        out["verdict"] = verdict_to_json(*outcome.failure, u);
      }
      if (outcome.breach) out["breach"] = *outcome.breach;
      std::printf("%s\n", out.dump(2).c_str());
    } else if (outcome.failure) {
      std::printf("not representable: %s fails\n", to_string(outcome.failure->axiom).c_str());
      if (outcome.failure->witness) print_witness(*outcome.failure->witness, u);
    } else if (outcome.breach) {
      std::printf("synthesis breach: %s\n", outcome.breach->c_str());
    }
    return kExitFail;
  }
  const VerifyResult check = verify(c, *outcome.rep);
  bool oracle_ok = true;
  long oracle_count = -1;
  if (with_oracle && c.size() <= 4) {
    const auto reps = representations(c, outcome.rep->flavor, 1);
    oracle_count = reps.total_count;
    oracle_ok = reps.total_count > 0;
  }
  if (json) {
    nlohmann::json out = {{"ok", check.ok && oracle_ok},
                          {"representation", representation_to_json(*outcome.rep, u)},
                          {"verified", check.ok}};
    if (oracle_count >= 0) out["oracle_count"] = oracle_count;
    std::printf("%s\n", out.dump(2).c_str());
  } else {
    std::printf("R: %s\n", pair_text(outcome.rep->first, u).c_str());
    std::printf("P: %s\n", pair_text(outcome.rep->second, u).c_str());
    std::printf("verified against data: %s\n", check.ok ? "yes" : "NO");
    if (oracle_count >= 0) std::printf("oracle pair count: %ld\n", oracle_count);
  }
  return check.ok && oracle_ok ? kExitOk : kExitFail;
}

int run_identify(const std::string& file, bool json, int cap) {
  const ChoiceFunction c = load(file);
  const Universe& u = c.universe();
  try {
    const IdentificationReport report = identify(c, RMaxOptions{cap});
    if (json) {
      std::printf("%s\n", identification_to_json(report, u).dump(2).c_str());
    } else {
      std::printf("minimal first rationale:  %s\n", pair_text(report.r_min, u).c_str());
      std::printf("second-rationale bound:   %s\n", pair_text(report.p_min, u).c_str());
      std::printf("excluded pairs:           %s\n", pair_text(report.q_hat, u).c_str());
      std::printf("maximal first rationales (%zu%s):\n", report.r_max.size(),
                  report.truncated ? ", truncated" : "");
      for (const BinaryRelation& rel : report.r_max) {
        std::printf("  %s\n", pair_text(rel, u).c_str());
      }
    }
    return kExitOk;
  } catch (const NotRepresentableError& e) {
    if (json) {
      nlohmann::json out = {{"ok", false},
                            {"failed_axiom", to_string(e.failure().axiom)},
                            {"verdict", verdict_to_json(e.failure(), u)}};
      std::printf("%s\n", out.dump(2).c_str());
    } else {
      std::printf("not representable: %s fails\n", to_string(e.failure().axiom).c_str());
      if (e.failure().witness) print_witness(*e.failure().witness, u);
    }
    return kExitFail;
  }
}

int run_classify(const std::string& file, bool json) {
  const ChoiceFunction c = load(file);
  const ClassificationProfile profile = classify(c);
  if (json) {
    std::printf("%s\n", classification_to_json(profile, c.universe()).dump(2).c_str());
  } else {
    std::printf("warp-rational: %s\n", profile.warp_rational ? "yes" : "no");
    std::printf("cbr:  %s\n", profile.cbr ? "yes" : "no");
    std::printf("tcbr: %s\n", profile.tcbr ? "yes" : "no");
    std::printf("rsm:  %s\n", profile.rsm ? "yes" : "no");
    std::printf("tsm:  %s\n", profile.tsm ? "yes" : "no");
    std::printf("eph:  %s\n", profile.eph ? "yes" : "no");
    std::printf("reversals: %d weak, %d strong, %zu double pair(s)\n",
                profile.reversals.weak_count, profile.reversals.strong_count,
                profile.reversals.double_pairs.size());
  }
  return kExitOk;
}

int run_oracle(const std::string& file, bool json, const std::string& flavor_name, int cap) {
  const ChoiceFunction c = load(file);
  const Universe& u = c.universe();
  std::vector<Flavor> flavors;
  if (flavor_name.empty()) {
    flavors = {Flavor::CBR, Flavor::TCBR, Flavor::RSM, Flavor::TSM, Flavor::EPH};
  } else {
    const auto f = flavor_from_string(flavor_name);
    if (!f) throw std::runtime_error("unknown flavor: " + flavor_name);
    flavors = {*f};
  }
  nlohmann::json out = nlohmann::json::object();
  for (Flavor f : flavors) {
    const auto result = representations(c, f, cap);
    if (json) {
      nlohmann::json pairs = nlohmann::json::array();
      for (const RepresentationPair& rep : result.pairs) {
        pairs.push_back(representation_to_json(rep, u));
      }
      out[to_string(f)] = {{"count", result.total_count},
                           {"pairs", pairs},
                           {"truncated", result.truncated}};
    } else {
      std::printf("%-5s %ld pair(s)%s\n", to_string(f).c_str(), result.total_count,
                  result.truncated ? " (list truncated)" : "");
      for (const RepresentationPair& rep : result.pairs) {
        std::printf("  R: %-22s P: %s\n", pair_text(rep.first, u).c_str(),
                    pair_text(rep.second, u).c_str());
      }
    }
  }
  if (json) std::printf("%s\n", out.dump(2).c_str());
  return kExitOk;
}

int run_sweep_cmd(int n, const std::string& check, bool json, int threads, std::uint64_t seed,
                  long sample) {
  const auto id = sweep_from_string(check);
  if (!id) throw std::runtime_error("unknown sweep id: " + check);
  SweepOptions options;
  options.threads = threads;
  options.seed = seed;
  options.sample = sample;
  const SweepReport report = run_sweep(*id, n, options);
  if (json) {
    std::printf("%s\n", sweep_to_json(report).dump(2).c_str());
  } else {
    std::printf("sweep %s at n=%d: population %ld, %zu counterexample(s), %ld ms\n",
                to_string(report.sweep).c_str(), report.n, report.population,
                report.counterexamples.size(), report.runtime_ms);
    for (const auto& [key, value] : report.counts) {
      std::printf("  %s = %ld\n", key.c_str(), value);
    }
    for (const SweepCounterexample& ce : report.counterexamples) {
      std::printf("  CE #%ld %s: %s\n", ce.index, ce.detail.c_str(), ce.choices.c_str());
    }
  }
  return report.counterexamples.empty() ? kExitOk : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"choice-by-rejection analysis of finite choice data"};
  app.require_subcommand(1);

  std::string file;
  bool json = false;
  bool transitive_p = false;
  bool with_oracle = false;
  int n = 3;
  std::string check;
  std::string flavor;
  std::uint64_t seed = 0;
  int threads = 1;
  int cap = 64;
  long sample = 10000;

  auto add_common = [&](CLI::App* cmd, bool needs_file) {
    if (needs_file) cmd->add_option("file", file, "choice-data document")->required();
    cmd->add_flag("--json", json, "emit JSON instead of text");
  };

  auto* validate = app.add_subcommand("validate", "parse and validate a document");
  add_common(validate, true);
  auto* axioms = app.add_subcommand("axioms", "evaluate all axioms");
  add_common(axioms, true);
  auto* reversals = app.add_subcommand("reversals", "list reversals and revealed relations");
  add_common(reversals, true);
  auto* represent = app.add_subcommand("represent", "synthesize a representation");
  add_common(represent, true);
  represent->add_flag("--transitive-p", transitive_p, "require a linear-order second rationale");
  represent->add_flag("--oracle", with_oracle, "cross-check against exhaustive search");
  auto* identify = app.add_subcommand("identify", "rationale bounds and maxima");
  add_common(identify, true);
  identify->add_option("--cap", cap, "cap on listed maximal rationales");
  auto* classify = app.add_subcommand("classify", "representability across model flavors");
  add_common(classify, true);
  auto* oracle = app.add_subcommand("oracle", "exhaustive representation search");
  add_common(oracle, true);
  oracle->add_option("--flavor", flavor, "restrict to one flavor (cbr|tcbr|rsm|tsm|eph)");
  oracle->add_option("--cap", cap, "cap on listed pairs");
  auto* sweep = app.add_subcommand("sweep", "check a theorem over every function at size n");
  add_common(sweep, false);
  sweep->add_option("--n", n, "universe size (2-4)")->required();
  sweep->add_option("--check", check, "sweep id")->required();
  sweep->add_option("--seed", seed, "seed for sampled candidates (default 0)");
  sweep->add_option("--threads", threads, "worker thread cap");
  sweep->add_option("--sample", sample, "random candidate budget where sampling applies");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return run_validate(file, json);
    if (axioms->parsed()) return run_axioms(file, json);
    if (reversals->parsed()) return run_reversals(file, json);
    if (represent->parsed()) return run_represent(file, json, transitive_p, with_oracle);
    if (identify->parsed()) return run_identify(file, json, cap);
    if (classify->parsed()) return run_classify(file, json);
    if (oracle->parsed()) return run_oracle(file, json, flavor, cap);
    if (sweep->parsed()) return run_sweep_cmd(n, check, json, threads, seed, sample);
  } catch (const ParseError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  } catch (const SizeCapError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  }
  return kExitInput;
}
