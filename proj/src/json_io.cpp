#include "cbr/json_io.hpp"

namespace cbr {

namespace {

nlohmann::json menu_to_json(Mask menu, const Universe& u) {
  nlohmann::json out = nlohmann::json::array();
  for (Alt a : mask_alts(menu)) out.push_back(u.label(a));
  return out;
}

}  // namespace

nlohmann::json relation_to_json(const BinaryRelation& rel, const Universe& u) {
  nlohmann::json out = nlohmann::json::array();
  for (auto [a, b] : rel.pairs()) {
    out.push_back(nlohmann::json::array({u.label(a), u.label(b)}));
  }
  return out;
}

BinaryRelation relation_from_json(const nlohmann::json& j, const Universe& u) {
  BinaryRelation rel(u.size());
  for (const auto& pair : j) {
    const auto a = u.index_of(pair.at(0).get<std::string>());
    const auto b = u.index_of(pair.at(1).get<std::string>());
    if (!a || !b) throw std::invalid_argument("relation pair uses an unknown label");
    rel.add(*a, *b);
  }
  return rel;
}

nlohmann::json reversal_to_json(const Reversal& r, const Universe& u) {
  return {{"pair", nlohmann::json::array({u.label(r.x), u.label(r.y)})},
          {"base", menu_to_json(r.base, u)},
          {"trigger", u.label(r.trigger)},
          {"kind", r.kind == ReversalKind::Weak ? "weak" : "strong"}};
}

nlohmann::json witness_to_json(const AxiomWitness& w, const Universe& u) {
  nlohmann::json out = nlohmann::json::object();
  if (!w.menus.empty()) {
    out["menus"] = nlohmann::json::array();
    for (Mask m : w.menus) out["menus"].push_back(menu_to_json(m, u));
  }
  if (!w.alternatives.empty()) {
    out["alternatives"] = nlohmann::json::array();
    for (Alt a : w.alternatives) out["alternatives"].push_back(u.label(a));
  }
  if (!w.chain.empty()) {
    out["chain"] = nlohmann::json::array();
    for (Alt a : w.chain) out["chain"].push_back(u.label(a));
  }
  if (!w.reversals.empty()) {
    out["reversals"] = nlohmann::json::array();
    for (const Reversal& r : w.reversals) out["reversals"].push_back(reversal_to_json(r, u));
  }
  return out;
}

nlohmann::json verdict_to_json(const AxiomVerdict& v, const Universe& u) {
  nlohmann::json out = {{"pass", v.pass}};
  if (v.witness) out["witness"] = witness_to_json(*v.witness, u);
  return out;
}

nlohmann::json summary_to_json(const ReversalSummary& s, const Universe& u) {
  nlohmann::json doubles = nlohmann::json::array();
  for (auto [x, y] : s.double_pairs) {
    doubles.push_back(nlohmann::json::array({u.label(x), u.label(y)}));
  }
  return {{"weak", s.weak_count}, {"strong", s.strong_count}, {"double_pairs", doubles}};
}

nlohmann::json analysis_to_json(const AnalysisReport& report, const Universe& u) {
  nlohmann::json axioms = nlohmann::json::object();
  for (const AxiomVerdict& v : report.verdicts) {
    axioms[to_string(v.axiom)] = verdict_to_json(v, u);
  }
  return {{"axioms", axioms},
          {"reversals", summary_to_json(report.reversals, u)},
          {"cbr_representable", report.cbr_representable},
          {"tcbr_representable", report.tcbr_representable}};
}

nlohmann::json representation_to_json(const RepresentationPair& rep, const Universe& u) {
  return {{"flavor", to_string(rep.flavor)},
          {"R", relation_to_json(rep.first, u)},
          {"P", relation_to_json(rep.second, u)}};
}

RepresentationPair representation_from_json(const nlohmann::json& j, const Universe& u) {
  const auto flavor = flavor_from_string(j.at("flavor").get<std::string>());
  if (!flavor) throw std::invalid_argument("unknown flavor");
  return RepresentationPair{relation_from_json(j.at("R"), u), relation_from_json(j.at("P"), u),
                            *flavor};
}

nlohmann::json identification_to_json(const IdentificationReport& report, const Universe& u) {
  nlohmann::json maxima = nlohmann::json::array();
  for (const BinaryRelation& rel : report.r_max) maxima.push_back(relation_to_json(rel, u));
  return {{"r_min", relation_to_json(report.r_min, u)},
          {"p_min", relation_to_json(report.p_min, u)},
          {"q_hat", relation_to_json(report.q_hat, u)},
          {"r_max", maxima},
          {"truncated", report.truncated}};
}

nlohmann::json classification_to_json(const ClassificationProfile& profile, const Universe& u) {
  return {{"warp_rational", profile.warp_rational},
          {"cbr", profile.cbr},
          {"tcbr", profile.tcbr},
          {"rsm", profile.rsm},
          {"tsm", profile.tsm},
          {"eph", profile.eph},
          {"reversals", summary_to_json(profile.reversals, u)}};
}

nlohmann::json sweep_to_json(const SweepReport& report) {
  nlohmann::json ces = nlohmann::json::array();
  for (const SweepCounterexample& ce : report.counterexamples) {
    ces.push_back({{"index", ce.index}, {"detail", ce.detail}, {"choices", ce.choices}});
  }
  return {{"sweep", to_string(report.sweep)},
          {"n", report.n},
          {"population", report.population},
          {"counterexamples", ces},
          {"counts", report.counts},
          {"runtime_ms", report.runtime_ms}};
}

SweepReport sweep_from_json(const nlohmann::json& j) {
  SweepReport report;
  const auto id = sweep_from_string(j.at("sweep").get<std::string>());
  if (!id) throw std::invalid_argument("unknown sweep id");
  report.sweep = *id;
  report.n = j.at("n").get<int>();
  report.population = j.at("population").get<long>();
  for (const auto& ce : j.at("counterexamples")) {
    report.counterexamples.push_back(SweepCounterexample{ce.at("index").get<long>(),
                                                         ce.at("detail").get<std::string>(),
                                                         ce.at("choices").get<std::string>()});
  }
  for (const auto& [key, value] : j.at("counts").items()) {
    report.counts[key] = value.get<long>();
  }
  report.runtime_ms = j.at("runtime_ms").get<long>();
  return report;
}

}  // namespace cbr
