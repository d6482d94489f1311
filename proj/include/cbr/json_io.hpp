#pragma once

#include <string>

#include "json.hpp"

#include "cbr/oracle.hpp"

namespace cbr {

/// JSON renderings of every report type the CLI emits. Relations serialize
/// as label-pair arrays in canonical (row, column) order.

nlohmann::json relation_to_json(const BinaryRelation& rel, const Universe& u);
BinaryRelation relation_from_json(const nlohmann::json& j, const Universe& u);

nlohmann::json reversal_to_json(const Reversal& r, const Universe& u);
nlohmann::json witness_to_json(const AxiomWitness& w, const Universe& u);
nlohmann::json verdict_to_json(const AxiomVerdict& v, const Universe& u);
nlohmann::json summary_to_json(const ReversalSummary& s, const Universe& u);

nlohmann::json analysis_to_json(const AnalysisReport& report, const Universe& u);
nlohmann::json representation_to_json(const RepresentationPair& rep, const Universe& u);
RepresentationPair representation_from_json(const nlohmann::json& j, const Universe& u);

nlohmann::json identification_to_json(const IdentificationReport& report, const Universe& u);
nlohmann::json classification_to_json(const ClassificationProfile& profile, const Universe& u);

nlohmann::json sweep_to_json(const SweepReport& report);
SweepReport sweep_from_json(const nlohmann::json& j);

}  // namespace cbr
