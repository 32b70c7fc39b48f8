#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "triage/cluster.hpp"
#include "triage/coupling.hpp"
#include "triage/model.hpp"
#include "triage/pearson.hpp"

namespace triage {

// Compact JSON encodings of the library types.  Doubles are emitted with
// shortest-round-trip precision, so serialize -> parse is value identical.
// Parsers throw std::runtime_error on malformed input.

std::string to_json(const PearsonType1Model& model);
PearsonType1Model model_from_json(std::string_view text);

std::string to_json(const ClassificationResult& result);
ClassificationResult classification_from_json(std::string_view text);

std::string to_json(const std::vector<SymptomCoupling>& rows);
std::vector<SymptomCoupling> symptom_couplings_from_json(std::string_view text);

std::string to_json(const std::vector<CouplingGroup>& groups);
std::vector<CouplingGroup> coupling_groups_from_json(std::string_view text);

std::string to_json(const CboTable& table);
CboTable cbo_table_from_json(std::string_view text);

std::string to_json(const std::vector<std::pair<std::size_t, std::size_t>>& histogram);
std::vector<std::pair<std::size_t, std::size_t>> histogram_from_json(std::string_view text);

std::string to_json(const std::vector<ClusterModel>& clusters);
std::vector<ClusterModel> clusters_from_json(std::string_view text);

std::string_view category_name(Category c);          // "normal" | "pro-cardiac" | "cardiac"
Category category_from_name(std::string_view name);  // throws on unknown names

}  // namespace triage
