#pragma once

#include <nlohmann/json.hpp>

#include "qo/order.hpp"

namespace qo {

// {"size": n, "pairs": [[i, j], ...]} with optional "labels": [...]
nlohmann::json relation_to_json(const FiniteRelation& rel);
FiniteRelation relation_from_json(const nlohmann::json& j);

// {"size": n, "perms": [[...], ...]}
nlohmann::json action_to_json(const GroupAction& action);
GroupAction action_from_json(const nlohmann::json& j);

}  // namespace qo
