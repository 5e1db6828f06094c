#include "qo/order_json.hpp"

#include "qo/error.hpp"

namespace qo {

namespace {

std::size_t read_size(const nlohmann::json& j, const char* what) {
  if (!j.is_object() || !j.contains("size") || !j["size"].is_number_unsigned())
    throw InvalidArgument(std::string(what) + " JSON needs a nonnegative integer \"size\"");
  return j["size"].get<std::size_t>();
}

}  // namespace

nlohmann::json relation_to_json(const FiniteRelation& rel) {
  nlohmann::json j;
  j["size"] = rel.size();
  j["pairs"] = nlohmann::json::array();
  for (auto [a, b] : rel.pairs()) j["pairs"].push_back({a, b});
  if (!rel.labels().empty()) j["labels"] = rel.labels();
  return j;
}

FiniteRelation relation_from_json(const nlohmann::json& j) {
  const std::size_t n = read_size(j, "relation");
  if (!j.contains("pairs") || !j["pairs"].is_array())
    throw InvalidArgument("relation JSON needs a \"pairs\" array");
  FiniteRelation rel(n);
  for (const auto& p : j["pairs"]) {
    if (!p.is_array() || p.size() != 2 || !p[0].is_number_unsigned() || !p[1].is_number_unsigned())
      throw InvalidArgument("relation pair must be [i, j] with nonnegative integers, got " + p.dump());
    rel.set(p[0].get<ElementId>(), p[1].get<ElementId>());
  }
  if (j.contains("labels")) rel.set_labels(j["labels"].get<std::vector<std::string>>());
  return rel;
}

nlohmann::json action_to_json(const GroupAction& action) {
  return {{"size", action.size()}, {"perms", action.perms()}};
}

GroupAction action_from_json(const nlohmann::json& j) {
  const std::size_t n = read_size(j, "action");
  if (!j.contains("perms") || !j["perms"].is_array())
    throw InvalidArgument("action JSON needs a \"perms\" array");
  std::vector<Permutation> perms;
  for (const auto& p : j["perms"]) {
    if (!p.is_array()) throw InvalidArgument("permutation must be an array, got " + p.dump());
    Permutation perm;
    for (const auto& x : p) {
      if (!x.is_number_unsigned()) throw InvalidArgument("permutation entries must be nonnegative integers");
      perm.push_back(x.get<ElementId>());
    }
    perms.push_back(std::move(perm));
  }
  return GroupAction(n, std::move(perms));
}

}  // namespace qo
