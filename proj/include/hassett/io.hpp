#pragma once

#include <string>

#include "json.hpp"

#include "hassett/admissible.hpp"
#include "hassett/kapranov.hpp"
#include "hassett/moduli.hpp"
#include "hassett/permutation.hpp"
#include "hassett/weights.hpp"

namespace hassett {

using nlohmann::json;

inline json to_json(const IndexSet& set) { return json(set); }

inline json to_json(const std::vector<IndexSet>& sets) {
  json out = json::array();
  for (const auto& s : sets) out.push_back(s);
  return out;
}

inline json to_json(const Signature& sig) { return {{"min_size", sig.min_size}, {"subsets", to_json(sig.subsets)}}; }

inline json to_json(const Permutation& p) { return {{"cycles", p.cycle_string()}, {"one_line", p.image()}}; }

inline json to_json(const PermGroup& g) {
  json gens = json::array();
  for (auto [i, j] : g.generators) gens.push_back(json::array({i, j}));
  return {{"n", g.n}, {"generators", std::move(gens)}, {"components", to_json(g.components)}, {"order", g.order.str()}};
}

inline json to_json(const PermSet& set) {
  json elems = json::array();
  for (const auto& p : set.elements) elems.push_back(p.cycle_string());
  return {{"n", set.n}, {"order", set.order().str()}, {"elements", std::move(elems)}};
}

inline json to_json(const BoundaryDivisor& d) {
  switch (d.kind) {
    case BoundaryDivisor::Kind::irreducible: return {{"kind", "irr"}};
    case BoundaryDivisor::Kind::nodal: return {{"kind", "nodal"}, {"h", d.genus}, {"P", d.set}};
    case BoundaryDivisor::Kind::collision: return {{"kind", "collision"}, {"S", d.set}};
  }
  return {};
}

inline BoundaryDivisor boundary_divisor_from_json(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "irr") return BoundaryDivisor::irreducible();
  if (kind == "nodal") return BoundaryDivisor::nodal(j.at("h").get<int>(), j.at("P").get<IndexSet>());
  if (kind == "collision") return BoundaryDivisor::collision(j.at("S").get<IndexSet>());
  throw Error(ErrorCode::syntax, "unknown divisor kind '" + kind + "'");
}

inline json to_json(const GroupDescriptor& d) {
  json out = {{"torus_rank", d.torus_rank},
              {"symmetric_factors", d.symmetric_factors},
              {"special", d.special ? json(d.special_name()) : json(nullptr)}};
  auto order = d.finite_order();
  out["finite_order"] = order ? json(order->str()) : json(nullptr);
  if (d.special && d.special->outside_theorem) out["outside_theorem"] = true;
  if (d.components_witness) out["components"] = to_json(*d.components_witness);
  return out;
}

inline GroupDescriptor group_descriptor_from_json(const json& j) {
  GroupDescriptor d;
  d.torus_rank = j.at("torus_rank").get<int>();
  d.symmetric_factors = j.at("symmetric_factors").get<std::vector<int>>();
  if (!j.at("special").is_null()) {
    auto name = j.at("special").get<std::string>();
    if (name.rfind("PGL", 0) != 0) throw Error(ErrorCode::syntax, "unknown special factor '" + name + "'");
    d.special = GroupDescriptor::Special{std::stoi(name.substr(3)), j.value("outside_theorem", false)};
  }
  if (j.contains("components")) d.components_witness = j.at("components").get<std::vector<IndexSet>>();
  return d;
}

inline json to_json(const TowerEntry& e) {
  json centers = json::array();
  for (const auto& c : e.centers) centers.push_back(c.points);
  return {{"r", e.step.r}, {"s", e.step.s}, {"weights", to_json(e.weights).at("weights")},
          {"centers", std::move(centers)}, {"rank", e.rank}};
}

inline json to_json(const CremonaReport& rep) {
  json feasible = json::array();
  json candidates = json::array();
  for (const auto& c : rep.candidates) {
    json spans = json::array();
    for (auto [h, m] : c.span_multiplicity) spans.push_back(json::array({h, m}));
    candidates.push_back({{"d", c.degree},
                          {"point_multiplicity", c.point_multiplicity},
                          {"span_multiplicity", std::move(spans)},
                          {"feasible", c.feasible},
                          {"rejected_by", c.rejected_by.empty() ? json(nullptr) : json(c.rejected_by)}});
  }
  return {{"n", rep.n},
          {"class", rep.cls == CremonaClass::first_step ? "r=1" : "r>=2"},
          {"feasible", rep.feasible_degrees()},
          {"candidates", std::move(candidates)}};
}

}  // namespace hassett
