#pragma once

// Structured exports: module dumps, analysis reports, and the check-result
// schema shared by the CLI and the verification suites. All rationals are
// emitted as "p" or "p/q" strings; emission order is deterministic.

#include <string>
#include <vector>

#include <json.hpp>

#include "cuspidal.hpp"
#include "representation.hpp"
#include "wstructure.hpp"

namespace wcusp {

using Json = nlohmann::ordered_json;

inline Json weight_json(const Weight& w) {
  Json arr = Json::array();
  for (const auto& x : w) arr.push_back(rat_str(x));
  return arr;
}

inline Json triples_json(const SparseMat& m) {
  Json arr = Json::array();
  for (const auto& [r, c, v] : m.triples()) arr.push_back(Json::array({r, c, rat_str(v)}));
  return arr;
}

inline Json representation_json(const Representation& rep) {
  Json j;
  j["n"] = rep.n;
  j["lambda"] = weight_json(rep.lambda);
  j["dimension"] = rep.dim;
  j["highest_weight_index"] = rep.hw_index;
  Json ws = Json::array();
  for (const auto& w : rep.weights) ws.push_back(weight_json(w));
  j["weights"] = std::move(ws);
  Json labels = Json::array();
  for (const auto& l : rep.labels) labels.push_back(l);
  j["labels"] = std::move(labels);
  Json act;
  for (int i = 1; i <= rep.n; ++i)
    for (int j2 = 1; j2 <= rep.n; ++j2)
      act["e[" + std::to_string(i) + "," + std::to_string(j2) + "]"] =
          triples_json(rep.action(i, j2));
  j["action"] = std::move(act);
  return j;
}

inline Json composition_json(const CompositionReport& rep) {
  Json j;
  j["lambda"] = weight_json(rep.lambda);
  j["case"] = static_cast<int>(rep.cls.tag);
  j["eta_n"] = rat_str(rep.eta_n);
  j["k"] = rep.k_witness;
  j["length"] = rep.length;
  if (rep.length == 2) j["submodule_dim"] = rep.submodule_dim;
  Json factors = Json::array();
  for (const auto& f : rep.factors) {
    Json fj;
    fj["hw"] = weight_json(f.hw);
    fj["dim"] = f.dim;
    factors.push_back(std::move(fj));
  }
  j["factors"] = std::move(factors);
  j["violations"] = rep.violations;
  return j;
}

inline Json exact_sequence_json(const ExactSequenceReport& rep) {
  Json j;
  j["dims"] = rep.dims;
  j["image_dims"] = rep.image_dims;
  j["intertwines"] = rep.intertwines;
  j["exact"] = rep.exact;
  j["violations"] = rep.violations;
  return j;
}

inline std::string point_str(const LatticePoint& r) {
  std::string s = "(";
  for (std::size_t t = 0; t < r.size(); ++t) s += (t ? "," : "") + std::to_string(r[t]);
  return s + ")";
}

// Operator blocks of the box realization as sparse triples keyed by
// (source point, target point).
inline Json cuspidal_operators_json(const CuspidalModule& g) {
  Json j;
  for (const SlElem& x : sl_basis(g.n)) {
    Json blocks = Json::array();
    for (const auto& r : g.box.points()) {
      LatticePoint target = r;
      LatticePoint s = g.shift(x);
      for (int t = 0; t < g.n; ++t) target[t] += s[t];
      if (!g.box.contains(target)) continue;
      Json block;
      block["source"] = point_str(r);
      block["target"] = point_str(target);
      block["entries"] = triples_json(g.fiber_matrix(x, r));
      blocks.push_back(std::move(block));
    }
    j[x.name()] = std::move(blocks);
  }
  return j;
}

inline Json cuspidal_report_json(const CuspidalModule& g, const RelationReport& rel,
                                 const std::map<std::string, bool>& injectivity,
                                 bool intertwiner_ok) {
  Json j;
  Json params;
  params["n"] = g.n;
  params["lambda"] = weight_json(g.fiber->lambda);
  params["mu"] = weight_json(g.mu);
  j["params"] = std::move(params);
  j["radius"] = g.box.radius;
  j["violations"] = rel.violations;
  Json inj;
  for (const auto& [name, ok] : injectivity) inj[name] = ok;
  j["injectivity"] = std::move(inj);
  j["intertwiner_ok"] = intertwiner_ok;
  return j;
}

// ---------------------------------------------------------------------------
// Check results for suites.

struct CheckResult {
  std::string id;
  std::string anchor;
  bool pass = false;
  std::string detail;
  long millis = 0;
};

inline Json check_json(const CheckResult& c) {
  Json j;
  j["id"] = c.id;
  j["anchor"] = c.anchor;
  j["status"] = c.pass ? "pass" : "fail";
  j["detail"] = c.detail;
  j["millis"] = c.millis;
  return j;
}

// Zeroes the timing fields; used when comparing reports byte-for-byte.
inline void normalize_timing(Json& j) {
  if (j.contains("checks"))
    for (auto& c : j["checks"]) c["millis"] = 0;
}

}  // namespace wcusp
