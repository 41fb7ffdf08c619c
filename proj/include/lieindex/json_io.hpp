#ifndef LIEINDEX_JSON_IO_HPP
#define LIEINDEX_JSON_IO_HPP

// JSON schemas for the CLI and for form files. Rationals travel as "p/q"
// strings, roots as integer coordinate arrays over the simple roots, and
// simple-root indices are 1-based on the wire (Bourbaki numbering), 0-based
// in code.

#include <json.hpp>

#include <string>
#include <vector>

#include "lieindex/chevalley.hpp"
#include "lieindex/counterexample_d4.hpp"
#include "lieindex/rootsystem.hpp"
#include "lieindex/stability.hpp"
#include "lieindex/subalg.hpp"
#include "lieindex/verify.hpp"

namespace lieindex {

using json = nlohmann::json;

inline json root_to_json(const Root& r) { return json(r.coords); }

inline Root root_from_json(const json& j) {
  return Root(j.get<std::vector<int>>());
}

inline json rat_to_json(const Rat& q) { return json(to_string(q)); }

inline Rat rat_from_json(const json& j) {
  if (j.is_number_integer()) return rat_of(j.get<long long>());
  return parse_rat(j.get<std::string>());
}

// ---- root systems ----

inline json root_system_to_json(const RootSystem& rs) {
  json j;
  j["family"] = std::string(1, static_cast<char>(rs.type().family));
  j["rank"] = rs.type().rank;
  j["cartan"] = rs.cartan();
  json roots = json::array();
  for (const Root& r : rs.positive_roots()) roots.push_back(root_to_json(r));
  j["positive_roots"] = roots;
  return j;
}

/// Rebuilds from (family, rank) and cross-checks the serialized matrix and
/// root list, so a tampered document cannot parse into an inconsistent system.
inline RootSystem root_system_from_json(const json& j) {
  std::string fam = j.at("family").get<std::string>();
  if (fam.size() != 1) throw std::invalid_argument("bad family in root system document");
  RootSystem rs = build_root_system(fam[0], j.at("rank").get<int>());
  if (json(rs.cartan()) != j.at("cartan"))
    throw std::invalid_argument("cartan matrix in document does not match type");
  if (root_system_to_json(rs).at("positive_roots") != j.at("positive_roots"))
    throw std::invalid_argument("positive roots in document do not match type");
  return rs;
}

// ---- cascade forest ----

inline json cascade_to_json(const std::vector<CascadeNode>& nodes) {
  std::vector<json> built(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    json& n = built[i];
    json subset = json::array();
    for (int s : nodes[i].subset) subset.push_back(s + 1);
    n["subset"] = subset;
    n["epsilon"] = root_to_json(nodes[i].epsilon);
    json gamma = json::array();
    for (const Root& g : nodes[i].gamma) gamma.push_back(root_to_json(g));
    n["gamma"] = gamma;
    n["children"] = json::array();
  }
  // fold back to front: each node is complete before insertion into its
  // parent, and prepending keeps the DFS order
  json forest = json::array();
  for (std::size_t i = nodes.size(); i-- > 0;) {
    if (nodes[i].parent) {
      json& ch = built[*nodes[i].parent]["children"];
      ch.insert(ch.begin(), built[i]);
    } else {
      forest.insert(forest.begin(), built[i]);
    }
  }
  return forest;
}

// ---- elements and forms ----

inline json coords_to_json(const QVec& v) {
  json a = json::array();
  for (const Rat& q : v) a.push_back(rat_to_json(q));
  return a;
}

inline QVec coords_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
  QVec v;
  v.reserve(j.size());
  for (const json& e : j) v.push_back(rat_from_json(e));
  return v;
}

inline json element_to_json(const Element& x) { return coords_to_json(x.c); }

inline json form_to_json(const LinearForm& f) { return coords_to_json(f.coords); }

// ---- bracket table ----

/// Triples (i, j, [(k, numerator, denominator)]) over nonzero basis brackets;
/// Chevalley structure constants are integers so denominators are 1.
inline json bracket_table_to_json(const LieAlgebra& L) {
  json out = json::array();
  int n = static_cast<int>(L.dim());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const LieAlgebra::SparseVec& entry = L.basis_bracket(i, j);
      if (entry.empty()) continue;
      json terms = json::array();
      for (const auto& [k, c] : entry) terms.push_back(json::array({k, c, 1}));
      out.push_back(json::array({i, j, terms}));
    }
  return out;
}

// ---- reports ----

inline json subalgebra_to_json(const Subalgebra& a) {
  json j;
  j["type"] = std::string(1, static_cast<char>(a.ambient().roots().type().family));
  j["rank"] = a.ambient().roots().type().rank;
  j["sub"] = kind_name(a.kind());
  json ps = json::array();
  for (int i : a.parabolic_subset()) ps.push_back(i + 1);
  j["parabolic_subset"] = ps;
  return j;
}

inline json index_result_to_json(const Subalgebra& a, int chi, int trials,
                                 std::uint64_t seed, std::size_t certificate_rank,
                                 const std::string& certificate) {
  json j;
  j["subalgebra"] = subalgebra_to_json(a);
  j["dim"] = a.dim();
  j["index"] = chi;
  j["trials"] = trials;
  j["seed"] = seed;
  j["certificate_rank"] = certificate_rank;
  j["certificate"] = certificate;
  return j;
}

inline json stability_report_to_json(const StabilityReport& r) {
  json j;
  j["subalgebra"] = r.subalgebra_descr;
  j["form"] = r.form_descr;
  j["dim_centralizer"] = r.dim_centralizer;
  j["dim_bracket_space"] = r.dim_bracket_space;
  j["dim_intersection"] = r.dim_intersection;
  j["stable"] = r.stable;
  j["verdict"] = r.verdict;
  if (!r.warning.empty()) j["warning"] = r.warning;
  return j;
}

inline json counterexample_report_to_json(const CounterexampleReport& r) {
  json j;
  j["lambda"] = rat_to_json(r.lambda);
  j["dim_pf"] = r.dim_pf;
  json sup = json::array();
  for (const Root& s : r.support) sup.push_back(root_to_json(s));
  j["support"] = sup;
  j["h_eigen_check"] = r.h_eigen_check;
  j["stable"] = r.stability_verdict;
  j["ok"] = r.all_ok();
  j["failures"] = r.failures;
  return j;
}

inline json check_result_to_json(const CheckResult& r) {
  json j;
  j["name"] = r.name;
  j["pass"] = r.pass;
  j["detail"] = r.detail;
  return j;
}

}  // namespace lieindex

#endif
