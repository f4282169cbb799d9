#include "csl/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "csl/finite_field.hpp"

namespace csl {

double round15(double x) {
  if (!std::isfinite(x)) return x;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

Json to_json(const Permutation& p) {
  Json a = Json::array();
  for (auto x : p.images()) a.push_back(x);
  return a;
}

Json to_json(const PermGroup& g) {
  Json gens = Json::array();
  for (const auto& p : g.generators()) gens.push_back(to_json(p));
  return Json{{"degree", g.degree()},
              {"generators", gens},
              {"order", g.order()},
              {"transitivity_degree", transitivity_degree(g)}};
}

Json to_json(const MapSummary& s) {
  Json j{{"n", s.n},     {"V", s.vertices}, {"E", s.edges},
         {"F", s.faces}, {"euler", s.euler}, {"genus", s.genus}};
  j["formula_genus"] = s.formula_genus ? Json(*s.formula_genus) : Json(nullptr);
  j["vertex_degree"] = s.vertex_degree ? Json(*s.vertex_degree) : Json(nullptr);
  j["match"] = s.formula_genus.has_value() && *s.formula_genus == s.genus;
  return j;
}

Json to_json(const LinkBlueprint& link, std::uint64_t cap) {
  const auto group = link.symmetry_group(cap);
  Json j;
  j["family"] = to_string(link.family);
  j["ambient"] = to_string(link.ambient);
  j["n_components"] = link.component_count();
  j["components"] = link.components;
  j["linking_kind"] = to_string(link.linking_kind);
  j["linking"] = link.linking_kind == LinkingKind::Complete ? Json("complete") : Json(link.linking);
  j["crossings"] = link.crossings ? Json(*link.crossings) : Json(nullptr);
  Json gens = Json::array();
  for (const auto& g : link.symmetry_generators) gens.push_back(to_json(g));
  j["symmetry_generators"] = gens;
  if (!link.symmetry_orientations.empty()) j["symmetry_orientations"] = link.symmetry_orientations;
  j["symmetry_order"] = group.order();
  j["transitivity_degree"] = transitivity_degree(group);
  j["hyperbolicity"] = to_string(link.hyperbolicity);
  j["hyperbolicity_note"] = link.hyperbolicity_note;
  j["params"] = link.params;
  j["checks"] = Json{{"linking_well_formed", linking_well_formed(link)},
                     {"symmetry_preserves_linking", symmetry_preserves_linking(link)}};
  return j;
}

Json to_json(const HelicalSpec& s) {
  Json j{{"n", s.n},
         {"strands_per_face", s.strands_per_face},
         {"slope", std::to_string(s.slope_numerator) + "/sigma"},
         {"face_sides", s.face_sides},
         {"vertex_degree", s.vertex_degree},
         {"geometry", s.geometry}};
  if (s.rho_window)
    j["rho_window"] = Json::array({round15(s.rho_window->r1), round15(s.rho_window->r2)});
  else
    j["rho_window"] = nullptr;
  j["arc_count"] = s.arc_count;
  j["punctures_per_fiber"] = s.punctures_per_fiber;
  j["torus_knot"] = Json::array({s.torus_p, s.torus_q});
  return j;
}

Json dilatation_report(double tol) {
  const auto d = dilatation(tol);
  const auto tr = transverse_weights(tol);
  const auto tg = tangential_weights(tol);
  const auto eq = balance_residuals(tr);
  const auto m = transition_matrix(biggs_substitution());
  const auto eig = perron_eigen(m, tol);
  const auto eig_t = perron_eigen(m.transposed(), tol);

  Json residuals{{"eq_ab_cd", round15(eq[0])},
                 {"eq_df_ef", round15(eq[1])},
                 {"eq_combined", round15(eq[2])},
                 {"eigen", round15(eig.residual)},
                 {"eigen_transpose", round15(eig_t.residual)},
                 {"char_poly", round15(std::abs(d.lambda * d.lambda - 6.0 * d.lambda + 1.0))},
                 {"inverse_product", round15(std::abs(d.lambda * d.lambda_inverse - 1.0))}};
  return Json{{"lambda", round15(d.lambda)},
              {"lambda_inverse", round15(d.lambda_inverse)},
              {"w", round15(tr.weights.at("w"))},
              {"z", round15(tr.weights.at("z"))},
              {"w_tilde", round15(tg.weights.at("w~"))},
              {"z_tilde", round15(tg.weights.at("z~"))},
              {"semicircular_weight", round15(tr.semicircular())},
              {"short_branch_weight", round15(tr.short_branch())},
              {"tolerance", tol},
              {"residuals", residuals}};
}

std::string face_adjacency_dot(const RotationMap& map) {
  const auto adj = face_adjacency(map);
  std::ostringstream os;
  os << "graph faces {\n";
  for (std::size_t i = 0; i < adj.size(); ++i) os << "  f" << i << ";\n";
  for (std::size_t i = 0; i < adj.size(); ++i)
    for (std::size_t j = i; j < adj.size(); ++j)
      for (int e = 0; e < adj[i][j]; ++e) os << "  f" << i << " -- f" << j << ";\n";
  os << "}\n";
  return os.str();
}

std::string dart_dot(const RotationMap& map) {
  std::ostringstream os;
  os << "digraph darts {\n";
  const auto& labels = map.dart_labels();
  for (std::uint32_t d = 0; d < map.dart_count(); ++d) {
    os << "  d" << d;
    if (!labels.empty()) os << " [label=\"" << labels[d].first << "," << labels[d].second << "\"]";
    os << ";\n";
  }
  for (std::uint32_t d = 0; d < map.dart_count(); ++d) {
    os << "  d" << d << " -> d" << map.phi()(d) << ";\n";
    if (d < map.alpha()(d))
      os << "  d" << d << " -> d" << map.alpha()(d) << " [style=dashed, dir=both];\n";
  }
  os << "}\n";
  return os.str();
}

std::string substitution_dot(const SubstitutionRules& rules) {
  const auto m = transition_matrix(rules);
  std::ostringstream os;
  os << "digraph substitution {\n";
  for (const auto& l : m.labels) os << "  \"" << l << "\";\n";
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j)
      if (m.entries[i][j] > 0)
        os << "  \"" << m.labels[i] << "\" -> \"" << m.labels[j] << "\" [label=\""
           << m.entries[i][j] << "\"];\n";
  os << "}\n";
  return os.str();
}

std::vector<CensusRow> census(int lo, int hi, std::uint64_t cap) {
  std::vector<CensusRow> rows;
  for (int n = std::max(lo, 4); n <= hi; ++n) {
    int p = 0;
    int k = 0;
    if (!prime_power_decompose(n, p, k)) continue;
    const Field field(p, k);
    const auto hl = helical_link(field);
    const auto group = hl.blueprint.symmetry_group(cap);
    CensusRow row;
    row.n = n;
    row.cusps = static_cast<int>(hl.blueprint.component_count());
    row.complete_linking = hl.blueprint.linking_kind == LinkingKind::Complete;
    row.symmetry_order = group.order();
    row.transitivity_degree = transitivity_degree(group);
    row.genus = hl.blueprint.params.at("genus").get<int>();
    rows.push_back(row);
  }
  return rows;
}

Json to_json(const std::vector<CensusRow>& rows) {
  Json a = Json::array();
  for (const auto& r : rows)
    a.push_back(Json{{"n", r.n},
                     {"cusps", r.cusps},
                     {"genus", r.genus},
                     {"complete_linking", r.complete_linking},
                     {"symmetry_order", r.symmetry_order},
                     {"transitivity_degree", r.transitivity_degree},
                     {"two_transitive", r.transitivity_degree >= 2}});
  return a;
}

}  // namespace csl
