#include "csl/csl.h"

#include <atomic>
#include <cstring>
#include <exception>
#include <memory>
#include <new>
#include <string>

#include "csl/error.hpp"
#include "csl/finite_field.hpp"
#include "csl/link_families.hpp"
#include "csl/perm_action.hpp"
#include "csl/regular_map.hpp"
#include "csl/report.hpp"
#include "csl/train_track.hpp"

struct csl_field {
  csl::Field field;
};

struct csl_group {
  csl::PermGroup group;
};

struct csl_map {
  csl::RotationMap map;
};

struct csl_link {
  csl::LinkBlueprint blueprint;
  std::optional<csl::HelicalSpec> helical;
};

namespace {

thread_local std::string last_error;
std::atomic<std::uint64_t> group_cap{csl::kDefaultGroupCap};

csl_status status_of(csl::ErrorCode code) {
  switch (code) {
    case csl::ErrorCode::InvalidArgument: return CSL_ERR_INVALID_ARGUMENT;
    case csl::ErrorCode::NotPrime: return CSL_ERR_NOT_PRIME;
    case csl::ErrorCode::NotPrimePower: return CSL_ERR_NOT_PRIME_POWER;
    case csl::ErrorCode::MismatchedField: return CSL_ERR_MISMATCHED_FIELD;
    case csl::ErrorCode::DegreeMismatch: return CSL_ERR_DEGREE_MISMATCH;
    case csl::ErrorCode::CapExceeded: return CSL_ERR_CAP_EXCEEDED;
    case csl::ErrorCode::OutOfRange: return CSL_ERR_OUT_OF_RANGE;
    case csl::ErrorCode::NotCyclic: return CSL_ERR_NOT_CYCLIC;
    case csl::ErrorCode::Spherical: return CSL_ERR_SPHERICAL;
    case csl::ErrorCode::NotPrimitive: return CSL_ERR_NOT_PRIMITIVE;
    case csl::ErrorCode::NoConvergence: return CSL_ERR_NO_CONVERGENCE;
  }
  return CSL_ERR_INTERNAL;
}

csl_status fail(csl_status s, std::string msg) {
  last_error = std::move(msg);
  return s;
}

// Runs `body`, translating exceptions into status codes.
template <class F>
csl_status guarded(F&& body) {
  try {
    return body();
  } catch (const csl::Error& e) {
    return fail(status_of(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CSL_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CSL_ERR_INTERNAL, e.what());
  }
}

csl_status write_text(const std::string& text, char* buf, std::size_t cap, std::size_t* needed) {
  const std::size_t need = text.size() + 1;
  if (needed) *needed = need;
  if (cap < need) {
    if (buf == nullptr && cap == 0) return CSL_OK;
    return fail(CSL_ERR_BUFFER_TOO_SMALL,
                "buffer holds " + std::to_string(cap) + " bytes, need " + std::to_string(need));
  }
  std::memcpy(buf, text.c_str(), need);
  return CSL_OK;
}

csl_status null_arg(const char* name) {
  return fail(CSL_ERR_INVALID_ARGUMENT, std::string(name) + " is null");
}

template <class T>
csl_status emit(T* value, T** out) {
  *out = value;
  return CSL_OK;
}

}  // namespace

extern "C" {

const char* csl_version(void) { return "0.1.0"; }

const char* csl_status_string(csl_status status) {
  switch (status) {
    case CSL_OK: return "ok";
    case CSL_ERR_INVALID_ARGUMENT: return "invalid argument";
    case CSL_ERR_NOT_PRIME: return "not prime";
    case CSL_ERR_NOT_PRIME_POWER: return "not a prime power";
    case CSL_ERR_MISMATCHED_FIELD: return "mismatched field";
    case CSL_ERR_DEGREE_MISMATCH: return "degree mismatch";
    case CSL_ERR_CAP_EXCEEDED: return "cap exceeded";
    case CSL_ERR_OUT_OF_RANGE: return "out of range";
    case CSL_ERR_NOT_CYCLIC: return "permutation not cyclic";
    case CSL_ERR_SPHERICAL: return "spherical geometry";
    case CSL_ERR_NOT_PRIMITIVE: return "matrix not primitive";
    case CSL_ERR_NO_CONVERGENCE: return "no convergence";
    case CSL_ERR_BUFFER_TOO_SMALL: return "buffer too small";
    case CSL_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* csl_last_error(void) { return last_error.c_str(); }

void csl_set_group_cap(uint64_t cap) { group_cap = cap; }
uint64_t csl_get_group_cap(void) { return group_cap; }

// ---- finite fields

csl_status csl_field_create(int p, int k, csl_field** out) {
  if (!out) return null_arg("out");
  return guarded([&] { return emit(new csl_field{csl::Field(p, k)}, out); });
}

csl_status csl_field_create_order(int n, csl_field** out) {
  if (!out) return null_arg("out");
  return guarded([&] { return emit(new csl_field{csl::Field::of_order(n)}, out); });
}

void csl_field_destroy(csl_field* field) { delete field; }

int csl_field_order(const csl_field* field) { return field ? field->field.order() : 0; }

csl_status csl_field_modulus(const csl_field* field, char* buf, size_t cap, size_t* needed) {
  if (!field) return null_arg("field");
  std::string s;
  const auto& m = field->field.spec().modulus;
  for (std::size_t i = 0; i < m.size(); ++i) s += (i ? "," : "") + std::to_string(m[i]);
  return write_text(s, buf, cap, needed);
}

csl_status csl_field_add(const csl_field* field, const char* a, const char* b, char* buf,
                         size_t cap, size_t* needed) {
  if (!field || !a || !b) return null_arg("field/a/b");
  return guarded([&] {
    const auto& f = field->field;
    return write_text(f.to_string(f.add(f.parse(a), f.parse(b))), buf, cap, needed);
  });
}

csl_status csl_field_mul(const csl_field* field, const char* a, const char* b, char* buf,
                         size_t cap, size_t* needed) {
  if (!field || !a || !b) return null_arg("field/a/b");
  return guarded([&] {
    const auto& f = field->field;
    return write_text(f.to_string(f.mul(f.parse(a), f.parse(b))), buf, cap, needed);
  });
}

csl_status csl_field_primitive(const csl_field* field, char* buf, size_t cap, size_t* needed) {
  if (!field) return null_arg("field");
  return write_text(field->field.to_string(field->field.primitive()), buf, cap, needed);
}

csl_status csl_field_index(const csl_field* field, const char* element, int* out) {
  if (!field || !element || !out) return null_arg("field/element/out");
  return guarded([&] {
    *out = field->field.index_of(field->field.parse(element));
    return CSL_OK;
  });
}

// ---- permutation groups

csl_status csl_group_create(size_t degree, const uint32_t* images, size_t generator_count,
                            csl_group** out) {
  if (!out || (!images && generator_count)) return null_arg("out/images");
  return guarded([&] {
    std::vector<csl::Permutation> gens;
    for (std::size_t g = 0; g < generator_count; ++g)
      gens.emplace_back(std::vector<std::uint32_t>(images + g * degree, images + (g + 1) * degree));
    return emit(new csl_group{csl::PermGroup::closure(std::move(gens), group_cap)}, out);
  });
}

csl_status csl_affine_group_create(const csl_field* field, csl_group** out) {
  if (!field || !out) return null_arg("field/out");
  return guarded([&] { return emit(new csl_group{csl::affine_group(field->field, group_cap)}, out); });
}

void csl_group_destroy(csl_group* group) { delete group; }

size_t csl_group_degree(const csl_group* group) { return group ? group->group.degree() : 0; }

csl_status csl_group_order(const csl_group* group, uint64_t* out) {
  if (!group || !out) return null_arg("group/out");
  *out = group->group.order();
  return CSL_OK;
}

csl_status csl_group_is_k_transitive(const csl_group* group, size_t k, int* out) {
  if (!group || !out) return null_arg("group/out");
  return guarded([&] {
    *out = csl::is_k_transitive(group->group, k) ? 1 : 0;
    return CSL_OK;
  });
}

csl_status csl_group_transitivity_degree(const csl_group* group, size_t* out) {
  if (!group || !out) return null_arg("group/out");
  return guarded([&] {
    *out = csl::transitivity_degree(group->group);
    return CSL_OK;
  });
}

csl_status csl_group_json(const csl_group* group, char* buf, size_t cap, size_t* needed) {
  if (!group) return null_arg("group");
  return guarded([&] { return write_text(csl::to_json(group->group).dump(), buf, cap, needed); });
}

// ---- regular maps

csl_status csl_genus_formula(int64_t n, int* out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    *out = csl::genus_formula(n);
    return CSL_OK;
  });
}

csl_status csl_biggs_map_create(const csl_field* field, csl_map** out) {
  if (!field || !out) return null_arg("field/out");
  return guarded([&] { return emit(new csl_map{csl::biggs_map(field->field)}, out); });
}

void csl_map_destroy(csl_map* map) { delete map; }

csl_status csl_map_get_summary(const csl_map* map, csl_map_summary* out) {
  if (!map || !out) return null_arg("map/out");
  return guarded([&] {
    const auto s = csl::map_summary(map->map);
    *out = csl_map_summary{s.n,      s.vertices, s.edges, s.faces, s.euler, s.genus,
                           s.formula_genus.value_or(-1), s.vertex_degree.value_or(-1)};
    return CSL_OK;
  });
}

csl_status csl_map_face_adjacency_complete(const csl_map* map, int* out) {
  if (!map || !out) return null_arg("map/out");
  return guarded([&] {
    *out = csl::face_adjacency_complete(map->map) ? 1 : 0;
    return CSL_OK;
  });
}

csl_status csl_map_affine_automorphism(const csl_map* map, const csl_field* field, int s, int t,
                                       int* is_automorphism, uint32_t* face_images) {
  if (!map || !field || !is_automorphism) return null_arg("map/field/is_automorphism");
  return guarded([&] {
    const int n = field->field.order();
    if (s < 0 || s >= n || t < 0 || t >= n)
      return fail(CSL_ERR_OUT_OF_RANGE, "element index out of range");
    const auto g = csl::affine_map_automorphism(map->map, field->field, s, t);
    *is_automorphism = csl::is_map_automorphism(map->map, g) ? 1 : 0;
    if (face_images && *is_automorphism) {
      const auto f = csl::induced_face_permutation(map->map, g);
      for (std::size_t i = 0; i < f.degree(); ++i) face_images[i] = f(static_cast<std::uint32_t>(i));
    }
    return CSL_OK;
  });
}

csl_status csl_map_json(const csl_map* map, char* buf, size_t cap, size_t* needed) {
  if (!map) return null_arg("map");
  return guarded([&] {
    return write_text(csl::to_json(csl::map_summary(map->map)).dump(), buf, cap, needed);
  });
}

csl_status csl_map_dot(const csl_map* map, int what, char* buf, size_t cap, size_t* needed) {
  if (!map) return null_arg("map");
  if (what != 0 && what != 1) return fail(CSL_ERR_INVALID_ARGUMENT, "what must be 0 or 1");
  return guarded([&] {
    return write_text(what == 0 ? csl::face_adjacency_dot(map->map) : csl::dart_dot(map->map), buf,
                      cap, needed);
  });
}

// ---- link families

csl_status csl_braid_permutation(int strands, const int* word, size_t length, uint32_t* images) {
  if ((!word && length) || !images) return null_arg("word/images");
  return guarded([&] {
    const auto p = csl::braid_permutation(csl::BraidWord{strands, std::vector<int>(word, word + length)});
    for (std::size_t i = 0; i < p.degree(); ++i) images[i] = p(static_cast<std::uint32_t>(i));
    return CSL_OK;
  });
}

csl_status csl_link_chain(int n, int t, csl_link** out) {
  if (!out) return null_arg("out");
  return guarded([&] { return emit(new csl_link{csl::chain_link(n, t), std::nullopt}, out); });
}

csl_status csl_link_braid_closure(int strands, const int* word, size_t length, int m,
                                  csl_link** out) {
  if (!out || (!word && length)) return null_arg("out/word");
  return guarded([&] {
    csl::BraidWord b{strands, std::vector<int>(word, word + length)};
    return emit(new csl_link{csl::cyclic_braid_closure(b, m), std::nullopt}, out);
  });
}

csl_status csl_link_cube(csl_link** out) {
  if (!out) return null_arg("out");
  return guarded([&] { return emit(new csl_link{csl::cube_link(), std::nullopt}, out); });
}

csl_status csl_link_cube_edge(csl_link** out) {
  if (!out) return null_arg("out");
  return guarded([&] { return emit(new csl_link{csl::cube_edge_link(), std::nullopt}, out); });
}

csl_status csl_link_icosahedral(csl_link** out) {
  if (!out) return null_arg("out");
  return guarded([&] { return emit(new csl_link{csl::icosahedral_link(), std::nullopt}, out); });
}

csl_status csl_link_helical(const csl_field* field, csl_link** out) {
  if (!field || !out) return null_arg("field/out");
  return guarded([&] {
    auto hl = csl::helical_link(field->field);
    return emit(new csl_link{std::move(hl.blueprint), std::move(hl.spec)}, out);
  });
}

void csl_link_destroy(csl_link* link) { delete link; }

size_t csl_link_component_count(const csl_link* link) {
  return link ? link->blueprint.component_count() : 0;
}

csl_status csl_link_symmetry_group(const csl_link* link, csl_group** out) {
  if (!link || !out) return null_arg("link/out");
  return guarded([&] { return emit(new csl_group{link->blueprint.symmetry_group(group_cap)}, out); });
}

csl_status csl_link_json(const csl_link* link, char* buf, size_t cap, size_t* needed) {
  if (!link) return null_arg("link");
  return guarded([&] {
    auto j = csl::to_json(link->blueprint, group_cap);
    if (link->helical) j["helical"] = csl::to_json(*link->helical);
    return write_text(j.dump(), buf, cap, needed);
  });
}

csl_status csl_polygon_radii(int p, int q, double* r1, double* r2, int* hyperbolic) {
  if (!r1 || !r2) return null_arg("r1/r2");
  return guarded([&] {
    const auto r = csl::polygon_radii(p, q);
    *r1 = r.r1;
    *r2 = r.r2;
    if (hyperbolic) *hyperbolic = r.hyperbolic ? 1 : 0;
    return CSL_OK;
  });
}

// ---- train tracks

csl_status csl_perron_eigen(const int64_t* entries, size_t dim, double tol, double* lambda,
                            double* vector) {
  if (!entries || !lambda || !vector) return null_arg("entries/lambda/vector");
  return guarded([&] {
    csl::TransitionMatrix m;
    for (std::size_t i = 0; i < dim; ++i) {
      m.labels.push_back(std::to_string(i));
      m.entries.emplace_back(entries + i * dim, entries + (i + 1) * dim);
    }
    const auto r = csl::perron_eigen(m, tol);
    *lambda = r.lambda;
    for (std::size_t i = 0; i < dim; ++i) vector[i] = r.vector[i];
    return CSL_OK;
  });
}

csl_status csl_dilatation(double tol, csl_dilatation_report* out) {
  if (!out) return null_arg("out");
  return guarded([&] {
    const auto d = csl::dilatation(tol);
    const auto tr = csl::transverse_weights(tol);
    const auto tg = csl::tangential_weights(tol);
    const auto eq = csl::balance_residuals(tr);
    const auto m = csl::transition_matrix(csl::biggs_substitution());
    *out = csl_dilatation_report{d.lambda,
                                 d.lambda_inverse,
                                 tr.weights.at("w"),
                                 tr.weights.at("z"),
                                 tg.weights.at("w~"),
                                 tg.weights.at("z~"),
                                 eq[0],
                                 eq[1],
                                 eq[2],
                                 csl::perron_eigen(m.transposed(), tol).lambda};
    return CSL_OK;
  });
}

csl_status csl_dilatation_json(double tol, char* buf, size_t cap, size_t* needed) {
  return guarded([&] { return write_text(csl::dilatation_report(tol).dump(), buf, cap, needed); });
}

csl_status csl_substitution_dot(char* buf, size_t cap, size_t* needed) {
  return guarded([&] {
    return write_text(csl::substitution_dot(csl::biggs_substitution()), buf, cap, needed);
  });
}

csl_status csl_census_json(int lo, int hi, char* buf, size_t cap, size_t* needed) {
  return guarded([&] {
    return write_text(csl::to_json(csl::census(lo, hi, group_cap)).dump(), buf, cap, needed);
  });
}

}  // extern "C"
