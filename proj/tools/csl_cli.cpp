// csl: batch front end over the C interface.
//
// Exit status: 0 when every check reported by the subcommand holds, 1 when a
// check fails (or a computation hits a cap), 2 on usage errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "csl/csl.h"

using Json = nlohmann::ordered_json;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

struct Failure {
  int exit_code;
  std::string message;
};

int exit_code_for(csl_status s) {
  switch (s) {
    case CSL_ERR_CAP_EXCEEDED:
    case CSL_ERR_NO_CONVERGENCE:
    case CSL_ERR_NOT_PRIMITIVE:
    case CSL_ERR_INTERNAL:
      return kCheckFailed;
    default:
      return kUsage;
  }
}

void check(csl_status s) {
  if (s != CSL_OK)
    throw Failure{exit_code_for(s), std::string(csl_status_string(s)) + ": " + csl_last_error()};
}

// Two-pass read of a text-producing call.
std::string read_text(const std::function<csl_status(char*, size_t, size_t*)>& call) {
  size_t needed = 0;
  csl_status s = call(nullptr, 0, &needed);
  if (s != CSL_OK && s != CSL_ERR_BUFFER_TOO_SMALL) check(s);
  std::string out(needed, '\0');
  check(call(out.data(), out.size(), &needed));
  out.resize(needed ? needed - 1 : 0);
  return out;
}

template <class T, void (*Destroy)(T*)>
struct Deleter {
  void operator()(T* p) const { Destroy(p); }
};
using FieldPtr = std::unique_ptr<csl_field, Deleter<csl_field, csl_field_destroy>>;
using MapPtr = std::unique_ptr<csl_map, Deleter<csl_map, csl_map_destroy>>;
using LinkPtr = std::unique_ptr<csl_link, Deleter<csl_link, csl_link_destroy>>;

struct Options {
  std::optional<int> n;
  std::optional<int> p;
  std::optional<int> k;
  int t = 0;
  int m = 1;
  std::string format = "json";
  std::string out;
  std::optional<double> tol;
  std::string word = "1,3,-2,-4";
  std::string family;
  std::string range = "4..13";
};

FieldPtr make_field(const Options& o, int default_n) {
  csl_field* f = nullptr;
  if (o.p || o.k) {
    if (o.n) throw Failure{kUsage, "give either --n or --p/--k"};
    check(csl_field_create(o.p.value_or(0), o.k.value_or(1), &f));
  } else {
    check(csl_field_create_order(o.n.value_or(default_n), &f));
  }
  return FieldPtr(f);
}

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> word;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t used = 0;
      word.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Failure{kUsage, "bad braid generator '" + item + "'"};
    }
  }
  return word;
}

std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) throw Failure{kUsage, "range must look like LO..HI"};
  try {
    size_t a = 0;
    size_t b = 0;
    const std::string lo = text.substr(0, dots);
    const std::string hi = text.substr(dots + 2);
    const int l = std::stoi(lo, &a);
    const int h = std::stoi(hi, &b);
    if (a != lo.size() || b != hi.size()) throw std::invalid_argument(text);
    return {l, h};
  } catch (const std::exception&) {
    throw Failure{kUsage, "range must look like LO..HI"};
  }
}

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "-";
  return v.dump();
}

// Aligned columns; one row per object, columns from the keys of the first.
std::string table(const std::vector<Json>& rows, const std::vector<std::string>& keys) {
  std::vector<size_t> width(keys.size());
  for (size_t c = 0; c < keys.size(); ++c) {
    width[c] = keys[c].size();
    for (const auto& r : rows) width[c] = std::max(width[c], cell(r.value(keys[c], Json())).size());
  }
  std::ostringstream os;
  const auto emit = [&](size_t c, const std::string& text) {
    if (c) os << "  ";
    os << text;
    if (c + 1 < keys.size()) os << std::string(width[c] - text.size(), ' ');
  };
  for (size_t c = 0; c < keys.size(); ++c) emit(c, keys[c]);
  os << '\n';
  for (const auto& r : rows) {
    for (size_t c = 0; c < keys.size(); ++c) emit(c, cell(r.value(keys[c], Json())));
    os << '\n';
  }
  return os.str();
}

std::string key_values(const Json& obj, const std::string& prefix = "") {
  std::ostringstream os;
  for (const auto& [k, v] : obj.items()) {
    if (v.is_object())
      os << key_values(v, prefix + k + ".");
    else
      os << prefix << k << " = " << cell(v) << '\n';
  }
  return os.str();
}

void require_format(const Options& o, bool dot_allowed) {
  if (o.format == "dot" && !dot_allowed) throw Failure{kUsage, "dot output not available here"};
}

struct Result {
  std::string text;
  bool ok = true;
};

Result cmd_map(const Options& o) {
  require_format(o, true);
  const auto field = make_field(o, 5);
  csl_map* raw = nullptr;
  check(csl_biggs_map_create(field.get(), &raw));
  const MapPtr map(raw);
  const Json j = Json::parse(read_text([&](char* b, size_t c, size_t* n) {
    return csl_map_json(map.get(), b, c, n);
  }));
  Result r;
  r.ok = j.at("match").get<bool>();
  if (o.format == "dot")
    r.text = read_text([&](char* b, size_t c, size_t* n) { return csl_map_dot(map.get(), 0, b, c, n); });
  else if (o.format == "table")
    r.text = table({j}, {"n", "V", "E", "F", "euler", "genus", "formula_genus", "match"});
  else
    r.text = j.dump(2) + "\n";
  return r;
}

LinkPtr make_link(const std::string& family, const Options& o) {
  csl_link* raw = nullptr;
  if (family == "chain") {
    check(csl_link_chain(o.n.value_or(6), o.t, &raw));
  } else if (family == "braid") {
    const auto word = parse_word(o.word);
    check(csl_link_braid_closure(o.n.value_or(5), word.data(), word.size(), o.m, &raw));
  } else if (family == "cube") {
    check(csl_link_cube(&raw));
  } else if (family == "cube_edge") {
    check(csl_link_cube_edge(&raw));
  } else if (family == "icosahedral") {
    check(csl_link_icosahedral(&raw));
  } else if (family == "helical") {
    const auto field = make_field(o, 7);
    check(csl_link_helical(field.get(), &raw));
  } else {
    throw Failure{kUsage, "unknown family '" + family + "'"};
  }
  return LinkPtr(raw);
}

Json link_json(const csl_link* link) {
  return Json::parse(
      read_text([&](char* b, size_t c, size_t* n) { return csl_link_json(link, b, c, n); }));
}

bool link_checks_hold(const Json& j) {
  for (const auto& [k, v] : j.at("checks").items())
    if (!v.get<bool>()) return false;
  return true;
}

Json transitivity_row(const Json& j) {
  return Json{{"family", j.at("family")},
              {"n_components", j.at("n_components")},
              {"symmetry_order", j.at("symmetry_order")},
              {"transitivity_degree", j.at("transitivity_degree")},
              {"checks_ok", link_checks_hold(j)}};
}

Result cmd_transitivity(const Options& o) {
  require_format(o, false);
  const auto link = make_link(o.family, o);
  const Json row = transitivity_row(link_json(link.get()));
  Result r;
  r.ok = row.at("checks_ok").get<bool>();
  r.text = o.format == "table" ? table({row}, {"family", "n_components", "symmetry_order",
                                               "transitivity_degree", "checks_ok"})
                               : row.dump(2) + "\n";
  return r;
}

Result cmd_links(const Options& o) {
  require_format(o, false);
  std::vector<Json> rows;
  Json all = Json::array();
  Result r;
  for (const char* family : {"chain", "braid", "cube", "cube_edge", "icosahedral", "helical"}) {
    const auto link = make_link(family, o);
    const Json j = link_json(link.get());
    r.ok = r.ok && link_checks_hold(j);
    Json row{{"family", j.at("family")},
             {"ambient", j.at("ambient")},
             {"n_components", j.at("n_components")},
             {"linking", j.at("linking").is_string() ? j.at("linking") : Json("matrix")},
             {"symmetry_order", j.at("symmetry_order")},
             {"transitivity_degree", j.at("transitivity_degree")},
             {"hyperbolicity", j.at("hyperbolicity")}};
    rows.push_back(row);
    all.push_back(j);
  }
  r.text = o.format == "table" ? table(rows, {"family", "ambient", "n_components", "linking",
                                              "symmetry_order", "transitivity_degree",
                                              "hyperbolicity"})
                               : all.dump(2) + "\n";
  return r;
}

Result cmd_dilatation(const Options& o) {
  require_format(o, true);
  const double tol = o.tol.value_or(1e-13);
  if (!(tol > 0)) throw Failure{kUsage, "--tol must be positive"};
  const Json j = Json::parse(
      read_text([&](char* b, size_t c, size_t* n) { return csl_dilatation_json(tol, b, c, n); }));
  // Residuals scale with the convergence tolerance; at the default they must
  // sit below 1e-12.
  const double bound = std::max(1e-12, 100.0 * tol);
  Result r;
  for (const auto& [k, v] : j.at("residuals").items()) r.ok = r.ok && v.get<double>() < bound;
  if (o.format == "dot")
    r.text = read_text([](char* b, size_t c, size_t* n) { return csl_substitution_dot(b, c, n); });
  else if (o.format == "table")
    r.text = key_values(j);
  else
    r.text = j.dump(2) + "\n";
  return r;
}

Result cmd_census(const Options& o) {
  require_format(o, false);
  const auto [lo, hi] = parse_range(o.range);
  const Json rows = Json::parse(
      read_text([&](char* b, size_t c, size_t* n) { return csl_census_json(lo, hi, b, c, n); }));
  Result r;
  std::vector<Json> list;
  for (const auto& row : rows) {
    r.ok = r.ok && row.at("cusps") == row.at("n") && row.at("complete_linking").get<bool>() &&
           row.at("two_transitive").get<bool>();
    list.push_back(row);
  }
  r.text = o.format == "table" ? table(list, {"n", "cusps", "genus", "complete_linking",
                                              "symmetry_order", "transitivity_degree",
                                              "two_transitive"})
                               : rows.dump(2) + "\n";
  return r;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "json, table or dot")
      ->check(CLI::IsMember({"json", "table", "dot"}));
  sub->add_option("--out", o.out, "write output to this file");
}

void add_field_flags(CLI::App* sub, Options& o) {
  sub->add_option("--n", o.n, "field order (prime power > 3)");
  sub->add_option("--p", o.p, "field characteristic");
  sub->add_option("--k", o.k, "field degree");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cusp-symmetry constructions and checks"};
  app.require_subcommand(1);
  app.set_version_flag("--version", csl_version());
  Options o;

  auto* map = app.add_subcommand("map", "rotation-system map over GF(n) and its genus");
  add_field_flags(map, o);
  add_common(map, o);

  auto* tr = app.add_subcommand("transitivity", "symmetry group of a link family");
  tr->add_option("family", o.family, "chain, braid, cube, cube_edge, icosahedral, helical")
      ->required();
  add_field_flags(tr, o);
  tr->add_option("--t", o.t, "chain twist parameter");
  tr->add_option("--m", o.m, "braid power multiplier");
  tr->add_option("--word", o.word, "braid word, comma separated (strands from --n)");
  add_common(tr, o);

  auto* links = app.add_subcommand("links", "summary of every link family");
  add_field_flags(links, o);
  links->add_option("--t", o.t, "chain twist parameter");
  links->add_option("--m", o.m, "braid power multiplier");
  add_common(links, o);

  auto* dil = app.add_subcommand("dilatation", "train-track eigen-system");
  dil->add_option("--tol", o.tol, "power-iteration tolerance");
  add_common(dil, o);

  auto* cen = app.add_subcommand("census", "helical links for prime powers in a range");
  cen->add_option("--range", o.range, "LO..HI (default 4..13)");
  add_common(cen, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (const char* cap = std::getenv("CSL_MAX_GROUP")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(cap, &end, 10);
    if (end == cap || *end != '\0' || v == 0) {
      std::cerr << "error: CSL_MAX_GROUP must be a positive integer\n";
      return kUsage;
    }
    csl_set_group_cap(v);
  }

  try {
    Result r;
    if (*map) {
      r = cmd_map(o);
    } else if (*tr) {
      r = cmd_transitivity(o);
    } else if (*links) {
      r = cmd_links(o);
    } else if (*dil) {
      r = cmd_dilatation(o);
    } else {
      r = cmd_census(o);
    }
    if (o.out.empty()) {
      std::cout << r.text;
    } else {
      std::ofstream f(o.out, std::ios::binary);
      if (!(f << r.text)) {
        std::cerr << "error: cannot write " << o.out << '\n';
        return kUsage;
      }
    }
    if (!r.ok) std::cerr << "check failed\n";
    return r.ok ? kOk : kCheckFailed;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.exit_code;
  }
}
