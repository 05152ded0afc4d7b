#include "levikohn/problem.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "levikohn/error.hpp"
#include "levikohn/parser.hpp"

namespace levikohn {

namespace {

using json = nlohmann::json;

[[noreturn]] void bad(const std::string& where, const std::string& what) { throw InputError(where + ": " + what); }

// Re-raises parser errors with the JSON location prepended.
template <class F>
auto in_section(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const InputError& e) {
    bad(where, e.what());
  }
}

std::string expr_text(const json& v, const std::string& where) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return v.dump();
  if (v.is_number()) bad(where, "decimal numbers are not allowed; use a string such as \"1/4\"");
  bad(where, "expected an expression string");
}

std::size_t count_of(const json& v, const std::string& where) {
  if (!v.is_number_integer() || v.get<long long>() < 0) bad(where, "expected a non-negative integer");
  return v.get<std::size_t>();
}

const json& object_at(const json& root, const char* key) {
  const json& v = root.at(key);
  if (!v.is_object()) bad(key, "expected an object of named entries");
  return v;
}

std::vector<std::vector<GaussianRational>> read_matrix(const json& v, std::size_t n, const std::string& where) {
  if (!v.is_array() || v.size() != n) bad(where, "expected an " + std::to_string(n) + "x" + std::to_string(n) + " matrix");
  std::vector<std::vector<GaussianRational>> m;
  for (std::size_t i = 0; i < n; ++i) {
    const json& row = v[i];
    if (!row.is_array() || row.size() != n) bad(where, "row " + std::to_string(i + 1) + " has the wrong length");
    std::vector<GaussianRational> out;
    for (std::size_t j = 0; j < n; ++j) {
      const std::string w = where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
      const std::string s = expr_text(row[j], w);
      out.push_back(in_section(w, [&] { return parse_constant(s); }));
    }
    m.push_back(std::move(out));
  }
  return m;
}

Box read_box(const json& v, std::size_t n) {
  if (!v.is_array() || (v.size() != 1 && v.size() != 2 * n))
    bad("sampling.box", "expected 1 or " + std::to_string(2 * n) + " [lo, hi] intervals");
  Box box;
  for (const auto& iv : v) {
    if (!iv.is_array() || iv.size() != 2 || !iv[0].is_number() || !iv[1].is_number())
      bad("sampling.box", "each interval is [lo, hi]");
    const double lo = iv[0].get<double>(), hi = iv[1].get<double>();
    if (!(lo <= hi)) bad("sampling.box", "interval with lo > hi");
    box.emplace_back(lo, hi);
  }
  if (box.size() == 1) box.assign(2 * n, box[0]);
  return box;
}

HoloMap read_map(const json& v, std::size_t n, const std::string& where) {
  std::size_t params = 0;
  const json* comps = &v;
  if (v.is_object()) {
    if (v.contains("params")) params = count_of(v.at("params"), where + ".params");
    if (!v.contains("components")) bad(where, "missing \"components\"");
    comps = &v.at("components");
  }
  if (!comps->is_array() || comps->size() != n)
    bad(where, "expected " + std::to_string(n) + " component expressions");
  std::vector<std::string> texts;
  for (std::size_t k = 0; k < n; ++k) texts.push_back(expr_text((*comps)[k], where + "[" + std::to_string(k) + "]"));
  if (params == 0) {
    // the largest w index used anywhere
    params = 1;
    for (const auto& t : texts) {
      ParseOptions o;
      o.var = "w";
      params = std::max(params, in_section(where, [&] { return parse_expression(t, o); }).dim());
    }
  }
  std::vector<Polynomial> out;
  for (std::size_t k = 0; k < n; ++k) {
    ParseOptions o;
    o.var = "w";
    o.dim = params;
    out.push_back(in_section(where + "[" + std::to_string(k) + "]", [&] { return parse_expression(texts[k], o); }));
  }
  return in_section(where, [&] { return HoloMap::from(params, std::move(out)); });
}

PolyVectorField read_field(const json& v, std::size_t n, const std::string& where) {
  if (!v.is_object() || !v.contains("coeffs")) bad(where, "expected {\"kind\": ..., \"coeffs\": [...]}");
  const std::string kind = v.value("kind", std::string("holomorphic"));
  const json& c = v.at("coeffs");
  if (!c.is_array()) bad(where + ".coeffs", "expected an array");
  std::vector<Polynomial> coeffs;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const std::string w = where + ".coeffs[" + std::to_string(k) + "]";
    const std::string s = expr_text(c[k], w);
    coeffs.push_back(in_section(w, [&] { return parse_expression(s, n); }));
  }
  if (kind == "holomorphic") {
    if (coeffs.size() != n) bad(where, "a holomorphic field has " + std::to_string(n) + " coefficients");
    return in_section(where, [&] { return PolyVectorField::holomorphic(std::move(coeffs)); });
  }
  if (kind == "real") {
    if (coeffs.size() != 2 * n) bad(where, "a real field has " + std::to_string(2 * n) + " coefficients");
    return in_section(where, [&] { return PolyVectorField::real(std::move(coeffs)); });
  }
  bad(where + ".kind", "expected \"holomorphic\" or \"real\"");
}

ProblemFile parse_json(const json& root) {
  static const char* const known[] = {"dimension", "defining_function", "metric", "varieties", "vector_fields",
                                      "holo_maps", "points",            "q",      "sampling",  "budgets"};
  if (!root.is_object()) bad("problem", "top level must be a JSON object");
  for (const auto& [key, _] : root.items())
    if (std::find(std::begin(known), std::end(known), key) == std::end(known)) bad(key, "unknown section");

  ProblemFile p;
  std::optional<std::string> r_text;
  if (root.contains("defining_function")) r_text = expr_text(root.at("defining_function"), "defining_function");
  if (root.contains("dimension")) {
    p.dimension = count_of(root.at("dimension"), "dimension");
  } else if (r_text) {
    p.dimension = in_section("defining_function", [&] { return parse_defining_function(*r_text).dim(); });
  } else {
    bad("dimension", "missing (and no defining_function to infer it from)");
  }
  if (p.dimension < 1 || p.dimension > 9) bad("dimension", "must be between 1 and 9");
  const std::size_t n = p.dimension;

  if (r_text) p.defining_function = in_section("defining_function", [&] { return parse_defining_function(*r_text, n); });

  if (root.contains("metric")) {
    const json& m = root.at("metric");
    if (m.is_object()) {
      for (const auto& [name, v] : m.items()) p.metrics[name] = read_matrix(v, n, "metric." + name);
    } else {
      p.metrics["file"] = read_matrix(m, n, "metric");
    }
  }
  if (root.contains("varieties")) {
    for (const auto& [name, v] : object_at(root, "varieties").items()) {
      const std::string where = "varieties." + name;
      if (!v.is_array()) bad(where, "expected a list of expression strings");
      std::vector<Polynomial> gens;
      for (std::size_t k = 0; k < v.size(); ++k) {
        const std::string w = where + "[" + std::to_string(k) + "]";
        const std::string s = expr_text(v[k], w);
        gens.push_back(in_section(w, [&] { return parse_expression(s, n); }));
      }
      p.varieties[name] = in_section(where, [&] { return VarietyIdeal::from(n, std::move(gens)).generators; });
    }
  }
  if (root.contains("vector_fields"))
    for (const auto& [name, v] : object_at(root, "vector_fields").items())
      p.vector_fields.emplace(name, read_field(v, n, "vector_fields." + name));
  if (root.contains("holo_maps"))
    for (const auto& [name, v] : object_at(root, "holo_maps").items())
      p.holo_maps.emplace(name, read_map(v, n, "holo_maps." + name));
  if (root.contains("points")) {
    for (const auto& [name, v] : object_at(root, "points").items()) {
      const std::string where = "points." + name;
      if (!v.is_array() || v.size() != n) bad(where, "expected " + std::to_string(n) + " coordinates");
      std::vector<GaussianRational> pt;
      for (std::size_t k = 0; k < n; ++k) {
        const std::string w = where + "[" + std::to_string(k) + "]";
        const std::string s = expr_text(v[k], w);
        pt.push_back(in_section(w, [&] { return parse_constant(s); }));
      }
      p.points[name] = std::move(pt);
    }
  }
  if (root.contains("q")) p.q = count_of(root.at("q"), "q");
  if (root.contains("sampling")) {
    const json& s = root.at("sampling");
    if (!s.is_object()) bad("sampling", "expected an object");
    SamplingSpec spec;
    spec.box = s.contains("box") ? read_box(s.at("box"), n) : Box(2 * n, {-0.5, 0.5});
    if (s.contains("count")) spec.count = count_of(s.at("count"), "sampling.count");
    if (s.contains("seed")) spec.seed = count_of(s.at("seed"), "sampling.seed");
    p.sampling = spec;
  }
  if (root.contains("budgets")) {
    const json& b = root.at("budgets");
    if (!b.is_object()) bad("budgets", "expected an object");
    for (const auto& [key, v] : b.items()) {
      const std::size_t val = count_of(v, "budgets." + key);
      if (key == "max_h")
        p.budgets.max_h = val;
      else if (key == "max_order")
        p.budgets.max_order = val;
      else if (key == "groebner")
        p.budgets.groebner = val;
      else
        bad("budgets." + key, "unknown budget");
    }
  }
  return p;
}

}  // namespace

ProblemFile parse_problem(std::string_view text) {
  json root;
  try {
    root = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  try {
    return parse_json(root);
  } catch (const json::exception& e) {
    throw InputError(std::string("problem file: ") + e.what());
  }
}

ProblemFile load_problem(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

}  // namespace levikohn
