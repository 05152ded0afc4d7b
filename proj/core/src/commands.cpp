#include "levikohn/commands.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

#include "json.hpp"
#include "levikohn/error.hpp"
#include "levikohn/kohn.hpp"
#include "levikohn/levi.hpp"
#include "levikohn/variety.hpp"

namespace levikohn {

using json = nlohmann::json;

struct Report::Tree {
  json doc;
  int exit_code = 0;
};

int Report::exit_code() const { return tree_->exit_code; }

namespace {

constexpr std::size_t kDefaultMaxSteps = 10;
constexpr std::size_t kDefaultClassifySamples = 64;
constexpr std::size_t kDefaultMaxOrder = 24;

json exact(const GaussianRational& c) { return {{"re", rational_to_string(c.re())}, {"im", rational_to_string(c.im())}}; }

json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return x == 0.0 ? 0.0 : x;  // no "-0.0"
}

json complex_value(std::complex<double> z) { return {{"re", number(z.real())}, {"im", number(z.imag())}}; }

json point_json(const Point& p) {
  json a = json::array();
  for (const auto& z : p) a.push_back(complex_value(z));
  return a;
}

json polys(const std::vector<Polynomial>& ps, const std::string& var = "z") {
  json a = json::array();
  for (const auto& p : ps) a.push_back(to_string(p, var));
  return a;
}

json poly_matrix(const PolyMatrix& m) {
  json a = json::array();
  for (const auto& row : m) a.push_back(polys(row));
  return a;
}

json complex_matrix(const linalg::CMatrix& m) {
  json a = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(complex_value(m(i, j)));
    a.push_back(row);
  }
  return a;
}

json doubles(const std::vector<double>& v) {
  json a = json::array();
  for (double x : v) a.push_back(number(x));
  return a;
}

Point to_point(const std::vector<GaussianRational>& exact_point) {
  Point p;
  for (const auto& c : exact_point) p.push_back(c.to_complex());
  return p;
}

DefiningFunction require_boundary(const ProblemFile& p) {
  if (!p.defining_function) throw InputError("problem file has no defining_function");
  return DefiningFunction(*p.defining_function);
}

template <class Map>
const typename Map::mapped_type& select(const Map& m, const std::optional<std::string>& name, const char* section,
                                        const char* flag, std::string* chosen = nullptr) {
  if (m.empty()) throw InputError(std::string("problem file has no ") + section);
  if (!name) {
    if (m.size() != 1)
      throw InputError(std::string("problem file has several ") + section + "; choose one with " + flag);
    if (chosen) *chosen = m.begin()->first;
    return m.begin()->second;
  }
  const auto it = m.find(*name);
  if (it == m.end()) throw InputError(std::string(section) + " has no entry named '" + *name + "'");
  if (chosen) *chosen = *name;
  return it->second;
}

// The graph direction: prefer a variable with constant nonzero ∂r/∂z_j, else the last one with ∂r/∂z_j ≠ 0.
std::size_t graph_variable(const DefiningFunction& d) {
  const auto& g = d.gradient();
  for (std::size_t j = g.size(); j-- > 0;)
    if (!g[j].is_zero() && g[j].is_constant()) return j;
  for (std::size_t j = g.size(); j-- > 0;)
    if (!g[j].is_zero()) return j;
  throw InputError("defining function has vanishing holomorphic gradient");
}

HermitianMetric choose_metric(const ProblemFile& p, const DefiningFunction& d, const CommandFlags& f,
                              std::string& name) {
  name = f.metric.value_or(p.metrics.size() == 1 ? p.metrics.begin()->first : "euclidean");
  if (name == "euclidean") return HermitianMetric::euclidean(p.dimension);
  if (name == "graph") return HermitianMetric::graph(p.dimension, graph_variable(d));
  const auto it = p.metrics.find(name);
  if (it == p.metrics.end()) throw InputError("unknown metric '" + name + "' (euclidean, graph, or a named metric)");
  return HermitianMetric::constant(it->second);
}

std::size_t resolve_q(const ProblemFile& p, const CommandFlags& f) { return f.q.value_or(p.q.value_or(1)); }

std::uint64_t resolve_seed(const ProblemFile& p, const CommandFlags& f) {
  return f.seed.value_or(p.sampling ? p.sampling->seed : 1);
}

// Named points selected by --point, or all of them.
std::vector<std::pair<std::string, Point>> named_points(const ProblemFile& p, const CommandFlags& f) {
  std::vector<std::pair<std::string, Point>> out;
  if (f.point) {
    const auto it = p.points.find(*f.point);
    if (it == p.points.end()) throw InputError("points has no entry named '" + *f.point + "'");
    out.emplace_back(it->first, to_point(it->second));
    return out;
  }
  for (const auto& [name, pt] : p.points) out.emplace_back(name, to_point(pt));
  return out;
}

bool on_boundary(const DefiningFunction& d, const Point& p) {
  return std::abs(d.value_at(p)) <= kBoundaryTolerance;
}

// Base point on {gens = 0}: the --point selection, else the projection of the origin.
Point base_point(const ProblemFile& p, const CommandFlags& f, const std::vector<Polynomial>& gens) {
  if (f.point) {
    const auto it = p.points.find(*f.point);
    if (it == p.points.end()) throw InputError("points has no entry named '" + *f.point + "'");
    return to_point(it->second);
  }
  const Point origin(p.dimension, {0.0, 0.0});
  const auto proj = project_to_variety(gens, origin);
  if (!proj) throw InputError("could not project the origin onto the variety; give a base point with --point");
  return *proj;
}

json holdim_json(const HolDimReport& h) {
  json levels = json::array();
  for (const auto& l : h.levels)
    levels.push_back({{"radius", number(l.radius)},
                      {"points", l.points},
                      {"excluded_singular", l.excluded_singular},
                      {"min_dim", l.min_dim},
                      {"max_dim", l.max_dim}});
  return {{"value", h.value}, {"base", point_json(h.base)}, {"levels", levels}, {"warnings", h.warnings}};
}

HolDimOptions holdim_options(const ProblemFile& p, const CommandFlags& f) {
  HolDimOptions o;
  if (f.samples) o.samples = *f.samples;
  o.seed = resolve_seed(p, f);
  if (f.tol) o.tol = *f.tol;
  return o;
}

json run_levi(const ProblemFile& p, const CommandFlags& f, json& params, std::vector<std::string>& warnings) {
  const DefiningFunction d = require_boundary(p);
  if (p.dimension < 2) throw InputError("the Levi form needs dimension >= 2");
  const std::size_t k = graph_variable(d);
  params["graph_variable"] = k + 1;
  const auto frame = graph_frame(d, k);
  const auto levi = levi_matrix_on_frame(d, frame);
  const auto td = frame_trace_det(levi);
  json out;
  out["frame"] = {{"numerators", poly_matrix(frame.numerators)}, {"denominator", to_string(frame.denominator)}};
  out["levi_matrix"] = {{"numerators", poly_matrix(levi.numerators)}, {"denominator", to_string(levi.denominator)}};
  out["trace"] = to_string(td.trace);
  out["det"] = to_string(td.det);
  out["trace_det_denominator"] = to_string(td.denominator);
  out["complex_hessian"] = poly_matrix(complex_hessian(d));

  json at = json::object();
  for (const auto& [name, pt] : named_points(p, f)) {
    if (!on_boundary(d, pt)) {
      warnings.push_back("point '" + name + "' is not on the boundary; skipped");
      continue;
    }
    const auto fr = graph_frame(d, pt, k);
    const auto m = levi_matrix_at(d, pt, fr.vectors);
    at[name] = {{"point", point_json(pt)},
                {"levi_matrix", complex_matrix(m)},
                {"eigenvalues", doubles(linalg::hermitian_eigen(m).values)}};
  }
  out["points"] = at;
  return out;
}

json classification_json(const ClassificationReport& c) {
  return {{"point", point_json(c.point)},
          {"q", c.q},
          {"eigenvalues", doubles(c.eigenvalues)},
          {"signature", {c.n_pos, c.n_neg, c.n_zero}},
          {"q_margin", number(c.q_margin)},
          {"pseudoconvex", c.pseudoconvex},
          {"q_convex", c.q_convex},
          {"z_q", c.z_q}};
}

json run_classify(const ProblemFile& p, const CommandFlags& f, json& params, std::vector<std::string>& warnings,
                  std::string& verdict) {
  const DefiningFunction d = require_boundary(p);
  const std::size_t q = resolve_q(p, f);
  std::string metric_name;
  const auto metric = choose_metric(p, d, f, metric_name);
  const double tol = f.tol.value_or(kSignatureTolerance);
  params["q"] = q;
  params["metric"] = metric_name;
  params["tol"] = tol;

  bool all_pc = true, all_qc = true, all_zq = true;
  auto tally = [&](const ClassificationReport& c) {
    all_pc = all_pc && c.pseudoconvex;
    all_qc = all_qc && c.q_convex;
    all_zq = all_zq && c.z_q;
  };

  json out;
  json at = json::object();
  for (const auto& [name, pt] : named_points(p, f)) {
    if (!on_boundary(d, pt)) {
      warnings.push_back("point '" + name + "' is not on the boundary; skipped");
      continue;
    }
    const auto c = classify_point(d, pt, q, metric, tol);
    tally(c);
    at[name] = classification_json(c);
  }
  out["points"] = at;

  const std::size_t count = f.samples.value_or(p.sampling && p.sampling->count > 0 ? p.sampling->count
                                                                                    : kDefaultClassifySamples);
  std::size_t evaluated = at.size();
  if (count > 0) {
    const Box box = p.sampling ? p.sampling->box : Box(2 * p.dimension, {-0.5, 0.5});
    const std::uint64_t seed = resolve_seed(p, f);
    params["samples"] = count;
    params["seed"] = seed;
    json jbox = json::array();
    for (const auto& [lo, hi] : box) jbox.push_back({number(lo), number(hi)});
    params["box"] = jbox;

    const auto sample = sample_boundary(d, box, count, seed);
    if (sample.warning) warnings.push_back(*sample.warning);
    std::size_t skipped = 0, negative = 0, zq_fail = 0, not_qc = 0;
    double min_margin = std::numeric_limits<double>::infinity();
    double min_eig = std::numeric_limits<double>::infinity();
    std::optional<ClassificationReport> worst, first_negative;
    for (const auto& pt : sample.points) {
      ClassificationReport c;
      try {
        c = classify_point(d, pt, q, metric, tol);
      } catch (const InputError&) {
        ++skipped;  // e.g. the graph metric degenerates at this point
        continue;
      }
      tally(c);
      if (c.n_neg > 0) {
        ++negative;
        if (!first_negative) first_negative = c;
      }
      if (!c.z_q) ++zq_fail;
      if (!c.q_convex) ++not_qc;
      if (!c.eigenvalues.empty()) min_eig = std::min(min_eig, c.eigenvalues.front());
      if (c.q_margin < min_margin) {
        min_margin = c.q_margin;
        worst = c;
      }
    }
    if (skipped > 0) warnings.push_back(std::to_string(skipped) + " sampled points skipped (degenerate frame)");
    json s = {{"requested", count},
              {"found", sample.points.size()},
              {"classified", sample.points.size() - skipped},
              {"skipped", skipped},
              {"min_q_margin", number(min_margin)},
              {"min_eigenvalue", number(min_eig)},
              {"with_negative_eigenvalue", negative},
              {"z_q_failures", zq_fail},
              {"not_q_convex", not_qc}};
    s["worst_point"] = worst ? classification_json(*worst) : json(nullptr);
    s["first_negative_point"] = first_negative ? classification_json(*first_negative) : json(nullptr);
    out["samples"] = s;
    evaluated += sample.points.size() - skipped;
  }
  if (evaluated == 0) throw InputError("classify found no boundary points; add points or a sampling section");

  out["pseudoconvex_everywhere"] = all_pc;
  out["q_convex_everywhere"] = all_qc;
  out["z_q_everywhere"] = all_zq;
  verdict = std::string(all_pc ? "pseudoconvex" : "not pseudoconvex") + "; " +
            (all_qc ? "q-convex" : "not q-convex") + "; " + (all_zq ? "Z(q) holds" : "Z(q) fails") +
            " on the evaluated points";
  return out;
}

json chain_json(const MultiplierChainState& s) {
  json out;
  out["status"] = to_string(s.status);
  out["h"] = s.h;
  out["q"] = s.q;
  json gens = json::array();
  for (std::size_t i = 0; i < s.generators.size(); ++i) {
    const auto& g = s.generators[i];
    json j = {{"index", i}, {"poly", to_string(g.poly)}, {"origin", to_string(g.origin)}, {"step", g.step}};
    if (g.origin == GeneratorOrigin::Minor) j["minor"] = {{"rows", g.minor_rows}, {"cols", g.minor_cols}};
    if (g.partner) j["partner"] = *g.partner;
    if (g.certificate) j["certificate"] = *g.certificate;
    gens.push_back(j);
  }
  out["generators"] = gens;
  out["generators_per_step"] = s.generators_per_step;
  json rows = json::array();
  for (const auto& r : s.module.rows)
    rows.push_back({{"origin", to_string(r.origin)}, {"step", r.step}, {"source", r.source}, {"entries", polys(r.entries)}});
  out["module_rows"] = rows;
  out["basis"] = {{"order", GroebnerBasis::order()}, {"polynomials", polys(s.basis.polynomials())}};
  out["real_radical_used"] = s.real_radical_used();
  out["warnings"] = s.warnings;
  return out;
}

json certificates_json(const MultiplierChainState& s, const GroebnerOptions& g, bool& all_ok) {
  json certs = json::array();
  all_ok = true;
  for (const auto& c : s.certificates) {
    json w = json::array();
    for (const auto& x : c.weights) w.push_back(exact(x));
    const bool ok = verify_certificate(s, c, g);
    all_ok = all_ok && ok;
    json j = {{"rule", to_string(c.rule)},
              {"step", c.step},
              {"witness", to_string(c.witness)},
              {"weights", w},
              {"factors", polys(c.factors)},
              {"exponent", c.exponent},
              {"ideal_size", c.ideal_size},
              {"verified", ok}};
    if (c.cofactors) j["cofactors"] = polys(*c.cofactors);
    certs.push_back(j);
  }
  return certs;
}

json run_kohn(const ProblemFile& p, const CommandFlags& f, json& params, std::vector<std::string>& warnings,
              std::string& verdict, int& exit_code) {
  const DefiningFunction d = require_boundary(p);
  const std::size_t q = resolve_q(p, f);
  const std::size_t max_h = f.max_steps.value_or(p.budgets.max_h.value_or(kDefaultMaxSteps));
  ChainOptions opts;
  if (p.budgets.groebner) opts.groebner.max_reductions = *p.budgets.groebner;
  params["q"] = q;
  params["max_steps"] = max_h;
  params["groebner_limit"] = opts.groebner.max_reductions;

  const auto s = run_chain(d, q, max_h, opts);
  json out = chain_json(s);
  bool certs_ok = true;
  out["certificates"] = certificates_json(s, opts.groebner, certs_ok);
  out["certificates_verified"] = certs_ok;
  if (!certs_ok) throw Error(ErrorClass::Internal, "a radical certificate failed to re-verify");

  switch (s.status) {
    case ChainStatus::Certified: {
      const bool one_ok = !s.one_cofactors || verify_one_certificate(s);
      if (s.one_cofactors) {
        out["one_cofactors"] = polys(*s.one_cofactors);
        out["one_certificate_verified"] = one_ok;
      }
      if (!one_ok) throw Error(ErrorClass::Internal, "the certificate for 1 failed to re-verify");
      verdict = "certified at step " + std::to_string(s.h) + ": 1 lies in the multiplier ideal";
      break;
    }
    case ChainStatus::Stuck: {
      const auto eqs = real_variety_equations(s);
      out["variety"] = polys(eqs);
      const auto v = VarietyIdeal::from(p.dimension, eqs);
      const auto w = with_boundary(v, d);
      const Point origin(p.dimension, {0.0, 0.0});
      const auto base = project_to_variety(w.generators, origin);
      if (!base) {
        warnings.push_back("could not project the origin onto V ∩ bΩ; holomorphic dimension not computed");
        verdict = "stuck at step " + std::to_string(s.h);
        break;
      }
      const auto hd = holomorphic_dimension(d, v, *base, holdim_options(p, f));
      out["holomorphic_dimension"] = holdim_json(hd);
      out["holomorphic_dimension_at_least_q"] = hd.value >= q;
      verdict = "stuck at step " + std::to_string(s.h) + "; V has holomorphic dimension " +
                std::to_string(hd.value) + (hd.value >= q ? " >= q" : " < q");
      break;
    }
    case ChainStatus::BudgetExhausted:
      verdict = "undecided after " + std::to_string(s.h) + " steps";
      exit_code = static_cast<int>(ErrorClass::Budget);
      break;
    case ChainStatus::Running:
      throw Error(ErrorClass::Internal, "chain returned while still running");
  }
  return out;
}

json run_holdim(const ProblemFile& p, const CommandFlags& f, json& params, std::string& verdict) {
  const DefiningFunction d = require_boundary(p);
  std::string name;
  const auto& gens = select(p.varieties, f.variety, "varieties", "--variety", &name);
  const auto v = VarietyIdeal::from(p.dimension, gens);
  const Point base = base_point(p, f, with_boundary(v, d).generators);
  const auto opts = holdim_options(p, f);
  params["variety"] = name;
  params["samples"] = opts.samples;
  params["seed"] = opts.seed;
  params["tol"] = opts.tol;
  const auto hd = holomorphic_dimension(d, v, base, opts);
  json out = holdim_json(hd);
  out["variety"] = polys(gens);
  verdict = "holomorphic dimension " + std::to_string(hd.value);
  return out;
}

json run_brackets(const ProblemFile& p, const CommandFlags& f, json& params, std::string& verdict) {
  std::string name;
  const auto& gens = select(p.varieties, f.variety, "varieties", "--variety", &name);
  const auto m = VarietyIdeal::from(p.dimension, gens);
  std::vector<std::string> names = f.fields;
  if (names.empty())
    for (const auto& [k, _] : p.vector_fields) names.push_back(k);
  if (names.empty()) throw InputError("problem file has no vector_fields");
  std::vector<PolyVectorField> fields;
  for (const auto& n : names) {
    const auto it = p.vector_fields.find(n);
    if (it == p.vector_fields.end()) throw InputError("vector_fields has no entry named '" + n + "'");
    fields.push_back(it->second);
  }
  const Point base = base_point(p, f, m.generators);
  FlagOptions opts;
  if (f.max_steps) opts.max_depth = *f.max_steps;
  if (f.tol) opts.tol = *f.tol;
  if (f.samples) opts.nearby_samples = *f.samples;
  opts.seed = resolve_seed(p, f);
  if (p.budgets.groebner) opts.groebner.max_reductions = *p.budgets.groebner;
  params["variety"] = name;
  params["fields"] = names;
  params["max_depth"] = opts.max_depth;
  params["tol"] = opts.tol;
  params["nearby_samples"] = opts.nearby_samples;
  params["seed"] = opts.seed;

  const auto flag = bracket_flag(fields, m, base, opts);
  json out = {{"dims", flag.dims},
              {"depth", flag.depth},
              {"finite_type", flag.finite_type},
              {"manifold_dim", flag.manifold_dim},
              {"base", point_json(flag.base)},
              {"warnings", flag.warnings}};
  verdict = flag.finite_type ? "finite bracket type " + std::to_string(flag.depth) : "not of finite bracket type";
  return out;
}

json run_tangency(const ProblemFile& p, const CommandFlags& f, json& params, std::string& verdict) {
  const DefiningFunction d = require_boundary(p);
  std::string name;
  const auto& phi = select(p.holo_maps, f.map, "holo_maps", "--map", &name);
  const std::size_t max_order = f.max_order.value_or(p.budgets.max_order.value_or(kDefaultMaxOrder));
  params["map"] = name;
  params["max_order"] = max_order;
  const auto t = tangency_order(d, phi, max_order);
  json out = {{"kind", to_string(t.kind)}, {"composition", to_string(t.composition, "w")}, {"map", polys(phi.components, "w")}};
  out["order"] = t.kind == TangencyKind::Order ? json(t.order) : json(nullptr);
  switch (t.kind) {
    case TangencyKind::Order:
      verdict = "order of tangency " + std::to_string(t.order);
      break;
    case TangencyKind::IdenticallyZero:
      verdict = "the image lies in the boundary";
      break;
    case TangencyKind::ExceedsMaxOrder:
      verdict = "tangent beyond order " + std::to_string(max_order);
      break;
  }
  return out;
}

json run_ctangent(const ProblemFile& p, const CommandFlags& f, json& params, std::string& verdict) {
  const DefiningFunction d = require_boundary(p);
  std::string name;
  const auto& gens = select(p.varieties, f.variety, "varieties", "--variety", &name);
  const auto m = VarietyIdeal::from(p.dimension, gens);
  SampleOptions opts;
  if (f.samples) opts.samples = *f.samples;
  opts.seed = resolve_seed(p, f);
  if (f.tol) opts.tol = *f.tol;
  if (f.point) opts.center = base_point(p, f, m.generators);
  params["variety"] = name;
  params["samples"] = opts.samples;
  params["seed"] = opts.seed;
  params["tol"] = opts.tol;
  const auto c = complex_tangential_check(d, m, opts);
  verdict = c.complex_tangential ? "complex tangential" : "not complex tangential";
  return {{"complex_tangential", c.complex_tangential},
          {"max_violation", number(c.max_violation)},
          {"points", c.points}};
}

void render_text(const json& v, const std::string& indent, std::ostringstream& os);

std::string scalar_text(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_object() && v.size() == 2 && v.contains("re") && v.contains("im")) {
    const auto part = [](const json& x) { return x.is_string() ? x.get<std::string>() : x.dump(); };
    return "(" + part(v["re"]) + ", " + part(v["im"]) + ")";
  }
  if (v.is_array()) {
    std::string s = "[";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + scalar_text(v[i]);
    return s + "]";
  }
  return v.dump();
}

bool is_flat(const json& v) {
  if (v.is_object()) return v.size() == 2 && v.contains("re") && v.contains("im");
  if (v.is_array()) return std::all_of(v.begin(), v.end(), [](const json& x) { return is_flat(x); });
  return true;
}

void render_text(const json& v, const std::string& indent, std::ostringstream& os) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) {
      if (is_flat(x)) {
        os << indent << k << ": " << scalar_text(x) << "\n";
      } else {
        os << indent << k << ":\n";
        render_text(x, indent + "  ", os);
      }
    }
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (is_flat(v[i])) {
        os << indent << "- " << scalar_text(v[i]) << "\n";
      } else {
        os << indent << "[" << i << "]\n";
        render_text(v[i], indent + "  ", os);
      }
    }
  } else {
    os << indent << scalar_text(v) << "\n";
  }
}

}  // namespace

Command parse_command(const std::string& name) {
  static const std::pair<const char*, Command> table[] = {
      {"levi", Command::Levi},         {"classify", Command::Classify}, {"kohn", Command::Kohn},
      {"holdim", Command::HolDim},     {"brackets", Command::Brackets}, {"tangency", Command::Tangency},
      {"ctangent", Command::CTangent}};
  for (const auto& [n, c] : table)
    if (name == n) return c;
  throw InputError("unknown command '" + name + "'");
}

std::string to_string(Command c) {
  switch (c) {
    case Command::Levi:
      return "levi";
    case Command::Classify:
      return "classify";
    case Command::Kohn:
      return "kohn";
    case Command::HolDim:
      return "holdim";
    case Command::Brackets:
      return "brackets";
    case Command::Tangency:
      return "tangency";
    case Command::CTangent:
      return "ctangent";
  }
  return "?";
}

Report run_command(Command cmd, const ProblemFile& p, const CommandFlags& f) {
  const auto start = std::chrono::steady_clock::now();
  auto tree = std::make_shared<Report::Tree>();
  json params = json::object();
  std::vector<std::string> warnings;
  std::string verdict;
  json result;
  switch (cmd) {
    case Command::Levi:
      result = run_levi(p, f, params, warnings);
      verdict = "Levi form computed";
      break;
    case Command::Classify:
      result = run_classify(p, f, params, warnings, verdict);
      break;
    case Command::Kohn:
      result = run_kohn(p, f, params, warnings, verdict, tree->exit_code);
      break;
    case Command::HolDim:
      result = run_holdim(p, f, params, verdict);
      break;
    case Command::Brackets:
      result = run_brackets(p, f, params, verdict);
      break;
    case Command::Tangency:
      result = run_tangency(p, f, params, verdict);
      break;
    case Command::CTangent:
      result = run_ctangent(p, f, params, verdict);
      break;
  }
  json& doc = tree->doc;
  doc["command"] = to_string(cmd);
  doc["dimension"] = p.dimension;
  if (p.defining_function) doc["defining_function"] = to_string(*p.defining_function);
  doc["parameters"] = params;
  doc["result"] = result;
  doc["verdict"] = verdict;
  doc["warnings"] = warnings;
  if (f.timings) {
    const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    doc["timings_ms"] = {{"total", ms}};
  }
  return Report(std::move(tree));
}

std::string emit_report(const Report& r, ReportFormat format) {
  const json& doc = r.tree().doc;
  if (format == ReportFormat::Json) return doc.dump(2) + "\n";
  std::ostringstream os;
  os << "levikohn " << doc.value("command", std::string()) << ": " << doc.value("verdict", std::string()) << "\n";
  render_text(doc, "", os);
  return os.str();
}

}  // namespace levikohn
