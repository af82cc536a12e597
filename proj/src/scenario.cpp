#include "cone22/scenario.hpp"

#include <array>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "cone22/canonical_frame.hpp"
#include "cone22/hypersurface.hpp"
#include "cone22/numeric.hpp"
#include "cone22/quartic.hpp"
#include "cone22/weyl.hpp"
#include "json.hpp"

namespace cone22 {
namespace {

using ordered_json = nlohmann::ordered_json;

const std::string kSchema = "cone22/1";

const std::vector<std::string> kTaskNames = {
    "validate_weyl",    "classify_structure", "principal_roots", "hypersurface_classify",
    "umbilical_check",  "cone_check",         "canonical_reduction"};

bool task_needs_weyl(const std::string& t) {
  return t == "validate_weyl" || t == "classify_structure" || t == "principal_roots" ||
         t == "umbilical_check" || t == "cone_check" || t == "canonical_reduction";
}

bool task_needs_hypersurface(const std::string& t) {
  return t == "hypersurface_classify" || t == "umbilical_check" || t == "cone_check" ||
         t == "canonical_reduction";
}

void check_known_keys(const ordered_json& obj, const std::vector<std::string>& allowed,
                      const std::string& where, std::vector<std::string>& diags) {
  for (const auto& [key, value] : obj.items()) {
    (void)value;
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      diags.push_back("unknown field \"" + key + "\" in " + where);
  }
}

bool is_scalar_node(const ordered_json& v) { return v.is_number() || v.is_string(); }

// Scalars may be JSON numbers or strings ("p/q", integer, or decimal).
// Doubles convert to rationals exactly.
template <class T>
T parse_scalar(const ordered_json& v, const std::string& where) {
  try {
    if (v.is_number()) {
      if constexpr (is_exact_v<T>)
        return rational_from_double(v.get<double>());
      else
        return v.get<double>();
    }
    if (v.is_string()) {
      const Rational r = rational_from_string(v.get<std::string>());
      if constexpr (is_exact_v<T>)
        return r;
      else
        return to_double(r);
    }
  } catch (const std::exception& e) {
    throw ScenarioError(where + ": " + e.what());
  }
  throw ScenarioError(where + ": expected a number or a rational string");
}

template <class T, std::size_t N>
std::array<T, N> parse_scalar_array(const ordered_json& v, const std::string& where) {
  if (!v.is_array() || v.size() != N)
    throw ScenarioError(where + ": expected an array of " + std::to_string(N) + " scalars");
  std::array<T, N> out{};
  for (std::size_t k = 0; k < N; ++k)
    out[k] = parse_scalar<T>(v[k], where + "[" + std::to_string(k) + "]");
  return out;
}

template <class T>
struct ParsedScenario {
  std::optional<WeylTensor<T>> weyl;
  std::optional<FullWeyl<T>> weyl_full;  // set when the input was the dense array
  std::optional<HypersurfaceJet<T>> jet;
  std::vector<std::string> tasks;
  double tol = kDefaultTol;
  double mult_tol = kDefaultMultTol;
  ordered_json echo;
};

// Structure-only pass, shared by validate and the parser. Returns
// diagnostics; on an empty result the typed parse cannot fail.
std::vector<std::string> structural_diagnostics(const ordered_json& doc) {
  std::vector<std::string> diags;
  if (!doc.is_object()) {
    diags.push_back("scenario root must be a JSON object");
    return diags;
  }
  check_known_keys(doc, {"schema", "weyl", "hypersurface", "tasks", "tolerances"}, "scenario",
                   diags);

  if (!doc.contains("schema") || !doc["schema"].is_string() ||
      doc["schema"].get<std::string>() != kSchema)
    diags.push_back("missing or unsupported schema (expected \"" + kSchema + "\")");

  bool has_weyl = false, has_jet = false;
  if (doc.contains("weyl")) {
    const auto& w = doc["weyl"];
    if (!w.is_object()) {
      diags.push_back("weyl must be an object");
    } else {
      check_known_keys(w, {"a", "b", "full"}, "weyl", diags);
      if (w.contains("full")) {
        if (w.contains("a") || w.contains("b"))
          diags.push_back("weyl: give either components a/b or the full array, not both");
        if (!w["full"].is_array() || w["full"].size() != 256)
          diags.push_back("weyl.full must hold 256 entries");
        else
          for (const auto& e : w["full"])
            if (!is_scalar_node(e)) {
              diags.push_back("weyl.full entries must be scalars");
              break;
            }
        has_weyl = true;
      } else if (w.contains("a") && w.contains("b")) {
        for (const char* key : {"a", "b"}) {
          if (!w[key].is_array() || w[key].size() != 5)
            diags.push_back(std::string("weyl.") + key + " must hold 5 entries");
          else
            for (const auto& e : w[key])
              if (!is_scalar_node(e)) {
                diags.push_back(std::string("weyl.") + key + " entries must be scalars");
                break;
              }
        }
        has_weyl = true;
      } else {
        diags.push_back("weyl needs either both a and b, or full");
      }
    }
  }
  if (doc.contains("hypersurface")) {
    const auto& h = doc["hypersurface"];
    if (!h.is_object()) {
      diags.push_back("hypersurface must be an object");
    } else {
      check_known_keys(h, {"l22", "l23", "l33", "h3"}, "hypersurface", diags);
      for (const char* key : {"l22", "l23", "l33"})
        if (!h.contains(key) || !is_scalar_node(h[key]))
          diags.push_back(std::string("hypersurface.") + key + " must be a scalar");
      if (h.contains("h3")) {
        if (!h["h3"].is_array() || h["h3"].size() != 4)
          diags.push_back("hypersurface.h3 must hold 4 entries");
        else
          for (const auto& e : h["h3"])
            if (!is_scalar_node(e)) {
              diags.push_back("hypersurface.h3 entries must be scalars");
              break;
            }
      }
      has_jet = true;
    }
  }

  if (!doc.contains("tasks") || !doc["tasks"].is_array() || doc["tasks"].empty()) {
    diags.push_back("tasks must be a nonempty array");
  } else {
    for (const auto& t : doc["tasks"]) {
      if (!t.is_string()) {
        diags.push_back("task names must be strings");
        continue;
      }
      const std::string name = t.get<std::string>();
      if (std::find(kTaskNames.begin(), kTaskNames.end(), name) == kTaskNames.end()) {
        diags.push_back("unknown task \"" + name + "\"");
        continue;
      }
      if (task_needs_weyl(name) && !has_weyl)
        diags.push_back("task \"" + name + "\" needs the weyl input");
      if (task_needs_hypersurface(name) && !has_jet)
        diags.push_back("task \"" + name + "\" needs the hypersurface input");
    }
  }

  if (doc.contains("tolerances")) {
    const auto& t = doc["tolerances"];
    if (!t.is_object()) {
      diags.push_back("tolerances must be an object");
    } else {
      check_known_keys(t, {"zero", "mult"}, "tolerances", diags);
      for (const char* key : {"zero", "mult"})
        if (t.contains(key) && !t[key].is_number())
          diags.push_back(std::string("tolerances.") + key + " must be a number");
    }
  }
  return diags;
}

template <class T>
ParsedScenario<T> parse_scenario(const ordered_json& doc, const RunOptions& options) {
  const auto diags = structural_diagnostics(doc);
  if (!diags.empty()) throw ScenarioError(diags.front());

  ParsedScenario<T> s;
  s.echo = doc;
  s.tol = options.tol;
  s.mult_tol = options.mult_tol;
  if (doc.contains("tolerances")) {
    const auto& t = doc["tolerances"];
    if (t.contains("zero")) s.tol = t["zero"].get<double>();
    if (t.contains("mult")) s.mult_tol = t["mult"].get<double>();
  }

  if (doc.contains("weyl")) {
    const auto& w = doc["weyl"];
    if (w.contains("full")) {
      FullWeyl<T> full;
      for (std::size_t k = 0; k < 256; ++k)
        full.c[k] = parse_scalar<T>(w["full"][k], "weyl.full[" + std::to_string(k) + "]");
      s.weyl_full = full;
      const auto violations = validate_full(full, s.tol);
      if (violations.empty()) s.weyl = extract(full, s.tol);
    } else {
      WeylTensor<T> wt;
      wt.a = parse_scalar_array<T, 5>(w["a"], "weyl.a");
      wt.b = parse_scalar_array<T, 5>(w["b"], "weyl.b");
      s.weyl = wt;
    }
  }
  if (doc.contains("hypersurface")) {
    const auto& h = doc["hypersurface"];
    std::optional<std::array<T, 4>> h3;
    if (h.contains("h3")) h3 = parse_scalar_array<T, 4>(h["h3"], "hypersurface.h3");
    s.jet = HypersurfaceJet<T>::general(parse_scalar<T>(h["l22"], "hypersurface.l22"),
                                        parse_scalar<T>(h["l23"], "hypersurface.l23"),
                                        parse_scalar<T>(h["l33"], "hypersurface.l33"), h3);
  }
  for (const auto& t : doc["tasks"]) s.tasks.push_back(t.get<std::string>());
  return s;
}

template <class T>
ordered_json scalar_json(const T& v) {
  if constexpr (is_exact_v<T>)
    return rational_to_string(v);
  else
    return v;
}

template <class T, std::size_t N>
ordered_json scalar_array_json(const std::array<T, N>& a) {
  ordered_json out = ordered_json::array();
  for (const auto& v : a) out.push_back(scalar_json(v));
  return out;
}

ordered_json projective_json(const Projective<double>& p) {
  if (p.is_infinite()) return "inf";
  return p.value();
}

ordered_json root_set_json(const RootSet& rs) {
  ordered_json out;
  out["degenerate"] = rs.identically_zero;
  ordered_json roots = ordered_json::array();
  for (const auto& r : rs.roots)
    roots.push_back({{"value", projective_json(r.value)}, {"multiplicity", r.multiplicity}});
  out["roots"] = roots;
  ordered_json pairs = ordered_json::array();
  for (const auto& p : rs.complex_pairs)
    pairs.push_back({{"real_part", p.real_part},
                     {"imag_abs", p.imag_abs},
                     {"multiplicity", p.multiplicity}});
  out["complex_pairs"] = pairs;
  if (!rs.identically_zero) out["total_multiplicity"] = rs.total_multiplicity();
  return out;
}

ordered_json violations_json(const std::vector<Violation>& vs) {
  ordered_json out = ordered_json::array();
  for (const auto& v : vs)
    out.push_back({{"identity", v.identity}, {"magnitude", v.magnitude}});
  return out;
}

template <class T>
ordered_json quartic_json(const BinaryQuartic<T>& q, double mult_tol) {
  ordered_json out;
  out["coefficients"] = scalar_array_json(q.c);
  if (!q.identically_zero()) out["discriminant"] = scalar_json(discriminant(q));
  out["root_set"] = root_set_json(projective_roots(q, mult_tol));
  return out;
}

template <class T>
const WeylTensor<T>& require_weyl(const ParsedScenario<T>& s, const std::string& task) {
  if (!s.weyl) {
    if (s.weyl_full)
      throw PreconditionError("task \"" + task +
                              "\": the full Weyl array violates the curvature identities");
    throw ScenarioError("task \"" + task + "\" needs the weyl input");
  }
  return *s.weyl;
}

template <class T>
const HypersurfaceJet<T>& require_jet(const ParsedScenario<T>& s, const std::string& task) {
  if (!s.jet) throw ScenarioError("task \"" + task + "\" needs the hypersurface input");
  return *s.jet;
}

template <class T>
ordered_json run_task(const ParsedScenario<T>& s, const std::string& task) {
  ordered_json out;
  out["task"] = task;

  if (task == "validate_weyl") {
    if (s.weyl_full) {
      const auto violations = validate_full(*s.weyl_full, s.tol);
      out["source"] = "full";
      out["valid"] = violations.empty();
      out["violations"] = violations_json(violations);
      if (violations.empty()) {
        const auto w = extract(*s.weyl_full, s.tol);
        out["components"] = {{"a", scalar_array_json(w.a)}, {"b", scalar_array_json(w.b)}};
      }
    } else {
      const auto& w = require_weyl(s, task);
      // Components always reconstruct to a valid tensor; validated anyway.
      const auto violations = validate_full(reconstruct_full(w), s.tol);
      out["source"] = "components";
      out["valid"] = violations.empty();
      out["violations"] = violations_json(violations);
    }
    return out;
  }

  if (task == "classify_structure") {
    out["classification"] = to_string(classify_structure(require_weyl(s, task), s.tol));
    return out;
  }

  if (task == "principal_roots") {
    const auto& w = require_weyl(s, task);
    out["alpha"] = quartic_json(alpha_quartic(w), s.mult_tol);
    out["beta"] = quartic_json(beta_quartic(w), s.mult_tol);
    return out;
  }

  if (task == "hypersurface_classify") {
    const auto& jet = require_jet(s, task);
    const auto ii = invariant_second_form(jet);
    const auto sp = singular_points(jet, s.tol);
    out["first_form"] = scalar_array_json(std::array<T, 3>{T(0), T(1), T(0)});
    out["invariant_second_form"] =
        scalar_array_json(std::array<T, 3>{ii.q22, ii.q23, ii.q33});
    out["harmonic_pole"] = scalar_json(harmonic_pole(jet));
    ordered_json sing;
    sing["kind"] = to_string(sp.kind);
    sing["center"] = scalar_json(sp.center);
    sing["disc"] = scalar_json(sp.disc);
    if (sp.kind == SingularKind::complex_conjugate) {
      const auto [re, im] = sp.complex_parts();
      sing["real_part"] = re;
      sing["imag_abs"] = im;
    } else {
      sing["s1"] = sp.s1();
      sing["s2"] = sp.s2();
    }
    out["singular_points"] = sing;
    out["classification"] = to_string(classify_second_form(jet, s.tol));
    const auto flags = integrability(jet.reduce(), s.tol);
    out["integrability"] = {{"alpha", flags.alpha},
                            {"beta", flags.beta},
                            {"totally_umbilical", flags.both()}};
    return out;
  }

  if (task == "umbilical_check") {
    const auto& w = require_weyl(s, task);
    const auto jet = require_jet(s, task).reduce();
    if (!is_totally_umbilical(jet, s.tol))
      throw PreconditionError("task \"umbilical_check\": hypersurface is not totally umbilical");
    const auto rep = umbilical_consequences(jet, w, s.tol);
    out["clean"] = rep.clean();
    out["violations"] = violations_json(rep.violations);
    out["omega_1_0"] = scalar_array_json(rep.omega_1_0);
    out["dH_along_A0"] = scalar_array_json(rep.dH_along_A0);
    return out;
  }

  if (task == "cone_check") {
    const auto& w = require_weyl(s, task);
    const auto jet = require_jet(s, task).reduce();
    if (!is_totally_umbilical(jet, s.tol))
      throw PreconditionError("task \"cone_check\": hypersurface is not totally umbilical");
    if (!umbilical_consequences(jet, w, s.tol).clean())
      throw PreconditionError("task \"cone_check\": umbilical consistency violations present");
    const auto det = cone_detection(jet, w, s.tol);
    out["is_cone"] = det.is_cone;
    if (det.is_cone) {
      out["alpha_infinity_multiplicity"] = det.alpha_infinity_multiplicity;
      out["beta_infinity_multiplicity"] = det.beta_infinity_multiplicity;
    }
    return out;
  }

  if (task == "canonical_reduction") {
    const auto& w = require_weyl(s, task);
    const auto jet = require_jet(s, task).reduce();
    const auto r =
        reduce_to_canonical(jet.l22, jet.l33, w.a[0], w.b[0], jet.h3_or_zero(), s.tol);
    out["determinant"] = scalar_json(r.determinant);
    out["factors"] = ordered_json::array({scalar_json(r.factor1), scalar_json(r.factor2)});
    out["feasible"] = r.feasible;
    if (r.feasible) {
      out["params"] = scalar_array_json(r.params);
      out["condition"] = r.condition;
    } else {
      out["obstruction"] = to_string(*r.obstruction);
    }
    return out;
  }

  throw ScenarioError("unknown task \"" + task + "\"");
}

template <class T>
ordered_json build_report(const ordered_json& doc, const RunOptions& options) {
  const auto s = parse_scenario<T>(doc, options);
  ordered_json report;
  report["schema"] = kSchema;
  report["backend"] = is_exact_v<T> ? "exact" : "float64";
  report["inputs"] = s.echo;
  ordered_json results = ordered_json::array();
  for (const auto& task : s.tasks) results.push_back(run_task(s, task));
  report["results"] = results;
  return report;
}

// Text rendering walks the report JSON so both formats show identical
// numerals.
void render_text(const ordered_json& node, std::ostream& out, const std::string& indent) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items()) {
      if (value.is_object() || value.is_array()) {
        out << indent << key << ":\n";
        render_text(value, out, indent + "  ");
      } else {
        out << indent << key << ": " << value.dump() << "\n";
      }
    }
  } else if (node.is_array()) {
    bool scalars_only = true;
    for (const auto& e : node)
      if (e.is_object() || e.is_array()) scalars_only = false;
    if (scalars_only) {
      out << indent << "[";
      for (std::size_t k = 0; k < node.size(); ++k) out << (k ? ", " : "") << node[k].dump();
      out << "]\n";
      return;
    }
    for (const auto& e : node) {
      out << indent << "-\n";
      render_text(e, out, indent + "  ");
    }
  } else {
    out << indent << node.dump() << "\n";
  }
}

ordered_json parse_json_document(const std::string& text) {
  try {
    return ordered_json::parse(text);
  } catch (const std::exception& e) {
    throw ScenarioError(std::string("JSON parse error: ") + e.what());
  }
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ScenarioError("cannot open scenario file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

void run_scenario_text(const std::string& scenario_json, const RunOptions& options,
                       std::ostream& out) {
  const ordered_json doc = parse_json_document(scenario_json);
  const ordered_json report = options.exact ? build_report<Rational>(doc, options)
                                            : build_report<double>(doc, options);
  if (options.format == ReportFormat::json) {
    out << report.dump(2) << "\n";
  } else {
    render_text(report, out, "");
  }
}

void run_scenario(const std::string& scenario_path, const RunOptions& options,
                  std::ostream& out) {
  run_scenario_text(read_file(scenario_path), options, out);
}

std::vector<std::string> validate_scenario_text(const std::string& scenario_json) {
  ordered_json doc;
  try {
    doc = parse_json_document(scenario_json);
  } catch (const ScenarioError& e) {
    return {e.what()};
  }
  auto diags = structural_diagnostics(doc);
  if (!diags.empty()) return diags;

  // Structure is sound; run the value-level checks the tasks would hit.
  try {
    RunOptions options;
    const auto s = parse_scenario<double>(doc, options);
    if (s.weyl_full) {
      for (const auto& v : validate_full(*s.weyl_full, s.tol))
        diags.push_back("weyl.full violates " + v.identity);
    }
  } catch (const ScenarioError& e) {
    diags.push_back(e.what());
  }
  return diags;
}

std::vector<std::string> validate_scenario(const std::string& scenario_path) {
  try {
    return validate_scenario_text(read_file(scenario_path));
  } catch (const ScenarioError& e) {
    return {e.what()};
  }
}

}  // namespace cone22
