/*
 * cli.cpp -- command-line front end.  Subcommands map one-to-one onto the
 * library operations; `--json` switches from human text to machine-readable
 * output with identical numeric content.  Exit codes: 0 success, 1 failed
 * verification (failing step on stderr), 2 input error.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#include "concord/cli.hpp"

#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "concord/json_io.hpp"

namespace concord {

namespace {

std::string enclosure_text(const std::optional<Rat>& exact, const Rat& lo,
                           const Rat& hi) {
  if (exact) return rat_to_string(*exact) + " (exact)";
  return "[" + rat_to_string(lo) + ", " + rat_to_string(hi) + "]";
}

void emit(std::ostream& out, bool as_json, const Json& j,
          const std::string& text) {
  if (as_json)
    out << j.dump(2) << "\n";
  else
    out << text << "\n";
}

/** Print a polynomial in the signature variable u = 2*cos(theta). */
std::string u_poly_string(const QPoly& f) {
  std::string s = LaurentPoly::from_qpoly(f).to_string();
  for (char& c : s)
    if (c == 't') c = 'u';
  return s;
}

const Json& need(const Json& j, const char* key, const char* ctx) {
  if (!j.is_object() || !j.contains(key))
    throw std::invalid_argument(std::string(ctx) + ": missing field \"" +
                                key + "\"");
  return j.at(key);
}

std::string str_field(const Json& j, const char* key, const char* ctx) {
  const Json& v = need(j, key, ctx);
  if (!v.is_string())
    throw std::invalid_argument(std::string(ctx) + ": field \"" + key +
                                "\" must be a string");
  return v.get<std::string>();
}

int int_field(const Json& j, const char* key, const char* ctx) {
  const Json& v = need(j, key, ctx);
  if (!v.is_number_integer())
    throw std::invalid_argument(std::string(ctx) + ": field \"" + key +
                                "\" must be an integer");
  return v.get<int>();
}

// ---------------------------------------------------------------------------
// subcommand handlers
// ---------------------------------------------------------------------------

int cmd_alex(const std::string& matrix, bool as_json, std::ostream& out) {
  LaurentPoly d = alexander_poly(seifert_from_json(load_json_file(matrix)));
  emit(out, as_json, Json{{"alexander", laurent_to_json(d)}}, d.to_string());
  return 0;
}

int cmd_sig(const std::string& matrix, const std::string& at, bool as_json,
            std::ostream& out) {
  SeifertMatrix V = seifert_from_json(load_json_file(matrix));
  if (!at.empty()) {
    Rat u = parse_rational(at);
    int s = levine_tristram(V, u);
    emit(out, as_json, Json{{"u", rat_to_string(u)}, {"signature", s}},
         "signature at u = " + rat_to_string(u) + ": " + std::to_string(s));
    return 0;
  }
  SignatureFunction sf = signature_function(V);
  Json jumps = Json::array();
  std::ostringstream os;
  os << "signature function (upper semicircle, arcs in increasing theta):";
  for (std::size_t k = 0; k < sf.values.size(); ++k) {
    os << "\n  sigma = " << sf.values[k];
    if (k < sf.jumps.size()) {
      const CircleRoot& r = sf.jumps[k];
      os << "\n  jump at ";
      if (r.theta_over_pi)
        os << "theta/pi = " << rat_to_string(*r.theta_over_pi);
      else
        os << "u in [" << rat_to_string(r.u_iv.lo) << ", "
           << rat_to_string(r.u_iv.hi) << "], root of "
           << u_poly_string(r.min_poly);
      jumps.push_back(Json{
          {"theta_over_pi",
           r.theta_over_pi ? Json(rat_to_string(*r.theta_over_pi))
                           : Json(nullptr)},
          {"u", Json::array({rat_to_string(r.u_iv.lo),
                             rat_to_string(r.u_iv.hi)})},
          {"min_poly", laurent_to_json(LaurentPoly::from_qpoly(r.min_poly))}});
    }
  }
  emit(out, as_json, Json{{"values", sf.values}, {"jumps", std::move(jumps)}},
       os.str());
  return 0;
}

int cmd_rho0(const std::string& matrix, bool as_json, std::ostream& out) {
  RhoZero r = rho0_knot(seifert_from_json(load_json_file(matrix)));
  Json j{{"exact", r.exact ? Json(rat_to_string(*r.exact)) : Json(nullptr)},
         {"lo", rat_to_string(r.lo)},
         {"hi", rat_to_string(r.hi)}};
  std::string text = r.exact
                         ? "rho0 = " + rat_to_string(*r.exact) + " (exact)"
                         : "rho0 in [" + rat_to_string(r.lo) + ", " +
                               rat_to_string(r.hi) + "]";
  emit(out, as_json, j, text);
  return 0;
}

int cmd_blanchfield(const std::string& matrix, const std::string& r_path,
                    const std::string& s_path, const std::string& p_path,
                    bool as_json, std::ostream& out) {
  SeifertMatrix V = seifert_from_json(load_json_file(matrix));
  AlexanderModule A = build_module(V);
  ModuleElement r = element_from_json(A, load_json_file(r_path));
  ModuleElement s = element_from_json(A, load_json_file(s_path));
  std::optional<LaurentPoly> p;
  if (!p_path.empty()) p = laurent_from_json(load_json_file(p_path));
  BlanchfieldValue v = blanchfield_pair(V, r, s, p);
  std::string ambient =
      p ? "Q(t)/R_p with p = " + p->to_string() : "Q(t)/Q[t^+-1]";
  std::string text =
      v.is_zero() ? "Bl(r, s) = 0 in " + ambient
                  : "Bl(r, s) = (" + v.num.to_string() + ") / (" +
                        v.den.to_string() + ") in " + ambient;
  Json j{{"num", laurent_to_json(v.num)},
         {"den", laurent_to_json(v.den)},
         {"mod_p", p ? laurent_to_json(*p) : Json(nullptr)}};
  emit(out, as_json, j, text);
  return 0;
}

int cmd_isotropic(const std::string& matrix, const std::string& gens_path,
                  const std::string& p_path, bool as_json, std::ostream& out,
                  std::ostream& err) {
  SeifertMatrix V = seifert_from_json(load_json_file(matrix));
  AlexanderModule A = build_module(V);
  std::vector<ModuleElement> gens =
      elements_from_json(A, load_json_file(gens_path));
  std::optional<LaurentPoly> p;
  if (!p_path.empty()) p = laurent_from_json(load_json_file(p_path));
  bool iso = is_isotropic(V, gens, p);
  emit(out, as_json, Json{{"isotropic", iso}},
       std::string("isotropic: ") + (iso ? "yes" : "no"));
  if (!iso) {
    err << "verification failure: the generated submodule is not isotropic\n";
    return 1;
  }
  return 0;
}

int cmd_metab_verify(const std::string& matrix, const std::string& vec_path,
                     bool as_json, std::ostream& out, std::ostream& err) {
  SeifertMatrix V = seifert_from_json(load_json_file(matrix));
  Metabolizer m = metabolizer_from_json(load_json_file(vec_path));
  bool ok = metabolizer_verify(V, m.vectors);
  emit(out, as_json, Json{{"verified", ok}},
       std::string("metabolizer verified: ") + (ok ? "yes" : "no"));
  if (!ok) {
    err << "verification failure: the vectors do not form a metabolizer\n";
    return 1;
  }
  return 0;
}

int cmd_metab_search(const std::string& matrix, int height, bool as_json,
                     std::ostream& out) {
  SeifertMatrix V = seifert_from_json(load_json_file(matrix));
  std::optional<Metabolizer> m = metabolizer_search(V, height);
  if (!m) {
    emit(out, as_json, Json{{"found", false}, {"metabolizer", nullptr}},
         "no metabolizer with entries of height <= " + std::to_string(height));
    return 0;
  }
  std::ostringstream os;
  os << "metabolizer found:";
  for (const std::vector<Int>& v : m->vectors) {
    os << "\n  [";
    for (std::size_t i = 0; i < v.size(); ++i)
      os << (i ? ", " : "") << int_to_string(v[i]);
    os << "]";
  }
  emit(out, as_json,
       Json{{"found", true}, {"metabolizer", metabolizer_to_json(*m)}},
       os.str());
  return 0;
}

int cmd_module_smith(const std::string& matrix, bool as_json,
                     std::ostream& out) {
  AlexanderModule A = build_module(seifert_from_json(load_json_file(matrix)));
  Json divisors = Json::array();
  std::ostringstream os;
  os << "dimension: " << A.dimension() << "\ndivisors:";
  if (A.divisors().empty()) os << " (none)";
  for (std::size_t i = 0; i < A.divisors().size(); ++i) {
    os << (i ? ", " : " ") << A.divisors()[i].to_string();
    divisors.push_back(laurent_to_json(A.divisors()[i]));
  }
  emit(out, as_json,
       Json{{"dimension", A.dimension()}, {"divisors", std::move(divisors)}},
       os.str());
  return 0;
}

int cmd_module_independent(const std::string& matrix,
                           const std::string& elems_path, bool as_json,
                           std::ostream& out, std::ostream& err) {
  AlexanderModule A = build_module(seifert_from_json(load_json_file(matrix)));
  std::vector<ModuleElement> elems =
      elements_from_json(A, load_json_file(elems_path));
  bool ok = z_linear_independent(A, elems);
  emit(out, as_json, Json{{"independent", ok}},
       std::string("integrally independent: ") + (ok ? "yes" : "no"));
  if (!ok) {
    err << "verification failure: an integer dependence exists\n";
    return 1;
  }
  return 0;
}

int cmd_aniso(const std::string& matrix, const std::string& p_path,
              bool as_json, std::ostream& out, std::ostream& err) {
  SeifertMatrix V = seifert_from_json(load_json_file(matrix));
  LaurentPoly p = laurent_from_json(load_json_file(p_path));
  bool ok = anisotropy_criterion(V, p);
  emit(out, as_json, Json{{"anisotropic", ok}},
       std::string("anisotropic at p: ") + (ok ? "yes" : "no"));
  if (!ok) {
    err << "verification failure: the localized module admits an isotropic "
           "element\n";
    return 1;
  }
  return 0;
}

int cmd_l2sig(const std::string& matrix, int depth, bool as_json,
              std::ostream& out) {
  HermitianLaurentMatrix M = hermitian_from_json(load_json_file(matrix));
  L2Signature s;
  if (depth >= 0) {
    RatInterval iv = l2_signature_quadrature(M, depth);
    if (iv.is_point()) s.exact = iv.lo;
    s.lo = iv.lo;
    s.hi = iv.hi;
  } else {
    s = l2_signature(M);
  }
  Json j{{"exact", s.exact ? Json(rat_to_string(*s.exact)) : Json(nullptr)},
         {"lo", rat_to_string(s.lo)},
         {"hi", rat_to_string(s.hi)}};
  emit(out, as_json, j, enclosure_text(s.exact, s.lo, s.hi));
  return 0;
}

// ---------------------------------------------------------------------------
// scenario replay
// ---------------------------------------------------------------------------

RhoQuantity quantity_from_json(const Json& j) {
  const char* ctx = "scenario quantity";
  std::string kind = str_field(j, "kind", ctx);
  std::string subject = str_field(j, "subject", ctx);
  if (kind == "rho0_knot") return RhoQuantity::rho0_knot(subject);
  if (kind == "rho0_link")
    return RhoQuantity::rho0_link(subject, int_field(j, "components", ctx));
  if (kind == "rho1") return RhoQuantity::rho1(subject);
  if (kind == "rho1_p")
    return RhoQuantity::rho1_p(subject,
                               laurent_from_json(need(j, "p", ctx)));
  throw std::invalid_argument("scenario: unknown quantity kind '" + kind +
                              "'");
}

PremainPremises premises_from_json(const Json& j) {
  PremainPremises prem;
  if (j.contains("twist_x")) {
    TwistFamilyEntry e = family_entry(int_field(j, "twist_x", "scenario"));
    prem.anisotropy_certified =
        anisotropy_criterion(e.V, alexander_poly(e.V));
    prem.metabolizer_verified = metabolizer_verify(e.V2, {e.v1, e.v2});
    prem.independence_checked =
        z_linear_independent(e.module, {e.m1, e.m2, e.l1, e.l2});
    return prem;
  }
  prem.anisotropy_certified = j.value("anisotropy_certified", false);
  prem.metabolizer_verified = j.value("metabolizer_verified", false);
  prem.independence_checked = j.value("independence_checked", false);
  return prem;
}

int cmd_ledger_replay(const std::string& path, bool as_json,
                      std::ostream& out, std::ostream& err) {
  const char* ctx = "scenario";
  Json doc = load_json_file(path);
  if (!doc.is_object())
    throw std::invalid_argument("scenario: expected a JSON object");
  const Json& steps = need(doc, "steps", ctx);
  if (!steps.is_array())
    throw std::invalid_argument("scenario: \"steps\" must be an array");

  std::map<std::string, RhoInterval> bound;
  std::vector<std::string> order;
  auto resolve = [&](const std::string& id) -> const RhoInterval& {
    auto it = bound.find(id);
    if (it == bound.end())
      throw std::invalid_argument("scenario: unknown step id '" + id + "'");
    return it->second;
  };

  for (const Json& step : steps) {
    std::string op = str_field(step, "op", ctx);
    std::string id = str_field(step, "id", ctx);
    if (bound.count(id))
      throw std::invalid_argument("scenario: duplicate step id '" + id + "'");
    RhoInterval iv;
    if (op == "declare") {
      iv = interval_from_json(need(step, "interval", ctx));
      iv.provenance = {"declared " + id + " = " + iv.to_string() + " -- " +
                       str_field(step, "citation", ctx)};
    } else if (op == "compute_l2sig") {
      L2Signature s =
          l2_signature(hermitian_from_json(need(step, "matrix", ctx)));
      iv = s.exact ? RhoInterval::point(*s.exact)
                   : RhoInterval::bounds(s.lo, s.hi);
      iv.provenance = {"computed " + id + ": l2 signature of the given "
                       "matrix = " + enclosure_text(s.exact, s.lo, s.hi)};
    } else if (op == "compute_rho0") {
      RhoZero r = rho0_knot(seifert_from_json(need(step, "matrix", ctx)));
      iv = r.exact ? RhoInterval::point(*r.exact)
                   : RhoInterval::bounds(r.lo, r.hi);
      iv.provenance = {"computed " + id + ": rho0 of the given Seifert "
                       "matrix = " + enclosure_text(r.exact, r.lo, r.hi)};
    } else if (op == "difference") {
      std::string lid = str_field(step, "left", ctx);
      std::string rid = str_field(step, "right", ctx);
      const RhoInterval& l = resolve(lid);
      const RhoInterval& r = resolve(rid);
      RhoInterval d(l.lo - r.hi, l.hi - r.lo);
      d.provenance = l.provenance;
      d.provenance.insert(d.provenance.end(), r.provenance.begin(),
                          r.provenance.end());
      d.provenance.push_back("difference " + id + " = " + lid + " - " + rid +
                             " = " + d.to_string());
      iv = std::move(d);
    } else if (op == "axiom") {
      RhoQuantity q = quantity_from_json(need(step, "quantity", ctx));
      RhoInterval value;
      std::vector<std::string> carried;
      if (step.contains("from")) {
        const RhoInterval& src = resolve(str_field(step, "from", ctx));
        value = RhoInterval(src.lo, src.hi);
        carried = src.provenance;
      } else {
        value = interval_from_json(need(step, "interval", ctx));
      }
      iv = axiom(q, value, str_field(step, "citation", ctx));
      iv.provenance.insert(iv.provenance.begin(), carried.begin(),
                           carried.end());
    } else if (op == "surgery_step") {
      RhoQuantity q = quantity_from_json(need(step, "quantity", ctx));
      const RhoInterval& src = resolve(str_field(step, "source", ctx));
      int sign = int_field(step, "sign", ctx);
      std::string dir = str_field(step, "direction", ctx);
      if (dir != "presurgery" && dir != "result")
        throw std::invalid_argument(
            "scenario: direction must be \"presurgery\" or \"result\"");
      iv = surgery_step(q, src, sign,
                        dir == "result" ? SurgeryDirection::kResult
                                        : SurgeryDirection::kPresurgery);
    } else if (op == "premain_bound") {
      const RhoInterval& src = resolve(str_field(step, "source", ctx));
      iv = premain_bound(int_field(step, "n", ctx), int_field(step, "g", ctx),
                         int_field(step, "eta", ctx), src,
                         premises_from_json(need(step, "premises", ctx)));
    } else {
      throw std::invalid_argument("scenario: unknown op '" + op + "'");
    }
    bound.emplace(id, std::move(iv));
    order.push_back(id);
  }

  bool all_ok = true;
  std::string first_fail;
  Json jexp = Json::array();
  std::ostringstream os;
  if (doc.contains("description"))
    os << "scenario: " << doc.at("description").get<std::string>() << "\n";
  for (const std::string& id : order) {
    const RhoInterval& iv = bound.at(id);
    os << "step " << id << " = " << iv.to_string() << "\n";
    if (!iv.provenance.empty()) os << "  " << iv.provenance.back() << "\n";
  }
  if (doc.contains("expect")) {
    for (const Json& e : doc.at("expect")) {
      std::string id = str_field(e, "id", "scenario expectation");
      RhoInterval expected =
          interval_from_json(need(e, "interval", "scenario expectation"));
      const RhoInterval& derived = resolve(id);
      bool ok = expected.contains(derived);
      if (!ok && all_ok) {
        all_ok = false;
        first_fail = id;
      }
      os << "expectation " << id << ": derived " << derived.to_string()
         << ", required within " << expected.to_string() << " -> "
         << (ok ? "ok" : "FAIL") << "\n";
      if (ok) {
        os << "derivation trail for " << id << ":\n";
        for (const std::string& line : derived.provenance)
          os << "  " << line << "\n";
      }
      jexp.push_back(Json{{"id", id},
                          {"expected", interval_to_json(expected)},
                          {"derived", interval_to_json(derived)},
                          {"ok", ok}});
    }
  }

  Json jsteps = Json::array();
  for (const std::string& id : order)
    jsteps.push_back(Json{{"id", id}, {"interval",
                                       interval_to_json(bound.at(id))}});
  Json j{{"steps", std::move(jsteps)},
         {"expectations", std::move(jexp)},
         {"ok", all_ok}};
  std::string text = os.str();
  if (!text.empty() && text.back() == '\n') text.pop_back();
  emit(out, as_json, j, text);
  if (!all_ok) {
    err << "verification failure: expectation '" << first_fail
        << "' not established\n";
    return 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// twist family
// ---------------------------------------------------------------------------

int cmd_twist_report(const std::vector<int>& xs, bool as_json,
                     std::ostream& out, std::ostream& err) {
  TwistReport rep = reproduce_twist_results(xs);
  bool replay_ok = true;
  std::string failing;
  for (const TwistReportEntry& e : rep.entries) {
    if (!replay(e.torsion)) {
      replay_ok = false;
      failing = "infinite-order certificate for T" + int_to_string(e.n);
      break;
    }
  }
  if (replay_ok && rep.independence && !replay(*rep.independence)) {
    replay_ok = false;
    failing = "independence certificate";
  }
  Json j = report_to_json(rep);
  j["replay_verified"] = replay_ok;
  emit(out, as_json, j,
       rep.to_string() + "\n\ncertificate replay: " +
           (replay_ok ? "verified" : "FAILED"));
  if (!replay_ok) {
    err << "verification failure: certificate replay: " << failing << "\n";
    return 1;
  }
  return 0;
}

int cmd_twist_family(const std::vector<int>& xs, std::ostream& out) {
  Json arr = Json::array();
  for (int x : xs) {
    TwistFamilyEntry e = family_entry(x);
    Json intvec1 = Json::array(), intvec2 = Json::array();
    for (const Int& z : e.v1) intvec1.push_back(z.get_si());
    for (const Int& z : e.v2) intvec2.push_back(z.get_si());
    Json je;
    je["x"] = e.x;
    je["n"] = static_cast<long>(e.n.get_si());
    je["name"] = e.name();
    je["V"] = seifert_to_json(e.V);
    je["V2"] = seifert_to_json(e.V2);
    je["delta"] = laurent_to_json(alexander_poly(e.V));
    je["v1"] = std::move(intvec1);
    je["v2"] = std::move(intvec2);
    je["m1"] = element_to_json(e.m1);
    je["m2"] = element_to_json(e.m2);
    je["l1"] = element_to_json(e.l1);
    je["l2"] = element_to_json(e.l2);
    je["formulas_match"] = e.formulas_match;
    arr.push_back(std::move(je));
  }
  out << arr.dump(2) << "\n";
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "concord -- exact algebraic concordance invariants of knots:\n"
      "Alexander modules, Blanchfield pairings, signature functions, rho\n"
      "invariants, l2 signatures and replayable inequality derivations."};
  app.require_subcommand(1);
  app.footer(
      "Environment:\n"
      "  CONCORDANCE_PRECISION_BITS  working precision for certified\n"
      "  transcendental enclosures (default 256, minimum 64); all other\n"
      "  arithmetic is exact and unaffected.");

  bool as_json = false;
  app.add_flag("--json", as_json,
               "emit machine-readable JSON instead of human text");
  auto sub = [](CLI::App* parent, const std::string& name,
                const std::string& desc) {
    CLI::App* s = parent->add_subcommand(name, desc);
    s->fallthrough();
    return s;
  };

  CLI::App* alex = sub(&app, "alex", "Alexander polynomial (canonical unit "
                                     "class) of a Seifert matrix");
  std::string alex_matrix;
  alex->add_option("--matrix", alex_matrix, "Seifert matrix JSON file")
      ->required();

  CLI::App* sig = sub(&app, "sig", "Levine-Tristram signature at u = 2cos("
                                   "theta), or the whole arc table");
  std::string sig_matrix, sig_at;
  sig->add_option("--matrix", sig_matrix, "Seifert matrix JSON file")
      ->required();
  sig->add_option("--at", sig_at,
                  "evaluation point u in [-2, 2] as an exact rational");

  CLI::App* rho0 = sub(&app, "rho0", "normalized integral of the signature "
                                     "function, certified or exact");
  std::string rho0_matrix;
  rho0->add_option("--matrix", rho0_matrix, "Seifert matrix JSON file")
      ->required();

  CLI::App* blan = sub(&app, "blanchfield", "Blanchfield linking-form value "
                                            "Bl(r, s)");
  std::string blan_matrix, blan_r, blan_s, blan_p;
  blan->add_option("--matrix", blan_matrix, "Seifert matrix JSON file")
      ->required();
  blan->add_option("--r", blan_r, "first module element JSON file")
      ->required();
  blan->add_option("--s", blan_s, "second module element JSON file")
      ->required();
  blan->add_option("--mod-p", blan_p,
                   "localize at this polynomial (JSON file)");

  CLI::App* iso = sub(&app, "isotropic", "does the submodule generated by "
                                         "the given elements pair to zero?");
  std::string iso_matrix, iso_gens, iso_p;
  iso->add_option("--matrix", iso_matrix, "Seifert matrix JSON file")
      ->required();
  iso->add_option("--gens", iso_gens,
                  "JSON file with an array of module elements")
      ->required();
  iso->add_option("--mod-p", iso_p,
                  "localize at this polynomial (JSON file)");

  CLI::App* metab = sub(&app, "metab", "metabolizers of the Seifert form");
  metab->require_subcommand(1);
  CLI::App* metab_verify = sub(metab, "verify", "check a claimed metabolizer");
  std::string mv_matrix, mv_vectors;
  metab_verify->add_option("--matrix", mv_matrix, "Seifert matrix JSON file")
      ->required();
  metab_verify
      ->add_option("--vectors", mv_vectors, "metabolizer JSON file")
      ->required();
  CLI::App* metab_search = sub(metab, "search", "exhaustive search up to an "
                                                "entry height bound");
  std::string ms_matrix;
  int ms_height = 1;
  metab_search->add_option("--matrix", ms_matrix, "Seifert matrix JSON file")
      ->required();
  metab_search->add_option("--height", ms_height, "max |entry| (>= 1)")
      ->required()
      ->check(CLI::PositiveNumber);

  CLI::App* module = sub(&app, "module", "Alexander module of a Seifert "
                                         "matrix");
  module->require_subcommand(1);
  CLI::App* module_smith = sub(module, "smith", "elementary divisors and "
                                                "dimension");
  std::string sm_matrix;
  module_smith->add_option("--matrix", sm_matrix, "Seifert matrix JSON file")
      ->required();
  CLI::App* module_indep = sub(module, "independent", "are the elements "
                                                      "integrally independent?");
  std::string mi_matrix, mi_elems;
  module_indep->add_option("--matrix", mi_matrix, "Seifert matrix JSON file")
      ->required();
  module_indep
      ->add_option("--elements", mi_elems,
                   "JSON file with an array of module elements")
      ->required();

  CLI::App* aniso = sub(&app, "aniso", "does the localized module forbid "
                                       "nonzero isotropic submodules?");
  std::string an_matrix, an_p;
  aniso->add_option("--matrix", an_matrix, "Seifert matrix JSON file")
      ->required();
  aniso->add_option("--p", an_p, "localization polynomial (JSON file)")
      ->required();

  CLI::App* l2 = sub(&app, "l2sig", "l2 signature of a Hermitian Laurent "
                                    "matrix over the torus");
  std::string l2_matrix;
  int l2_depth = -1;
  l2->add_option("--matrix", l2_matrix, "Hermitian matrix JSON file")
      ->required();
  l2->add_option("--depth", l2_depth,
                 "force subdivision quadrature with this depth");

  CLI::App* ledger = sub(&app, "ledger", "replay a derivation scenario");
  ledger->require_subcommand(1);
  CLI::App* ledger_replay = sub(ledger, "replay", "run the scenario steps "
                                                  "and check expectations");
  std::string scenario;
  ledger_replay->add_option("scenario", scenario, "scenario JSON file")
      ->required();

  CLI::App* twist = sub(&app, "twist", "the twist-knot family pipeline");
  twist->require_subcommand(1);
  CLI::App* twist_report = sub(twist, "report", "verify, derive and certify "
                                                "for each given x");
  std::vector<int> tr_x;
  twist_report->add_option("--x", tr_x, "family parameters (each >= 2)")
      ->required();
  CLI::App* twist_family = sub(twist, "family", "emit the fixture bundle as "
                                                "JSON");
  std::vector<int> tf_x;
  twist_family->add_option("--x", tf_x, "family parameters (each >= 2)")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (alex->parsed()) return cmd_alex(alex_matrix, as_json, out);
    if (sig->parsed()) return cmd_sig(sig_matrix, sig_at, as_json, out);
    if (rho0->parsed()) return cmd_rho0(rho0_matrix, as_json, out);
    if (blan->parsed())
      return cmd_blanchfield(blan_matrix, blan_r, blan_s, blan_p, as_json,
                             out);
    if (iso->parsed())
      return cmd_isotropic(iso_matrix, iso_gens, iso_p, as_json, out, err);
    if (metab_verify->parsed())
      return cmd_metab_verify(mv_matrix, mv_vectors, as_json, out, err);
    if (metab_search->parsed())
      return cmd_metab_search(ms_matrix, ms_height, as_json, out);
    if (module_smith->parsed()) return cmd_module_smith(sm_matrix, as_json,
                                                        out);
    if (module_indep->parsed())
      return cmd_module_independent(mi_matrix, mi_elems, as_json, out, err);
    if (aniso->parsed()) return cmd_aniso(an_matrix, an_p, as_json, out, err);
    if (l2->parsed()) return cmd_l2sig(l2_matrix, l2_depth, as_json, out);
    if (ledger_replay->parsed())
      return cmd_ledger_replay(scenario, as_json, out, err);
    if (twist_report->parsed())
      return cmd_twist_report(tr_x, as_json, out, err);
    if (twist_family->parsed()) return cmd_twist_family(tf_x, out);
  } catch (const std::invalid_argument& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "input error: no subcommand\n";
  return 2;
}

}  // namespace concord
