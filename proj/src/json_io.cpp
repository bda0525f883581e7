/*
 * json_io.cpp -- JSON (de)serialization for the library's value types.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#include "concord/json_io.hpp"

#include <fstream>
#include <stdexcept>
#include <utility>

namespace concord {

namespace {

[[noreturn]] void bad(const std::string& what) {
  throw std::invalid_argument(what);
}

Json int_to_json(const Int& z) {
  if (z.fits_slong_p()) return Json(z.get_si());
  return Json(int_to_string(z));
}

Int int_from_json(const Json& j, const std::string& ctx) {
  if (j.is_number_integer()) return Int(j.get<long>());
  if (j.is_string()) {
    try {
      return Int(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      bad(ctx + ": bad integer literal '" + j.get<std::string>() + "'");
    }
  }
  bad(ctx + ": expected an integer or an integer string");
}

Rat rat_from_json(const Json& j, const std::string& ctx) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  bad(ctx + ": expected a rational as a \"p/q\" string");
}

int exponent_from_json(const Json& j, const std::string& ctx) {
  if (!j.is_number_integer()) bad(ctx + ": expected an integer exponent");
  return j.get<int>();
}

const Json& field(const Json& j, const char* key, const std::string& ctx) {
  if (!j.is_object() || !j.contains(key))
    bad(ctx + ": missing field \"" + key + "\"");
  return j.at(key);
}

ExtReal ext_from_json(const Json& j, const std::string& ctx) {
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    if (s == "-inf") return ExtReal::neg_inf();
    if (s == "+inf" || s == "inf") return ExtReal::pos_inf();
    return ExtReal::finite(parse_rational(s));
  }
  if (j.is_number_integer()) return ExtReal::finite(Rat(j.get<long>()));
  bad(ctx + ": expected \"-inf\", \"+inf\" or a rational string");
}

/** Shared reader/writer for the {exact, lo, hi} enclosure shape. */
template <typename Enclosure>
Json enclosure_to_json(const Enclosure& e) {
  Json j;
  j["exact"] = e.exact ? Json(rat_to_string(*e.exact)) : Json(nullptr);
  j["lo"] = rat_to_string(e.lo);
  j["hi"] = rat_to_string(e.hi);
  return j;
}

template <typename Enclosure>
Enclosure enclosure_from_json(const Json& j, const std::string& ctx) {
  Enclosure e;
  const Json& exact = field(j, "exact", ctx);
  if (!exact.is_null()) e.exact = rat_from_json(exact, ctx);
  e.lo = rat_from_json(field(j, "lo", ctx), ctx);
  e.hi = rat_from_json(field(j, "hi", ctx), ctx);
  return e;
}

Json premise_to_json(const CertPremise& p) {
  return Json{{"rule", p.rule}, {"statement", p.statement}, {"holds", p.holds}};
}

CertPremise premise_from_json(const Json& j) {
  const std::string ctx = "certificate premise";
  CertPremise p;
  p.rule = field(j, "rule", ctx).get<std::string>();
  p.statement = field(j, "statement", ctx).get<std::string>();
  p.holds = field(j, "holds", ctx).get<bool>();
  return p;
}

}  // namespace

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    bad(path + ": " + e.what());
  }
}

Json laurent_to_json(const LaurentPoly& f) {
  Json j = Json::object();
  for (const auto& [exp, c] : f.coeffs())
    j[std::to_string(exp)] = rat_to_string(c);
  return j;
}

LaurentPoly laurent_from_json(const Json& j) {
  const std::string ctx = "laurent polynomial";
  if (!j.is_object())
    bad(ctx + ": expected an object of exponent -> coefficient");
  LaurentPoly f;
  for (const auto& [key, val] : j.items()) {
    int exp = 0;
    try {
      std::size_t used = 0;
      exp = std::stoi(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      bad(ctx + ": bad exponent key '" + key + "'");
    }
    f = f + LaurentPoly::monomial(exp, rat_from_json(val, ctx));
  }
  return f;
}

Json seifert_to_json(const SeifertMatrix& V) {
  Json rows = Json::array();
  for (const std::vector<Int>& row : V.entries()) {
    Json r = Json::array();
    for (const Int& z : row) r.push_back(int_to_json(z));
    rows.push_back(std::move(r));
  }
  return Json{{"matrix", std::move(rows)}};
}

SeifertMatrix seifert_from_json(const Json& j) {
  const std::string ctx = "seifert matrix";
  const Json& rows = field(j, "matrix", ctx);
  if (!rows.is_array()) bad(ctx + ": \"matrix\" must be an array of rows");
  std::vector<std::vector<Int>> entries;
  for (const Json& row : rows) {
    if (!row.is_array()) bad(ctx + ": each row must be an array");
    std::vector<Int> r;
    for (const Json& v : row) r.push_back(int_from_json(v, ctx));
    entries.push_back(std::move(r));
  }
  return SeifertMatrix(std::move(entries));
}

Json element_to_json(const ModuleElement& e) {
  Json coords = Json::array();
  for (const LaurentPoly& f : e.coords) coords.push_back(laurent_to_json(f));
  return Json{{"coords", std::move(coords)}};
}

ModuleElement element_from_json(const AlexanderModule& A, const Json& j) {
  const std::string ctx = "module element";
  const Json& coords = field(j, "coords", ctx);
  if (!coords.is_array()) bad(ctx + ": \"coords\" must be an array");
  std::vector<LaurentPoly> parsed;
  for (const Json& c : coords) parsed.push_back(laurent_from_json(c));
  return A.element(std::move(parsed));
}

std::vector<ModuleElement> elements_from_json(const AlexanderModule& A,
                                              const Json& j) {
  if (!j.is_array()) bad("module elements: expected an array");
  std::vector<ModuleElement> out;
  for (const Json& e : j) out.push_back(element_from_json(A, e));
  return out;
}

Json metabolizer_to_json(const Metabolizer& m) {
  Json vecs = Json::array();
  for (const std::vector<Int>& v : m.vectors) {
    Json r = Json::array();
    for (const Int& z : v) r.push_back(int_to_json(z));
    vecs.push_back(std::move(r));
  }
  return Json{{"vectors", std::move(vecs)}};
}

Metabolizer metabolizer_from_json(const Json& j) {
  const std::string ctx = "metabolizer";
  const Json& vecs = field(j, "vectors", ctx);
  if (!vecs.is_array()) bad(ctx + ": \"vectors\" must be an array");
  Metabolizer m;
  for (const Json& v : vecs) {
    if (!v.is_array()) bad(ctx + ": each vector must be an array");
    std::vector<Int> r;
    for (const Json& z : v) r.push_back(int_from_json(z, ctx));
    m.vectors.push_back(std::move(r));
  }
  return m;
}

Json multilaurent_to_json(const MultiLaurent& f) {
  Json terms = Json::array();
  for (const auto& [exps, c] : f.terms())
    terms.push_back(Json{{"exps", exps}, {"coeff", rat_to_string(c)}});
  return terms;
}

MultiLaurent multilaurent_from_json(const Json& j, int nvars) {
  const std::string ctx = "laurent matrix entry";
  if (!j.is_array()) bad(ctx + ": expected a term list");
  MultiLaurent f(nvars);
  for (const Json& term : j) {
    const Json& exps = field(term, "exps", ctx);
    if (!exps.is_array() || static_cast<int>(exps.size()) != nvars)
      bad(ctx + ": \"exps\" must list one exponent per variable");
    std::vector<int> e;
    for (const Json& v : exps) e.push_back(exponent_from_json(v, ctx));
    f = f + MultiLaurent::monomial(std::move(e),
                                   rat_from_json(field(term, "coeff", ctx),
                                                 ctx));
  }
  return f;
}

Json hermitian_to_json(const HermitianLaurentMatrix& M) {
  Json rows = Json::array();
  for (int i = 0; i < M.dim(); ++i) {
    Json r = Json::array();
    for (int k = 0; k < M.dim(); ++k)
      r.push_back(multilaurent_to_json(M.at(i, k)));
    rows.push_back(std::move(r));
  }
  return Json{{"nvars", M.nvars()}, {"entries", std::move(rows)}};
}

HermitianLaurentMatrix hermitian_from_json(const Json& j) {
  const std::string ctx = "hermitian laurent matrix";
  const Json& nv = field(j, "nvars", ctx);
  if (!nv.is_number_integer()) bad(ctx + ": \"nvars\" must be an integer");
  int nvars = nv.get<int>();
  const Json& rows = field(j, "entries", ctx);
  if (!rows.is_array()) bad(ctx + ": \"entries\" must be an array of rows");
  std::vector<std::vector<MultiLaurent>> entries;
  for (const Json& row : rows) {
    if (!row.is_array()) bad(ctx + ": each row must be an array");
    std::vector<MultiLaurent> r;
    for (const Json& e : row) r.push_back(multilaurent_from_json(e, nvars));
    entries.push_back(std::move(r));
  }
  return HermitianLaurentMatrix(nvars, std::move(entries));
}

Json interval_to_json(const RhoInterval& iv) {
  return Json{{"lo", iv.lo.to_string()},
              {"hi", iv.hi.to_string()},
              {"provenance", iv.provenance}};
}

RhoInterval interval_from_json(const Json& j) {
  const std::string ctx = "rho interval";
  RhoInterval iv(ext_from_json(field(j, "lo", ctx), ctx),
                 ext_from_json(field(j, "hi", ctx), ctx));
  if (j.contains("provenance")) {
    const Json& prov = j.at("provenance");
    if (!prov.is_array()) bad(ctx + ": \"provenance\" must be an array");
    for (const Json& line : prov)
      iv.provenance.push_back(line.get<std::string>());
  }
  return iv;
}

Json certificate_to_json(const Certificate& c) {
  Json j;
  j["conclusion"] = c.conclusion;
  j["verified"] = c.verified;
  Json premises = Json::array();
  for (const CertPremise& p : c.premises) premises.push_back(premise_to_json(p));
  j["premises"] = std::move(premises);
  j["failures"] = c.failures;
  Json inputs = Json::array();
  for (const IndependenceInput& in : c.independence_inputs)
    inputs.push_back(Json{{"matrix", seifert_to_json(in.matrix)},
                          {"rho1", interval_to_json(in.rho1)},
                          {"name", in.name}});
  j["independence_inputs"] = std::move(inputs);
  if (c.torsion_input) {
    j["torsion_input"] = Json{{"matrix", seifert_to_json(c.torsion_input->matrix)},
                              {"rho1_p", interval_to_json(c.torsion_input->rho1_p)},
                              {"p", laurent_to_json(c.torsion_input->p)},
                              {"name", c.torsion_input->name}};
  } else {
    j["torsion_input"] = nullptr;
  }
  return j;
}

Certificate certificate_from_json(const Json& j) {
  const std::string ctx = "certificate";
  Certificate c;
  c.conclusion = field(j, "conclusion", ctx).get<std::string>();
  c.verified = field(j, "verified", ctx).get<bool>();
  for (const Json& p : field(j, "premises", ctx))
    c.premises.push_back(premise_from_json(p));
  for (const Json& f : field(j, "failures", ctx))
    c.failures.push_back(f.get<std::string>());
  for (const Json& in : field(j, "independence_inputs", ctx)) {
    IndependenceInput input{seifert_from_json(field(in, "matrix", ctx)),
                            interval_from_json(field(in, "rho1", ctx)),
                            field(in, "name", ctx).get<std::string>()};
    c.independence_inputs.push_back(std::move(input));
  }
  const Json& tin = field(j, "torsion_input", ctx);
  if (!tin.is_null()) {
    c.torsion_input =
        TorsionInput{seifert_from_json(field(tin, "matrix", ctx)),
                     interval_from_json(field(tin, "rho1_p", ctx)),
                     laurent_from_json(field(tin, "p", ctx)),
                     field(tin, "name", ctx).get<std::string>()};
  }
  return c;
}

Json report_to_json(const TwistReport& r) {
  Json entries = Json::array();
  for (const TwistReportEntry& e : r.entries) {
    Json je;
    je["x"] = e.x;
    je["n"] = int_to_json(e.n);
    je["delta"] = laurent_to_json(e.delta);
    je["metabolizer_ok"] = e.metabolizer_ok;
    je["isotropy_ok"] = e.isotropy_ok;
    je["independence_ok"] = e.independence_ok;
    je["anisotropy_ok"] = e.anisotropy_ok;
    je["rho0"] = enclosure_to_json(e.rho0);
    je["sigma2"] = enclosure_to_json(e.sigma2);
    je["rho0_link"] = interval_to_json(e.rho0_link);
    je["rho1"] = interval_to_json(e.rho1);
    je["torsion"] = certificate_to_json(e.torsion);
    entries.push_back(std::move(je));
  }
  Json j;
  j["entries"] = std::move(entries);
  j["independence"] =
      r.independence ? certificate_to_json(*r.independence) : Json(nullptr);
  return j;
}

TwistReport report_from_json(const Json& j) {
  const std::string ctx = "twist report";
  TwistReport r;
  for (const Json& je : field(j, "entries", ctx)) {
    TwistReportEntry e;
    e.x = field(je, "x", ctx).get<int>();
    e.n = int_from_json(field(je, "n", ctx), ctx);
    e.delta = laurent_from_json(field(je, "delta", ctx));
    e.metabolizer_ok = field(je, "metabolizer_ok", ctx).get<bool>();
    e.isotropy_ok = field(je, "isotropy_ok", ctx).get<bool>();
    e.independence_ok = field(je, "independence_ok", ctx).get<bool>();
    e.anisotropy_ok = field(je, "anisotropy_ok", ctx).get<bool>();
    e.rho0 = enclosure_from_json<RhoZero>(field(je, "rho0", ctx), ctx);
    e.sigma2 = enclosure_from_json<L2Signature>(field(je, "sigma2", ctx), ctx);
    e.rho0_link = interval_from_json(field(je, "rho0_link", ctx));
    e.rho1 = interval_from_json(field(je, "rho1", ctx));
    e.torsion = certificate_from_json(field(je, "torsion", ctx));
    r.entries.push_back(std::move(e));
  }
  const Json& indep = field(j, "independence", ctx);
  if (!indep.is_null()) r.independence = certificate_from_json(indep);
  return r;
}

}  // namespace concord
