/*
 * test_twistlab.cpp -- the negative twist family: fixture construction,
 * distinctness and irreducibility of the Alexander polynomials, vanishing
 * abelian invariants, the full certified pipeline, and a regression check
 * of the shipped fixture file against freshly built entries.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <string>

#include "concord/json_io.hpp"
#include "concord/qfactor.hpp"
#include "concord/seifert.hpp"
#include "concord/twistlab.hpp"

using namespace concord;

namespace {

LaurentPoly lin(long a, long b) {  // a*t + b
  return LaurentPoly::monomial(1, Rat(a)) + LaurentPoly::constant(Rat(b));
}

}  // namespace

TEST_CASE("family entries carry the verified fixtures") {
  TwistFamilyEntry e2 = family_entry(2);
  CHECK(e2.n == -7);
  CHECK(e2.name() == "T-7");
  CHECK(e2.V.at(0, 0) == Int(-7));
  CHECK(e2.V.at(0, 1) == Int(1));
  CHECK(e2.V.at(1, 0) == Int(0));
  CHECK(e2.V.at(1, 1) == Int(1));
  CHECK(e2.V2.dim() == 4);
  CHECK(e2.v1 == std::vector<Int>{Int(1), Int(2), Int(0), Int(1)});
  CHECK(e2.v2 == std::vector<Int>{Int(0), Int(1), Int(1), Int(-3)});

  // l_i is the class of t * V2 * v_i, with cyclic coordinates as below.
  CHECK(e2.module.equal(e2.l1, e2.module.element({lin(9, -14), LaurentPoly(),
                                                  lin(8, -7), LaurentPoly()})));
  CHECK(e2.module.equal(e2.l2, e2.module.element({lin(8, -7), LaurentPoly(),
                                                  lin(-31, 21), LaurentPoly()})));
  CHECK_FALSE(e2.formulas_match);

  TwistFamilyEntry e3 = family_entry(3);
  CHECK(e3.n == -13);
  CHECK(e3.name() == "T-13");
  CHECK(e3.module.equal(e3.l1, e3.module.element({lin(29, -39), LaurentPoly(),
                                                  lin(14, -13), LaurentPoly()})));
  CHECK(e3.module.equal(e3.l2, e3.module.element({lin(14, -13), LaurentPoly(),
                                                  lin(-69, 52), LaurentPoly()})));

  TwistFamilyEntry e4 = family_entry(4);
  CHECK(e4.n == -21);
  CHECK(e4.name() == "T-21");
  CHECK(e4.module.equal(e4.l1, e4.module.element({lin(67, -84), LaurentPoly(),
                                                  lin(22, -21), LaurentPoly()})));
  CHECK(e4.module.equal(e4.l2, e4.module.element({lin(22, -21), LaurentPoly(),
                                                  lin(-131, 105), LaurentPoly()})));

  CHECK_THROWS_AS(family_entry(1), std::invalid_argument);
  CHECK_THROWS_AS(family_entry(0, true), std::invalid_argument);
}

TEST_CASE("Alexander polynomials are distinct irreducible symmetric quadratics") {
  std::vector<LaurentPoly> deltas;
  for (int x = 2; x <= 10; ++x) {
    TwistFamilyEntry e = family_entry(x);
    LaurentPoly d = alexander_poly(e.V);
    // n t^2 + (1 - 2n) t + n with n = -x^2 - x - 1, as a canonical class.
    Int n = e.n;
    Int one_minus_2n = 1 - 2 * n;
    LaurentPoly expect = LaurentPoly::monomial(2, Rat(n)) +
                         LaurentPoly::monomial(1, Rat(one_minus_2n)) +
                         LaurentPoly::constant(Rat(n));
    CHECK(unit_equal(d, expect));
    CHECK(is_symmetric(d));
    // Irreducible over Q as a quadratic in t.
    int shift = 0;
    QPoly dense = d.to_qpoly(shift);
    CHECK(dense.degree() == 2);
    CHECK(is_irreducible_poly(dense));
    for (const LaurentPoly& other : deltas) {
      CHECK_FALSE(unit_equal(d, other));
      CHECK(laurent_gcd(d, other) == LaurentPoly::constant(Rat(1)));
    }
    deltas.push_back(d);
  }
}

TEST_CASE("rho0 of the doubled knots vanishes exactly") {
  for (int x = 2; x <= 6; ++x) {
    TwistFamilyEntry e = family_entry(x);
    RhoZero r = rho0_knot(e.V2);
    REQUIRE(r.exact.has_value());
    CHECK(*r.exact == Rat(0));
    CHECK(r.lo == Rat(0));
    CHECK(r.hi == Rat(0));
  }
}

TEST_CASE("full pipeline produces verified certificates") {
  TwistReport rep = reproduce_twist_results({2, 3, 4});
  REQUIRE(rep.entries.size() == 3);
  CHECK(rep.entries[0].n == -7);
  CHECK(rep.entries[1].n == -13);
  CHECK(rep.entries[2].n == -21);
  for (const TwistReportEntry& r : rep.entries) {
    CHECK(r.metabolizer_ok);
    CHECK(r.isotropy_ok);
    CHECK(r.independence_ok);
    CHECK(r.anisotropy_ok);
    REQUIRE(r.rho0.exact.has_value());
    CHECK(*r.rho0.exact == Rat(0));
    REQUIRE(r.sigma2.exact.has_value());
    CHECK(*r.sigma2.exact == Rat(0));
    CHECK(r.rho0_link.to_string() == "[-inf, -2]");
    CHECK(r.rho1.to_string() == "[-inf, -1/2]");
    CHECK(r.rho1.excludes_zero());
    CHECK(r.torsion.verified);
    CHECK(replay(r.torsion));
  }
  REQUIRE(rep.independence.has_value());
  CHECK(rep.independence->verified);
  CHECK(replay(*rep.independence));
  CHECK_FALSE(rep.to_string().empty());

  // The interval derivations carry their full provenance trail.
  const TwistReportEntry& first = rep.entries[0];
  REQUIRE_FALSE(first.rho1.provenance.empty());
  bool has_axiom = false, has_premain = false;
  for (const std::string& line : first.rho1.provenance) {
    if (line.find("axiom") == 0) has_axiom = true;
    if (line.find("premain_bound") != std::string::npos) has_premain = true;
  }
  CHECK(has_axiom);
  CHECK(has_premain);

  TwistReport empty = reproduce_twist_results({});
  CHECK(empty.entries.empty());
  CHECK_FALSE(empty.independence.has_value());

  CHECK_THROWS_AS(reproduce_twist_results({2, 1}), std::invalid_argument);
}

TEST_CASE("exploratory x = 1 interval is conjectural and contains zero") {
  RhoInterval ex = exploratory_x1_interval();
  CHECK(ex.to_string() == "[-1, 0]");
  CHECK(ex.contains_zero());
  REQUIRE_FALSE(ex.provenance.empty());
  CHECK(ex.provenance[0].find("conjectural") != std::string::npos);
}

TEST_CASE("shipped fixture file matches freshly built entries") {
  const char* dir = std::getenv("CONCORD_DATA");
  REQUIRE(dir != nullptr);
  Json arr = load_json_file(std::string(dir) + "/twist-family.json");
  REQUIRE(arr.is_array());
  REQUIRE(arr.size() == 3);
  for (const Json& je : arr) {
    TwistFamilyEntry e = family_entry(je.at("x").get<int>());
    CHECK(Int(je.at("n").get<long>()) == e.n);
    CHECK(je.at("name").get<std::string>() == e.name());
    CHECK(seifert_from_json(je.at("V")) == e.V);
    CHECK(seifert_from_json(je.at("V2")) == e.V2);
    CHECK(laurent_from_json(je.at("delta")) == alexander_poly(e.V));
    CHECK(e.module.equal(element_from_json(e.module, je.at("l1")), e.l1));
    CHECK(e.module.equal(element_from_json(e.module, je.at("l2")), e.l2));
    CHECK(e.module.equal(element_from_json(e.module, je.at("m1")), e.m1));
    CHECK(e.module.equal(element_from_json(e.module, je.at("m2")), e.m2));
    CHECK(je.at("formulas_match").get<bool>() == e.formulas_match);
  }
}
