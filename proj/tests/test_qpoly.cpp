/*
 * test_qpoly.cpp -- dense rational polynomials: arithmetic, gcd/egcd,
 * factorization into monic irreducibles, and Sturm root isolation.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "concord/qfactor.hpp"
#include "concord/qpoly.hpp"

using namespace concord;

namespace {

QPoly lin(long root) {  // x - root
  return QPoly({Rat(-root), Rat(1)});
}

bool has_factor(const QFactorization& f, const QPoly& g, int mult) {
  for (const auto& [p, m] : f.factors)
    if (p == g && m == mult) return true;
  return false;
}

QPoly reassemble(const QFactorization& f) {
  QPoly out = QPoly::constant(f.unit);
  for (const auto& [p, m] : f.factors)
    for (int i = 0; i < m; ++i) out = out * p;
  return out;
}

}  // namespace

TEST_CASE("arithmetic, division and evaluation") {
  QPoly f({Rat(1), Rat(2), Rat(3)});  // 3x^2 + 2x + 1
  QPoly g({Rat(-1), Rat(1)});         // x - 1
  CHECK(f.degree() == 2);
  CHECK(f.eval(Rat(2)) == Rat(17));
  CHECK((f * g).degree() == 3);
  CHECK((f + (-f)).is_zero());
  CHECK(f.derivative() == QPoly({Rat(2), Rat(6)}));

  QPoly q, r;
  QPoly::divrem(f, g, q, r);
  CHECK(q * g + r == f);
  CHECK(r.degree() < g.degree());
  CHECK(r == QPoly::constant(f.eval(Rat(1))));

  CHECK(f.monic().lc() == Rat(1));
  CHECK(f.scale_arg(Rat(2)).eval(Rat(1)) == f.eval(Rat(2)));
  CHECK(f.negate_arg().eval(Rat(3)) == f.eval(Rat(-3)));
}

TEST_CASE("gcd, extended gcd, inverse mod") {
  QPoly a = lin(1) * lin(2) * lin(3);
  QPoly b = lin(2) * lin(3) * lin(4);
  QPoly g = QPoly::gcd(a, b);
  CHECK(g == (lin(2) * lin(3)).monic());
  CHECK(QPoly::divides(g, a));
  CHECK(QPoly::divides(g, b));
  CHECK_FALSE(QPoly::divides(lin(5), a));

  QPoly x, y;
  QPoly d = poly_egcd(a, b, x, y);
  CHECK(a * x + b * y == d);
  CHECK(d.monic() == g);

  // Inverse of x modulo x^2 + 1 is -x (since x * -x = -x^2 = 1 mod x^2+1).
  QPoly m({Rat(1), Rat(0), Rat(1)});
  QPoly inv = poly_inverse_mod(QPoly({Rat(0), Rat(1)}), m);
  QPoly prod = inv * QPoly({Rat(0), Rat(1)});
  QPoly qq, rr;
  QPoly::divrem(prod, m, qq, rr);
  CHECK(rr == QPoly::constant(Rat(1)));
}

TEST_CASE("factorization into monic irreducibles") {
  // (x^2 - 1)(x^2 + 1)(x - 3)^2 = (x-1)(x+1)(x^2+1)(x-3)^2.
  QPoly f = QPoly({Rat(-1), Rat(0), Rat(1)}) * QPoly({Rat(1), Rat(0), Rat(1)}) *
            lin(3) * lin(3);
  QFactorization fac = factor_poly(f);
  CHECK(fac.factors.size() == 4);
  CHECK(has_factor(fac, lin(1), 1));
  CHECK(has_factor(fac, lin(-1), 1));
  CHECK(has_factor(fac, QPoly({Rat(1), Rat(0), Rat(1)}), 1));
  CHECK(has_factor(fac, lin(3), 2));
  CHECK(reassemble(fac) == f);

  // x^6 - 1 = (x-1)(x+1)(x^2+x+1)(x^2-x+1).
  QPoly x6 = QPoly::monomial(6, Rat(1)) - QPoly::constant(Rat(1));
  fac = factor_poly(x6);
  CHECK(fac.factors.size() == 4);
  CHECK(has_factor(fac, QPoly({Rat(1), Rat(1), Rat(1)}), 1));
  CHECK(has_factor(fac, QPoly({Rat(1), Rat(-1), Rat(1)}), 1));
  CHECK(reassemble(fac) == x6);

  // Swinnerton-Dyer-style quartic is irreducible over Q.
  QPoly sd({Rat(1), Rat(0), Rat(-10), Rat(0), Rat(1)});
  CHECK(is_irreducible_poly(sd));
  CHECK(factor_poly(sd).factors.size() == 1);
  CHECK_FALSE(is_irreducible_poly(QPoly::constant(Rat(5))));

  CHECK(is_squarefree_poly(x6));
  CHECK_FALSE(is_squarefree_poly(f));
  CHECK(f.squarefree_part() ==
        (lin(1) * lin(-1) * QPoly({Rat(1), Rat(0), Rat(1)}) * lin(3)).monic());

  CHECK_THROWS_AS(factor_poly(QPoly()), std::invalid_argument);
}

TEST_CASE("Sturm sequences isolate and refine real roots") {
  QPoly r = lin(1) * lin(2) * lin(5);
  SturmSequence st(r);
  CHECK(st.count_roots(Rat(0), Rat(10)) == 3);
  CHECK(st.count_roots(Rat(3), Rat(10)) == 1);
  CHECK(st.count_roots(Rat(6), Rat(10)) == 0);

  std::vector<RootInterval> ivs = st.isolate(Rat(0), Rat(10));
  REQUIRE(ivs.size() == 3);
  std::vector<Rat> roots{Rat(1), Rat(2), Rat(5)};
  for (std::size_t i = 0; i < ivs.size(); ++i) {
    st.refine(ivs[i], Rat(1, 1000));
    CHECK(ivs[i].hi - ivs[i].lo <= Rat(1, 1000));
    CHECK(ivs[i].lo <= roots[i]);
    CHECK(roots[i] <= ivs[i].hi);
  }

  // Repeated roots are handled through the squarefree part.
  SturmSequence st2(lin(2) * lin(2) * lin(7));
  CHECK(st2.count_roots(Rat(0), Rat(10)) == 2);
}

TEST_CASE("random exact-division property") {
  std::mt19937 rng(20260814);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rat> ac, bc;
    for (int i = 0; i < 4; ++i) ac.push_back(Rat(coeff(rng)));
    for (int i = 0; i < 3; ++i) bc.push_back(Rat(coeff(rng)));
    QPoly a(ac), b(bc);
    if (b.is_zero()) continue;
    QPoly q, r;
    QPoly::divrem(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK((r.is_zero() || r.degree() < b.degree()));
  }
}
