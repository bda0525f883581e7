/*
 * test_quadfield.cpp -- arithmetic in the imaginary quadratic field Q(w),
 * w^2 = D < 0, and exact inertia of Hermitian matrices over it.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "concord/quadfield.hpp"

using namespace concord;

namespace {

QuadElem rnd(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 4);
  // Divide rather than using the two-argument constructor: mpq_class(n, d)
  // stores the fraction without canonicalizing it.
  Rat re = Rat(num(rng)) / Rat(den(rng));
  Rat im = Rat(num(rng)) / Rat(den(rng));
  return QuadElem(re, im);
}

}  // namespace

TEST_CASE("field axioms on random elements") {
  QuadField F(Rat(-3, 4));  // D = u^2/4 - 1 at u = 1
  std::mt19937 rng(2026);
  for (int trial = 0; trial < 500; ++trial) {
    QuadElem x = rnd(rng), y = rnd(rng), z = rnd(rng);
    CHECK(F.add(x, y) == F.add(y, x));
    CHECK(F.mul(x, y) == F.mul(y, x));
    CHECK(F.mul(x, F.add(y, z)) == F.add(F.mul(x, y), F.mul(x, z)));
    CHECK(F.sub(x, x).is_zero());
    if (!x.is_zero()) {
      CHECK(F.mul(x, F.inv(x)) == QuadElem::from_rat(Rat(1)));
      CHECK(F.div(y, x) == F.mul(y, F.inv(x)));
    }
    // Norm is multiplicative and conjugation-invariant.
    CHECK(F.norm(F.mul(x, y)) == F.norm(x) * F.norm(y));
    CHECK(F.norm(x.conj()) == F.norm(x));
    // N(a + bw) = a^2 - D b^2 >= 0 for D < 0, zero iff x = 0.
    CHECK(F.norm(x) >= Rat(0));
    CHECK((F.norm(x) == Rat(0)) == x.is_zero());
  }
}

TEST_CASE("constructor rejects nonnegative discriminants") {
  CHECK_THROWS_AS(QuadField(Rat(0)), std::invalid_argument);
  CHECK_THROWS_AS(QuadField(Rat(2)), std::invalid_argument);
}

TEST_CASE("inertia of diagonal and hyperbolic matrices") {
  QuadField F(Rat(-1));
  auto one = QuadElem::from_rat(Rat(1));
  auto zero = QuadElem();

  Inertia d = hermitian_inertia(F, {{one, zero}, {zero, QuadElem::from_rat(Rat(-2))}});
  CHECK(d.pos == 1);
  CHECK(d.neg == 1);
  CHECK(d.zero == 0);
  CHECK(d.signature() == 0);

  Inertia z = hermitian_inertia(F, {{zero}});
  CHECK(z.zero == 1);
  CHECK(z.signature() == 0);

  // Zero diagonal with an off-diagonal pair is hyperbolic: (+1, -1).
  QuadElem w(Rat(0), Rat(1));
  Inertia h = hermitian_inertia(F, {{zero, w}, {w.conj(), zero}});
  CHECK(h.pos == 1);
  CHECK(h.neg == 1);
  CHECK(h.zero == 0);

  CHECK(hermitian_inertia(F, {}).signature() == 0);
}

TEST_CASE("inertia is congruence-invariant on random Hermitian matrices") {
  QuadField F(Rat(-7, 16));
  std::mt19937 rng(77);
  std::uniform_int_distribution<int> small(-3, 3);
  for (int trial = 0; trial < 100; ++trial) {
    // Random Hermitian 3x3: H = A + A^* with random A.
    int n = 3;
    std::vector<std::vector<QuadElem>> a(n, std::vector<QuadElem>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) a[i][j] = rnd(rng);
    std::vector<std::vector<QuadElem>> h(n, std::vector<QuadElem>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) h[i][j] = F.add(a[i][j], a[j][i].conj());
    Inertia base = hermitian_inertia(F, h);
    CHECK(base.pos + base.neg + base.zero == n);

    // Congruence by an elementary unimodular P: P^* H P has equal inertia.
    std::uniform_int_distribution<int> idx(0, n - 1);
    int r = idx(rng), s = idx(rng);
    if (r == s) continue;
    QuadElem k(Rat(small(rng)), Rat(small(rng)));
    // col_s += k * col_r, then row_s += conj(k) * row_r.
    std::vector<std::vector<QuadElem>> g = h;
    for (int i = 0; i < n; ++i) g[i][s] = F.add(g[i][s], F.mul(g[i][r], k));
    for (int j = 0; j < n; ++j)
      g[s][j] = F.add(g[s][j], F.mul(k.conj(), g[r][j]));
    Inertia after = hermitian_inertia(F, g);
    CHECK(after.pos == base.pos);
    CHECK(after.neg == base.neg);
    CHECK(after.zero == base.zero);
  }
}

TEST_CASE("non-Hermitian input is rejected") {
  QuadField F(Rat(-1));
  QuadElem w(Rat(0), Rat(1));
  CHECK_THROWS_AS(
      hermitian_inertia(F, {{QuadElem::from_rat(Rat(1)), w},
                            {w, QuadElem::from_rat(Rat(1))}}),
      std::invalid_argument);
  CHECK_THROWS_AS(hermitian_inertia(F, {{w}}), std::invalid_argument);
}
