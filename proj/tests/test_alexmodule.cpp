/*
 * test_alexmodule.cpp -- the rational Alexander module: Smith normal form
 * with verified change-of-basis matrices, element reduction, integral
 * linear independence, generated submodules, localization, and the
 * anisotropy criterion.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "concord/alexmodule.hpp"
#include "random_seifert.hpp"

using namespace concord;
using concord::testing::random_seifert;

namespace {

LaurentPoly L(std::initializer_list<std::pair<int, int>> terms) {
  LaurentPoly p;
  for (auto [e, c] : terms) p = p + LaurentPoly::monomial(e, Rat(c));
  return p;
}

const SeifertMatrix kTrefoil({{Int(-1), Int(1)}, {Int(0), Int(-1)}});
const SeifertMatrix kTwist7({{Int(-7), Int(1)}, {Int(0), Int(1)}});

bool is_identity(const LaurentMatrix& m) {
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) {
      LaurentPoly want =
          (i == j) ? LaurentPoly::constant(Rat(1)) : LaurentPoly();
      if (m[i][j] != want) return false;
    }
  return true;
}

bool smith_consistent(const AlexanderModule& A) {
  const SmithTransforms& S = A.basis_transform();
  LaurentMatrix D = laurent_mat_mul(
      laurent_mat_mul(S.transform, A.presentation()), S.cotransform);
  for (std::size_t i = 0; i < D.size(); ++i)
    for (std::size_t j = 0; j < D.size(); ++j)
      if (D[i][j] != (i == j ? S.diagonal[i] : LaurentPoly())) return false;
  return is_identity(laurent_mat_mul(S.transform, S.transform_inv)) &&
         is_identity(laurent_mat_mul(S.transform_inv, S.transform)) &&
         is_identity(laurent_mat_mul(S.cotransform, S.cotransform_inv)) &&
         is_identity(laurent_mat_mul(S.cotransform_inv, S.cotransform));
}

}  // namespace

TEST_CASE("trefoil module structure") {
  AlexanderModule A = build_module(kTrefoil);
  REQUIRE(A.divisors().size() == 1);
  CHECK(A.divisors()[0] == L({{2, 1}, {1, -1}, {0, 1}}));
  CHECK(A.dimension() == 2);
  CHECK(smith_consistent(A));

  // The presentation relation t*e2 - (t - 1)*e1 = 0 holds in the module.
  ModuleElement rel = A.element({L({{1, -1}, {0, 1}}), L({{1, 1}})});
  CHECK(A.is_zero(rel));
  // The Alexander polynomial annihilates.
  CHECK(A.is_zero(A.element({L({{2, 1}, {1, -1}, {0, 1}}), LaurentPoly()})));

  ModuleElement e1 = A.element({L({{0, 1}}), LaurentPoly()});
  CHECK_FALSE(A.is_zero(e1));
  CHECK(A.equal(e1, A.reduce(e1)));
  CHECK(A.vectorize(e1).size() == 2);

  // t-shift, add, scale are consistent.
  ModuleElement te1 = A.t_shift(e1, 1);
  CHECK(A.equal(te1, A.scale(e1, LaurentPoly::t())));
  CHECK(A.is_zero(A.add(e1, A.scale(e1, L({{0, -1}})))));

  // Z-linear independence.
  CHECK(z_linear_independent(A, {e1, te1}));
  CHECK_FALSE(z_linear_independent(A, {e1, A.scale(e1, L({{0, 3}}))}));
  CHECK_FALSE(z_linear_independent(A, {A.element({LaurentPoly(), LaurentPoly()})}));

  // e1 generates the whole 2-dimensional module.
  CHECK(submodule_generated(A, {e1}).dimension() == 2);
  CHECK(submodule_generated(A, {}).dimension() == 0);
}

TEST_CASE("unknot module is trivial") {
  AlexanderModule A = build_module(SeifertMatrix());
  CHECK(A.dimension() == 0);
  CHECK(A.divisors().empty());
}

TEST_CASE("twist-sum module and its distinguished elements") {
  SeifertMatrix V2 = connected_sum(kTwist7, kTwist7);
  AlexanderModule A2 = build_module(V2);
  REQUIRE(A2.divisors().size() == 2);
  CHECK(A2.divisors()[0] == L({{2, 7}, {1, -15}, {0, 7}}));
  CHECK(A2.divisors()[1] == L({{2, 7}, {1, -15}, {0, 7}}));
  CHECK(A2.dimension() == 4);
  CHECK(smith_consistent(A2));

  auto C = [&](LaurentPoly a, LaurentPoly b) {
    return A2.element({std::move(a), LaurentPoly(), std::move(b), LaurentPoly()});
  };
  ModuleElement m1 = C(L({{0, 1}}), LaurentPoly());
  ModuleElement m2 = C(LaurentPoly(), L({{0, 1}}));
  ModuleElement l1 = C(L({{1, 9}, {0, -14}}), L({{1, 8}, {0, -7}}));
  ModuleElement l2 = C(L({{1, 8}, {0, -7}}), L({{1, -31}, {0, 21}}));
  CHECK(z_linear_independent(A2, {m1, m2, l1, l2}));
  CHECK(submodule_generated(A2, {l1, l2}).dimension() == 2);
  CHECK(submodule_generated(A2, {m1, m2}).dimension() == 4);

  // Per-summand relation e2 = n(1/t - 1)e1 with n = -7.
  ModuleElement rel =
      A2.element({L({{0, 7}, {1, -7}}), L({{1, 1}}), LaurentPoly(), LaurentPoly()});
  CHECK(A2.is_zero(rel));
}

TEST_CASE("localization and the anisotropy criterion") {
  SeifertMatrix V2 = connected_sum(kTwist7, kTwist7);
  AlexanderModule A2 = build_module(V2);
  LaurentPoly delta7 = L({{2, 7}, {1, -15}, {0, 7}});

  LocalizedModule loc = localize(A2, delta7);
  CHECK(loc.dimension() == 4);
  CHECK_FALSE(loc.is_zero());
  CHECK(localize(A2, L({{1, 1}, {0, -3}})).is_zero());

  CHECK(anisotropy_criterion(kTwist7, delta7));
  CHECK_FALSE(anisotropy_criterion(connected_sum(kTrefoil, kTrefoil),
                                   L({{2, 1}, {1, -1}, {0, 1}})));
  // Localizing at a unit kills the module, which is vacuously anisotropic.
  CHECK(anisotropy_criterion(kTrefoil, L({{0, 1}})));
  CHECK_THROWS_AS(anisotropy_criterion(kTrefoil, LaurentPoly()),
                  std::invalid_argument);
}

TEST_CASE("Smith normal form on random Seifert matrices") {
  std::mt19937 rng(60657);
  std::uniform_int_distribution<int> genus(1, 3);
  for (int trial = 0; trial < 100; ++trial) {
    SeifertMatrix V = random_seifert(rng, genus(rng));
    AlexanderModule A = build_module(V);
    CHECK(smith_consistent(A));

    // Divisors divide in order and multiply to the Alexander class.
    auto divides = [](const LaurentPoly& d, const LaurentPoly& f) {
      int shift = 0;
      return QPoly::divides(d.to_qpoly(shift), f.to_qpoly(shift));
    };
    LaurentPoly prod = LaurentPoly::constant(Rat(1));
    for (std::size_t i = 0; i < A.divisors().size(); ++i) {
      prod = prod * A.divisors()[i];
      if (i + 1 < A.divisors().size())
        CHECK(divides(A.divisors()[i], A.divisors()[i + 1]));
    }
    CHECK(unit_equal(prod, alexander_poly(V)));

    // Dimension is the degree of the Alexander polynomial.
    int shift = 0;
    CHECK(A.dimension() == alexander_poly(V).to_qpoly(shift).degree());

    // The Alexander polynomial annihilates a random element.
    if (A.dimension() > 0) {
      std::vector<LaurentPoly> coords(V.dim());
      coords[0] = LaurentPoly::constant(Rat(1));
      ModuleElement e = A.element(coords);
      LaurentPoly d = alexander_poly(V);
      CHECK(A.is_zero(A.scale(e, d)));
    }
  }
}
