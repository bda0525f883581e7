/*
 * laurent.hpp -- exact rational Laurent polynomials in one variable t:
 * ring operations, the involution t -> 1/t, symmetry and squarefree tests,
 * gcd, factorization into irreducibles, unit-class normalization, the
 * substitution u = t + 1/t for symmetric polynomials, and determinants of
 * Laurent matrices.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "concord/qpoly.hpp"
#include "concord/rational.hpp"

namespace concord {

/**
 * A Laurent polynomial over Q, stored as a sparse map from integer exponent
 * to nonzero rational coefficient.  The zero polynomial is the empty map and
 * equality is exact coefficient-wise equality.
 */
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly constant(const Rat& c);
  /** The monomial c * t^exp. */
  static LaurentPoly monomial(int exp, const Rat& c);
  /** The variable t (or t^exp). */
  static LaurentPoly t(int exp = 1);
  /** Lift a dense polynomial, optionally shifted by t^shift. */
  static LaurentPoly from_qpoly(const QPoly& f, int shift = 0);

  bool is_zero() const { return c_.empty(); }
  /** Lowest exponent with nonzero coefficient; throws on zero. */
  int min_exp() const;
  /** Highest exponent with nonzero coefficient; throws on zero. */
  int max_exp() const;
  Rat coeff(int exp) const;
  const std::map<int, Rat>& coeffs() const { return c_; }

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator*(const Rat& c) const;
  bool operator==(const LaurentPoly& o) const { return c_ == o.c_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  /** Multiply by t^k. */
  LaurentPoly shifted(int k) const;
  /** The involution p(t) -> p(1/t). */
  LaurentPoly involute() const;
  /** d/dt. */
  LaurentPoly derivative() const;
  /**
   * Evaluate at a rational point; x = 0 is rejected when negative exponents
   * are present.
   */
  Rat eval(const Rat& x) const;
  /** True iff p = c*t^k with c a nonzero rational (a unit of Q[t^{±1}]). */
  bool is_unit() const;

  /**
   * Dense polynomial image: p = t^shift * result with result(0) != 0 (for
   * p = 0 the result is 0 and shift 0).
   */
  QPoly to_qpoly(int& shift) const;
  /** As above when the caller knows min_exp() >= 0 and wants no shift. */
  QPoly to_qpoly() const;

  /** Render with descending powers of `var`, e.g. "-7*t^2 + 15*t - 7". */
  std::string to_string(const std::string& var = "t") const;

 private:
  void set(int exp, const Rat& v);
  std::map<int, Rat> c_;
};

/**
 * Canonical representative of the unit class {±t^k · p}: lowest exponent
 * shifted to 0, then negated if the constant term is negative.  Throws
 * std::domain_error on zero.
 */
LaurentPoly canonical_unit_rep(const LaurentPoly& p);

/** True iff a = ±t^k · b for some integer k. */
bool unit_equal(const LaurentPoly& a, const LaurentPoly& b);

/**
 * Canonical representative of the full associate class {c·t^k · p, c in Q*}:
 * lowest exponent 0, primitive integer coefficients, positive constant term.
 * Used to normalize elementary divisors and denominators uniquely.  Throws
 * std::domain_error on zero.
 */
LaurentPoly canonical_primitive_rep(const LaurentPoly& p);

/** True iff involute(p) = ±t^k · p.  Rejects zero. */
bool is_symmetric(const LaurentPoly& p);

/**
 * Greatest common divisor in the PID Q[t^{±1}], returned as a canonical
 * unit-class representative.  Rejects (0, 0).
 */
LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b);

/** True iff gcd(p, dp/dt) is a unit.  Rejects zero. */
bool laurent_is_squarefree(const LaurentPoly& p);

/**
 * Factorization into irreducibles of Q[t^{±1}]: the product of
 * factor^multiplicity unit-equals p; factors are canonical unit-class
 * representatives ordered by degree then coefficients.  Rejects zero;
 * inherits the degree bound of factor_poly.
 */
std::vector<std::pair<LaurentPoly, int>> laurent_factor(const LaurentPoly& p);

/** Multiplicity of the irreducible `f` in `p` (0 when coprime). */
int laurent_multiplicity(const LaurentPoly& p, const LaurentPoly& f);

/**
 * For a symmetric Laurent polynomial with balanced representative
 * g = t^{-c} p satisfying g(1/t) = g(t), return the unique polynomial J with
 * J(t + 1/t) = g(t).  Throws std::domain_error when no balanced symmetric
 * representative exists.
 */
QPoly u_form(const LaurentPoly& p);

/** Determinant of a square matrix of Laurent polynomials (0x0 -> 1). */
LaurentPoly laurent_det(const std::vector<std::vector<LaurentPoly>>& m);

}  // namespace concord
