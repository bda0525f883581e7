/*
 * qpoly.hpp -- dense univariate polynomials over Q: arithmetic, division,
 * gcd, derivatives, evaluation, Sturm sequences and certified real-root
 * isolation by bisection.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#pragma once

#include <string>
#include <vector>

#include "concord/rational.hpp"

namespace concord {

/**
 * A polynomial in Q[x], stored densely from the constant term upward.  The
 * zero polynomial has an empty coefficient vector and degree -1.
 */
class QPoly {
 public:
  QPoly() = default;
  /** Construct from coefficients c0, c1, ... (low degree first). */
  explicit QPoly(std::vector<Rat> coeffs);
  static QPoly constant(const Rat& c);
  static QPoly monomial(int deg, const Rat& c);

  bool is_zero() const { return coeffs_.empty(); }
  /** Degree; -1 for the zero polynomial. */
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /** Coefficient of x^i (zero outside the stored range). */
  Rat coeff(int i) const;
  /** Leading coefficient; throws std::domain_error on the zero polynomial. */
  const Rat& lc() const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }

  QPoly operator-() const;
  QPoly operator+(const QPoly& o) const;
  QPoly operator-(const QPoly& o) const;
  QPoly operator*(const QPoly& o) const;
  QPoly operator*(const Rat& c) const;
  bool operator==(const QPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const QPoly& o) const { return !(*this == o); }

  QPoly derivative() const;
  Rat eval(const Rat& x) const;
  /** Divide by the leading coefficient; zero stays zero. */
  QPoly monic() const;
  /** Substitute x -> x * c. */
  QPoly scale_arg(const Rat& c) const;
  /** Substitute x -> -x. */
  QPoly negate_arg() const;

  /**
   * Euclidean division a = q*b + r with deg r < deg b.  Throws
   * std::domain_error when b is zero.
   */
  static void divrem(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r);
  /** Monic gcd; gcd(0,0) = 0. */
  static QPoly gcd(const QPoly& a, const QPoly& b);
  /** True iff b divides a exactly. */
  static bool divides(const QPoly& b, const QPoly& a);

  /** Squarefree part f / gcd(f, f'), made monic. */
  QPoly squarefree_part() const;

  /** Human-readable rendering like "3*x^2 - 1/2*x + 4" in variable `var`. */
  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/**
 * Extended gcd: returns the monic g = gcd(a, b) and sets x, y so that
 * x*a + y*b = g.  poly_egcd(0, 0, ...) returns 0 with x = y = 0.
 */
QPoly poly_egcd(const QPoly& a, const QPoly& b, QPoly& x, QPoly& y);

/**
 * Inverse of a modulo m (deg m >= 1): the unique poly u with deg u < deg m
 * and u*a = 1 mod m.  Throws std::domain_error when gcd(a, m) != 1.
 */
QPoly poly_inverse_mod(const QPoly& a, const QPoly& m);

/**
 * An open interval (lo, hi) with rational endpoints that are not roots of the
 * polynomial under study and that contains exactly one of its real roots.
 */
struct RootInterval {
  Rat lo, hi;
};

/**
 * Sturm sequence of (the squarefree part of) a polynomial, supporting exact
 * root counting on intervals and certified isolation/refinement of all real
 * roots by rational bisection.
 */
class SturmSequence {
 public:
  explicit SturmSequence(const QPoly& f);

  /** Number of sign changes in the sequence evaluated at x. */
  int sign_changes_at(const Rat& x) const;
  /**
   * Number of distinct real roots in the half-open interval (lo, hi].
   * Requires lo <= hi.
   */
  int count_roots(const Rat& lo, const Rat& hi) const;
  /**
   * Isolating intervals, in increasing order, for every distinct real root in
   * the open interval (lo, hi).  Roots exactly at lo or hi are excluded.
   */
  std::vector<RootInterval> isolate(const Rat& lo, const Rat& hi) const;
  /** Shrink an isolating interval by bisection until hi - lo <= max_width. */
  void refine(RootInterval& iv, const Rat& max_width) const;

  /** The squarefree polynomial the sequence was built from. */
  const QPoly& squarefree() const { return f_; }

 private:
  QPoly f_;
  std::vector<QPoly> seq_;
};

}  // namespace concord
