/*
 * quadfield.hpp -- arithmetic in the imaginary quadratic field Q(w) with
 * w^2 = D < 0, and exact inertia (signature) computation for Hermitian
 * matrices over it.  Used to evaluate Levine-Tristram signatures and
 * pointwise signatures of Laurent matrices on the unit circle, where
 * t = u/2 + w and w plays the role of i*sin(theta).
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#pragma once

#include <vector>

#include "concord/rational.hpp"

namespace concord {

/** An element a + b*w of Q(w), w^2 = D, with D fixed per computation. */
struct QuadElem {
  Rat a, b;

  QuadElem() : a(0), b(0) {}
  QuadElem(Rat re, Rat im) : a(std::move(re)), b(std::move(im)) {}
  static QuadElem from_rat(const Rat& r) { return QuadElem(r, Rat(0)); }

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_real() const { return b == 0; }
  /** Conjugation w -> -w (complex conjugation on the circle). */
  QuadElem conj() const { return QuadElem(a, -b); }
  bool operator==(const QuadElem& o) const { return a == o.a && b == o.b; }
};

/**
 * The field Q(w) with w^2 = D; requires D < 0 so that the norm form
 * a^2 - D b^2 is definite and every nonzero element is invertible.
 */
class QuadField {
 public:
  explicit QuadField(const Rat& D);

  const Rat& D() const { return d_; }
  QuadElem add(const QuadElem& x, const QuadElem& y) const;
  QuadElem sub(const QuadElem& x, const QuadElem& y) const;
  QuadElem mul(const QuadElem& x, const QuadElem& y) const;
  QuadElem div(const QuadElem& x, const QuadElem& y) const;
  QuadElem inv(const QuadElem& x) const;
  /** a^2 - D b^2 (= |x|^2 on the circle model). */
  Rat norm(const QuadElem& x) const;

 private:
  Rat d_;
};

/** Inertia of a Hermitian matrix: positive, negative and zero eigenvalues. */
struct Inertia {
  int pos = 0, neg = 0, zero = 0;
  int signature() const { return pos - neg; }
};

/**
 * Exact inertia of a Hermitian matrix over Q(w) by symmetric elimination:
 * real diagonal pivots are consumed one at a time; when the diagonal of the
 * remaining block vanishes identically, an off-diagonal hyperbolic pair
 * contributes (+1, -1).  Throws std::invalid_argument if the matrix is not
 * Hermitian (entry(j,i) != conj(entry(i,j)) or non-real diagonal).
 */
Inertia hermitian_inertia(const QuadField& F,
                          std::vector<std::vector<QuadElem>> H);

}  // namespace concord
