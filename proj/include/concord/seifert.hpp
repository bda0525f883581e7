/*
 * seifert.hpp -- Seifert-matrix algebra for knots: Alexander polynomials,
 * exact Levine-Tristram signatures, the full signature function with
 * certified jump loci, and the normalized signature integral rho0.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#pragma once

#include <optional>
#include <vector>

#include "concord/circle_roots.hpp"
#include "concord/laurent.hpp"
#include "concord/rational.hpp"

namespace concord {

/**
 * A Seifert matrix of a knot: a square integer matrix V of even dimension
 * 2g with det(V - V^T) = 1; the 0x0 matrix encodes the unknot.  Validated
 * at construction (std::invalid_argument otherwise).
 */
class SeifertMatrix {
 public:
  /** The unknot. */
  SeifertMatrix() = default;
  explicit SeifertMatrix(std::vector<std::vector<Int>> entries);

  int dim() const { return static_cast<int>(entries_.size()); }
  int genus() const { return dim() / 2; }
  const Int& at(int i, int j) const { return entries_[i][j]; }
  const std::vector<std::vector<Int>>& entries() const { return entries_; }

  bool operator==(const SeifertMatrix& o) const {
    return entries_ == o.entries_;
  }
  bool operator!=(const SeifertMatrix& o) const { return !(*this == o); }

 private:
  std::vector<std::vector<Int>> entries_;
};

/**
 * The Levine-Tristram signature function on the upper half circle: constant
 * integer values on the open arcs cut out by the jump points, ordered by
 * increasing theta.  values has one more entry than jumps; the value on the
 * final arc extends to theta = pi (there is never a jump at pi).  The
 * function extends symmetrically to (pi, 2*pi).
 */
struct SignatureFunction {
  std::vector<CircleRoot> jumps;
  std::vector<int> values;
};

/**
 * The normalized signature integral (1/2pi) * int_0^{2pi} sigma(theta)
 * d(theta).  `exact` is present whenever every jump separating arcs of
 * different value has rational theta/pi (in particular whenever all values
 * vanish); [lo, hi] is always a certified enclosure, of width at most
 * 10^{-12} and degenerate in the exact case.
 */
struct RhoZero {
  std::optional<Rat> exact;
  Rat lo, hi;
};

/** Alexander polynomial det(V - t*V^T), as a canonical unit class. */
LaurentPoly alexander_poly(const SeifertMatrix& V);

/** Block sum, realizing connected sum of knots. */
SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b);

/** -V^T: the Seifert matrix of the concordance inverse. */
SeifertMatrix mirror_reverse(const SeifertMatrix& V);

/** The Seifert form a^T V b; throws std::invalid_argument on bad sizes. */
Int seifert_pairing(const SeifertMatrix& V, const std::vector<Int>& a,
                    const std::vector<Int>& b);

/**
 * Signature of (1-omega)V + (1-conj(omega))V^T at omega = e^{i*theta},
 * u = 2*cos(theta), computed exactly in Q(w) with w^2 = u^2/4 - 1.  Accepts
 * u in [-2, 2]; throws std::domain_error at a jump point (a unit-circle
 * root of the Alexander polynomial) and std::invalid_argument outside the
 * interval.
 */
int levine_tristram(const SeifertMatrix& V, const Rat& u);

/** The full signature function with certified jump loci and arc values. */
SignatureFunction signature_function(const SeifertMatrix& V);

/** The normalized integral of the signature function. */
RhoZero rho0_knot(const SeifertMatrix& V);

}  // namespace concord
