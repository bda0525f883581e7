/*
 * alexmodule.hpp -- the rational Alexander module of a knot from its Seifert
 * matrix: Smith normal form over Q[t^{±1}] with recorded change of basis,
 * elementary divisors, canonical element reduction, integral linear
 * independence, t-invariant submodules, localization at a polynomial, and
 * the anisotropy criterion for localized linking forms.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#pragma once

#include <vector>

#include "concord/laurent.hpp"
#include "concord/seifert.hpp"

namespace concord {

using LaurentMatrix = std::vector<std::vector<LaurentPoly>>;

/** Matrix product of Laurent matrices (throws on size mismatch). */
LaurentMatrix laurent_mat_mul(const LaurentMatrix& a, const LaurentMatrix& b);

/**
 * An element of the Alexander module in presentation coordinates (one
 * Laurent polynomial per generator).  `reduced` is filled by
 * AlexanderModule::reduce: one polynomial per nontrivial elementary
 * divisor, of degree less than that divisor; two elements represent the
 * same module class iff their reduced forms agree.
 */
struct ModuleElement {
  std::vector<LaurentPoly> coords;
  std::vector<LaurentPoly> reduced;
};

/** Change-of-basis data: transform * presentation * cotransform = diagonal. */
struct SmithTransforms {
  LaurentMatrix transform, transform_inv;      // row operations (U, U^{-1})
  LaurentMatrix cotransform, cotransform_inv;  // column operations (W, W^{-1})
  std::vector<LaurentPoly> diagonal;           // full diagonal, units included
};

/**
 * The rational Alexander module A0 = coker(V - t V^T) over Q[t^{±1}],
 * decomposed as a direct sum of cyclic modules Q[t^{±1}]/(q_i) with
 * q_1 | q_2 | ... and prod q_i unit-equal to the Alexander polynomial.
 */
class AlexanderModule {
 public:
  explicit AlexanderModule(const SeifertMatrix& V);

  const SeifertMatrix& seifert() const { return seifert_; }
  const LaurentMatrix& presentation() const { return presentation_; }
  /** Nontrivial elementary divisors, canonical, in divisibility order. */
  const std::vector<LaurentPoly>& divisors() const { return divisors_; }
  /** Dimension over Q: the degree of the Alexander polynomial. */
  int dimension() const { return dimension_; }
  const SmithTransforms& basis_transform() const { return smith_; }

  /** Wrap presentation coordinates (size must match; no reduction yet). */
  ModuleElement element(std::vector<LaurentPoly> coords) const;
  /** Canonical representative; idempotent.  Throws on dimension mismatch. */
  ModuleElement reduce(const ModuleElement& e) const;
  /** The reduced form flattened to a Q-vector of length dimension(). */
  std::vector<Rat> vectorize(const ModuleElement& e) const;
  bool is_zero(const ModuleElement& e) const;
  bool equal(const ModuleElement& a, const ModuleElement& b) const;
  /** Multiply an element by t^k. */
  ModuleElement t_shift(const ModuleElement& e, int k) const;
  ModuleElement add(const ModuleElement& a, const ModuleElement& b) const;
  ModuleElement scale(const ModuleElement& e, const LaurentPoly& f) const;

 private:
  SeifertMatrix seifert_;
  LaurentMatrix presentation_;
  std::vector<LaurentPoly> divisors_;
  SmithTransforms smith_;
  int dimension_ = 0;
};

/** Construct the Alexander module (Smith normal form of V - t V^T). */
AlexanderModule build_module(const SeifertMatrix& V);

/**
 * True iff no nontrivial integer (equivalently rational) combination of the
 * elements vanishes in the module.  Throws std::invalid_argument on an
 * empty list.
 */
bool z_linear_independent(const AlexanderModule& A,
                          const std::vector<ModuleElement>& elems);

/** A t-invariant rational subspace of the module, by basis. */
struct Submodule {
  std::vector<std::vector<Rat>> basis;  // echelonized, each of length dim
  int dimension() const { return static_cast<int>(basis.size()); }
};

/**
 * The smallest t-invariant subspace containing the given elements (their
 * closure under multiplication by t and t^{-1}).
 */
Submodule submodule_generated(const AlexanderModule& A,
                              const std::vector<ModuleElement>& gens);

/** The localization A0 tensor R_p: only p-primary torsion survives. */
struct LocalizedModule {
  AlexanderModule parent;
  LaurentPoly p;
  /** p-primary parts h_i of the divisors q_i (canonical; h_i | h_{i+1}). */
  std::vector<LaurentPoly> local_divisors;
  bool is_zero() const;
  int dimension() const;
};

/** Localize at p != 0 (std::invalid_argument on zero). */
LocalizedModule localize(const AlexanderModule& A, const LaurentPoly& p);

/**
 * Sufficient criterion for the localized Blanchfield form to be anisotropic:
 * every prime factor of p is symmetric and divides the Alexander polynomial
 * of V with multiplicity at most 1.  p must be nonzero.
 */
bool anisotropy_criterion(const SeifertMatrix& V, const LaurentPoly& p);

}  // namespace concord
