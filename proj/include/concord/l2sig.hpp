/*
 * l2sig.hpp -- integrated signatures of Hermitian matrices over
 * multivariable Laurent polynomials: exact arc decomposition on the circle
 * for one variable, certified adaptive torus quadrature in general.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "concord/interval_real.hpp"
#include "concord/rational.hpp"

namespace concord {

/**
 * A Laurent polynomial in nvars variables z_1..z_k over Q, stored sparsely
 * by exponent vector.  All exponent vectors have length nvars.
 */
class MultiLaurent {
 public:
  explicit MultiLaurent(int nvars = 1);
  static MultiLaurent constant(int nvars, const Rat& c);
  static MultiLaurent monomial(std::vector<int> exps, const Rat& c);

  int nvars() const { return nvars_; }
  bool is_zero() const { return c_.empty(); }
  const std::map<std::vector<int>, Rat>& terms() const { return c_; }
  Rat coeff(const std::vector<int>& e) const;

  MultiLaurent operator+(const MultiLaurent& o) const;
  MultiLaurent operator-(const MultiLaurent& o) const;
  MultiLaurent operator*(const MultiLaurent& o) const;
  MultiLaurent operator*(const Rat& c) const;
  MultiLaurent operator-() const;
  bool operator==(const MultiLaurent& o) const {
    return nvars_ == o.nvars_ && c_ == o.c_;
  }
  bool operator!=(const MultiLaurent& o) const { return !(*this == o); }

  /** Invert every variable: z_i -> 1/z_i (conjugation on the torus). */
  MultiLaurent involute_all() const;

  std::string to_string() const;

 private:
  void set(const std::vector<int>& e, const Rat& v);
  int nvars_;
  std::map<std::vector<int>, Rat> c_;
};

/**
 * An n x n matrix over multivariable Laurent polynomials that is Hermitian
 * on the torus: entry(j,i) == involute_all(entry(i,j)).  Validated at
 * construction; throws std::invalid_argument("not Hermitian") otherwise.
 */
class HermitianLaurentMatrix {
 public:
  HermitianLaurentMatrix(int nvars,
                         std::vector<std::vector<MultiLaurent>> entries);

  int nvars() const { return nvars_; }
  int dim() const { return static_cast<int>(entries_.size()); }
  const MultiLaurent& at(int i, int j) const { return entries_[i][j]; }
  const std::vector<std::vector<MultiLaurent>>& entries() const {
    return entries_;
  }

 private:
  int nvars_;
  std::vector<std::vector<MultiLaurent>> entries_;
};

/**
 * The integral over the torus (normalized measure 1) of the pointwise
 * signature.  `exact` is present when the arc decomposition certifies an
 * exact rational (always attempted for one variable; multivariable inputs
 * certify exactly only when the quadrature resolves every cell, e.g. for
 * constant matrices).  [lo, hi] is always a correct enclosure; for one
 * variable its width is at most 10^{-12}.
 */
struct L2Signature {
  std::optional<Rat> exact;
  Rat lo, hi;
};

/** Integrated signature; one-variable inputs take the exact arc path. */
L2Signature l2_signature(const HermitianLaurentMatrix& M);

/**
 * Certified interval from adaptive torus quadrature alone (any nvars),
 * refining to the given depth.  Used to cross-check the exact path.
 */
RatInterval l2_signature_quadrature(const HermitianLaurentMatrix& M,
                                    int max_depth);

/**
 * True iff the certified signature enclosure satisfies
 * |l2_signature(M)| <= min(bound, dim).  bound must be >= 0.
 */
bool rank_bound_check(const HermitianLaurentMatrix& M, int bound);

}  // namespace concord
