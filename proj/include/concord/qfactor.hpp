/*
 * qfactor.hpp -- complete factorization of univariate rational polynomials
 * into monic irreducibles (squarefree decomposition, small-prime Berlekamp,
 * Hensel lifting, subset recombination).
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "concord/qpoly.hpp"

namespace concord {

/**
 * Thrown when a squarefree factor exceeds the supported degree bound; the
 * recombination search is exponential in the worst case, so we refuse rather
 * than silently stall.
 */
class FactorDegreeError : public std::runtime_error {
 public:
  explicit FactorDegreeError(int degree, int bound)
      : std::runtime_error(
            "factor_poly: squarefree factor of degree " +
            std::to_string(degree) + " exceeds the supported bound " +
            std::to_string(bound)) {}
};

/** Maximal degree of a squarefree factor that factor_poly will process. */
inline constexpr int kFactorDegreeBound = 16;

/**
 * A factorization f = unit * prod factors[i].first ^ factors[i].second with
 * every listed factor monic irreducible over Q, sorted by degree and then by
 * coefficient sequence.
 */
struct QFactorization {
  Rat unit;
  std::vector<std::pair<QPoly, int>> factors;
};

/**
 * Factor a nonzero rational polynomial into monic irreducibles.  Throws
 * std::invalid_argument on the zero polynomial and FactorDegreeError when a
 * squarefree part has degree above kFactorDegreeBound.
 */
QFactorization factor_poly(const QPoly& f);

/** True iff f is irreducible over Q (constants count as not irreducible). */
bool is_irreducible_poly(const QPoly& f);

/** True iff f is nonzero with no repeated roots (gcd(f, f') constant). */
bool is_squarefree_poly(const QPoly& f);

}  // namespace concord
