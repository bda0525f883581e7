/*
 * blanchfield.hpp -- the Blanchfield linking form of a knot from its Seifert
 * matrix, with values in Q(t)/Q[t^{±1}] or in the localized quotient
 * Q(t)/R_p, plus isotropy tests and metabolizer verification/search for the
 * Seifert form.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#pragma once

#include <optional>
#include <vector>

#include "concord/alexmodule.hpp"
#include "concord/laurent.hpp"
#include "concord/seifert.hpp"

namespace concord {

/**
 * A value of the linking form: the class of numerator/denominator in
 * Q(t)/Q[t^{±1}], or in Q(t)/R_p when `mod_p` is set.  Canonical form:
 * zero is {0, 1}; otherwise the fraction is reduced, the denominator is the
 * canonical primitive representative (only p-primary in the localized
 * case), and the numerator is the unique polynomial representative of
 * degree below the denominator's.
 */
struct BlanchfieldValue {
  LaurentPoly num;  // zero
  LaurentPoly den = LaurentPoly::constant(Rat(1));
  std::optional<LaurentPoly> mod_p;

  bool is_zero() const { return num.is_zero(); }
  bool operator==(const BlanchfieldValue& o) const;
  bool operator!=(const BlanchfieldValue& o) const { return !(*this == o); }
};

/** Build the canonical class of num/den in the given ambient quotient. */
BlanchfieldValue make_blanchfield_value(
    const LaurentPoly& num, const LaurentPoly& den,
    const std::optional<LaurentPoly>& mod_p = std::nullopt);

/** Sum of two values (same ambient required; std::invalid_argument else). */
BlanchfieldValue bl_add(const BlanchfieldValue& a, const BlanchfieldValue& b);
/** Multiply a value by a Laurent polynomial. */
BlanchfieldValue bl_scale(const BlanchfieldValue& a, const LaurentPoly& f);
/** Apply the involution t -> 1/t to the value. */
BlanchfieldValue bl_conj(const BlanchfieldValue& a);

/**
 * The Blanchfield pairing (1-t) * involute(s)^T * adj(V - tV^T) * r / det,
 * reduced into the ambient quotient.  Coordinates are in the presentation
 * basis of build_module(V); sesquilinear: Bl(f r, s) = f Bl(r, s) and
 * Bl(r, f s) = involute(f) Bl(r, s).
 */
BlanchfieldValue blanchfield_pair(
    const SeifertMatrix& V, const ModuleElement& r, const ModuleElement& s,
    const std::optional<LaurentPoly>& mod_p = std::nullopt);

/**
 * True iff the pairing vanishes on the submodule generated by `gens`
 * (checked on a spanning set of its t-closure; empty gens are isotropic).
 */
bool is_isotropic(const SeifertMatrix& V,
                  const std::vector<ModuleElement>& gens,
                  const std::optional<LaurentPoly>& mod_p = std::nullopt);

/** Half-rank family of integer vectors on which the Seifert form vanishes
 * and which spans a direct summand of Z^{2g}. */
struct Metabolizer {
  std::vector<std::vector<Int>> vectors;
};

/**
 * Verify g vectors of dimension 2g: Seifert form zero on all ordered pairs,
 * rank g, and gcd of the g-by-g minors equal to 1.  Throws
 * std::invalid_argument on wrong count or dimension.
 */
bool metabolizer_verify(const SeifertMatrix& V,
                        const std::vector<std::vector<Int>>& vectors);

/**
 * Deterministic exhaustive search for a metabolizer among primitive integer
 * vectors with entries in [-height, height], ordered by max-norm then
 * lexicographically; returns the first one found.  height must be >= 1.
 */
std::optional<Metabolizer> metabolizer_search(const SeifertMatrix& V,
                                              int height);

}  // namespace concord
