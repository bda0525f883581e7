/*
 * twistlab.hpp -- fixtures and the end-to-end reproduction pipeline for the
 * twist-knot family T_n with n = -x^2 - x - 1: Seifert matrices, the
 * doubled form with its metabolizer, the module elements entering the
 * linear-independence argument, the surgery-chain axioms, and the final
 * infinite-order and independence certificates.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "concord/alexmodule.hpp"
#include "concord/l2sig.hpp"
#include "concord/ledger.hpp"
#include "concord/seifert.hpp"

namespace concord {

/**
 * Fixtures for one twist knot T_n, n = -x^2 - x - 1 (so x = 2, 3, 4 give
 * T_-7, T_-13, T_-21).  V is the genus-1 Seifert matrix [[n,1],[0,1]], V2
 * the connected sum V + V, and the module data lives in the Alexander
 * module of V2 (presentation coordinates of dimension 4).
 */
struct TwistFamilyEntry {
  int x;
  Int n;
  SeifertMatrix V;
  SeifertMatrix V2;
  AlexanderModule module;  // Alexander module of V2
  std::vector<Int> v1, v2;  // metabolizer of V2: (1,x,0,1), (0,1,1,-x-1)
  ModuleElement m1, m2;     // first generator of each cyclic summand
  ModuleElement l1, l2;     // classes of t*V2*v1, t*V2*v2 (isotropic pair)
  /**
   * Closed-form cyclic coordinates (t(n+xn+x)+1, t(n+1)-1) and
   * (t(n+1)-1, t(-xn-n-1)+x+1), kept for reference.  They disagree with
   * the classes of t*V2*v_i and do not span an isotropic submodule; the
   * fixtures above use the matching corrected coordinates
   * ((n+x-nx)t+nx, (1-n)t+n) and ((1-n)t+n, (2n+nx-x-1)t-n(x+1)).
   */
  ModuleElement l1_formula, l2_formula;
  bool formulas_match;  // recorded outcome of comparing the two versions

  std::string name() const { return "T" + int_to_string(n); }
};

/**
 * Build the fixture for one twist knot.  Requires x >= 2; the x = 1 entry
 * (T_-3, whose final interval still contains zero) is available behind the
 * exploratory flag.  The Alexander polynomial n t^2 + (1-2n) t + n is
 * verified at construction.
 */
TwistFamilyEntry family_entry(int x, bool exploratory = false);

/** Everything the reproduction pipeline verified or derived for one x. */
struct TwistReportEntry {
  int x = 0;
  Int n;
  LaurentPoly delta;
  bool metabolizer_ok = false;   // Seifert form vanishes on (v1, v2)
  bool isotropy_ok = false;      // <l1, l2> isotropic for the linking pairing
  bool independence_ok = false;  // {m1, m2, l1, l2}: no integer relation
  bool anisotropy_ok = false;    // localization at delta admits no isotropy
  RhoZero rho0;           // rho0(T_n), exactly zero
  L2Signature sigma2;     // l2 signature of [t + 1/t], exactly zero
  RhoInterval rho0_link;  // surgery-chain enclosure for the companion link
  RhoInterval rho1;       // derived enclosure of rho1(T_n)
  Certificate torsion;    // infinite concordance order
};

/** The full reproduction report plus the cross-knot certificate. */
struct TwistReport {
  std::vector<TwistReportEntry> entries;
  std::optional<Certificate> independence;

  std::string to_string() const;
};

/**
 * Run the whole pipeline for each x: verify the metabolizer, the isotropy
 * of <l1, l2>, the integer independence of {m1, m2, l1, l2} and the
 * anisotropy criterion at p = delta; compute rho0(T_n) and the l2 signature
 * of [t + 1/t] exactly; replay the surgery-chain axioms; derive the rho1
 * enclosure; and emit infinite-order certificates per knot plus one
 * independence certificate across the set.  Any verification failure
 * throws std::runtime_error naming the failing step.  An empty x list
 * yields an empty report.
 */
TwistReport reproduce_twist_results(const std::vector<int>& x_values);

/**
 * The exploratory x = 1 run (T_-3).  Its algebraic premises (metabolizer,
 * isotropy, independence, anisotropy) all verify, but the surgery input is
 * only a declared conjectural value rho0 = -1 for the companion link, and
 * the derived enclosure [-1, 0] still contains zero -- so no order
 * conclusion follows and no certificate is emitted.
 */
RhoInterval exploratory_x1_interval();

}  // namespace concord
