/*
 * ledger.hpp -- interval bookkeeping for rho-invariants.  Quantities are
 * enclosed in extended-real intervals whose endpoints trace back, through
 * named rewrite rules, to axioms that are either computed by this library
 * or declared input data with a mandatory citation.  The rules implement
 * surgery estimates, localized-signature bounds, additivity and infection,
 * and the final outputs are replayable certificates of infinite order and
 * linear independence in the concordance group.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "concord/laurent.hpp"
#include "concord/rational.hpp"
#include "concord/seifert.hpp"

namespace concord {

/** An extended real: -infinity, a finite rational, or +infinity. */
class ExtReal {
 public:
  enum Kind { kNegInf = -1, kFinite = 0, kPosInf = 1 };

  ExtReal() : kind_(kFinite), v_(0) {}
  static ExtReal neg_inf();
  static ExtReal pos_inf();
  static ExtReal finite(Rat v);

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == kFinite; }
  /** Finite value; throws std::logic_error on infinities. */
  const Rat& value() const;

  ExtReal operator-() const;
  /** Throws std::logic_error on (-inf) + (+inf). */
  ExtReal operator+(const ExtReal& o) const;
  ExtReal operator-(const ExtReal& o) const;
  /** Division by a positive integer. */
  ExtReal operator/(int n) const;

  bool operator==(const ExtReal& o) const;
  bool operator!=(const ExtReal& o) const { return !(*this == o); }
  bool operator<(const ExtReal& o) const;
  bool operator<=(const ExtReal& o) const { return *this < o || *this == o; }

  /** "-inf", "+inf", or the rational as p/q. */
  std::string to_string() const;

 private:
  Kind kind_;
  Rat v_;
};

/** Which rho-invariant an interval talks about. */
enum class RhoKind { Rho0Knot, Rho0Link, Rho1, Rho1P };

/** A rho-quantity: kind, subject name, and for the localized kind its p. */
struct RhoQuantity {
  RhoKind kind = RhoKind::Rho0Knot;
  std::string subject;
  LaurentPoly p;           // Rho1P only; nonzero
  int components = 1;      // links only
  bool zero_linking = true;  // links: declared pairwise-zero linking numbers

  static RhoQuantity rho0_knot(std::string subject);
  static RhoQuantity rho0_link(std::string subject, int components);
  static RhoQuantity rho1(std::string subject);
  /** Localized rho1; throws std::invalid_argument when p is zero. */
  static RhoQuantity rho1_p(std::string subject, LaurentPoly p);

  std::string to_string() const;
};

/**
 * An enclosure [lo, hi] of a rho-quantity together with its derivation
 * trail: one provenance line per axiom or rule application.
 */
struct RhoInterval {
  ExtReal lo, hi;
  std::vector<std::string> provenance;

  RhoInterval() = default;
  /** Validates lo <= hi (and that the endpoints orient correctly). */
  RhoInterval(ExtReal l, ExtReal h);
  static RhoInterval point(const Rat& v);
  static RhoInterval bounds(const Rat& lo, const Rat& hi);

  bool contains_zero() const;
  bool excludes_zero() const { return !contains_zero(); }
  /** True iff o is contained in this interval (replay conservativity). */
  bool contains(const RhoInterval& o) const;

  /** "[lo, hi]" with extended endpoints. */
  std::string to_string() const;
};

// ------------------------------------------------------------------- rules

/**
 * Record a declared or computed value for a quantity.  The citation must be
 * nonempty and should say where the value comes from (either "declared: ..."
 * input data or "computed: ..." by a library routine).
 */
RhoInterval axiom(const RhoQuantity& q, const RhoInterval& value,
                  const std::string& citation);

/** Which end of a single surgery the derived interval describes. */
enum class SurgeryDirection {
  kPresurgery,  // bound the link the surgery was performed on
  kResult       // bound the link the surgery produces
};

/**
 * One +-1 surgery estimate.  For +1 surgery producing R from L:
 * rho0(R) <= rho0(L) <= rho0(R) + 2, hence deriving the presurgery link
 * from [lo, hi] gives [lo, hi + 2] and deriving the result gives
 * [-inf, hi]; the -1 case mirrors.  sign must be +-1.
 */
RhoInterval surgery_step(const RhoQuantity& target, const RhoInterval& source,
                         int sign, SurgeryDirection direction);

/** Premise flags for premain_bound; each must have been verified. */
struct PremainPremises {
  bool anisotropy_certified = false;
  bool metabolizer_verified = false;
  bool independence_checked = false;
};

/**
 * The localized-signature bound |n * rho1_p(K) - rho0(L)| <= g - 1 - eta:
 * from rho0(L) in [lo, hi] derive rho1_p(K) in
 * [(lo - (g-1-eta))/n, (hi + (g-1-eta))/n].  Requires n >= 2, eta_lower in
 * [0, g-1], and all premise flags set.
 */
RhoInterval premain_bound(int n, int g, int eta_lower,
                          const RhoInterval& rho0_L,
                          const PremainPremises& premises);

/** Per-knot premise record for postmain_bound. */
struct PostmainKnot {
  std::string subject;
  bool anisotropy_certified = false;
};

/**
 * The same estimate for a sum over several knots with n = 1:
 * sum_i rho1_p(K_i) lies in [lo - (g-1-eta), hi + (g-1-eta)].  Requires a
 * nonempty knot list with every anisotropy premise verified.
 */
RhoInterval postmain_bound(const std::vector<PostmainKnot>& knots, int g,
                           int eta_lower, const RhoInterval& rho0_L);

/**
 * Rewrite a localized rho1_p quantity when its p interacts trivially with
 * the subject's Alexander polynomial: coprime p gives rho0, p equal to the
 * Alexander polynomial (up to units) gives rho1.  Throws std::domain_error
 * when neither case applies (p shares a proper factor with delta).
 */
RhoQuantity rho_prime_rewrite(const RhoQuantity& q, const LaurentPoly& delta);

/**
 * Additivity under connected sum: the interval sum of the parts.  All parts
 * must have the same kind (and unit-equal p for localized quantities); the
 * empty sum is [0, 0].
 */
RhoInterval additivity(
    const std::vector<std::pair<RhoQuantity, RhoInterval>>& parts);

/**
 * Infection (satellite) rule: with nonzero winding the infected knot picks
 * up the companion's rho0, otherwise the base interval is unchanged.
 */
RhoInterval infection_rule(const RhoInterval& base,
                           const RhoInterval& infect_rho0, bool eta_nonzero);

// ------------------------------------------------------------ certificates

/** One checked premise in a certificate tree. */
struct CertPremise {
  std::string rule;       // machine tag, e.g. "alexander_coprime"
  std::string statement;  // human-readable instance
  bool holds = false;
};

/** Input datum for an independence certificate. */
struct IndependenceInput {
  SeifertMatrix matrix;
  RhoInterval rho1;
  std::string name;
};

/** Input datum for an infinite-order certificate. */
struct TorsionInput {
  SeifertMatrix matrix;
  RhoInterval rho1_p;
  LaurentPoly p;
  std::string name;
};

/**
 * A replayable derivation: conclusion, checked premises, and the inputs
 * needed to re-derive everything.  `verified` is true iff every premise
 * holds; `failures` lists the statements of the premises that do not.
 */
struct Certificate {
  std::string conclusion;
  bool verified = false;
  std::vector<CertPremise> premises;
  std::vector<std::string> failures;
  std::vector<IndependenceInput> independence_inputs;
  std::optional<TorsionInput> torsion_input;

  std::string to_string() const;
};

/**
 * Certificate that the given knots are linearly independent in the
 * concordance group.  Checked premises per knot: squarefree Alexander
 * polynomial, exact rho0 = 0, and a rho1 interval excluding zero; pairwise:
 * coprime Alexander polynomials.  A failed premise yields verified = false
 * with the failure listed, never an exception.  Empty input is rejected.
 */
Certificate independence_certificate(
    const std::vector<IndependenceInput>& knots);

/**
 * Certificate that the knot has infinite order in the concordance group.
 * Premises: the localization p satisfies the anisotropy criterion for the
 * knot's module, and the rho1_p interval excludes zero.
 */
Certificate torsion_certificate(const TorsionInput& input);

/**
 * Re-derive a certificate from its stored inputs: recompute every premise
 * and require that the certificate was verified and is still verified with
 * identical premise outcomes.
 */
bool replay(const Certificate& cert);

}  // namespace concord
