/*
 * rational.hpp -- exact rational scalars on top of GMP, plus small helpers
 * (string round-trips, exact square roots, sign tests) used throughout the
 * concord library.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

namespace concord {

/** Arbitrary-precision integer. */
using Int = mpz_class;
/** Arbitrary-precision rational, always stored in lowest terms. */
using Rat = mpq_class;

/** Sign of a rational: -1, 0, or +1. */
inline int sign_of(const Rat& q) { return sgn(q); }
/** Sign of an integer: -1, 0, or +1. */
inline int sign_of(const Int& z) { return sgn(z); }

/**
 * Parse a rational from a decimal string "p" or "p/q" (q > 0 after
 * normalization).  Throws std::invalid_argument on malformed input or a zero
 * denominator.
 */
Rat parse_rational(const std::string& text);

/** Render a rational as "p" or "p/q" in lowest terms. */
std::string rat_to_string(const Rat& q);

/** Render an integer in base 10. */
std::string int_to_string(const Int& z);

/** Exact integer square root, or nullopt if z is negative or not a square. */
std::optional<Int> exact_isqrt(const Int& z);

/** Exact rational square root, or nullopt if q is not a rational square. */
std::optional<Rat> exact_sqrt(const Rat& q);

/** Nonnegative gcd of two integers. */
Int int_gcd(const Int& a, const Int& b);

/** Absolute value of a rational. */
inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

}  // namespace concord
