/*
 * interval_real.hpp -- certified real interval arithmetic with exact
 * rational endpoints.  Field operations on intervals are exact; the
 * transcendental enclosures (cos, sin, arccos/pi) are computed with MPFR
 * directed rounding at a precision taken from CONCORDANCE_PRECISION_BITS
 * (default 256) and widened conservatively at trigonometric extrema.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#pragma once

#include <string>

#include "concord/rational.hpp"

namespace concord {

/** Working precision in bits for certified numerics (>= 64). */
int precision_bits();

/** A closed interval [lo, hi] with exact rational endpoints. */
struct RatInterval {
  Rat lo, hi;

  RatInterval() : lo(0), hi(0) {}
  RatInterval(Rat l, Rat h);
  static RatInterval point(const Rat& v) { return RatInterval(v, v); }

  Rat width() const { return hi - lo; }
  bool contains(const Rat& v) const { return lo <= v && v <= hi; }
  bool contains_zero() const { return lo <= 0 && 0 <= hi; }
  bool is_point() const { return lo == hi; }

  RatInterval operator+(const RatInterval& o) const;
  RatInterval operator-(const RatInterval& o) const;
  RatInterval operator*(const RatInterval& o) const;
  RatInterval operator-() const;
  RatInterval scaled(const Rat& c) const;
  /** Tight enclosure of x^2 (never dips below 0). */
  RatInterval square() const;
  /** Division by an interval that must not contain zero. */
  RatInterval operator/(const RatInterval& o) const;
  /** Smallest interval containing both. */
  RatInterval hull(const RatInterval& o) const;
};

/** Rectangular complex interval re + i*im (for torus evaluations). */
struct ComplexInterval {
  RatInterval re, im;

  ComplexInterval() = default;
  ComplexInterval(RatInterval r, RatInterval i)
      : re(std::move(r)), im(std::move(i)) {}
  static ComplexInterval point(const Rat& r, const Rat& i) {
    return ComplexInterval(RatInterval::point(r), RatInterval::point(i));
  }

  ComplexInterval conj() const { return ComplexInterval(re, -im); }
  ComplexInterval operator+(const ComplexInterval& o) const;
  ComplexInterval operator-(const ComplexInterval& o) const;
  ComplexInterval operator*(const ComplexInterval& o) const;
  ComplexInterval scaled(const Rat& c) const;
  /** Tight enclosure of |z|^2 = re^2 + im^2. */
  RatInterval norm() const { return re.square() + im.square(); }
  /** Division by a real interval not containing zero. */
  ComplexInterval div_real(const RatInterval& d) const;
  bool contains_zero() const {
    return re.contains_zero() && im.contains_zero();
  }
};

/** Certified enclosure of cos(2*pi*s) for an exact rational s. */
RatInterval cos2pi_point(const Rat& s);
/** Certified enclosure of sin(2*pi*s) for an exact rational s. */
RatInterval sin2pi_point(const Rat& s);
/** Certified enclosure of cos(2*pi*s) over s in [s.lo, s.hi]. */
RatInterval cos2pi(const RatInterval& s);
/** Certified enclosure of sin(2*pi*s) over s in [s.lo, s.hi]. */
RatInterval sin2pi(const RatInterval& s);
/**
 * Certified enclosure of arccos(x)/pi over x in [x.lo, x.hi]; the input is
 * clamped to [-1, 1].  The result lies in [0, 1].
 */
RatInterval acos_over_pi(const RatInterval& x);

}  // namespace concord
