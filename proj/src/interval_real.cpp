/*
 * interval_real.cpp -- certified interval arithmetic (MPFR directed
 * rounding behind exact rational endpoints).
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#include "concord/interval_real.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace concord {

int precision_bits() {
  const char* env = std::getenv("CONCORDANCE_PRECISION_BITS");
  if (env == nullptr || *env == '\0') return 256;
  long v = std::strtol(env, nullptr, 10);
  if (v < 64) v = 64;
  if (v > 1 << 20) v = 1 << 20;
  return static_cast<int>(v);
}

RatInterval::RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
  if (lo > hi) throw std::invalid_argument("RatInterval: lo > hi");
}

RatInterval RatInterval::operator+(const RatInterval& o) const {
  return RatInterval(lo + o.lo, hi + o.hi);
}

RatInterval RatInterval::operator-(const RatInterval& o) const {
  return RatInterval(lo - o.hi, hi - o.lo);
}

RatInterval RatInterval::operator-() const { return RatInterval(-hi, -lo); }

RatInterval RatInterval::operator*(const RatInterval& o) const {
  Rat a = lo * o.lo, b = lo * o.hi, c = hi * o.lo, d = hi * o.hi;
  return RatInterval(std::min(std::min(a, b), std::min(c, d)),
                     std::max(std::max(a, b), std::max(c, d)));
}

RatInterval RatInterval::scaled(const Rat& c) const {
  if (c >= 0) return RatInterval(lo * c, hi * c);
  return RatInterval(hi * c, lo * c);
}

RatInterval RatInterval::square() const {
  if (lo >= 0) return RatInterval(lo * lo, hi * hi);
  if (hi <= 0) return RatInterval(hi * hi, lo * lo);
  return RatInterval(Rat(0), std::max(lo * lo, hi * hi));
}

RatInterval RatInterval::operator/(const RatInterval& o) const {
  if (o.contains_zero())
    throw std::domain_error("RatInterval: division by interval containing 0");
  Rat a = lo / o.lo, b = lo / o.hi, c = hi / o.lo, d = hi / o.hi;
  return RatInterval(std::min(std::min(a, b), std::min(c, d)),
                     std::max(std::max(a, b), std::max(c, d)));
}

RatInterval RatInterval::hull(const RatInterval& o) const {
  return RatInterval(std::min(lo, o.lo), std::max(hi, o.hi));
}

ComplexInterval ComplexInterval::operator+(const ComplexInterval& o) const {
  return ComplexInterval(re + o.re, im + o.im);
}

ComplexInterval ComplexInterval::operator-(const ComplexInterval& o) const {
  return ComplexInterval(re - o.re, im - o.im);
}

ComplexInterval ComplexInterval::operator*(const ComplexInterval& o) const {
  return ComplexInterval(re * o.re - im * o.im, re * o.im + im * o.re);
}

ComplexInterval ComplexInterval::scaled(const Rat& c) const {
  return ComplexInterval(re.scaled(c), im.scaled(c));
}

ComplexInterval ComplexInterval::div_real(const RatInterval& d) const {
  return ComplexInterval(re / d, im / d);
}

namespace {

// RAII MPFR value.
struct Mp {
  mpfr_t x;
  explicit Mp(int prec) { mpfr_init2(x, prec); }
  ~Mp() { mpfr_clear(x); }
  Mp(const Mp&) = delete;
  Mp& operator=(const Mp&) = delete;
};

Rat to_rat(const mpfr_t x) {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), x);
  return q;
}

// Enclosure of 2*pi*s for exact rational s (any sign).
void two_pi_times(const Rat& s, mpfr_t out_lo, mpfr_t out_hi, int prec) {
  Mp pi_lo(prec), pi_hi(prec), sv_lo(prec), sv_hi(prec);
  mpfr_const_pi(pi_lo.x, MPFR_RNDD);
  mpfr_const_pi(pi_hi.x, MPFR_RNDU);
  mpfr_set_q(sv_lo.x, Rat(2 * s).get_mpq_t(), MPFR_RNDD);
  mpfr_set_q(sv_hi.x, Rat(2 * s).get_mpq_t(), MPFR_RNDU);
  if (s >= 0) {
    mpfr_mul(out_lo, sv_lo.x, pi_lo.x, MPFR_RNDD);
    mpfr_mul(out_hi, sv_hi.x, pi_hi.x, MPFR_RNDU);
  } else {
    mpfr_mul(out_lo, sv_lo.x, pi_hi.x, MPFR_RNDD);
    mpfr_mul(out_hi, sv_hi.x, pi_lo.x, MPFR_RNDU);
  }
}

RatInterval clamp_unit(RatInterval v) {
  if (v.lo < -1) v.lo = -1;
  if (v.hi > 1) v.hi = 1;
  return v;
}

// True if the enclosure [y_lo, y_hi] may contain k*pi.
bool may_contain_k_pi(const mpfr_t y_lo, const mpfr_t y_hi, long k, int prec) {
  Mp kpi_lo(prec), kpi_hi(prec);
  mpfr_const_pi(kpi_lo.x, k >= 0 ? MPFR_RNDD : MPFR_RNDU);
  mpfr_const_pi(kpi_hi.x, k >= 0 ? MPFR_RNDU : MPFR_RNDD);
  mpfr_mul_si(kpi_lo.x, kpi_lo.x, k, MPFR_RNDD);
  mpfr_mul_si(kpi_hi.x, kpi_hi.x, k, MPFR_RNDU);
  return mpfr_cmp(y_lo, kpi_hi.x) <= 0 && mpfr_cmp(kpi_lo.x, y_hi) <= 0;
}

enum class Trig { Cos, Sin };

RatInterval trig2pi_point(const Rat& s_in, Trig which) {
  // Reduce mod 1 (period of both functions in s).
  Rat s = s_in;
  Int fl;
  mpz_fdiv_q(fl.get_mpz_t(), s.get_num().get_mpz_t(), s.get_den().get_mpz_t());
  s -= Rat(fl);
  // Exact values at the quarter points.
  if (s == 0) return RatInterval::point(which == Trig::Cos ? 1 : 0);
  if (s == Rat(1, 4)) return RatInterval::point(which == Trig::Cos ? 0 : 1);
  if (s == Rat(1, 2)) return RatInterval::point(which == Trig::Cos ? -1 : 0);
  if (s == Rat(3, 4)) return RatInterval::point(which == Trig::Cos ? 0 : -1);

  int prec = precision_bits();
  Mp y_lo(prec), y_hi(prec), a(prec), b(prec);
  two_pi_times(s, y_lo.x, y_hi.x, prec);

  Rat vlo, vhi;
  if (which == Trig::Cos) {
    mpfr_cos(a.x, y_lo.x, MPFR_RNDD);
    mpfr_cos(b.x, y_hi.x, MPFR_RNDD);
    vlo = std::min(to_rat(a.x), to_rat(b.x));
    mpfr_cos(a.x, y_lo.x, MPFR_RNDU);
    mpfr_cos(b.x, y_hi.x, MPFR_RNDU);
    vhi = std::max(to_rat(a.x), to_rat(b.x));
  } else {
    mpfr_sin(a.x, y_lo.x, MPFR_RNDD);
    mpfr_sin(b.x, y_hi.x, MPFR_RNDD);
    vlo = std::min(to_rat(a.x), to_rat(b.x));
    mpfr_sin(a.x, y_lo.x, MPFR_RNDU);
    mpfr_sin(b.x, y_hi.x, MPFR_RNDU);
    vhi = std::max(to_rat(a.x), to_rat(b.x));
  }
  RatInterval out(vlo, vhi);

  // The endpoint bound is only valid when no extremum lies inside
  // [y_lo, y_hi].  s is strictly between quarter points, so mathematically
  // the enclosure excludes them, but the directed arithmetic above may blur
  // across; widen conservatively in that case.  Extrema of cos are at k*pi,
  // of sin at (2k+1)*pi/2; with s in (0,1), y = 2*pi*s lies in (0, 2*pi).
  if (which == Trig::Cos) {
    for (long k = 0; k <= 2; ++k)
      if (may_contain_k_pi(y_lo.x, y_hi.x, k, prec)) {
        if (k % 2 == 0)
          out.hi = 1;
        else
          out.lo = -1;
      }
  } else {
    // Check odd multiples of pi/2 by doubling: 2y vs (2k+1)pi.
    Mp y2_lo(prec), y2_hi(prec);
    mpfr_mul_ui(y2_lo.x, y_lo.x, 2, MPFR_RNDD);
    mpfr_mul_ui(y2_hi.x, y_hi.x, 2, MPFR_RNDU);
    for (long k = 1; k <= 3; k += 2)
      if (may_contain_k_pi(y2_lo.x, y2_hi.x, k, prec)) {
        if (k == 1)
          out.hi = 1;
        else
          out.lo = -1;
      }
  }
  return clamp_unit(out);
}

}  // namespace

RatInterval cos2pi_point(const Rat& s) { return trig2pi_point(s, Trig::Cos); }

RatInterval sin2pi_point(const Rat& s) { return trig2pi_point(s, Trig::Sin); }

namespace {

RatInterval trig2pi_interval(const RatInterval& s, Trig which) {
  if (s.width() >= 1) return RatInterval(Rat(-1), Rat(1));
  RatInterval out = trig2pi_point(s.lo, which).hull(trig2pi_point(s.hi, which));
  // Interior extrema: quarter ticks k/4 with s.lo <= k/4 <= s.hi.
  Rat four_lo = s.lo * 4, four_hi = s.hi * 4;
  Int k0, k1;
  mpz_cdiv_q(k0.get_mpz_t(), four_lo.get_num().get_mpz_t(),
             four_lo.get_den().get_mpz_t());
  mpz_fdiv_q(k1.get_mpz_t(), four_hi.get_num().get_mpz_t(),
             four_hi.get_den().get_mpz_t());
  for (Int k = k0; k <= k1; ++k) {
    long m = mpz_fdiv_ui(k.get_mpz_t(), 4);  // k mod 4 in [0, 3]
    if (which == Trig::Cos) {
      if (m == 0) out.hi = 1;
      if (m == 2) out.lo = -1;
    } else {
      if (m == 1) out.hi = 1;
      if (m == 3) out.lo = -1;
    }
  }
  return clamp_unit(out);
}

}  // namespace

RatInterval cos2pi(const RatInterval& s) {
  return trig2pi_interval(s, Trig::Cos);
}

RatInterval sin2pi(const RatInterval& s) {
  return trig2pi_interval(s, Trig::Sin);
}

RatInterval acos_over_pi(const RatInterval& x) {
  Rat xl = std::max(x.lo, Rat(-1));
  Rat xh = std::min(x.hi, Rat(1));
  if (xl > xh) throw std::invalid_argument("acos_over_pi: empty domain");
  int prec = precision_bits();
  Mp v(prec), a(prec), pi(prec), r(prec);

  // Lower bound: acos(xh) rounded down, divided by pi rounded up.
  mpfr_set_q(v.x, Rat(xh).get_mpq_t(), MPFR_RNDN);
  mpfr_acos(a.x, v.x, MPFR_RNDD);
  mpfr_const_pi(pi.x, MPFR_RNDU);
  mpfr_div(r.x, a.x, pi.x, MPFR_RNDD);
  Rat lo = to_rat(r.x);

  // Upper bound: acos(xl) rounded up, divided by pi rounded down.
  mpfr_set_q(v.x, Rat(xl).get_mpq_t(), MPFR_RNDN);
  mpfr_acos(a.x, v.x, MPFR_RNDU);
  mpfr_const_pi(pi.x, MPFR_RNDD);
  mpfr_div(r.x, a.x, pi.x, MPFR_RNDU);
  Rat hi = to_rat(r.x);

  if (lo < 0) lo = 0;
  if (hi > 1) hi = 1;
  return RatInterval(lo, hi);
}

}  // namespace concord
