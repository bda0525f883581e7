/*
 * qfactor.cpp -- rational polynomial factorization.
 *
 * The pipeline is the classical one: Yun squarefree decomposition over Q,
 * reduction of each squarefree part to a monic integer polynomial, Berlekamp
 * factorization modulo a small prime where the image stays squarefree,
 * quadratic Hensel lifting of the modular factors past the Mignotte bound,
 * and subset recombination with exact trial division over Z.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#include "concord/qfactor.hpp"

#include <algorithm>
#include <cassert>

namespace concord {
namespace {

// ---------------------------------------------------------------------------
// Dense integer polynomials, low degree first.
// ---------------------------------------------------------------------------

using ZPoly = std::vector<Int>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly c(a.size() + b.size() - 1, Int(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

ZPoly zmod(const ZPoly& a, const Int& m) {
  ZPoly c(a);
  for (auto& x : c) {
    x %= m;
    if (x < 0) x += m;
  }
  ztrim(c);
  return c;
}

// Symmetric residues in (-m/2, m/2], used to read true integer coefficients
// back out of a modular image.
ZPoly zbalanced(const ZPoly& a, const Int& m) {
  ZPoly c = zmod(a, m);
  Int half = m / 2;
  for (auto& x : c)
    if (x > half) x -= m;
  ztrim(c);
  return c;
}

ZPoly zmulmod(const ZPoly& a, const ZPoly& b, const Int& m) {
  return zmod(zmul(a, b), m);
}

ZPoly zaddmod(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly c(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] += b[i];
  return zmod(c, m);
}

ZPoly zsubmod(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly c(std::max(a.size(), b.size()), Int(0));
  for (size_t i = 0; i < a.size(); ++i) c[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] -= b[i];
  return zmod(c, m);
}

// Division with remainder by a monic divisor, coefficients reduced mod m.
void zdivrem_monic_mod(const ZPoly& a, const ZPoly& b, const Int& m, ZPoly& q,
                       ZPoly& r) {
  assert(!b.empty() && zmod({b.back()}, m) == ZPoly({Int(1)}));
  r = zmod(a, m);
  q.clear();
  int db = zdeg(b);
  if (zdeg(r) < db) return;
  q.assign(zdeg(r) - db + 1, Int(0));
  while (zdeg(r) >= db) {
    int k = zdeg(r) - db;
    Int c = r.back();
    q[k] = c;
    for (int i = 0; i <= db; ++i) {
      Int v = (r[k + i] - c * b[i]) % m;
      if (v < 0) v += m;
      r[k + i] = v;
    }
    ztrim(r);
  }
}

// Exact division over Z by a monic divisor; returns false if the remainder
// is nonzero.
bool zdivide_monic_exact(const ZPoly& a, const ZPoly& b, ZPoly& q) {
  assert(!b.empty() && b.back() == 1);
  ZPoly r(a);
  q.clear();
  int db = zdeg(b);
  if (zdeg(r) < db) return r.empty();
  q.assign(zdeg(r) - db + 1, Int(0));
  while (zdeg(r) >= db) {
    int k = zdeg(r) - db;
    Int c = r.back();
    q[k] = c;
    for (int i = 0; i <= db; ++i) r[k + i] -= c * b[i];
    ztrim(r);
  }
  return r.empty();
}

// ---------------------------------------------------------------------------
// Polynomials over F_p for a small prime p, with machine-word coefficients.
// ---------------------------------------------------------------------------

using PPoly = std::vector<long>;

void ptrim(PPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int pdeg(const PPoly& a) { return static_cast<int>(a.size()) - 1; }

long pinv(long a, long p) {
  long t = 0, nt = 1, r = p, nr = a % p;
  if (nr < 0) nr += p;
  while (nr != 0) {
    long q = r / nr;
    std::swap(t -= q * nt, nt);
    std::swap(r -= q * nr, nr);
  }
  assert(r == 1);
  return t < 0 ? t + p : t;
}

PPoly padd(const PPoly& a, const PPoly& b, long p) {
  PPoly c(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] = (c[i] + b[i]) % p;
  ptrim(c);
  return c;
}

PPoly psub(const PPoly& a, const PPoly& b, long p) {
  PPoly c(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (size_t i = 0; i < b.size(); ++i) c[i] = ((c[i] - b[i]) % p + p) % p;
  ptrim(c);
  return c;
}

PPoly pmul(const PPoly& a, const PPoly& b, long p) {
  if (a.empty() || b.empty()) return {};
  PPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j)
      c[i + j] = (c[i + j] + a[i] * b[j]) % p;
  ptrim(c);
  return c;
}

PPoly pscale(const PPoly& a, long c, long p) {
  PPoly r(a);
  for (auto& x : r) x = (x * c) % p;
  ptrim(r);
  return r;
}

void pdivrem(const PPoly& a, const PPoly& b, long p, PPoly& q, PPoly& r) {
  assert(!b.empty());
  r = a;
  q.clear();
  int db = pdeg(b);
  long binv = pinv(b.back(), p);
  if (pdeg(r) < db) return;
  q.assign(pdeg(r) - db + 1, 0);
  while (pdeg(r) >= db) {
    int k = pdeg(r) - db;
    long c = (r.back() * binv) % p;
    q[k] = c;
    for (int i = 0; i <= db; ++i)
      r[k + i] = ((r[k + i] - c * b[i]) % p + p) % p;
    ptrim(r);
  }
}

PPoly pgcd(PPoly a, PPoly b, long p) {
  while (!b.empty()) {
    PPoly q, r;
    pdivrem(a, b, p, q, r);
    a = b;
    b = r;
  }
  if (!a.empty()) a = pscale(a, pinv(a.back(), p), p);
  return a;
}

PPoly pderiv(const PPoly& a, long p) {
  if (a.size() <= 1) return {};
  PPoly c(a.size() - 1);
  for (size_t i = 1; i < a.size(); ++i)
    c[i - 1] = (a[i] * static_cast<long>(i % p)) % p;
  ptrim(c);
  return c;
}

PPoly pmulmod(const PPoly& a, const PPoly& b, const PPoly& f, long p) {
  PPoly q, r;
  pdivrem(pmul(a, b, p), f, p, q, r);
  return r;
}

// x^p reduced modulo f.
PPoly ppow_xp(const PPoly& f, long p) {
  PPoly result{1}, base{0, 1};
  long e = p;
  while (e > 0) {
    if (e & 1) result = pmulmod(result, base, f, p);
    base = pmulmod(base, base, f, p);
    e >>= 1;
  }
  return result;
}

// Extended Euclid: s*g + t*h = 1 mod p, for coprime g, h.
void pbezout(const PPoly& g, const PPoly& h, long p, PPoly& s, PPoly& t) {
  PPoly r0 = g, r1 = h, s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    PPoly q, r;
    pdivrem(r0, r1, p, q, r);
    r0 = r1;
    r1 = r;
    PPoly s2 = psub(s0, pmul(q, s1, p), p);
    s0 = s1;
    s1 = s2;
    PPoly t2 = psub(t0, pmul(q, t1, p), p);
    t0 = t1;
    t1 = t2;
  }
  assert(pdeg(r0) == 0);
  long inv = pinv(r0[0], p);
  s = pscale(s0, inv, p);
  t = pscale(t0, inv, p);
}

PPoly to_ppoly(const ZPoly& a, long p) {
  PPoly c(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    Int v = a[i] % p;
    if (v < 0) v += p;
    c[i] = v.get_si();
  }
  ptrim(c);
  return c;
}

ZPoly to_zpoly(const PPoly& a) {
  ZPoly c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  return c;
}

// ---------------------------------------------------------------------------
// Berlekamp factorization of a monic squarefree polynomial over F_p.
// ---------------------------------------------------------------------------

std::vector<PPoly> berlekamp(const PPoly& f, long p) {
  int n = pdeg(f);
  // Frobenius matrix: column j holds the coefficients of x^(j*p) mod f.
  std::vector<std::vector<long>> Q(n, std::vector<long>(n, 0));
  PPoly xp = ppow_xp(f, p);
  PPoly cur{1};
  for (int j = 0; j < n; ++j) {
    for (int i = 0; i <= pdeg(cur); ++i) Q[i][j] = cur[i];
    if (j + 1 < n) cur = pmulmod(cur, xp, f, p);
  }
  for (int i = 0; i < n; ++i) Q[i][i] = ((Q[i][i] - 1) % p + p) % p;

  // Nullspace of Q - I by Gaussian elimination.
  std::vector<int> pivot_col_of_row(n, -1);
  std::vector<bool> is_pivot(n, false);
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int sel = -1;
    for (int row = rank; row < n; ++row)
      if (Q[row][col] != 0) {
        sel = row;
        break;
      }
    if (sel < 0) continue;
    std::swap(Q[sel], Q[rank]);
    long inv = pinv(Q[rank][col], p);
    for (int j = 0; j < n; ++j) Q[rank][j] = (Q[rank][j] * inv) % p;
    for (int row = 0; row < n; ++row) {
      if (row == rank || Q[row][col] == 0) continue;
      long c = Q[row][col];
      for (int j = 0; j < n; ++j)
        Q[row][j] = ((Q[row][j] - c * Q[rank][j]) % p + p) % p;
    }
    pivot_col_of_row[rank] = col;
    is_pivot[col] = true;
    ++rank;
  }
  std::vector<PPoly> basis;
  for (int col = 0; col < n; ++col) {
    if (is_pivot[col]) continue;
    PPoly v(n, 0);
    v[col] = 1;
    for (int row = 0; row < rank; ++row)
      v[pivot_col_of_row[row]] = (p - Q[row][col]) % p;
    ptrim(v);
    basis.push_back(v);
  }
  size_t k = basis.size();  // number of irreducible factors of f
  std::vector<PPoly> factors{f};
  if (k == 1) return factors;

  for (const auto& v : basis) {
    if (factors.size() == k) break;
    if (pdeg(v) < 1) continue;  // constants never split anything
    std::vector<PPoly> next;
    for (auto& w : factors) {
      if (pdeg(w) <= 1) {
        next.push_back(w);
        continue;
      }
      PPoly rem = w;
      for (long c = 0; c < p && pdeg(rem) > 0; ++c) {
        PPoly shifted = psub(v, PPoly{c}, p);
        PPoly g = pgcd(rem, shifted, p);
        if (pdeg(g) > 0 && pdeg(g) < pdeg(rem)) {
          next.push_back(g);
          PPoly q, r;
          pdivrem(rem, g, p, q, r);
          rem = q;
        }
      }
      if (pdeg(rem) > 0) next.push_back(rem);
    }
    factors = next;
  }
  assert(factors.size() == k);
  for (auto& w : factors) w = pscale(w, pinv(w.back(), p), p);
  return factors;
}

// ---------------------------------------------------------------------------
// Quadratic Hensel lifting of a pairwise factor tree.
// ---------------------------------------------------------------------------

// One Hensel step: given f = g*h (mod m) with s*g + t*h = 1 (mod m) and h
// monic, produce the same data modulo m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t,
                 const Int& m) {
  Int m2 = m * m;
  ZPoly e = zsubmod(f, zmul(g, h), m2);
  ZPoly q, r;
  zdivrem_monic_mod(zmul(s, e), h, m2, q, r);
  ZPoly g1 = zaddmod(zaddmod(g, zmulmod(t, e, m2), m2), zmulmod(q, g, m2), m2);
  ZPoly h1 = zaddmod(h, r, m2);
  ZPoly b = zsubmod(zaddmod(zmul(s, g1), zmul(t, h1), m2), ZPoly{Int(1)}, m2);
  ZPoly c, d;
  zdivrem_monic_mod(zmul(s, b), h1, m2, c, d);
  ZPoly s1 = zsubmod(s, d, m2);
  ZPoly t1 = zsubmod(zsubmod(t, zmulmod(t, b, m2), m2), zmulmod(c, g1, m2), m2);
  g = g1;
  h = h1;
  s = s1;
  t = t1;
}

// Lift the factorization f = prod(parts) (mod p) to modulus M (a power of p
// with power-of-two exponent), appending the lifted factors to `out`.
void lift_tree(const ZPoly& f, const std::vector<PPoly>& parts, size_t lo,
               size_t hi, long p, const Int& M, std::vector<ZPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(zmod(f, M));
    return;
  }
  size_t mid = lo + (hi - lo) / 2;
  PPoly g0{1}, h0{1};
  for (size_t i = lo; i < mid; ++i) g0 = pmul(g0, parts[i], p);
  for (size_t i = mid; i < hi; ++i) h0 = pmul(h0, parts[i], p);
  PPoly s0, t0;
  pbezout(g0, h0, p, s0, t0);
  ZPoly g = to_zpoly(g0), h = to_zpoly(h0), s = to_zpoly(s0),
        t = to_zpoly(t0);
  Int m = p;
  while (m < M) {
    hensel_step(f, g, h, s, t, m);
    m *= m;
  }
  lift_tree(zmod(g, M), parts, lo, mid, p, M, out);
  lift_tree(zmod(h, M), parts, mid, hi, p, M, out);
}

// ---------------------------------------------------------------------------
// Subset recombination.
// ---------------------------------------------------------------------------

std::vector<ZPoly> recombine(ZPoly f, const std::vector<ZPoly>& lifted,
                             const Int& M) {
  std::vector<ZPoly> result;
  std::vector<size_t> idx(lifted.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  size_t s = 1;
  while (2 * s <= idx.size()) {
    bool found = false;
    unsigned r = static_cast<unsigned>(idx.size());
    // Gosper's hack: all r-bit masks with popcount s, in increasing order.
    for (unsigned mask = (1u << s) - 1; mask < (1u << r) && !found;) {
      ZPoly cand{Int(1)};
      for (unsigned b = 0; b < r; ++b)
        if (mask & (1u << b)) cand = zmulmod(cand, lifted[idx[b]], M);
      cand = zbalanced(cand, M);
      ZPoly q;
      if (zdivide_monic_exact(f, cand, q)) {
        result.push_back(cand);
        f = q;
        std::vector<size_t> keep;
        for (unsigned b = 0; b < r; ++b)
          if (!(mask & (1u << b))) keep.push_back(idx[b]);
        idx = keep;
        found = true;
      } else {
        unsigned c = mask & static_cast<unsigned>(-static_cast<int>(mask));
        unsigned rr = mask + c;
        mask = (((rr ^ mask) >> 2) / c) | rr;
      }
    }
    if (!found) ++s;
  }
  if (zdeg(f) > 0) result.push_back(f);
  return result;
}

// Factor a monic squarefree integer polynomial of degree >= 2.
std::vector<ZPoly> zassenhaus_monic(const ZPoly& f) {
  static const long kPrimes[] = {3,   5,   7,   11,  13,  17,  19,  23,  29,
                                 31,  37,  41,  43,  47,  53,  59,  61,  67,
                                 71,  73,  79,  83,  89,  97,  101, 103, 107,
                                 109, 113, 127, 131, 137, 139, 149, 151, 157,
                                 163, 167, 173, 179, 181, 191, 193, 197, 199};
  long p = 0;
  PPoly fp;
  for (long cand : kPrimes) {
    fp = to_ppoly(f, cand);
    if (pdeg(fp) != zdeg(f)) continue;  // cannot happen for monic f
    if (pdeg(pgcd(fp, pderiv(fp, cand), cand)) == 0) {
      p = cand;
      break;
    }
  }
  if (p == 0)
    throw std::runtime_error(
        "zassenhaus_monic: no small prime keeps the polynomial squarefree");

  std::vector<PPoly> modular = berlekamp(fp, p);
  if (modular.size() == 1) return {f};

  // Mignotte-style bound: any monic factor has coefficients bounded by
  // 2^deg(f) * |f|_2; lift until the modulus exceeds twice that.
  Int norm2(0);
  for (const auto& c : f) norm2 += c * c;
  Int B = sqrt(norm2);
  if (B * B < norm2) B += 1;
  B <<= zdeg(f);
  Int target = 2 * B + 1;
  Int M = p;
  while (M < target) M *= M;

  std::vector<ZPoly> lifted;
  lift_tree(zmod(f, M), modular, 0, modular.size(), p, M, lifted);
  return recombine(f, lifted, M);
}

ZPoly qpoly_to_primitive_z(const QPoly& f) {
  Int den(1);
  for (const auto& c : f.coeffs())
    den = den / int_gcd(den, c.get_den()) * c.get_den();
  ZPoly z(f.coeffs().size());
  for (size_t i = 0; i < z.size(); ++i) {
    Rat v = f.coeffs()[i] * Rat(den);
    assert(v.get_den() == 1);
    z[i] = v.get_num();
  }
  Int content(0);
  for (const auto& c : z) content = int_gcd(content, c);
  if (content > 1)
    for (auto& c : z) c /= content;
  if (!z.empty() && z.back() < 0)
    for (auto& c : z) c = -c;
  return z;
}

QPoly zpoly_to_qpoly(const ZPoly& f) {
  std::vector<Rat> c(f.size());
  for (size_t i = 0; i < f.size(); ++i) c[i] = Rat(f[i]);
  return QPoly(std::move(c));
}

// Factor a monic squarefree rational polynomial into monic irreducibles.
std::vector<QPoly> factor_squarefree(const QPoly& f) {
  int n = f.degree();
  if (n == 1) return {f};
  ZPoly F = qpoly_to_primitive_z(f);
  Int L = F.back();
  // Monicize: fm(x) = L^(n-1) * F(x/L) is monic over Z with the roots of F
  // scaled by L; undo the substitution on each recovered factor.
  ZPoly fm(F.size());
  fm[n] = 1;
  Int pw(1);
  for (int i = n - 1; i >= 0; --i) {
    fm[i] = F[i] * pw;
    pw *= L;
  }
  std::vector<QPoly> out;
  for (const ZPoly& g : zassenhaus_monic(fm)) {
    QPoly back = zpoly_to_qpoly(g).scale_arg(Rat(L));
    out.push_back(back.monic());
  }
  return out;
}

}  // namespace

QFactorization factor_poly(const QPoly& f) {
  if (f.is_zero())
    throw std::invalid_argument("factor_poly: zero polynomial");
  QFactorization result;
  result.unit = f.lc();
  if (f.degree() == 0) return result;
  QPoly g = f.monic();

  // Squarefree decomposition by repeated gcd extraction.
  QPoly d = QPoly::gcd(g, g.derivative());
  QPoly w, r;
  QPoly::divrem(g, d, w, r);
  int mult = 1;
  while (w.degree() > 0) {
    QPoly y = QPoly::gcd(w, d);
    QPoly part, junk;
    QPoly::divrem(w, y, part, junk);
    if (part.degree() > 0) {
      if (part.degree() > kFactorDegreeBound)
        throw FactorDegreeError(part.degree(), kFactorDegreeBound);
      for (const QPoly& irr : factor_squarefree(part.monic()))
        result.factors.emplace_back(irr, mult);
    }
    QPoly d2;
    QPoly::divrem(d, y, d2, junk);
    w = y;
    d = d2;
    ++mult;
  }
  std::sort(result.factors.begin(), result.factors.end(),
            [](const auto& a, const auto& b) {
              if (a.first.degree() != b.first.degree())
                return a.first.degree() < b.first.degree();
              for (int i = a.first.degree(); i >= 0; --i) {
                if (a.first.coeff(i) != b.first.coeff(i))
                  return a.first.coeff(i) < b.first.coeff(i);
              }
              return a.second < b.second;
            });
  return result;
}

bool is_irreducible_poly(const QPoly& f) {
  if (f.degree() < 1) return false;
  auto fac = factor_poly(f);
  return fac.factors.size() == 1 && fac.factors[0].second == 1;
}

bool is_squarefree_poly(const QPoly& f) {
  if (f.is_zero()) return false;
  if (f.degree() == 0) return true;
  return QPoly::gcd(f, f.derivative()).degree() == 0;
}

}  // namespace concord
