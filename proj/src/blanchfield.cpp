/*
 * blanchfield.cpp -- Blanchfield pairing values, isotropy, metabolizers.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#include "concord/blanchfield.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <utility>

namespace concord {

namespace {

/** Exact quotient a/b in Q[t^{±1}] (std::domain_error if b does not divide a). */
LaurentPoly laurent_div_exact(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return a;
  int sa, sb;
  QPoly fa = a.to_qpoly(sa), fb = b.to_qpoly(sb);
  QPoly q, r;
  QPoly::divrem(fa, fb, q, r);
  if (!r.is_zero())
    throw std::domain_error("laurent_div_exact: not divisible");
  return LaurentPoly::from_qpoly(q, sa - sb);
}

/** Unique polynomial representative of y modulo q (q(0) != 0, deg q >= 1). */
LaurentPoly reduce_mod(const LaurentPoly& y, const LaurentPoly& den) {
  QPoly q = den.to_qpoly();
  if (y.is_zero()) return y;
  int s;
  QPoly f = y.to_qpoly(s);
  QPoly tpow;
  if (s >= 0) {
    tpow = QPoly::monomial(s, Rat(1));
  } else {
    QPoly tau = poly_inverse_mod(QPoly::monomial(1, Rat(1)), q);
    tpow = QPoly::constant(Rat(1));
    for (int i = 0; i < -s; ++i) {
      QPoly quo, rem;
      QPoly::divrem(tpow * tau, q, quo, rem);
      tpow = rem;
    }
  }
  QPoly quo, rem;
  QPoly::divrem(f * tpow, q, quo, rem);
  return LaurentPoly::from_qpoly(rem);
}

}  // namespace

bool BlanchfieldValue::operator==(const BlanchfieldValue& o) const {
  if (mod_p.has_value() != o.mod_p.has_value()) return false;
  if (mod_p &&
      canonical_primitive_rep(*mod_p) != canonical_primitive_rep(*o.mod_p))
    return false;
  return num == o.num && den == o.den;
}

BlanchfieldValue make_blanchfield_value(
    const LaurentPoly& num_in, const LaurentPoly& den_in,
    const std::optional<LaurentPoly>& mod_p) {
  if (den_in.is_zero())
    throw std::invalid_argument("BlanchfieldValue: zero denominator");
  BlanchfieldValue out;
  out.mod_p = mod_p;
  if (num_in.is_zero()) return out;

  // Reduce the fraction.
  LaurentPoly g = laurent_gcd(num_in, den_in);
  LaurentPoly num = laurent_div_exact(num_in, g);
  LaurentPoly den = laurent_div_exact(den_in, g);

  if (mod_p) {
    // Only the p-primary part of the denominator survives in Q(t)/R_p: the
    // coprime part e is a unit of R_p, so num/den = (num * e^{-1}) / h.
    if (mod_p->is_zero())
      throw std::invalid_argument("BlanchfieldValue: zero localization");
    LaurentPoly h = LaurentPoly::constant(Rat(1));
    if (!den.is_unit() && !mod_p->is_unit()) {
      std::vector<std::pair<LaurentPoly, int>> p_primes =
          laurent_factor(*mod_p);
      for (const auto& [f, mult] : laurent_factor(den)) {
        (void)mult;
        bool divides_p = false;
        for (const auto& [pf, pm] : p_primes) {
          (void)pm;
          if (pf == f) {
            divides_p = true;
            break;
          }
        }
        if (!divides_p) continue;
        int m = laurent_multiplicity(den, f);
        for (int i = 0; i < m; ++i) h = h * f;
      }
    }
    if (h.is_unit()) return out;  // denominator is a unit of R_p: class zero
    LaurentPoly e = laurent_div_exact(den, h);
    den = canonical_primitive_rep(h);
    QPoly hq = den.to_qpoly();
    QPoly einv = poly_inverse_mod(reduce_mod(e, den).to_qpoly(), hq);
    num = num * LaurentPoly::from_qpoly(einv);
  } else {
    if (den.is_unit()) return out;  // an element of Q[t^{±1}]: class zero
    LaurentPoly den_can = canonical_primitive_rep(den);
    // den_can = rho * t^{-shift} * den; scale num by the same unit.
    int shift = den.min_exp();
    Rat rho = den_can.coeff(0) / den.coeff(shift);
    num = num.shifted(-shift) * rho;
    den = den_can;
  }

  out.num = reduce_mod(num, den);
  out.den = den;
  return out;
}

BlanchfieldValue bl_add(const BlanchfieldValue& a, const BlanchfieldValue& b) {
  bool same_ambient =
      a.mod_p.has_value() == b.mod_p.has_value() &&
      (!a.mod_p || canonical_primitive_rep(*a.mod_p) ==
                       canonical_primitive_rep(*b.mod_p));
  if (!same_ambient)
    throw std::invalid_argument("bl_add: mismatched ambient quotients");
  return make_blanchfield_value(a.num * b.den + b.num * a.den, a.den * b.den,
                                a.mod_p);
}

BlanchfieldValue bl_scale(const BlanchfieldValue& a, const LaurentPoly& f) {
  return make_blanchfield_value(a.num * f, a.den, a.mod_p);
}

BlanchfieldValue bl_conj(const BlanchfieldValue& a) {
  return make_blanchfield_value(a.num.involute(), a.den.involute(), a.mod_p);
}

namespace {

/** Adjugate of a square Laurent matrix: adj(M) * M = det(M) * I. */
LaurentMatrix laurent_adjugate(const LaurentMatrix& m) {
  int n = static_cast<int>(m.size());
  LaurentMatrix adj(n, std::vector<LaurentPoly>(n));
  if (n == 0) return adj;
  if (n == 1) {
    adj[0][0] = LaurentPoly::constant(Rat(1));
    return adj;
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      LaurentMatrix minor(n - 1, std::vector<LaurentPoly>(n - 1));
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == i) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == j) continue;
          minor[rr][cc] = m[r][c];
          ++cc;
        }
        ++rr;
      }
      LaurentPoly cof = laurent_det(minor);
      if ((i + j) % 2 != 0) cof = -cof;
      adj[j][i] = cof;  // transpose of the cofactor matrix
    }
  return adj;
}

struct PairingContext {
  LaurentMatrix adj;
  LaurentPoly det;

  explicit PairingContext(const SeifertMatrix& V) {
    int n = V.dim();
    LaurentMatrix m(n, std::vector<LaurentPoly>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        m[i][j] = LaurentPoly::constant(Rat(V.at(i, j))) -
                  LaurentPoly::monomial(1, Rat(V.at(j, i)));
    adj = laurent_adjugate(m);
    det = laurent_det(m);
  }

  BlanchfieldValue pair(const std::vector<LaurentPoly>& r,
                        const std::vector<LaurentPoly>& s,
                        const std::optional<LaurentPoly>& mod_p) const {
    int n = static_cast<int>(adj.size());
    LaurentPoly acc;
    for (int j = 0; j < n; ++j) {
      LaurentPoly row;
      for (int i = 0; i < n; ++i) row = row + adj[j][i] * r[i];
      acc = acc + s[j].involute() * row;
    }
    LaurentPoly one_minus_t =
        LaurentPoly::constant(Rat(1)) - LaurentPoly::t();
    if (n == 0) return make_blanchfield_value(LaurentPoly(),
                                              LaurentPoly::constant(Rat(1)),
                                              mod_p);
    return make_blanchfield_value(one_minus_t * acc, det, mod_p);
  }
};

}  // namespace

BlanchfieldValue blanchfield_pair(const SeifertMatrix& V,
                                  const ModuleElement& r,
                                  const ModuleElement& s,
                                  const std::optional<LaurentPoly>& mod_p) {
  int n = V.dim();
  if (static_cast<int>(r.coords.size()) != n ||
      static_cast<int>(s.coords.size()) != n)
    throw std::invalid_argument("blanchfield_pair: coordinate size mismatch");
  return PairingContext(V).pair(r.coords, s.coords, mod_p);
}

bool is_isotropic(const SeifertMatrix& V,
                  const std::vector<ModuleElement>& gens,
                  const std::optional<LaurentPoly>& mod_p) {
  if (gens.empty()) return true;
  int n = V.dim();
  for (const ModuleElement& g : gens)
    if (static_cast<int>(g.coords.size()) != n)
      throw std::invalid_argument("is_isotropic: coordinate size mismatch");
  PairingContext ctx(V);

  // A spanning set of the t-closure: t^j * g_i for 0 <= j <= deg(Delta);
  // sesquilinearity then propagates vanishing to the whole submodule.
  LaurentPoly delta = alexander_poly(V);
  int depth = delta.is_unit() ? 0 : delta.max_exp();
  std::vector<std::vector<LaurentPoly>> span;
  for (const ModuleElement& g : gens)
    for (int j = 0; j <= depth; ++j) {
      std::vector<LaurentPoly> v;
      v.reserve(g.coords.size());
      for (const LaurentPoly& c : g.coords) v.push_back(c.shifted(j));
      span.push_back(std::move(v));
    }
  for (const auto& a : span)
    for (const auto& b : span)
      if (!ctx.pair(a, b, mod_p).is_zero()) return false;
  return true;
}

namespace {

Int int_det(std::vector<std::vector<Rat>> m) {
  int n = static_cast<int>(m.size());
  Rat det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Int(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (int r = col + 1; r < n; ++r) {
      if (m[r][col] == 0) continue;
      Rat f = m[r][col] / m[col][col];
      for (int c = col; c < n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  return det.get_num();
}

/** gcd over all k-by-k minors of a k x m integer matrix (1 for k = 0). */
Int minor_gcd(const std::vector<std::vector<Int>>& rows, int m) {
  int k = static_cast<int>(rows.size());
  if (k == 0) return Int(1);
  Int g(0);
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    std::vector<std::vector<Rat>> sq(k, std::vector<Rat>(k));
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) sq[r][c] = Rat(rows[r][idx[c]]);
    Int d = int_det(std::move(sq));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
    if (g == 1) return g;
    // next combination
    int i = k - 1;
    while (i >= 0 && idx[i] == m - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return g;
}

bool pairing_vanishes(const SeifertMatrix& V,
                      const std::vector<std::vector<Int>>& chosen,
                      const std::vector<Int>& cand) {
  if (seifert_pairing(V, cand, cand) != 0) return false;
  for (const auto& v : chosen)
    if (seifert_pairing(V, v, cand) != 0 || seifert_pairing(V, cand, v) != 0)
      return false;
  return true;
}

}  // namespace

bool metabolizer_verify(const SeifertMatrix& V,
                        const std::vector<std::vector<Int>>& vectors) {
  int g = V.genus(), n = V.dim();
  if (static_cast<int>(vectors.size()) != g)
    throw std::invalid_argument("metabolizer_verify: expected g vectors");
  for (const auto& v : vectors)
    if (static_cast<int>(v.size()) != n)
      throw std::invalid_argument("metabolizer_verify: wrong dimension");
  for (const auto& a : vectors)
    for (const auto& b : vectors)
      if (seifert_pairing(V, a, b) != 0) return false;
  return minor_gcd(vectors, n) == 1;
}

std::optional<Metabolizer> metabolizer_search(const SeifertMatrix& V,
                                              int height) {
  if (height < 1)
    throw std::invalid_argument("metabolizer_search: height must be >= 1");
  int g = V.genus(), n = V.dim();
  if (g == 0) return Metabolizer{};

  // All primitive vectors with entries in [-height, height], ordered by
  // max-norm then lexicographically.
  std::vector<std::vector<Int>> cands;
  std::vector<int> v(n, -height);
  for (;;) {
    Int gcd(0);
    for (int x : v) {
      Int ax(x < 0 ? -x : x);
      mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), ax.get_mpz_t());
    }
    if (gcd == 1) {
      std::vector<Int> vec(v.begin(), v.end());
      cands.push_back(std::move(vec));
    }
    int i = n - 1;
    while (i >= 0 && v[i] == height) {
      v[i] = -height;
      --i;
    }
    if (i < 0) break;
    ++v[i];
  }
  std::stable_sort(cands.begin(), cands.end(),
                   [](const std::vector<Int>& a, const std::vector<Int>& b) {
                     Int na(0), nb(0);
                     for (const Int& x : a) na = std::max(na, Int(abs(x)));
                     for (const Int& x : b) nb = std::max(nb, Int(abs(x)));
                     if (na != nb) return na < nb;
                     return a < b;
                   });

  std::vector<std::vector<Int>> chosen;
  std::vector<std::size_t> stack;
  std::function<bool(std::size_t)> dfs = [&](std::size_t from) -> bool {
    if (static_cast<int>(chosen.size()) == g)
      return minor_gcd(chosen, n) == 1;
    for (std::size_t i = from; i < cands.size(); ++i) {
      if (!pairing_vanishes(V, chosen, cands[i])) continue;
      chosen.push_back(cands[i]);
      if (minor_gcd(chosen, n) == 1 && dfs(i + 1)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (dfs(0)) return Metabolizer{chosen};
  return std::nullopt;
}

}  // namespace concord
