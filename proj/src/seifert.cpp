/*
 * seifert.cpp -- Seifert-matrix algebra: Alexander polynomial, exact
 * Levine-Tristram signatures, signature function, rho0.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#include "concord/seifert.hpp"

#include <stdexcept>
#include <utility>

#include "concord/quadfield.hpp"

namespace concord {

namespace {

/** Exact determinant of a square rational matrix by Gaussian elimination. */
Rat rational_det(std::vector<std::vector<Rat>> m) {
  int n = static_cast<int>(m.size());
  Rat det(1);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) return Rat(0);
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
  return det;
}

}  // namespace

SeifertMatrix::SeifertMatrix(std::vector<std::vector<Int>> entries)
    : entries_(std::move(entries)) {
  int n = static_cast<int>(entries_.size());
  for (const auto& row : entries_)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("SeifertMatrix: not square");
  if (n % 2 != 0)
    throw std::invalid_argument("SeifertMatrix: dimension must be even");
  if (n == 0) return;
  std::vector<std::vector<Rat>> skew(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      skew[i][j] = Rat(entries_[i][j] - entries_[j][i]);
  if (rational_det(std::move(skew)) != 1)
    throw std::invalid_argument("SeifertMatrix: det(V - V^T) != 1");
}

LaurentPoly alexander_poly(const SeifertMatrix& V) {
  int n = V.dim();
  if (n == 0) return LaurentPoly::constant(Rat(1));
  std::vector<std::vector<LaurentPoly>> m(n, std::vector<LaurentPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      m[i][j] = LaurentPoly::constant(Rat(V.at(i, j))) -
                LaurentPoly::monomial(1, Rat(V.at(j, i)));
  return canonical_unit_rep(laurent_det(m));
}

SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
  int n = a.dim(), m = b.dim();
  std::vector<std::vector<Int>> e(n + m, std::vector<Int>(n + m, Int(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e[i][j] = a.at(i, j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) e[n + i][n + j] = b.at(i, j);
  return SeifertMatrix(std::move(e));
}

SeifertMatrix mirror_reverse(const SeifertMatrix& V) {
  int n = V.dim();
  std::vector<std::vector<Int>> e(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) e[i][j] = -V.at(j, i);
  return SeifertMatrix(std::move(e));
}

Int seifert_pairing(const SeifertMatrix& V, const std::vector<Int>& a,
                    const std::vector<Int>& b) {
  int n = V.dim();
  if (static_cast<int>(a.size()) != n || static_cast<int>(b.size()) != n)
    throw std::invalid_argument("seifert_pairing: dimension mismatch");
  Int out(0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out += a[i] * V.at(i, j) * b[j];
  return out;
}

namespace {

/**
 * Signature at u = 2*cos(theta) without the jump-point check; the caller
 * guarantees u is not a jump.  H = (1 - u/2)(V + V^T) + w (V^T - V) with
 * w = i*sin(theta), w^2 = u^2/4 - 1.
 */
int signature_at(const SeifertMatrix& V, const Rat& u) {
  int n = V.dim();
  if (n == 0) return 0;
  Rat D = u * u / 4 - 1;
  bool boundary = (D == 0);  // theta in {0, pi}: H is real symmetric
  QuadField F(boundary ? Rat(-1) : D);
  Rat c = 1 - u / 2;
  std::vector<std::vector<QuadElem>> H(n, std::vector<QuadElem>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Rat re = c * Rat(V.at(i, j) + V.at(j, i));
      Rat im = boundary ? Rat(0) : Rat(V.at(j, i) - V.at(i, j));
      H[i][j] = QuadElem(std::move(re), std::move(im));
    }
  Inertia in = hermitian_inertia(F, std::move(H));
  if (in.zero != 0 && u != 2)
    throw std::logic_error("levine_tristram: unexpected nullity off jumps");
  return in.signature();
}

QPoly alexander_u_form(const SeifertMatrix& V) {
  return u_form(alexander_poly(V));
}

}  // namespace

int levine_tristram(const SeifertMatrix& V, const Rat& u) {
  if (u < -2 || u > 2)
    throw std::invalid_argument("levine_tristram: u outside [-2, 2]");
  if (V.dim() == 0) return 0;
  if (u > -2 && u < 2 && alexander_u_form(V).eval(u) == 0)
    throw std::domain_error("levine_tristram: at jump point");
  return signature_at(V, u);
}

SignatureFunction signature_function(const SeifertMatrix& V) {
  SignatureFunction sf;
  if (V.dim() == 0) {
    sf.values.push_back(0);
    return sf;
  }
  sf.jumps = circle_roots(alexander_u_form(V));
  if (sf.jumps.empty()) {
    sf.values.push_back(signature_at(V, Rat(0)));
    return sf;
  }
  // Arcs in increasing theta; in the u coordinate the first arc is
  // (jumps[0].hi, 2), middle arcs sit between consecutive isolating
  // intervals, and the last is (-2, jumps.back().lo).  The isolating
  // intervals are pairwise disjoint, so each sample avoids every root.
  std::size_t m = sf.jumps.size();
  for (std::size_t k = 0; k <= m; ++k) {
    Rat sample;
    if (k == 0)
      sample = (sf.jumps[0].u_iv.hi + 2) / 2;
    else if (k == m)
      sample = (sf.jumps[m - 1].u_iv.lo - 2) / 2;
    else
      sample = (sf.jumps[k].u_iv.hi + sf.jumps[k - 1].u_iv.lo) / 2;
    sf.values.push_back(signature_at(V, sample));
  }
  return sf;
}

RhoZero rho0_knot(const SeifertMatrix& V) {
  SignatureFunction sf = signature_function(V);
  Int trillion;
  mpz_ui_pow_ui(trillion.get_mpz_t(), 10, 12);
  StepIntegral s =
      integrate_step_on_circle(sf.jumps, sf.values, Rat(1) / Rat(trillion));
  RhoZero out;
  out.exact = s.exact;
  out.lo = s.lo;
  out.hi = s.hi;
  return out;
}

}  // namespace concord
