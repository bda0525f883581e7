/*
 * quadfield.cpp -- imaginary quadratic arithmetic and Hermitian inertia.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#include "concord/quadfield.hpp"

#include <stdexcept>
#include <utility>

namespace concord {

QuadField::QuadField(const Rat& D) : d_(D) {
  if (D >= 0)
    throw std::invalid_argument(
        "QuadField: discriminant must be negative (imaginary quadratic)");
}

QuadElem QuadField::add(const QuadElem& x, const QuadElem& y) const {
  return QuadElem(x.a + y.a, x.b + y.b);
}

QuadElem QuadField::sub(const QuadElem& x, const QuadElem& y) const {
  return QuadElem(x.a - y.a, x.b - y.b);
}

QuadElem QuadField::mul(const QuadElem& x, const QuadElem& y) const {
  return QuadElem(x.a * y.a + d_ * x.b * y.b, x.a * y.b + x.b * y.a);
}

Rat QuadField::norm(const QuadElem& x) const { return x.a * x.a - d_ * x.b * x.b; }

QuadElem QuadField::inv(const QuadElem& x) const {
  Rat n = norm(x);
  if (n == 0) throw std::domain_error("QuadField::inv: zero element");
  return QuadElem(x.a / n, -x.b / n);
}

QuadElem QuadField::div(const QuadElem& x, const QuadElem& y) const {
  return mul(x, inv(y));
}

Inertia hermitian_inertia(const QuadField& F,
                          std::vector<std::vector<QuadElem>> H) {
  size_t n = H.size();
  for (size_t i = 0; i < n; ++i) {
    if (H[i].size() != n)
      throw std::invalid_argument("hermitian_inertia: matrix not square");
    if (!H[i][i].is_real())
      throw std::invalid_argument("hermitian_inertia: diagonal not real");
    for (size_t j = i + 1; j < n; ++j)
      if (!(H[j][i] == H[i][j].conj()))
        throw std::invalid_argument("hermitian_inertia: not Hermitian");
  }

  Inertia res;
  std::vector<size_t> live(n);
  for (size_t i = 0; i < n; ++i) live[i] = i;

  while (!live.empty()) {
    // Prefer a nonzero real diagonal pivot.
    size_t pivot_pos = live.size();
    for (size_t k = 0; k < live.size(); ++k)
      if (!H[live[k]][live[k]].is_zero()) {
        pivot_pos = k;
        break;
      }
    if (pivot_pos < live.size()) {
      size_t p = live[pivot_pos];
      Rat d = H[p][p].a;
      if (d > 0)
        ++res.pos;
      else
        ++res.neg;
      live.erase(live.begin() + pivot_pos);
      // Schur complement: H'_{lm} = H_lm - H_lp H_pm / d.
      for (size_t l : live)
        for (size_t m : live)
          H[l][m] = F.sub(H[l][m],
                          F.mul(H[l][p], F.mul(H[p][m], QuadElem(1 / d, Rat(0)))));
      continue;
    }
    // Diagonal of the remaining block is identically zero: look for an
    // off-diagonal entry forming a hyperbolic plane [[0, c], [conj(c), 0]].
    size_t bi = live.size(), bj = live.size();
    for (size_t k = 0; k < live.size() && bi == live.size(); ++k)
      for (size_t l = k + 1; l < live.size(); ++l)
        if (!H[live[k]][live[l]].is_zero()) {
          bi = k;
          bj = l;
          break;
        }
    if (bi == live.size()) {
      // Remaining block is all zero.
      res.zero += static_cast<int>(live.size());
      break;
    }
    size_t p = live[bi], q = live[bj];
    QuadElem c = H[p][q];  // H[q][p] = conj(c)
    ++res.pos;
    ++res.neg;
    live.erase(live.begin() + bj);
    live.erase(live.begin() + bi);
    // Schur complement against [[0, c], [cbar, 0]], whose inverse is
    // [[0, 1/cbar], [1/c, 0]]:
    // H'_{lm} = H_lm - H_lp (1/cbar) H_qm - H_lq (1/c) H_pm.
    QuadElem cinv = F.inv(c);
    QuadElem cbinv = F.inv(c.conj());
    for (size_t l : live)
      for (size_t m : live) {
        QuadElem t1 = F.mul(H[l][p], F.mul(cbinv, H[q][m]));
        QuadElem t2 = F.mul(H[l][q], F.mul(cinv, H[p][m]));
        H[l][m] = F.sub(H[l][m], F.add(t1, t2));
      }
  }
  return res;
}

}  // namespace concord
