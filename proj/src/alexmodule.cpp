/*
 * alexmodule.cpp -- Smith normal form over Q[t^{±1}] and the rational
 * Alexander module: reduction, independence, submodules, localization.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#include "concord/alexmodule.hpp"

#include <stdexcept>
#include <utility>

namespace concord {

LaurentMatrix laurent_mat_mul(const LaurentMatrix& a, const LaurentMatrix& b) {
  std::size_t n = a.size(), k = b.size();
  for (const auto& row : a)
    if (row.size() != k)
      throw std::invalid_argument("laurent_mat_mul: size mismatch");
  std::size_t m = k == 0 ? 0 : b[0].size();
  LaurentMatrix out(n, std::vector<LaurentPoly>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      LaurentPoly acc;
      for (std::size_t l = 0; l < k; ++l) acc = acc + a[i][l] * b[l][j];
      out[i][j] = acc;
    }
  return out;
}

namespace {

using PolyMatrix = std::vector<std::vector<QPoly>>;

PolyMatrix poly_identity(int n) {
  PolyMatrix I(n, std::vector<QPoly>(n));
  for (int i = 0; i < n; ++i) I[i][i] = QPoly::constant(Rat(1));
  return I;
}

/**
 * Smith normal form over Q[t]: transform * M * cotransform = diagonal with
 * each diagonal entry dividing the next.  All four transforms are tracked
 * so that the inverses need no separate solve.
 */
struct PolySmith {
  PolyMatrix m, u, uinv, w, winv;

  explicit PolySmith(PolyMatrix input)
      : m(std::move(input)),
        u(poly_identity(static_cast<int>(m.size()))),
        uinv(u),
        w(u),
        winv(u) {
    run();
  }

  int n() const { return static_cast<int>(m.size()); }

  void swap_rows(int i, int j) {
    if (i == j) return;
    std::swap(m[i], m[j]);
    std::swap(u[i], u[j]);
    for (int r = 0; r < n(); ++r) std::swap(uinv[r][i], uinv[r][j]);
  }

  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < n(); ++r) {
      std::swap(m[r][i], m[r][j]);
      std::swap(w[r][i], w[r][j]);
    }
    std::swap(winv[i], winv[j]);
  }

  /** row i += q * row j (and the matching transform updates). */
  void add_row(int i, int j, const QPoly& q) {
    for (int c = 0; c < n(); ++c) {
      m[i][c] = m[i][c] + q * m[j][c];
      u[i][c] = u[i][c] + q * u[j][c];
    }
    for (int r = 0; r < n(); ++r) uinv[r][j] = uinv[r][j] - q * uinv[r][i];
  }

  /** col i += q * col j. */
  void add_col(int i, int j, const QPoly& q) {
    for (int r = 0; r < n(); ++r) {
      m[r][i] = m[r][i] + q * m[r][j];
      w[r][i] = w[r][i] + q * w[r][j];
    }
    for (int c = 0; c < n(); ++c) winv[j][c] = winv[j][c] - q * winv[i][c];
  }

  bool select_pivot(int pos) {
    int bi = -1, bj = -1, bdeg = -1;
    for (int i = pos; i < n(); ++i)
      for (int j = pos; j < n(); ++j) {
        if (m[i][j].is_zero()) continue;
        if (bdeg < 0 || m[i][j].degree() < bdeg) {
          bi = i;
          bj = j;
          bdeg = m[i][j].degree();
        }
      }
    if (bi < 0) return false;
    swap_rows(pos, bi);
    swap_cols(pos, bj);
    return true;
  }

  void run() {
    for (int pos = 0; pos < n(); ++pos) {
      if (!select_pivot(pos)) break;
      for (;;) {
        bool clean = true;
        for (int r = pos + 1; r < n(); ++r) {
          if (m[r][pos].is_zero()) continue;
          QPoly q, rem;
          QPoly::divrem(m[r][pos], m[pos][pos], q, rem);
          add_row(r, pos, -q);
          if (!rem.is_zero()) clean = false;
        }
        for (int c = pos + 1; c < n(); ++c) {
          if (m[pos][c].is_zero()) continue;
          QPoly q, rem;
          QPoly::divrem(m[pos][c], m[pos][pos], q, rem);
          add_col(c, pos, -q);
          if (!rem.is_zero()) clean = false;
        }
        if (!clean) {
          select_pivot(pos);  // a smaller-degree entry now exists
          continue;
        }
        // Cross is clear; enforce that the pivot divides the remainder
        // block, else absorb an offending row and restart.
        int br = -1, bc = -1;
        for (int r = pos + 1; r < n() && br < 0; ++r)
          for (int c = pos + 1; c < n(); ++c)
            if (!QPoly::divides(m[pos][pos], m[r][c])) {
              br = r;
              bc = c;
              break;
            }
        if (br < 0) break;
        (void)bc;
        add_row(pos, br, QPoly::constant(Rat(1)));
      }
    }
  }
};

LaurentMatrix to_laurent(const PolyMatrix& p) {
  LaurentMatrix out(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    out[i].reserve(p[i].size());
    for (const QPoly& f : p[i]) out[i].push_back(LaurentPoly::from_qpoly(f));
  }
  return out;
}

/** y mod q for Laurent y and a poly q with q(0) != 0: the unique poly
 * representative of degree < deg q. */
QPoly laurent_mod_poly(const LaurentPoly& y, const QPoly& q) {
  if (y.is_zero()) return QPoly();
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
  return rem;
}

/** Reduced-row-echelon accumulator for rational vectors. */
struct Echelon {
  std::vector<std::vector<Rat>> rows;  // each with leading 1 at its pivot
  std::vector<int> pivots;

  /** Reduce v against the basis; returns the residual. */
  std::vector<Rat> residual(std::vector<Rat> v) const {
    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rat& c = v[pivots[r]];
      if (c == 0) continue;
      Rat f = c;
      for (std::size_t j = 0; j < v.size(); ++j) v[j] -= f * rows[r][j];
    }
    return v;
  }

  /** Insert if independent; returns true when the rank grew. */
  bool insert(std::vector<Rat> v) {
    v = residual(std::move(v));
    int p = -1;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (v[j] != 0) {
        p = static_cast<int>(j);
        break;
      }
    if (p < 0) return false;
    Rat lead = v[p];
    for (auto& x : v) x /= lead;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Rat c = rows[r][p];
      if (c == 0) continue;
      for (std::size_t j = 0; j < v.size(); ++j) rows[r][j] -= c * v[j];
    }
    rows.push_back(std::move(v));
    pivots.push_back(p);
    return true;
  }
};

}  // namespace

AlexanderModule::AlexanderModule(const SeifertMatrix& V) : seifert_(V) {
  int n = V.dim();
  presentation_.assign(n, std::vector<LaurentPoly>(n));
  PolyMatrix pres(n, std::vector<QPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      pres[i][j] =
          QPoly({Rat(V.at(i, j)), Rat(-V.at(j, i))});  // V_ij - t V_ji
      presentation_[i][j] = LaurentPoly::from_qpoly(pres[i][j]);
    }

  PolySmith smith(std::move(pres));
  smith_.transform = to_laurent(smith.u);
  smith_.transform_inv = to_laurent(smith.uinv);
  smith_.cotransform = to_laurent(smith.w);
  smith_.cotransform_inv = to_laurent(smith.winv);
  smith_.diagonal.resize(n);

  for (int i = 0; i < n; ++i) {
    LaurentPoly d = LaurentPoly::from_qpoly(smith.m[i][i]);
    if (d.is_zero())
      throw std::logic_error("AlexanderModule: singular presentation");
    LaurentPoly canon = canonical_primitive_rep(d);
    // canon = rho * t^{-shift} * d; push the unit into the row transform.
    int shift = d.min_exp();
    Rat rho = canon.coeff(0) / d.coeff(shift);
    for (int c = 0; c < n; ++c) {
      smith_.transform[i][c] = smith_.transform[i][c].shifted(-shift) * rho;
      smith_.transform_inv[c][i] =
          smith_.transform_inv[c][i].shifted(shift) * (Rat(1) / rho);
    }
    smith_.diagonal[i] = canon;
    if (canon.max_exp() >= 1) divisors_.push_back(canon);
  }
  for (const LaurentPoly& q : divisors_) dimension_ += q.max_exp();

  LaurentPoly delta = alexander_poly(V);
  int delta_deg = delta.is_unit() ? 0 : delta.max_exp();
  if (dimension_ != delta_deg)
    throw std::logic_error(
        "AlexanderModule: divisor degrees disagree with the Alexander "
        "polynomial");
}

AlexanderModule build_module(const SeifertMatrix& V) {
  return AlexanderModule(V);
}

ModuleElement AlexanderModule::element(std::vector<LaurentPoly> coords) const {
  if (static_cast<int>(coords.size()) != seifert_.dim())
    throw std::invalid_argument("AlexanderModule: coordinate size mismatch");
  ModuleElement e;
  e.coords = std::move(coords);
  return e;
}

ModuleElement AlexanderModule::reduce(const ModuleElement& e) const {
  int n = seifert_.dim();
  if (static_cast<int>(e.coords.size()) != n)
    throw std::invalid_argument("AlexanderModule: coordinate size mismatch");
  ModuleElement out;
  out.coords = e.coords;
  for (int i = 0; i < n; ++i) {
    const LaurentPoly& q = smith_.diagonal[i];
    if (q.max_exp() < 1) continue;  // unit divisor: summand is zero
    LaurentPoly y;
    for (int c = 0; c < n; ++c) y = y + smith_.transform[i][c] * e.coords[c];
    out.reduced.push_back(
        LaurentPoly::from_qpoly(laurent_mod_poly(y, q.to_qpoly())));
  }
  return out;
}

std::vector<Rat> AlexanderModule::vectorize(const ModuleElement& e) const {
  ModuleElement r = e.reduced.size() == divisors_.size() ? e : reduce(e);
  std::vector<Rat> v;
  v.reserve(dimension_);
  for (std::size_t i = 0; i < divisors_.size(); ++i) {
    int d = divisors_[i].max_exp();
    for (int j = 0; j < d; ++j) v.push_back(r.reduced[i].coeff(j));
  }
  return v;
}

bool AlexanderModule::is_zero(const ModuleElement& e) const {
  for (const Rat& c : vectorize(e))
    if (c != 0) return false;
  return true;
}

bool AlexanderModule::equal(const ModuleElement& a,
                            const ModuleElement& b) const {
  return vectorize(a) == vectorize(b);
}

ModuleElement AlexanderModule::t_shift(const ModuleElement& e, int k) const {
  ModuleElement out;
  out.coords.reserve(e.coords.size());
  for (const LaurentPoly& c : e.coords) out.coords.push_back(c.shifted(k));
  return out;
}

ModuleElement AlexanderModule::add(const ModuleElement& a,
                                   const ModuleElement& b) const {
  if (a.coords.size() != b.coords.size())
    throw std::invalid_argument("AlexanderModule: coordinate size mismatch");
  ModuleElement out;
  out.coords.reserve(a.coords.size());
  for (std::size_t i = 0; i < a.coords.size(); ++i)
    out.coords.push_back(a.coords[i] + b.coords[i]);
  return out;
}

ModuleElement AlexanderModule::scale(const ModuleElement& e,
                                     const LaurentPoly& f) const {
  ModuleElement out;
  out.coords.reserve(e.coords.size());
  for (const LaurentPoly& c : e.coords) out.coords.push_back(c * f);
  return out;
}

bool z_linear_independent(const AlexanderModule& A,
                          const std::vector<ModuleElement>& elems) {
  if (elems.empty())
    throw std::invalid_argument("z_linear_independent: empty list");
  Echelon ech;
  std::size_t rank = 0;
  for (const ModuleElement& e : elems)
    if (ech.insert(A.vectorize(e))) ++rank;
  return rank == elems.size();
}

Submodule submodule_generated(const AlexanderModule& A,
                              const std::vector<ModuleElement>& gens) {
  Submodule out;
  if (A.dimension() == 0) return out;

  // Matrix of multiplication by t in divisor coordinates: block companion.
  int dim = A.dimension();
  std::vector<std::vector<Rat>> T(dim, std::vector<Rat>(dim, Rat(0)));
  int off = 0;
  for (const LaurentPoly& q : A.divisors()) {
    QPoly monic = q.to_qpoly().monic();
    int d = monic.degree();
    for (int j = 0; j + 1 < d; ++j) T[off + j + 1][off + j] = 1;
    for (int r = 0; r < d; ++r) T[off + r][off + d - 1] = -monic.coeff(r);
    off += d;
  }

  Echelon ech;
  std::vector<std::vector<Rat>> frontier;
  for (const ModuleElement& g : gens) {
    std::vector<Rat> v = A.vectorize(g);
    if (ech.insert(v)) frontier.push_back(std::move(v));
  }
  while (!frontier.empty()) {
    std::vector<std::vector<Rat>> next;
    for (const auto& v : frontier) {
      std::vector<Rat> tv(dim, Rat(0));
      for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) tv[i] += T[i][j] * v[j];
      if (ech.insert(tv)) next.push_back(std::move(tv));
    }
    frontier = std::move(next);
  }
  out.basis = ech.rows;
  return out;
}

bool LocalizedModule::is_zero() const {
  for (const LaurentPoly& h : local_divisors)
    if (h.max_exp() >= 1) return false;
  return true;
}

int LocalizedModule::dimension() const {
  int d = 0;
  for (const LaurentPoly& h : local_divisors)
    if (h.max_exp() >= 1) d += h.max_exp();
  return d;
}

LocalizedModule localize(const AlexanderModule& A, const LaurentPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("localize: p must be nonzero");
  LocalizedModule out{A, p, {}};
  std::vector<std::pair<LaurentPoly, int>> primes =
      p.is_unit() ? std::vector<std::pair<LaurentPoly, int>>{}
                  : laurent_factor(p);
  for (const LaurentPoly& q : A.divisors()) {
    LaurentPoly h = LaurentPoly::constant(Rat(1));
    for (const auto& [f, mult] : primes) {
      (void)mult;
      int m = laurent_multiplicity(q, f);
      for (int i = 0; i < m; ++i) h = h * f;
    }
    out.local_divisors.push_back(h);
  }
  return out;
}

bool anisotropy_criterion(const SeifertMatrix& V, const LaurentPoly& p) {
  if (p.is_zero())
    throw std::invalid_argument("anisotropy_criterion: p must be nonzero");
  if (p.is_unit()) return true;
  LaurentPoly delta = alexander_poly(V);
  for (const auto& [f, mult] : laurent_factor(p)) {
    (void)mult;
    if (!is_symmetric(f)) return false;
    if (laurent_multiplicity(delta, f) > 1) return false;
  }
  return true;
}

}  // namespace concord
