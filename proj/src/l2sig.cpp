/*
 * l2sig.cpp -- integrated signatures of Hermitian Laurent matrices on the
 * torus.  One variable: exact arc decomposition through the characteristic
 * polynomial and unit-circle root isolation.  Several variables: certified
 * adaptive quadrature with interval LDL^* elimination.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#include "concord/l2sig.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "concord/circle_roots.hpp"
#include "concord/laurent.hpp"
#include "concord/quadfield.hpp"

namespace concord {

// ------------------------------------------------------------- MultiLaurent

MultiLaurent::MultiLaurent(int nvars) : nvars_(nvars) {
  if (nvars < 1)
    throw std::invalid_argument("MultiLaurent: need at least one variable");
}

MultiLaurent MultiLaurent::constant(int nvars, const Rat& c) {
  MultiLaurent p(nvars);
  p.set(std::vector<int>(nvars, 0), c);
  return p;
}

MultiLaurent MultiLaurent::monomial(std::vector<int> exps, const Rat& c) {
  MultiLaurent p(static_cast<int>(exps.size()));
  p.set(exps, c);
  return p;
}

void MultiLaurent::set(const std::vector<int>& e, const Rat& v) {
  if (static_cast<int>(e.size()) != nvars_)
    throw std::invalid_argument("MultiLaurent: exponent arity mismatch");
  if (v == 0)
    c_.erase(e);
  else
    c_[e] = v;
}

Rat MultiLaurent::coeff(const std::vector<int>& e) const {
  auto it = c_.find(e);
  return it == c_.end() ? Rat(0) : it->second;
}

MultiLaurent MultiLaurent::operator+(const MultiLaurent& o) const {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("MultiLaurent: arity mismatch");
  MultiLaurent out = *this;
  for (const auto& [e, v] : o.c_) out.set(e, out.coeff(e) + v);
  return out;
}

MultiLaurent MultiLaurent::operator-(const MultiLaurent& o) const {
  return *this + (-o);
}

MultiLaurent MultiLaurent::operator*(const MultiLaurent& o) const {
  if (nvars_ != o.nvars_)
    throw std::invalid_argument("MultiLaurent: arity mismatch");
  MultiLaurent out(nvars_);
  for (const auto& [e1, v1] : c_)
    for (const auto& [e2, v2] : o.c_) {
      std::vector<int> e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
      out.set(e, out.coeff(e) + v1 * v2);
    }
  return out;
}

MultiLaurent MultiLaurent::operator*(const Rat& c) const {
  MultiLaurent out(nvars_);
  if (c == 0) return out;
  for (const auto& [e, v] : c_) out.c_[e] = v * c;
  return out;
}

MultiLaurent MultiLaurent::operator-() const { return *this * Rat(-1); }

MultiLaurent MultiLaurent::involute_all() const {
  MultiLaurent out(nvars_);
  for (const auto& [e, v] : c_) {
    std::vector<int> ne(e);
    for (int& x : ne) x = -x;
    out.c_[std::move(ne)] = v;
  }
  return out;
}

std::string MultiLaurent::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    const Rat& v = it->second;
    bool neg = v < 0;
    Rat av = neg ? Rat(-v) : v;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      int e = it->first[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += nvars_ == 1 ? "t" : "z" + std::to_string(i + 1);
      if (e != 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty())
      os << rat_to_string(av);
    else if (av == 1)
      os << mono;
    else
      os << rat_to_string(av) << "*" << mono;
  }
  return os.str();
}

// --------------------------------------------------- HermitianLaurentMatrix

HermitianLaurentMatrix::HermitianLaurentMatrix(
    int nvars, std::vector<std::vector<MultiLaurent>> entries)
    : nvars_(nvars), entries_(std::move(entries)) {
  if (nvars_ < 1)
    throw std::invalid_argument(
        "HermitianLaurentMatrix: need at least one variable");
  int n = static_cast<int>(entries_.size());
  for (const auto& row : entries_)
    if (static_cast<int>(row.size()) != n)
      throw std::invalid_argument("HermitianLaurentMatrix: not square");
  for (const auto& row : entries_)
    for (const auto& e : row)
      if (e.nvars() != nvars_)
        throw std::invalid_argument(
            "HermitianLaurentMatrix: entry arity mismatch");
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j)
      if (entries_[j][i] != entries_[i][j].involute_all())
        throw std::invalid_argument("HermitianLaurentMatrix: not Hermitian");
}

// --------------------------------------------------------- one-variable path

namespace {

LaurentPoly to_laurent(const MultiLaurent& p) {
  LaurentPoly out;
  for (const auto& [e, v] : p.terms())
    out = out + LaurentPoly::monomial(e[0], v);
  return out;
}

using LMat = std::vector<std::vector<LaurentPoly>>;

LMat lmat_mul(const LMat& a, const LMat& b) {
  int n = static_cast<int>(a.size());
  LMat out(n, std::vector<LaurentPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (int j = 0; j < n; ++j) {
        if (b[k][j].is_zero()) continue;
        out[i][j] = out[i][j] + a[i][k] * b[k][j];
      }
    }
  return out;
}

/**
 * Coefficients c_0..c_n of det(lambda*I - M) (c_n = 1) by the
 * Faddeev-LeVerrier recurrence, exactly over Laurent polynomials.
 */
std::vector<LaurentPoly> char_poly_coeffs(const LMat& m) {
  int n = static_cast<int>(m.size());
  std::vector<LaurentPoly> c(n + 1);
  c[n] = LaurentPoly::constant(Rat(1));
  LMat b(n, std::vector<LaurentPoly>(n));
  for (int i = 0; i < n; ++i) b[i][i] = LaurentPoly::constant(Rat(1));
  for (int k = 1; k <= n; ++k) {
    b = lmat_mul(m, b);
    LaurentPoly tr;
    for (int i = 0; i < n; ++i) tr = tr + b[i][i];
    c[n - k] = tr * Rat(-1, k);
    for (int i = 0; i < n; ++i) b[i][i] = b[i][i] + c[n - k];
  }
  return c;
}

QuadElem eval_on_circle(const QuadField& f, const LaurentPoly& p,
                        const QuadElem& t, const QuadElem& tinv) {
  QuadElem out;
  for (const auto& [e, v] : p.coeffs()) {
    QuadElem pw(Rat(1), Rat(0));
    const QuadElem& base = e >= 0 ? t : tinv;
    for (int i = 0; i < std::abs(e); ++i) pw = f.mul(pw, base);
    out = f.add(out, QuadElem(pw.a * v, pw.b * v));
  }
  return out;
}

/** Pointwise inertia of M(t) at t = u/2 + w on the circle, u in (-2, 2). */
Inertia inertia_on_arc(const LMat& m, const Rat& u) {
  int n = static_cast<int>(m.size());
  QuadField f(u * u / 4 - 1);
  QuadElem t(u / 2, Rat(1)), tinv(u / 2, Rat(-1));
  std::vector<std::vector<QuadElem>> h(n, std::vector<QuadElem>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) h[i][j] = eval_on_circle(f, m[i][j], t, tinv);
  return hermitian_inertia(f, std::move(h));
}

L2Signature l2sig_one_var(const HermitianLaurentMatrix& mh) {
  int n = mh.dim();
  L2Signature out;
  if (n == 0) {
    out.exact = Rat(0);
    return out;
  }
  LMat m(n, std::vector<LaurentPoly>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m[i][j] = to_laurent(mh.at(i, j));

  // The signature can only change where the product of the not-identically-
  // zero eigenvalues vanishes, i.e. at circle roots of the lowest nonzero
  // characteristic coefficient; elsewhere the kernel rank is constant.
  std::vector<LaurentPoly> c = char_poly_coeffs(m);
  int j0 = 0;
  while (c[j0].is_zero()) ++j0;
  if (j0 == n) {  // char poly = lambda^n: the matrix vanishes on the circle
    out.exact = Rat(0);
    return out;
  }
  const LaurentPoly& g = c[j0];
  if (g.involute() != g)
    throw std::logic_error("l2_signature: characteristic coefficient drift");

  std::vector<CircleRoot> jumps = circle_roots(u_form(g));
  // Unlike Seifert forms, a general Hermitian matrix need not degenerate at
  // t = +-1, so arc samples must stay strictly inside u in (-2, 2): shrink
  // any isolating interval that touches the boundary (its root is interior).
  for (CircleRoot& r : jumps) {
    while (r.u_iv.hi >= 2 || r.u_iv.lo <= -2)
      SturmSequence(r.min_poly).refine(r.u_iv, (r.u_iv.hi - r.u_iv.lo) / 4);
  }
  auto sampled_signature = [&](const Rat& u) {
    Inertia in = inertia_on_arc(m, u);
    if (in.zero != j0)
      throw std::logic_error("l2_signature: kernel rank drift on arc");
    return in.signature();
  };
  std::vector<int> values;
  values.reserve(jumps.size() + 1);
  if (jumps.empty()) {
    values.push_back(sampled_signature(Rat(0)));
  } else {
    std::size_t k = jumps.size();
    for (std::size_t a = 0; a <= k; ++a) {
      Rat u;
      if (a == 0)
        u = (jumps[0].u_iv.hi + 2) / 2;
      else if (a == k)
        u = (jumps[k - 1].u_iv.lo - 2) / 2;
      else
        u = (jumps[a].u_iv.hi + jumps[a - 1].u_iv.lo) / 2;
      values.push_back(sampled_signature(u));
    }
  }
  Int trillion;
  mpz_ui_pow_ui(trillion.get_mpz_t(), 10, 12);
  StepIntegral s =
      integrate_step_on_circle(jumps, values, Rat(1) / Rat(trillion));
  out.exact = s.exact;
  out.lo = s.lo;
  out.hi = s.hi;
  return out;
}

// ------------------------------------------------------ torus quadrature

ComplexInterval cmul_real(const ComplexInterval& z, const RatInterval& d) {
  return ComplexInterval(z.re * d, z.im * d);
}

bool is_exact_zero(const RatInterval& x) {
  return x.lo == 0 && x.hi == 0;
}

bool is_exact_zero(const ComplexInterval& z) {
  return is_exact_zero(z.re) && is_exact_zero(z.im);
}

/** Enclosure of one matrix entry over a box of phases (s_i = theta_i/2pi). */
ComplexInterval eval_entry(const MultiLaurent& p,
                           const std::vector<RatInterval>& box) {
  ComplexInterval out;
  for (const auto& [e, v] : p.terms()) {
    RatInterval phase;
    for (std::size_t i = 0; i < e.size(); ++i)
      phase = phase + box[i].scaled(Rat(e[i]));
    ComplexInterval z(cos2pi(phase), sin2pi(phase));
    out = out + z.scaled(v);
  }
  return out;
}

struct CellInertia {
  int pos = 0, neg = 0;
  int unresolved = 0;
};

/**
 * Certified inertia of the Hermitian matrix over one parameter box, by
 * interval LDL^* elimination: sign-certain real diagonal pivots first, then
 * certified hyperbolic pairs (|a_pq|^2 > d_p d_q contributes one +1 and one
 * -1); a remaining block that is exactly zero only adds kernel.  Whatever
 * cannot be certified is reported as unresolved.
 */
CellInertia cell_inertia(const HermitianLaurentMatrix& mh,
                         const std::vector<RatInterval>& box) {
  int n = mh.dim();
  std::vector<RatInterval> d(n);
  std::vector<std::vector<ComplexInterval>> a(
      n, std::vector<ComplexInterval>(n));
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      ComplexInterval e = eval_entry(mh.at(i, j), box);
      if (j == i)
        d[i] = e.re;  // the diagonal is exactly real on the torus
      else
        a[i][j] = e;
    }

  std::vector<char> alive(n, 1);
  int remaining = n;
  auto get = [&](int i, int j) {
    return i < j ? a[i][j] : a[j][i].conj();
  };
  auto put = [&](int i, int j, const ComplexInterval& v) {
    if (i < j)
      a[i][j] = v;
    else
      a[j][i] = v.conj();
  };

  CellInertia out;
  for (;;) {
    // Best sign-certain diagonal pivot (farthest from zero).
    int p = -1;
    Rat best(0);
    for (int i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      Rat dist;
      if (d[i].lo > 0)
        dist = d[i].lo;
      else if (d[i].hi < 0)
        dist = -d[i].hi;
      else
        continue;
      if (p < 0 || dist > best) {
        p = i;
        best = dist;
      }
    }
    if (p >= 0) {
      (d[p].lo > 0 ? out.pos : out.neg)++;
      alive[p] = 0;
      --remaining;
      for (int i = 0; i < n; ++i) {
        if (!alive[i]) continue;
        d[i] = d[i] - get(i, p).norm() / d[p];
        for (int j = i + 1; j < n; ++j) {
          if (!alive[j]) continue;
          a[i][j] = a[i][j] - (get(i, p) * get(p, j)).div_real(d[p]);
        }
      }
      continue;
    }

    // Certified hyperbolic pair: 2x2 pivot block with negative determinant.
    int q = -1;
    RatInterval det;
    for (int i = 0; i < n && p < 0; ++i) {
      if (!alive[i]) continue;
      for (int j = i + 1; j < n; ++j) {
        if (!alive[j]) continue;
        RatInterval dt = d[i] * d[j] - a[i][j].norm();
        if (dt.hi < 0) {
          p = i;
          q = j;
          det = dt;
          break;
        }
      }
    }
    if (p < 0) break;
    ++out.pos;
    ++out.neg;
    alive[p] = alive[q] = 0;
    remaining -= 2;
    ComplexInterval apq = get(p, q);
    for (int i = 0; i < n; ++i) {
      if (!alive[i]) continue;
      // Row i against the block inverse [[d_q, -a],[-conj(a), d_p]]/det.
      ComplexInterval left =
          cmul_real(get(i, p), d[q]) - get(i, q) * apq.conj();
      ComplexInterval right =
          cmul_real(get(i, q), d[p]) - get(i, p) * apq;
      for (int j = i; j < n; ++j) {
        if (!alive[j]) continue;
        ComplexInterval upd =
            (left * get(p, j) + right * get(q, j)).div_real(det);
        if (j == i)
          d[i] = d[i] - upd.re;  // true value is real
        else
          put(i, j, get(i, j) - upd);
      }
    }
  }

  if (remaining > 0) {
    bool zero_rest = true;
    for (int i = 0; i < n && zero_rest; ++i) {
      if (!alive[i]) continue;
      if (!is_exact_zero(d[i])) zero_rest = false;
      for (int j = i + 1; j < n && zero_rest; ++j)
        if (alive[j] && !is_exact_zero(a[i][j])) zero_rest = false;
    }
    if (!zero_rest) out.unresolved = remaining;
  }
  return out;
}

RatInterval quad_cell(const HermitianLaurentMatrix& m,
                      const std::vector<RatInterval>& box, int depth_left,
                      const Rat& vol) {
  CellInertia in = cell_inertia(m, box);
  int base = in.pos - in.neg;
  if (in.unresolved == 0) return RatInterval::point(Rat(base) * vol);
  if (depth_left == 0)
    return RatInterval(Rat(base - in.unresolved) * vol,
                       Rat(base + in.unresolved) * vol);
  int ax = 0;
  for (std::size_t i = 1; i < box.size(); ++i)
    if (box[i].width() > box[ax].width()) ax = static_cast<int>(i);
  Rat mid = (box[ax].lo + box[ax].hi) / 2;
  std::vector<RatInterval> half = box;
  half[ax] = RatInterval(box[ax].lo, mid);
  RatInterval lo_part = quad_cell(m, half, depth_left - 1, vol / 2);
  half[ax] = RatInterval(mid, box[ax].hi);
  RatInterval hi_part = quad_cell(m, half, depth_left - 1, vol / 2);
  return lo_part + hi_part;
}

constexpr int kDefaultQuadDepth = 12;

}  // namespace

RatInterval l2_signature_quadrature(const HermitianLaurentMatrix& m,
                                    int max_depth) {
  if (max_depth < 0)
    throw std::invalid_argument("l2_signature_quadrature: negative depth");
  std::vector<RatInterval> box(m.nvars(), RatInterval(Rat(0), Rat(1)));
  return quad_cell(m, box, max_depth, Rat(1));
}

L2Signature l2_signature(const HermitianLaurentMatrix& m) {
  if (m.nvars() == 1) return l2sig_one_var(m);
  RatInterval iv = l2_signature_quadrature(m, kDefaultQuadDepth);
  L2Signature out;
  out.lo = iv.lo;
  out.hi = iv.hi;
  if (iv.is_point()) out.exact = iv.lo;
  return out;
}

bool rank_bound_check(const HermitianLaurentMatrix& m, int bound) {
  if (bound < 0)
    throw std::invalid_argument("rank_bound_check: bound must be >= 0");
  L2Signature s = l2_signature(m);
  Rat mag = std::max(rat_abs(s.lo), rat_abs(s.hi));
  return mag <= Rat(std::min(bound, m.dim()));
}

}  // namespace concord
