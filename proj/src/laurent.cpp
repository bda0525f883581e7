/*
 * laurent.cpp -- sparse exact Laurent polynomial arithmetic.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#include "concord/laurent.hpp"

#include <algorithm>
#include <stdexcept>

#include "concord/qfactor.hpp"

namespace concord {

void LaurentPoly::set(int exp, const Rat& v) {
  if (v == 0)
    c_.erase(exp);
  else
    c_[exp] = v;
}

LaurentPoly LaurentPoly::constant(const Rat& c) {
  LaurentPoly p;
  p.set(0, c);
  return p;
}

LaurentPoly LaurentPoly::monomial(int exp, const Rat& c) {
  LaurentPoly p;
  p.set(exp, c);
  return p;
}

LaurentPoly LaurentPoly::t(int exp) { return monomial(exp, Rat(1)); }

LaurentPoly LaurentPoly::from_qpoly(const QPoly& f, int shift) {
  LaurentPoly p;
  for (int i = 0; i <= f.degree(); ++i) p.set(i + shift, f.coeff(i));
  return p;
}

int LaurentPoly::min_exp() const {
  if (c_.empty()) throw std::domain_error("LaurentPoly: zero has no exponents");
  return c_.begin()->first;
}

int LaurentPoly::max_exp() const {
  if (c_.empty()) throw std::domain_error("LaurentPoly: zero has no exponents");
  return c_.rbegin()->first;
}

Rat LaurentPoly::coeff(int exp) const {
  auto it = c_.find(exp);
  return it == c_.end() ? Rat(0) : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p(*this);
  for (auto& [e, v] : p.c_) v = -v;
  return p;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly p(*this);
  for (const auto& [e, v] : o.c_) p.set(e, p.coeff(e) + v);
  return p;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly p;
  for (const auto& [e1, v1] : c_)
    for (const auto& [e2, v2] : o.c_) p.set(e1 + e2, p.coeff(e1 + e2) + v1 * v2);
  return p;
}

LaurentPoly LaurentPoly::operator*(const Rat& c) const {
  LaurentPoly p;
  if (c == 0) return p;
  p = *this;
  for (auto& [e, v] : p.c_) v *= c;
  return p;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p;
  for (const auto& [e, v] : c_) p.c_[e + k] = v;
  return p;
}

LaurentPoly LaurentPoly::involute() const {
  LaurentPoly p;
  for (const auto& [e, v] : c_) p.c_[-e] = v;
  return p;
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly p;
  for (const auto& [e, v] : c_)
    if (e != 0) p.set(e - 1, v * Rat(e));
  return p;
}

Rat LaurentPoly::eval(const Rat& x) const {
  if (is_zero()) return Rat(0);
  if (x == 0) {
    if (min_exp() < 0)
      throw std::domain_error(
          "LaurentPoly::eval: 0 is a pole (negative exponents present)");
    return coeff(0);
  }
  // Horner on the shifted dense form.
  int shift;
  QPoly f = to_qpoly(shift);
  Rat value = f.eval(x);
  Rat xs(1);
  int a = shift >= 0 ? shift : -shift;
  for (int i = 0; i < a; ++i) xs *= x;
  return shift >= 0 ? Rat(value * xs) : Rat(value / xs);
}

bool LaurentPoly::is_unit() const { return c_.size() == 1; }

QPoly LaurentPoly::to_qpoly(int& shift) const {
  if (is_zero()) {
    shift = 0;
    return QPoly();
  }
  shift = min_exp();
  std::vector<Rat> v(max_exp() - shift + 1, Rat(0));
  for (const auto& [e, c] : c_) v[e - shift] = c;
  return QPoly(std::move(v));
}

QPoly LaurentPoly::to_qpoly() const {
  if (!is_zero() && min_exp() < 0)
    throw std::domain_error("LaurentPoly::to_qpoly: negative exponents");
  std::vector<Rat> v;
  if (!is_zero()) {
    v.assign(max_exp() + 1, Rat(0));
    for (const auto& [e, c] : c_) v[e] = c;
  }
  return QPoly(std::move(v));
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    int e = it->first;
    Rat c = it->second;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    Rat a = rat_abs(c);
    if (a != 1 || e == 0) out += rat_to_string(a);
    if (e != 0) {
      if (a != 1) out += "*";
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

LaurentPoly canonical_unit_rep(const LaurentPoly& p) {
  if (p.is_zero())
    throw std::domain_error("canonical_unit_rep: zero has no unit class");
  LaurentPoly q = p.shifted(-p.min_exp());
  if (q.coeff(0) < 0) q = -q;
  return q;
}

bool unit_equal(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  return canonical_unit_rep(a) == canonical_unit_rep(b);
}

LaurentPoly canonical_primitive_rep(const LaurentPoly& p) {
  if (p.is_zero())
    throw std::domain_error("canonical_primitive_rep: zero input");
  LaurentPoly q = p.shifted(-p.min_exp());
  // Scale by the lcm of denominators over the gcd of numerators so the
  // coefficients become coprime integers.
  Int den_lcm(1), num_gcd(0);
  for (const auto& [e, c] : q.coeffs()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
            c.get_den().get_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(),
            c.get_num().get_mpz_t());
  }
  Rat scale(den_lcm, num_gcd);
  scale.canonicalize();
  q = q * scale;
  if (q.coeff(0) < 0) q = -q;
  return q;
}

bool is_symmetric(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("is_symmetric: zero input");
  return unit_equal(p, p.involute());
}

LaurentPoly laurent_gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() && b.is_zero())
    throw std::domain_error("laurent_gcd: gcd(0, 0) is undefined");
  if (a.is_zero()) return canonical_unit_rep(b);
  if (b.is_zero()) return canonical_unit_rep(a);
  int sa, sb;
  QPoly g = QPoly::gcd(a.to_qpoly(sa), b.to_qpoly(sb));
  // After shifting, both images have nonzero constant term, so t does not
  // divide the gcd and no further unit stripping is needed.
  return canonical_unit_rep(LaurentPoly::from_qpoly(g));
}

bool laurent_is_squarefree(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("laurent_is_squarefree: zero input");
  if (p.is_unit()) return true;
  return laurent_gcd(p, p.derivative()).is_unit();
}

std::vector<std::pair<LaurentPoly, int>> laurent_factor(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("laurent_factor: zero input");
  std::vector<std::pair<LaurentPoly, int>> out;
  if (p.is_unit()) return out;
  LaurentPoly q = canonical_unit_rep(p);
  QFactorization fac = factor_poly(q.to_qpoly());
  for (const auto& [f, mult] : fac.factors) {
    if (f.degree() == 0) continue;
    // x cannot divide q (nonzero constant term), so every factor here is a
    // genuine prime of the Laurent ring.
    out.emplace_back(canonical_unit_rep(LaurentPoly::from_qpoly(f)), mult);
  }
  return out;
}

int laurent_multiplicity(const LaurentPoly& p, const LaurentPoly& f) {
  if (p.is_zero() || f.is_zero() || f.is_unit())
    throw std::invalid_argument("laurent_multiplicity: bad arguments");
  QPoly fp = canonical_unit_rep(f).to_qpoly();
  QPoly rest = canonical_unit_rep(p).to_qpoly();
  int mult = 0;
  QPoly quot, rem;
  while (true) {
    QPoly::divrem(rest, fp, quot, rem);
    if (!rem.is_zero()) break;
    rest = quot;
    ++mult;
  }
  return mult;
}

QPoly u_form(const LaurentPoly& p) {
  if (p.is_zero()) throw std::domain_error("u_form: zero input");
  int span = p.min_exp() + p.max_exp();
  if (span % 2 != 0)
    throw std::domain_error("u_form: no balanced symmetric representative");
  LaurentPoly g = p.shifted(-span / 2);
  if (g.involute() != g)
    throw std::domain_error("u_form: polynomial is not symmetric");
  int d = g.max_exp();
  // t^k + t^{-k} = P_k(u) with P_0 = 2, P_1 = u, P_{k+1} = u P_k - P_{k-1}.
  QPoly u = QPoly::monomial(1, Rat(1));
  QPoly pk_prev = QPoly::constant(Rat(2));
  QPoly pk = u;
  QPoly result = QPoly::constant(g.coeff(0));
  for (int k = 1; k <= d; ++k) {
    if (k > 1) {
      QPoly next = u * pk - pk_prev;
      pk_prev = pk;
      pk = next;
    }
    result = result + pk * g.coeff(k);
  }
  return result;
}

LaurentPoly laurent_det(const std::vector<std::vector<LaurentPoly>>& m) {
  size_t n = m.size();
  if (n == 0) return LaurentPoly::constant(Rat(1));
  for (const auto& row : m)
    if (row.size() != n)
      throw std::invalid_argument("laurent_det: matrix not square");

  // Pull a power of t out of each row so all entries become ordinary
  // polynomials, then compute the polynomial determinant by evaluation at
  // degree+1 rational points and Lagrange interpolation.
  int total_shift = 0;
  int degree_bound = 0;
  std::vector<std::vector<QPoly>> poly(n, std::vector<QPoly>(n));
  for (size_t i = 0; i < n; ++i) {
    int row_min = 0;
    bool seen = false;
    for (const auto& e : m[i])
      if (!e.is_zero()) {
        row_min = seen ? std::min(row_min, e.min_exp()) : e.min_exp();
        seen = true;
      }
    if (!seen) return LaurentPoly();  // a zero row
    total_shift += row_min;
    int row_deg = 0;
    for (size_t j = 0; j < n; ++j) {
      LaurentPoly shifted = m[i][j].shifted(-row_min);
      poly[i][j] = shifted.to_qpoly();
      row_deg = std::max(row_deg, poly[i][j].degree());
    }
    degree_bound += row_deg;
  }

  std::vector<Rat> xs, ys;
  for (int k = 0; k <= degree_bound; ++k) {
    Rat x(k);
    // Evaluate and run fraction-free-enough Gaussian elimination over Q.
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
    for (size_t i = 0; i < n; ++i)
      for (size_t j = 0; j < n; ++j) a[i][j] = poly[i][j].eval(x);
    Rat det(1);
    bool zero = false;
    for (size_t col = 0; col < n && !zero; ++col) {
      size_t piv = col;
      while (piv < n && a[piv][col] == 0) ++piv;
      if (piv == n) {
        zero = true;
        break;
      }
      if (piv != col) {
        std::swap(a[piv], a[col]);
        det = -det;
      }
      det *= a[col][col];
      for (size_t r = col + 1; r < n; ++r) {
        if (a[r][col] == 0) continue;
        Rat f = a[r][col] / a[col][col];
        for (size_t cc = col; cc < n; ++cc) a[r][cc] -= f * a[col][cc];
      }
    }
    xs.push_back(x);
    ys.push_back(zero ? Rat(0) : det);
  }

  // Lagrange interpolation.
  QPoly result;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (ys[i] == 0) continue;
    QPoly term = QPoly::constant(Rat(1));
    Rat denom(1);
    for (size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      term = term * QPoly({-xs[j], Rat(1)});
      denom *= xs[i] - xs[j];
    }
    result = result + term * (ys[i] / denom);
  }
  return LaurentPoly::from_qpoly(result, total_shift);
}

}  // namespace concord
