/*
 * qpoly.cpp -- dense rational polynomial arithmetic and Sturm-based real
 * root isolation.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#include "concord/qpoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace concord {

QPoly::QPoly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

QPoly QPoly::constant(const Rat& c) {
  if (c == 0) return QPoly();
  return QPoly(std::vector<Rat>{c});
}

QPoly QPoly::monomial(int deg, const Rat& c) {
  if (deg < 0) throw std::invalid_argument("QPoly::monomial: negative degree");
  if (c == 0) return QPoly();
  std::vector<Rat> v(deg + 1, Rat(0));
  v[deg] = c;
  return QPoly(std::move(v));
}

void QPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rat QPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[i];
}

const Rat& QPoly::lc() const {
  if (coeffs_.empty())
    throw std::domain_error("QPoly::lc: zero polynomial has no leading term");
  return coeffs_.back();
}

QPoly QPoly::operator-() const {
  QPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

QPoly QPoly::operator+(const QPoly& o) const {
  std::vector<Rat> v(std::max(coeffs_.size(), o.coeffs_.size()), Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) v[i] += coeffs_[i];
  for (size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
  return QPoly(std::move(v));
}

QPoly QPoly::operator-(const QPoly& o) const { return *this + (-o); }

QPoly QPoly::operator*(const QPoly& o) const {
  if (is_zero() || o.is_zero()) return QPoly();
  std::vector<Rat> v(coeffs_.size() + o.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i)
    for (size_t j = 0; j < o.coeffs_.size(); ++j)
      v[i + j] += coeffs_[i] * o.coeffs_[j];
  return QPoly(std::move(v));
}

QPoly QPoly::operator*(const Rat& c) const {
  if (c == 0) return QPoly();
  QPoly r(*this);
  for (auto& a : r.coeffs_) a *= c;
  return r;
}

QPoly QPoly::derivative() const {
  if (coeffs_.size() <= 1) return QPoly();
  std::vector<Rat> v(coeffs_.size() - 1);
  for (size_t i = 1; i < coeffs_.size(); ++i)
    v[i - 1] = coeffs_[i] * Rat(static_cast<long>(i));
  return QPoly(std::move(v));
}

Rat QPoly::eval(const Rat& x) const {
  Rat acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
    acc = acc * x + *it;
  return acc;
}

QPoly QPoly::monic() const {
  if (is_zero()) return QPoly();
  return *this * Rat(1 / lc());
}

QPoly QPoly::scale_arg(const Rat& c) const {
  QPoly r(*this);
  Rat p(1);
  for (size_t i = 0; i < r.coeffs_.size(); ++i) {
    r.coeffs_[i] *= p;
    p *= c;
  }
  r.trim();
  return r;
}

QPoly QPoly::negate_arg() const {
  QPoly r(*this);
  for (size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

void QPoly::divrem(const QPoly& a, const QPoly& b, QPoly& q, QPoly& r) {
  if (b.is_zero()) throw std::domain_error("QPoly::divrem: division by zero");
  r = a;
  q = QPoly();
  int db = b.degree();
  if (a.degree() < db) return;
  std::vector<Rat> qc(a.degree() - db + 1, Rat(0));
  while (!r.is_zero() && r.degree() >= db) {
    int k = r.degree() - db;
    Rat c = r.lc() / b.lc();
    qc[k] = c;
    // r -= c * x^k * b, done in place to avoid a temporary product.
    for (int i = 0; i <= db; ++i) r.coeffs_[k + i] -= c * b.coeffs_[i];
    r.trim();
  }
  q = QPoly(std::move(qc));
}

QPoly QPoly::gcd(const QPoly& a, const QPoly& b) {
  QPoly x = a, y = b;
  while (!y.is_zero()) {
    QPoly q, r;
    divrem(x, y, q, r);
    x = y;
    y = r;
  }
  return x.monic();
}

bool QPoly::divides(const QPoly& b, const QPoly& a) {
  if (b.is_zero()) return a.is_zero();
  QPoly q, r;
  divrem(a, b, q, r);
  return r.is_zero();
}

QPoly QPoly::squarefree_part() const {
  if (is_zero() || degree() == 0) return monic();
  QPoly g = gcd(*this, derivative());
  QPoly q, r;
  divrem(*this, g, q, r);
  return q.monic();
}

QPoly poly_egcd(const QPoly& a, const QPoly& b, QPoly& x, QPoly& y) {
  // Iterative extended Euclid: maintain r = xr*a + yr*b.
  QPoly r0 = a, r1 = b;
  QPoly x0 = QPoly::constant(Rat(1)), x1;
  QPoly y0, y1 = QPoly::constant(Rat(1));
  while (!r1.is_zero()) {
    QPoly q, r;
    QPoly::divrem(r0, r1, q, r);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly xn = x0 - q * x1;
    QPoly yn = y0 - q * y1;
    x0 = std::move(x1);
    x1 = std::move(xn);
    y0 = std::move(y1);
    y1 = std::move(yn);
  }
  if (r0.is_zero()) {
    x = QPoly();
    y = QPoly();
    return QPoly();
  }
  Rat inv_lc = Rat(1) / r0.lc();
  x = x0 * inv_lc;
  y = y0 * inv_lc;
  return r0 * inv_lc;
}

QPoly poly_inverse_mod(const QPoly& a, const QPoly& m) {
  if (m.degree() < 1)
    throw std::domain_error("poly_inverse_mod: modulus must have degree >= 1");
  QPoly x, y;
  QPoly g = poly_egcd(a, m, x, y);
  if (g.degree() != 0)
    throw std::domain_error("poly_inverse_mod: not invertible");
  QPoly q, r;
  QPoly::divrem(x, m, q, r);
  return r;
}

std::string QPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    Rat c = coeffs_[i];
    if (c == 0) continue;
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += (c < 0) ? " - " : " + ";
    }
    Rat a = rat_abs(c);
    if (a != 1 || i == 0) out += rat_to_string(a);
    if (i > 0) {
      if (a != 1) out += "*";
      out += var;
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

SturmSequence::SturmSequence(const QPoly& f) : f_(f.squarefree_part()) {
  seq_.push_back(f_);
  if (f_.degree() >= 1) {
    seq_.push_back(f_.derivative());
    while (true) {
      const QPoly& a = seq_[seq_.size() - 2];
      const QPoly& b = seq_.back();
      QPoly q, r;
      QPoly::divrem(a, b, q, r);
      if (r.is_zero()) break;
      seq_.push_back(-r);
    }
  }
}

int SturmSequence::sign_changes_at(const Rat& x) const {
  int changes = 0, prev = 0;
  for (const auto& p : seq_) {
    int s = sign_of(p.eval(x));
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

int SturmSequence::count_roots(const Rat& lo, const Rat& hi) const {
  if (lo > hi)
    throw std::invalid_argument("SturmSequence::count_roots: empty interval");
  if (f_.degree() <= 0) return 0;
  return sign_changes_at(lo) - sign_changes_at(hi);
}

std::vector<RootInterval> SturmSequence::isolate(const Rat& lo,
                                                 const Rat& hi) const {
  std::vector<RootInterval> out;
  if (f_.degree() <= 0 || lo >= hi) return out;
  // Endpoints that happen to be roots are excluded by deflating them and
  // isolating the quotient instead.
  if (f_.eval(lo) == 0 || f_.eval(hi) == 0) {
    QPoly g = f_;
    for (const Rat& e : {lo, hi}) {
      if (g.eval(e) == 0) {
        QPoly q, r;
        QPoly::divrem(g, QPoly({-e, Rat(1)}), q, r);
        g = q;
      }
    }
    return SturmSequence(g).isolate(lo, hi);
  }

  struct Piece {
    Rat a, b;
    int count;
  };
  std::vector<Piece> work{{lo, hi, count_roots(lo, hi)}};
  while (!work.empty()) {
    Piece p = work.back();
    work.pop_back();
    if (p.count == 0) continue;
    if (p.count == 1) {
      out.push_back({p.a, p.b});
      continue;
    }
    Rat mid = (p.a + p.b) / 2;
    if (f_.eval(mid) == 0) {
      // The midpoint is itself a root: carve out a tiny isolating interval
      // around it whose endpoints are not roots, then recurse on both sides.
      Rat eps = (p.b - p.a) / 4;
      while (f_.eval(mid - eps) == 0 || f_.eval(mid + eps) == 0 ||
             count_roots(mid - eps, mid + eps) != 1)
        eps /= 2;
      out.push_back({mid - eps, mid + eps});
      Rat a2 = mid - eps, b2 = mid + eps;
      int left = count_roots(p.a, a2);
      if (left > 0) work.push_back({p.a, a2, left});
      int right = p.count - 1 - left;
      if (right > 0) work.push_back({b2, p.b, right});
    } else {
      int left = count_roots(p.a, mid);
      if (left > 0) work.push_back({p.a, mid, left});
      if (p.count - left > 0) work.push_back({mid, p.b, p.count - left});
    }
  }
  std::sort(out.begin(), out.end(),
            [](const RootInterval& x, const RootInterval& y) {
              return x.lo < y.lo;
            });
  return out;
}

void SturmSequence::refine(RootInterval& iv, const Rat& max_width) const {
  while (iv.hi - iv.lo > max_width) {
    Rat mid = (iv.lo + iv.hi) / 2;
    if (f_.eval(mid) == 0) {
      Rat eps = std::min(Rat((iv.hi - iv.lo) / 4), Rat(max_width / 2));
      while (f_.eval(mid - eps) == 0 || f_.eval(mid + eps) == 0) eps /= 2;
      iv.lo = mid - eps;
      iv.hi = mid + eps;
      return;
    }
    if (count_roots(iv.lo, mid) == 1)
      iv.hi = mid;
    else
      iv.lo = mid;
  }
}

}  // namespace concord
