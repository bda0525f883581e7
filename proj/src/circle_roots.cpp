/*
 * circle_roots.cpp -- unit-circle root isolation and exact recognition of
 * rational theta/pi via cyclotomic divisibility.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#include "concord/circle_roots.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "concord/qfactor.hpp"

namespace concord {

QPoly fold_to_circle(const QPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("fold_to_circle: zero input");
  int d = f.degree();
  // t^d * f(t + 1/t) = sum_k a_k * (t^2 + 1)^k * t^(d - k).
  QPoly tsq1({Rat(1), Rat(0), Rat(1)});
  QPoly pw = QPoly::constant(Rat(1));
  QPoly out;
  for (int k = 0; k <= d; ++k) {
    if (f.coeff(k) != 0) out = out + pw * QPoly::monomial(d - k, f.coeff(k));
    if (k < d) pw = pw * tsq1;
  }
  return out;
}

namespace {

// Euler phi for 1..limit.
std::vector<int> phi_table(int limit) {
  std::vector<int> phi(limit + 1);
  for (int i = 0; i <= limit; ++i) phi[i] = i;
  for (int p = 2; p <= limit; ++p) {
    if (phi[p] != p) continue;  // not prime
    for (int m = p; m <= limit; m += p) phi[m] -= phi[m] / p;
  }
  return phi;
}

constexpr int kOrderSieveLimit = 8192;

/**
 * If every root of the irreducible monic f (in u) is of the form
 * 2*cos(pi * lambda) with lambda rational, return the candidate lambdas
 * (0, 1) for the matching root-of-unity order; otherwise nullopt.
 */
std::optional<std::vector<Rat>> root_of_unity_lambdas(const QPoly& f) {
  int d = f.degree();
  if (d < 1) return std::nullopt;
  QPoly folded = fold_to_circle(f.monic());
  static const std::vector<int> phi = phi_table(kOrderSieveLimit);
  for (int order = 3; order <= kOrderSieveLimit; ++order) {
    if (phi[order] != 2 * d) continue;
    QPoly tn = QPoly::monomial(order, Rat(1)) - QPoly::constant(Rat(1));
    if (!QPoly::divides(folded, tn)) continue;
    // The folded polynomial has degree phi(order) and divides t^order - 1,
    // so it is the order-th cyclotomic polynomial: the roots of f are
    // exactly 2*cos(2*pi*j/order) over j coprime to order, and on the upper
    // half circle theta/pi = 2j/order with 2j < order.
    std::vector<Rat> lambdas;
    for (int j = 1; 2 * j < order; ++j) {
      if (std::gcd(j, order) != 1) continue;
      Rat lam(2 * j, order);
      lam.canonicalize();
      lambdas.push_back(lam);
    }
    return lambdas;
  }
  return std::nullopt;
}

/**
 * Pick the unique lambda whose u-value 2*cos(pi*lambda) lies in the
 * isolating interval, refining the interval as needed to break ties.
 */
Rat match_lambda(const SturmSequence& sturm, RootInterval& iv,
                 const std::vector<Rat>& lambdas) {
  std::vector<RatInterval> enclosures;
  enclosures.reserve(lambdas.size());
  for (const Rat& lam : lambdas)
    enclosures.push_back(cos2pi_point(lam / 2).scaled(Rat(2)));
  for (;;) {
    int hits = 0;
    std::size_t hit = 0;
    for (std::size_t i = 0; i < enclosures.size(); ++i) {
      if (enclosures[i].hi >= iv.lo && enclosures[i].lo <= iv.hi) {
        ++hits;
        hit = i;
      }
    }
    if (hits == 1) return lambdas[hit];
    if (hits == 0)
      throw std::logic_error("circle_roots: root-of-unity match lost");
    sturm.refine(iv, (iv.hi - iv.lo) / 4);
  }
}

}  // namespace

std::vector<CircleRoot> circle_roots(const QPoly& poly_in_u) {
  if (poly_in_u.is_zero())
    throw std::invalid_argument("circle_roots: zero polynomial");
  std::vector<CircleRoot> roots;
  if (poly_in_u.degree() == 0) return roots;

  QFactorization fac = factor_poly(poly_in_u);
  for (const auto& [factor, mult] : fac.factors) {
    (void)mult;
    SturmSequence sturm(factor);
    std::vector<RootInterval> ivs = sturm.isolate(Rat(-2), Rat(2));
    if (ivs.empty()) continue;
    std::optional<std::vector<Rat>> lambdas = root_of_unity_lambdas(factor);
    for (RootInterval& iv : ivs) {
      CircleRoot r;
      r.min_poly = factor;
      if (lambdas) r.theta_over_pi = match_lambda(sturm, iv, *lambdas);
      r.u_iv = iv;
      roots.push_back(std::move(r));
    }
  }

  // Disjoin isolating intervals across factors (within a factor they already
  // are), then order by decreasing u, i.e. increasing theta.
  bool again = true;
  while (again) {
    again = false;
    for (std::size_t i = 0; i < roots.size(); ++i) {
      for (std::size_t j = i + 1; j < roots.size(); ++j) {
        RootInterval& a = roots[i].u_iv;
        RootInterval& b = roots[j].u_iv;
        if (a.hi >= b.lo && b.hi >= a.lo) {
          SturmSequence(roots[i].min_poly).refine(a, (a.hi - a.lo) / 4);
          SturmSequence(roots[j].min_poly).refine(b, (b.hi - b.lo) / 4);
          again = true;
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end(),
            [](const CircleRoot& a, const CircleRoot& b) {
              return a.u_iv.lo > b.u_iv.lo;
            });
  return roots;
}

RatInterval theta_over_pi_enclosure(const CircleRoot& root,
                                    const Rat& max_width) {
  if (max_width <= 0)
    throw std::invalid_argument("theta_over_pi_enclosure: width must be > 0");
  if (root.theta_over_pi) return RatInterval::point(*root.theta_over_pi);
  SturmSequence sturm(root.min_poly);
  RootInterval iv = root.u_iv;
  Rat target = (iv.hi - iv.lo) / 2;
  for (;;) {
    RatInterval enc =
        acos_over_pi(RatInterval(iv.lo / 2, iv.hi / 2));
    if (enc.width() <= max_width) return enc;
    sturm.refine(iv, target);
    target /= 2;
  }
}

StepIntegral integrate_step_on_circle(const std::vector<CircleRoot>& jumps,
                                      const std::vector<int>& values,
                                      const Rat& width_budget) {
  if (values.size() != jumps.size() + 1)
    throw std::invalid_argument(
        "integrate_step_on_circle: need one value per arc");
  if (width_budget <= 0)
    throw std::invalid_argument("integrate_step_on_circle: width budget");

  // Drop jumps across which the value does not change; they carry no area.
  std::vector<CircleRoot> cuts;
  std::vector<int> vals{values[0]};
  for (std::size_t j = 0; j < jumps.size(); ++j) {
    if (values[j + 1] == vals.back()) continue;
    cuts.push_back(jumps[j]);
    vals.push_back(values[j + 1]);
  }

  StepIntegral out;
  bool all_exact = true;
  for (const CircleRoot& c : cuts)
    if (!c.theta_over_pi) all_exact = false;

  if (all_exact) {
    // sum_k v_k (lambda_{k+1} - lambda_k) with lambda_0 = 0, lambda_last = 1
    // and rational interior boundaries.
    Rat acc(0), prev(0);
    for (std::size_t k = 0; k < cuts.size(); ++k) {
      Rat lam = *cuts[k].theta_over_pi;
      acc += Rat(vals[k]) * (lam - prev);
      prev = lam;
    }
    acc += Rat(vals.back()) * (1 - prev);
    out.exact = acc;
    out.lo = acc;
    out.hi = acc;
    return out;
  }

  // Telescoped form: v_last + sum_j (v_{j-1} - v_j) * lambda_j, so the
  // enclosure width is sum |v_{j-1} - v_j| * width(lambda_j).
  Rat jump_weight(0);
  for (std::size_t j = 0; j < cuts.size(); ++j)
    jump_weight += rat_abs(Rat(vals[j] - vals[j + 1]));
  Rat per_jump = width_budget / jump_weight;
  RatInterval total = RatInterval::point(Rat(vals.back()));
  for (std::size_t j = 0; j < cuts.size(); ++j) {
    RatInterval lam = theta_over_pi_enclosure(cuts[j], per_jump);
    total = total + lam.scaled(Rat(vals[j] - vals[j + 1]));
  }
  out.lo = total.lo;
  out.hi = total.hi;
  return out;
}

}  // namespace concord
