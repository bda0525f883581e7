/*
 * circle_roots.hpp -- locating the unit-circle parameters where a symmetric
 * Laurent polynomial vanishes.  Points on the upper half circle e^{i*theta},
 * theta in (0, pi), are tracked through the real coordinate u = 2*cos(theta)
 * in (-2, 2): each vanishing locus is isolated exactly, and when theta/pi is
 * rational (the root is a root of unity) that rational is recognized exactly
 * through cyclotomic divisibility.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#pragma once

#include <optional>
#include <vector>

#include "concord/interval_real.hpp"
#include "concord/qpoly.hpp"

namespace concord {

/**
 * One root of a polynomial in u = 2*cos(theta) inside (-2, 2), i.e. one
 * point e^{i*theta} on the open upper half circle.
 */
struct CircleRoot {
  /** Monic irreducible polynomial in u having this root. */
  QPoly min_poly;
  /** Isolating interval for u among the roots reported together with it. */
  RootInterval u_iv;
  /** Exact theta/pi in (0, 1) when e^{i*theta} is a root of unity. */
  std::optional<Rat> theta_over_pi;
};

/**
 * All distinct roots of a nonzero polynomial in u that lie in the open
 * interval (-2, 2), sorted by increasing theta (decreasing u), with pairwise
 * disjoint isolating intervals.  Throws std::invalid_argument on the zero
 * polynomial.
 */
std::vector<CircleRoot> circle_roots(const QPoly& poly_in_u);

/**
 * Certified enclosure of theta/pi for a circle root, of width at most
 * max_width (exact roots give point intervals).  max_width must be positive.
 */
RatInterval theta_over_pi_enclosure(const CircleRoot& root,
                                    const Rat& max_width);

/**
 * F(t) = t^deg(f) * f(t + 1/t): the polynomial whose roots are the two
 * unit-circle preimages of each root u of f under u = t + 1/t.
 */
QPoly fold_to_circle(const QPoly& f);

/**
 * Integral over theta/pi in [0, 1] of an integer step function: values[k]
 * is taken on the arc between jumps[k-1] and jumps[k] (increasing theta),
 * so values.size() == jumps.size() + 1.  The result is exact when every
 * value-changing jump has rational theta/pi; otherwise an enclosure of
 * width at most width_budget (> 0).
 */
struct StepIntegral {
  std::optional<Rat> exact;
  Rat lo, hi;
};
StepIntegral integrate_step_on_circle(const std::vector<CircleRoot>& jumps,
                                      const std::vector<int>& values,
                                      const Rat& width_budget);

}  // namespace concord
