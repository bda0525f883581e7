/*
 * rational.cpp -- implementation of rational scalar helpers.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#include "concord/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace concord {

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rational: empty string");
  // Validate shape before handing to GMP: optional sign, digits, optional
  // "/digits".  GMP itself accepts whitespace and other bases; we do not.
  auto check_digits = [](const std::string& s, size_t from, size_t to) {
    if (from >= to) return false;
    for (size_t i = from; i < to; ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  size_t slash = text.find('/');
  size_t start = (text[0] == '-' || text[0] == '+') ? 1 : 0;
  bool ok;
  if (slash == std::string::npos) {
    ok = check_digits(text, start, text.size());
  } else {
    ok = check_digits(text, start, slash) &&
         check_digits(text, slash + 1, text.size());
  }
  if (!ok)
    throw std::invalid_argument("parse_rational: malformed rational '" + text +
                                "'");
  Rat q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("parse_rational: malformed rational '" + text +
                                "'");
  if (q.get_den() == 0)
    throw std::invalid_argument("parse_rational: zero denominator in '" +
                                text + "'");
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string int_to_string(const Int& z) { return z.get_str(); }

std::optional<Int> exact_isqrt(const Int& z) {
  if (z < 0) return std::nullopt;
  Int r = sqrt(z);
  if (r * r == z) return r;
  return std::nullopt;
}

std::optional<Rat> exact_sqrt(const Rat& q) {
  if (q < 0) return std::nullopt;
  auto n = exact_isqrt(q.get_num());
  if (!n) return std::nullopt;
  auto d = exact_isqrt(q.get_den());
  if (!d) return std::nullopt;
  Rat r(*n, *d);
  r.canonicalize();
  return r;
}

Int int_gcd(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

}  // namespace concord
