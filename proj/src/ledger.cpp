/*
 * ledger.cpp -- extended-real interval rules and replayable certificates
 * for rho-invariants.
 *
 * Copyright (c) 2026 the concord developers.
 * SPDX-License-Identifier: MIT
 */
#include "concord/ledger.hpp"

#include <sstream>
#include <stdexcept>

#include "concord/alexmodule.hpp"

namespace concord {

// ----------------------------------------------------------------- ExtReal

ExtReal ExtReal::neg_inf() {
  ExtReal e;
  e.kind_ = kNegInf;
  return e;
}

ExtReal ExtReal::pos_inf() {
  ExtReal e;
  e.kind_ = kPosInf;
  return e;
}

ExtReal ExtReal::finite(Rat v) {
  ExtReal e;
  e.kind_ = kFinite;
  e.v_ = std::move(v);
  return e;
}

const Rat& ExtReal::value() const {
  if (kind_ != kFinite) throw std::logic_error("ExtReal: not finite");
  return v_;
}

ExtReal ExtReal::operator-() const {
  if (kind_ == kNegInf) return pos_inf();
  if (kind_ == kPosInf) return neg_inf();
  return finite(-v_);
}

ExtReal ExtReal::operator+(const ExtReal& o) const {
  if (kind_ == kFinite && o.kind_ == kFinite) return finite(v_ + o.v_);
  if (kind_ == kFinite) return o;
  if (o.kind_ == kFinite) return *this;
  if (kind_ != o.kind_) throw std::logic_error("ExtReal: indeterminate sum");
  return *this;
}

ExtReal ExtReal::operator-(const ExtReal& o) const { return *this + (-o); }

ExtReal ExtReal::operator/(int n) const {
  if (n <= 0) throw std::invalid_argument("ExtReal: divisor must be positive");
  if (kind_ != kFinite) return *this;
  return finite(v_ / n);
}

bool ExtReal::operator==(const ExtReal& o) const {
  if (kind_ != o.kind_) return false;
  return kind_ != kFinite || v_ == o.v_;
}

bool ExtReal::operator<(const ExtReal& o) const {
  if (kind_ != o.kind_) return kind_ < o.kind_;
  return kind_ == kFinite && v_ < o.v_;
}

std::string ExtReal::to_string() const {
  if (kind_ == kNegInf) return "-inf";
  if (kind_ == kPosInf) return "+inf";
  return rat_to_string(v_);
}

// ------------------------------------------------------------- RhoQuantity

RhoQuantity RhoQuantity::rho0_knot(std::string subject) {
  RhoQuantity q;
  q.kind = RhoKind::Rho0Knot;
  q.subject = std::move(subject);
  return q;
}

RhoQuantity RhoQuantity::rho0_link(std::string subject, int components) {
  if (components < 1)
    throw std::invalid_argument("RhoQuantity: link needs components");
  RhoQuantity q;
  q.kind = RhoKind::Rho0Link;
  q.subject = std::move(subject);
  q.components = components;
  return q;
}

RhoQuantity RhoQuantity::rho1(std::string subject) {
  RhoQuantity q;
  q.kind = RhoKind::Rho1;
  q.subject = std::move(subject);
  return q;
}

RhoQuantity RhoQuantity::rho1_p(std::string subject, LaurentPoly p) {
  if (p.is_zero())
    throw std::invalid_argument("RhoQuantity: rho1_p needs nonzero p");
  RhoQuantity q;
  q.kind = RhoKind::Rho1P;
  q.subject = std::move(subject);
  q.p = std::move(p);
  return q;
}

std::string RhoQuantity::to_string() const {
  switch (kind) {
    case RhoKind::Rho0Knot:
      return "rho0(" + subject + ")";
    case RhoKind::Rho0Link:
      return "rho0(" + subject + "; " + std::to_string(components) +
             " components)";
    case RhoKind::Rho1:
      return "rho1(" + subject + ")";
    case RhoKind::Rho1P:
      return "rho1_p(" + subject + "; p = " + p.to_string() + ")";
  }
  return "rho?";
}

// ------------------------------------------------------------- RhoInterval

RhoInterval::RhoInterval(ExtReal l, ExtReal h)
    : lo(std::move(l)), hi(std::move(h)) {
  if (lo.kind() == ExtReal::kPosInf || hi.kind() == ExtReal::kNegInf ||
      !(lo <= hi))
    throw std::invalid_argument("RhoInterval: invalid endpoints");
}

RhoInterval RhoInterval::point(const Rat& v) {
  return RhoInterval(ExtReal::finite(v), ExtReal::finite(v));
}

RhoInterval RhoInterval::bounds(const Rat& lo, const Rat& hi) {
  return RhoInterval(ExtReal::finite(lo), ExtReal::finite(hi));
}

bool RhoInterval::contains_zero() const {
  ExtReal zero = ExtReal::finite(Rat(0));
  return lo <= zero && zero <= hi;
}

bool RhoInterval::contains(const RhoInterval& o) const {
  return lo <= o.lo && o.hi <= hi;
}

std::string RhoInterval::to_string() const {
  return "[" + lo.to_string() + ", " + hi.to_string() + "]";
}

// ------------------------------------------------------------------- rules

RhoInterval axiom(const RhoQuantity& q, const RhoInterval& value,
                  const std::string& citation) {
  if (citation.empty())
    throw std::invalid_argument("axiom: citation must be nonempty");
  RhoInterval out(value.lo, value.hi);
  out.provenance.push_back("axiom " + q.to_string() + " = " +
                           out.to_string() + " -- " + citation);
  return out;
}

RhoInterval surgery_step(const RhoQuantity& target, const RhoInterval& source,
                         int sign, SurgeryDirection direction) {
  if (sign != 1 && sign != -1)
    throw std::invalid_argument("surgery_step: sign must be +1 or -1");
  ExtReal two = ExtReal::finite(Rat(2));
  RhoInterval out;
  if (direction == SurgeryDirection::kPresurgery)
    out = sign == 1 ? RhoInterval(source.lo, source.hi + two)
                    : RhoInterval(source.lo - two, source.hi);
  else
    out = sign == 1 ? RhoInterval(ExtReal::neg_inf(), source.hi)
                    : RhoInterval(source.lo, ExtReal::pos_inf());
  out.provenance = source.provenance;
  std::ostringstream os;
  os << "surgery_step(sign " << (sign == 1 ? "+1" : "-1") << ", derive "
     << (direction == SurgeryDirection::kPresurgery ? "presurgery link"
                                                    : "surgered link")
     << ") -> " << target.to_string() << " in " << out.to_string();
  out.provenance.push_back(os.str());
  return out;
}

namespace {

int checked_slack(int g, int eta_lower, const char* who) {
  if (eta_lower < 0)
    throw std::invalid_argument(std::string(who) +
                                ": eta lower bound must be >= 0");
  int slack = g - 1 - eta_lower;
  if (slack < 0)
    throw std::invalid_argument(std::string(who) + ": eta exceeds g - 1");
  return slack;
}

}  // namespace

RhoInterval premain_bound(int n, int g, int eta_lower,
                          const RhoInterval& rho0_L,
                          const PremainPremises& premises) {
  if (n < 2) throw std::invalid_argument("premain_bound: n must be >= 2");
  std::string missing;
  if (!premises.anisotropy_certified) missing += " anisotropy";
  if (!premises.metabolizer_verified) missing += " metabolizer";
  if (!premises.independence_checked) missing += " independence";
  if (!missing.empty())
    throw std::invalid_argument("premain_bound: missing premises:" + missing);
  int slack = checked_slack(g, eta_lower, "premain_bound");
  ExtReal s = ExtReal::finite(Rat(slack));
  RhoInterval out((rho0_L.lo - s) / n, (rho0_L.hi + s) / n);
  out.provenance = rho0_L.provenance;
  std::ostringstream os;
  os << "premain_bound(n=" << n << ", g=" << g << ", eta>=" << eta_lower
     << "; premises verified: anisotropy, metabolizer, independence) -> "
     << out.to_string();
  out.provenance.push_back(os.str());
  return out;
}

RhoInterval postmain_bound(const std::vector<PostmainKnot>& knots, int g,
                           int eta_lower, const RhoInterval& rho0_L) {
  if (knots.empty())
    throw std::invalid_argument("postmain_bound: empty knot list");
  std::string missing;
  for (const PostmainKnot& k : knots)
    if (!k.anisotropy_certified) missing += " " + k.subject;
  if (!missing.empty())
    throw std::invalid_argument("postmain_bound: anisotropy premise missing:" +
                                missing);
  int slack = checked_slack(g, eta_lower, "postmain_bound");
  ExtReal s = ExtReal::finite(Rat(slack));
  RhoInterval out(rho0_L.lo - s, rho0_L.hi + s);
  out.provenance = rho0_L.provenance;
  std::ostringstream os;
  os << "postmain_bound(" << knots.size() << " knots, g=" << g
     << ", eta>=" << eta_lower << ") -> sum in " << out.to_string();
  out.provenance.push_back(os.str());
  return out;
}

RhoQuantity rho_prime_rewrite(const RhoQuantity& q, const LaurentPoly& delta) {
  if (q.kind != RhoKind::Rho1P)
    throw std::invalid_argument("rho_prime_rewrite: quantity is not rho1_p");
  if (delta.is_zero())
    throw std::invalid_argument("rho_prime_rewrite: zero Alexander polynomial");
  if (laurent_gcd(q.p, delta).is_unit()) return RhoQuantity::rho0_knot(q.subject);
  if (unit_equal(q.p, delta)) return RhoQuantity::rho1(q.subject);
  throw std::domain_error(
      "rho_prime_rewrite: no rewrite (p shares a proper factor with delta)");
}

RhoInterval additivity(
    const std::vector<std::pair<RhoQuantity, RhoInterval>>& parts) {
  RhoInterval out = RhoInterval::point(Rat(0));
  if (parts.empty()) {
    out.provenance.push_back("additivity: empty sum = [0, 0]");
    return out;
  }
  const RhoQuantity& first = parts.front().first;
  ExtReal lo = ExtReal::finite(Rat(0)), hi = lo;
  std::vector<std::string> trail;
  for (const auto& [q, iv] : parts) {
    if (q.kind != first.kind)
      throw std::invalid_argument("additivity: kind mismatch");
    if (q.kind == RhoKind::Rho1P && !unit_equal(q.p, first.p))
      throw std::invalid_argument("additivity: p mismatch");
    lo = lo + iv.lo;
    hi = hi + iv.hi;
    trail.insert(trail.end(), iv.provenance.begin(), iv.provenance.end());
  }
  out = RhoInterval(lo, hi);
  out.provenance = std::move(trail);
  out.provenance.push_back("additivity over " + std::to_string(parts.size()) +
                           " summands -> " + out.to_string());
  return out;
}

RhoInterval infection_rule(const RhoInterval& base,
                           const RhoInterval& infect_rho0, bool eta_nonzero) {
  if (!eta_nonzero) {
    RhoInterval out = base;
    out.provenance.push_back("infection_rule(eta = 0): base unchanged");
    return out;
  }
  RhoInterval out(base.lo + infect_rho0.lo, base.hi + infect_rho0.hi);
  out.provenance = base.provenance;
  out.provenance.insert(out.provenance.end(), infect_rho0.provenance.begin(),
                        infect_rho0.provenance.end());
  out.provenance.push_back("infection_rule(eta != 0): base + companion rho0 = " +
                           out.to_string());
  return out;
}

// ------------------------------------------------------------ certificates

namespace {

void add_premise(Certificate& cert, std::string rule, std::string statement,
                 bool holds) {
  if (!holds) cert.failures.push_back(statement);
  cert.premises.push_back(
      {std::move(rule), std::move(statement), holds});
}

}  // namespace

std::string Certificate::to_string() const {
  std::ostringstream os;
  os << "certificate: " << conclusion << "\n";
  os << "status: " << (verified ? "VERIFIED" : "FAILED") << "\n";
  for (const CertPremise& p : premises)
    os << "  [" << (p.holds ? "ok" : "UNMET") << "] " << p.rule << ": "
       << p.statement << "\n";
  return os.str();
}

Certificate independence_certificate(
    const std::vector<IndependenceInput>& knots) {
  if (knots.empty())
    throw std::invalid_argument("independence_certificate: no knots");
  Certificate cert;
  std::vector<LaurentPoly> deltas;
  deltas.reserve(knots.size());
  for (const IndependenceInput& k : knots)
    deltas.push_back(alexander_poly(k.matrix));

  for (std::size_t i = 0; i < knots.size(); ++i) {
    add_premise(cert, "alexander_squarefree",
                knots[i].name + ": Delta = " + deltas[i].to_string() +
                    " is squarefree",
                laurent_is_squarefree(deltas[i]));
  }
  for (std::size_t i = 0; i < knots.size(); ++i)
    for (std::size_t j = i + 1; j < knots.size(); ++j) {
      bool coprime = laurent_gcd(deltas[i], deltas[j]).is_unit();
      add_premise(cert, "alexander_coprime",
                  "gcd(Delta(" + knots[i].name + "), Delta(" + knots[j].name +
                      ")) is a unit",
                  coprime);
    }
  for (const IndependenceInput& k : knots) {
    RhoZero r = rho0_knot(k.matrix);
    bool vanishes = r.exact.has_value() && *r.exact == 0;
    add_premise(cert, "rho0_vanishes",
                k.name + ": rho0 computes to 0 exactly", vanishes);
  }
  for (const IndependenceInput& k : knots) {
    add_premise(cert, "rho1_excludes_zero",
                k.name + ": rho1 enclosure " + k.rho1.to_string() +
                    " excludes 0",
                k.rho1.excludes_zero());
  }

  cert.verified = cert.failures.empty();
  std::string names;
  for (std::size_t i = 0; i < knots.size(); ++i)
    names += (i ? ", " : "") + knots[i].name;
  cert.conclusion =
      "{" + names + "} is linearly independent in the concordance group";
  cert.independence_inputs = knots;
  return cert;
}

Certificate torsion_certificate(const TorsionInput& input) {
  Certificate cert;
  bool aniso = anisotropy_criterion(input.matrix, input.p);
  add_premise(cert, "anisotropy",
              input.name + ": localized module at p = " + input.p.to_string() +
                  " admits no nonzero isotropic submodule",
              aniso);
  add_premise(cert, "rho1p_excludes_zero",
              input.name + ": rho1_p enclosure " + input.rho1_p.to_string() +
                  " excludes 0",
              input.rho1_p.excludes_zero());
  cert.verified = cert.failures.empty();
  cert.conclusion =
      input.name + " has infinite order in the concordance group";
  cert.torsion_input = input;
  return cert;
}

bool replay(const Certificate& cert) {
  if (!cert.verified) return false;
  Certificate redo;
  if (cert.torsion_input)
    redo = torsion_certificate(*cert.torsion_input);
  else if (!cert.independence_inputs.empty())
    redo = independence_certificate(cert.independence_inputs);
  else
    return false;  // no replay data stored
  if (!redo.verified || redo.conclusion != cert.conclusion) return false;
  if (redo.premises.size() != cert.premises.size()) return false;
  for (std::size_t i = 0; i < redo.premises.size(); ++i)
    if (redo.premises[i].rule != cert.premises[i].rule ||
        redo.premises[i].holds != cert.premises[i].holds)
      return false;
  return true;
}

}  // namespace concord
