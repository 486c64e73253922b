#pragma once

// Local data of a weight-2 eigenform at p: the Hecke trace a_p, the
// nebentype unit eps(p), and the slopes of the two roots of
// X^2 - a_p X + eps(p) p read off the Newton polygon. The roots themselves
// are never constructed; everything downstream only needs their valuations
// (and, where an actual ring is required, the abstract quadratic quotient).

#include <optional>
#include <utility>

#include "logmat/rational.hpp"

namespace logmat {

/// Newton-polygon slopes of X^2 - a_p X + c with vp(c) = 1, sorted
/// ascending. Requires vp(a_p) > 0 (the non-ordinary case); vp(a_p) = 0 is
/// rejected as an ordinary form.
inline std::pair<Rat, Rat> hecke_root_vals(long p, const Rat& a_p, const Rat& eps_p) {
  require_odd_prime(p);
  if (vp_rat(eps_p, p) != ExtRat(0)) throw input_error("eps(p) must be a p-adic unit");
  const ExtRat r = vp_rat(a_p, p);
  if (r == ExtRat(0)) throw input_error("ordinary form: vp(a_p) = 0");
  if (r < ExtRat(0)) throw input_error("vp(a_p) < 0 is not a Hecke eigenvalue at p");
  // Hull of (0,1), (1, r), (2, 0): one segment of slope 1/2 when r >= 1/2,
  // otherwise two segments of slopes r and 1 - r.
  if (r >= ExtRat(rat(1, 2))) return {rat(1, 2), rat(1, 2)};
  return {r.finite(), 1 - r.finite()};
}

/// Parameters of the form at p plus the derived slope data.
struct HeckeData {
  long p;
  Rat a_p;
  Rat eps_p;
  Rat c;         // eps(p) * p, the constant term of the Hecke polynomial
  ExtRat r;      // vp(a_p); +inf when a_p = 0
  Rat v_alpha;   // smaller slope
  Rat v_beta;    // larger slope; v_alpha + v_beta = 1
  long e_F;      // ramification index of the coefficient field model
};

/// e_F defaults to the least common denominator of the two slopes (2 in the
/// supersingular weight-2 case); pass an override to model a larger field.
inline HeckeData make_hecke(long p, const Rat& a_p, const Rat& eps_p,
                            std::optional<long> e_F_override = std::nullopt) {
  auto [va, vb] = hecke_root_vals(p, a_p, eps_p);
  HeckeData h;
  h.p = p;
  h.a_p = a_p;
  h.eps_p = eps_p;
  h.c = eps_p * p;
  h.r = vp_rat(a_p, p);
  h.v_alpha = va;
  h.v_beta = vb;
  if (e_F_override) {
    if (*e_F_override < 1) throw input_error("e_F must be >= 1");
    h.e_F = *e_F_override;
  } else {
    Int l = lcm(Int(va.get_den()), Int(vb.get_den()));
    h.e_F = l.get_si();
  }
  return h;
}

}  // namespace logmat
