#pragma once

// Weierstrass-preparation invariants of truncated series: mu is the minimal
// coefficient valuation, lambda the least index attaining it. For a
// polynomial F with lambda < e_n = p^(n-1)(p-1) the valuation of F(w_n) is
// exactly mu + lambda / e_n, which is the evaluation law checked here. The
// endgame solver reproduces the forced slope r = 1/(p+1) from the pair of
// limit equations and flags the contradiction with a hypothesis r > bound.

#include <string>

#include "logmat/cyclo.hpp"
#include "logmat/series.hpp"

namespace logmat {

struct WeierstrassData {
  Rat mu;      // in v_p units
  int lambda;  // degree of the distinguished polynomial
  Rat mu_pi;   // mu * e_F, in uniformizer units

  friend bool operator==(const WeierstrassData&, const WeierstrassData&) = default;
};

inline WeierstrassData mu_lambda(const TruncSeries1& f, long p, long e_F = 1) {
  if (f.is_zero()) throw input_error("mu_lambda of the zero series");
  ExtRat best = ExtRat::infinity();
  int lambda = 0;
  for (int k = 0; k < f.cap(); ++k) {
    const ExtRat v = vp_rat(f.coeff(k), p);
    if (v < best) {
      best = v;
      lambda = k;
    }
  }
  return {best.finite(), lambda, best.finite() * e_F};
}

struct EvalLawReport {
  bool applicable = false;  // lambda < e_n
  bool pass = false;
  WeierstrassData data{Rat(0), 0, Rat(0)};
  ExtRat expected;
  ExtRat actual;
  std::string note;
};

/// Evaluates F (as the polynomial of its truncation) at w_n exactly and
/// compares the valuation with mu + lambda / e_n. When lambda >= e_n the
/// level is below the stability threshold and the law is not asserted.
inline EvalLawReport mu_lambda_eval_law(const TruncSeries1& f, const CycloCtxPtr& ctx) {
  EvalLawReport rep;
  rep.data = mu_lambda(f, ctx->p());
  const long e = ctx->degree();
  if (rep.data.lambda >= e) {
    rep.note = "below stability threshold: lambda >= " + std::to_string(e);
    return rep;
  }
  rep.applicable = true;
  rep.expected = ExtRat(rep.data.mu + rat(rep.data.lambda, e));
  const CycloElem value = cyclo_reduce(ctx, f.as_poly(Var::Y));
  rep.actual = val_min(value);
  rep.pass = rep.expected == rep.actual;
  return rep;
}

struct EndgameReport {
  long p = 0;
  long e_F = 1;
  Rat bound;        // the hypothesis is r > bound
  Rat forced_r;     // 1/(p+1)
  Rat mu_diff;      // mu_flat - mu_sharp, forced to 0
  bool mu_equal = true;
  bool contradiction = false;
};

/// Solves 2(r - 1/(p+1)) = delta/e and 2(r - 1/(p+1)) = -delta/e for
/// (r, delta): adding the equations forces r = 1/(p+1) and delta = 0. The
/// contradiction flag records whether the forced r violates r > bound.
inline EndgameReport solve_endgame(long p, long e_F, const Rat& bound) {
  require_odd_prime(p);
  if (e_F < 1) throw input_error("solve_endgame: e_F must be >= 1");
  EndgameReport rep;
  rep.p = p;
  rep.e_F = e_F;
  rep.bound = bound;
  rep.forced_r = rat(1, p + 1);
  rep.mu_diff = Rat(0);
  rep.mu_equal = true;
  rep.contradiction = !(rep.forced_r > bound);
  return rep;
}

}  // namespace logmat
