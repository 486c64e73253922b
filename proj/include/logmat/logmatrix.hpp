#pragma once

// The logarithmic-matrix calculus. C, C_j and A are assembled as exact 2x2
// polynomial matrices over the quadratic quotient ring, M_n as their product
// C_1...C_n C^(-n-2) A. Evaluation at w_n = zeta_{p^n} - 1 collapses to a
// factored form: row i, column j equals -P_{i1} * lambda_j^{-(n+1)} where
// P = C_1...C_{n-1}(w_n) and lambda_1, lambda_2 are the Hecke roots. That
// factorization is what makes exact valuation matrices computable without
// ever leaving Q(zeta_{p^n}).

#include <array>
#include <string>
#include <vector>

#include "logmat/checks.hpp"
#include "logmat/cyclo.hpp"
#include "logmat/hecke.hpp"
#include "logmat/poly.hpp"
#include "logmat/quadring.hpp"
#include "logmat/rational.hpp"

namespace logmat {

// ---------------------------------------------------------------------------
// t_n^{+/-} partial sums
// ---------------------------------------------------------------------------

enum class TSign { plus, minus };

/// t_n^+ = sum_{i=1}^{floor(n/2)} p^(-2i); t_n^- uses exponent 2i-1.
/// Exact partial sums; t_0 = t_1 = 0. They increase to 1/(p^2-1) and
/// p/(p^2-1) respectively, and t_n^+ < t_n^- for n >= 2.
inline Rat t_n(long p, int n, TSign sign) {
  require_odd_prime(p);
  if (n < 0) throw input_error("t_n: n must be >= 0");
  Rat sum(0);
  Int ppow(1);
  const Int pz(p);
  for (int i = 1; i <= n / 2; ++i) {
    ppow = ppow * pz * pz;  // p^(2i)
    sum += sign == TSign::plus ? rat(Int(1), ppow) : rat(pz, ppow);
  }
  return sum;
}

inline Rat t_plus_limit(long p) { return rat(1, p * p - 1); }
inline Rat t_minus_limit(long p) { return rat(p, p * p - 1); }

// ---------------------------------------------------------------------------
// Matrix builders
// ---------------------------------------------------------------------------

inline PolyMat2 matrix_C(const HeckeData& h) {
  PolyMat2 m{quad_ring(h), {}};
  m.at(0, 0) = QPoly::constant(qelem(h.a_p));
  m.at(0, 1) = QPoly::constant(qelem(Rat(1)));
  m.at(1, 0) = QPoly::constant(qelem(-h.c));
  return m;
}

/// C_j has the p^j-th cyclotomic polynomial in 1+X in place of p.
inline PolyMat2 matrix_Cj(const HeckeData& h, int j) {
  if (j < 1) throw input_error("matrix_Cj: j must be >= 1");
  PolyMat2 m{quad_ring(h), {}};
  m.at(0, 0) = QPoly::constant(qelem(h.a_p));
  m.at(0, 1) = QPoly::constant(qelem(Rat(1)));
  m.at(1, 0) = QPoly::from_unipoly(-h.eps_p * cyclotomic_phi(h.p, j, Var::X));
  return m;
}

/// A = [[-1, -1], [beta, alpha]] over the quotient ring; det A = beta - alpha.
inline PolyMat2 matrix_A(const HeckeData& h) {
  const QuadRing R = quad_ring(h);
  PolyMat2 m{R, {}};
  m.at(0, 0) = QPoly::constant(qelem(Rat(-1)));
  m.at(0, 1) = QPoly::constant(qelem(Rat(-1)));
  m.at(1, 0) = QPoly::constant(quad_beta(R));
  m.at(1, 1) = QPoly::constant(quad_alpha());
  return m;
}

/// C^(-1) = adj(C)/det(C) = [[0, -1/c], [1, a_p/c]] with c = eps(p) p.
inline PolyMat2 matrix_C_inv(const HeckeData& h) {
  PolyMat2 m{quad_ring(h), {}};
  m.at(0, 1) = QPoly::constant(qelem(Rat(-1) / h.c));
  m.at(1, 0) = QPoly::constant(qelem(Rat(1)));
  m.at(1, 1) = QPoly::constant(qelem(h.a_p / h.c));
  return m;
}

/// M_n = C_1 ... C_n C^(-n-2) A, exact over the quotient ring.
inline PolyMat2 matrix_Mn(const HeckeData& h, int n) {
  if (n < 1) throw input_error("matrix_Mn: n must be >= 1");
  PolyMat2 acc = matrix_Cj(h, 1);
  for (int j = 2; j <= n; ++j) acc = mat_mul(acc, matrix_Cj(h, j));
  const PolyMat2 cinv = matrix_C_inv(h);
  for (int k = 0; k < n + 2; ++k) acc = mat_mul(acc, cinv);
  return mat_mul(acc, matrix_A(h));
}

// ---------------------------------------------------------------------------
// Evaluation at w_n in factored form
// ---------------------------------------------------------------------------

/// One entry of the evaluated matrix: sign * cyclo * root^exponent, where
/// root is alpha (column 1) or beta (column 2).
struct FactoredEntry {
  CycloElem cyclo;
  bool uses_beta;
  long exponent;
  int sign;
};

struct FactoredEvalMat {
  long p;
  int level;  // n of w_n
  std::array<FactoredEntry, 4> e;

  FactoredEvalMat(long p_, int level_, std::array<FactoredEntry, 4> entries)
      : p(p_), level(level_), e(std::move(entries)) {}

  const FactoredEntry& at(int i, int j) const { return e[static_cast<std::size_t>(2 * i + j)]; }
};

/// 2x2 matrix of extended rationals (a valuation matrix).
struct ValMat {
  std::array<ExtRat, 4> v;

  const ExtRat& at(int i, int j) const { return v[static_cast<std::size_t>(2 * i + j)]; }
  ExtRat& at(int i, int j) { return v[static_cast<std::size_t>(2 * i + j)]; }
  friend bool operator==(const ValMat& a, const ValMat& b) { return a.v == b.v; }

  std::string str() const {
    return "[[" + v[0].str() + ", " + v[1].str() + "], [" + v[2].str() + ", " + v[3].str() + "]]";
  }
};

/// The 2x2 CycloElem matrix P = C_1(w_n) ... C_k(w_n).
inline std::array<CycloElem, 4> c_chain_at_varpi(const HeckeData& h, const CycloCtxPtr& ctx,
                                                 int k) {
  const CycloElem ap = CycloElem::from_rat(ctx, h.a_p);
  const CycloElem one = CycloElem::from_rat(ctx, Rat(1));
  const CycloElem zero = CycloElem::zero(ctx);
  std::array<CycloElem, 4> acc = {one, zero, zero, one};
  for (int m = 1; m <= k; ++m) {
    const CycloElem phim = -h.eps_p * phi_at_varpi(ctx, m);
    // acc <- acc * [[a_p, 1], [-eps*Phi_m(w), 0]]
    std::array<CycloElem, 4> next = {acc[0] * ap + acc[1] * phim, acc[0],
                                     acc[2] * ap + acc[3] * phim, acc[2]};
    acc = std::move(next);
  }
  return acc;
}

/// Evaluates the limit matrix at w_n exactly. C_n(w_n) kills its own
/// cyclotomic factor and every later factor cancels against a C^(-1), so
/// the value is C_1...C_{n-1}(w_n) * [[-alpha^(-n-1), -beta^(-n-1)], [0, 0]].
inline FactoredEvalMat eval_mlog(const HeckeData& h, int n) {
  if (n < 2) throw input_error("eval_mlog: n must be >= 2");
  const CycloCtxPtr ctx = make_cyclo_ctx(h.p, n);
  const auto P = c_chain_at_varpi(h, ctx, n - 1);
  const auto ent = [&](int i, bool beta) {
    // the cyclo part of row i is the first column of P
    return FactoredEntry{P[static_cast<std::size_t>(2 * i)], beta, -(n + 1), -1};
  };
  return FactoredEvalMat(h.p, n, {ent(0, false), ent(0, true), ent(1, false), ent(1, true)});
}

/// Valuation matrix of a factored evaluation: val(cyclo) + exponent * v(root).
inline ValMat ord_of_eval(const FactoredEvalMat& m, const HeckeData& h) {
  ValMat out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const FactoredEntry& ent = m.at(i, j);
      const Rat& vroot = ent.uses_beta ? h.v_beta : h.v_alpha;
      out.at(i, j) = val_min(ent.cyclo) + ExtRat(vroot * ent.exponent);
    }
  return out;
}

/// Closed form for ord(M_log(w_n)) under 2r > 1/p. The r-row carries
/// r + t_{n-1}^+ (for odd n this equals t_n^+), the other row t_n^-; for
/// even n the r-row is on top, for odd n on the bottom. Exact evaluation at
/// n = 2 and 4 pins the r-row to t_{n-1}^+ rather than t_n^+; the two differ
/// by p^(-n) at even n and share the limit 1/(p^2-1).
inline ValMat closed_form_ord(long p, const ExtRat& r, const Rat& v_alpha, const Rat& v_beta,
                              int n) {
  require_odd_prime(p);
  if (n < 2) throw input_error("closed_form_ord: n must be >= 2");
  if (!r.is_inf() && !(2 * r.finite() > rat(1, p)))
    throw input_error("closed_form_ord: hypothesis 2r > 1/p violated");
  const ExtRat r_row = r + ExtRat(t_n(p, n - 1, TSign::plus));
  const ExtRat other_row = ExtRat(t_n(p, n, TSign::minus));
  const ExtRat shift_a(v_alpha * (n + 1));
  const ExtRat shift_b(v_beta * (n + 1));
  ValMat out;
  const bool r_on_top = (n % 2 == 0);
  const ExtRat top = r_on_top ? r_row : other_row;
  const ExtRat bottom = r_on_top ? other_row : r_row;
  out.at(0, 0) = top - shift_a.finite();
  out.at(0, 1) = top - shift_b.finite();
  out.at(1, 0) = bottom - shift_a.finite();
  out.at(1, 1) = bottom - shift_b.finite();
  return out;
}

/// t_n^+ - t_{n-1}^+ : p^(-n) at even n, zero at odd n. This is the amount
/// by which the naive t_n^+ form overstates the r-row at even n.
inline Rat t_plus_delta(long p, int n) {
  return t_n(p, n, TSign::plus) - t_n(p, n - 1, TSign::plus);
}

// ---------------------------------------------------------------------------
// Determinant identity and Mercator diagnostic
// ---------------------------------------------------------------------------

inline UniPoly prod_phi(long p, int from, int to, Var var, int step = 1) {
  UniPoly acc = UniPoly::constant(var, Rat(1));
  for (int j = from; j <= to; j += step) acc = acc * cyclotomic_phi(p, j, var);
  return acc;
}

struct DetIdentityReport {
  int n = 0;
  bool identity_pass = false;
  QuadElem kappa;  // det(M_n) / prod_{j<=n} Phi_j, a constant
  std::string mismatch;
  std::vector<ExtRat> mercator_diag;  // vp(coeff_k(prod Phi_j / p^n) - c_k), k = 0..10

  bool pass() const { return identity_pass; }
};

/// Verifies det(M_n) = kappa_n * prod_{j<=n} Phi_j(1+X) exactly, with
/// kappa_n = eps^(-2) p^(-n-2) (beta - alpha), and reports how fast the
/// normalized product approaches the Mercator coefficients of log(1+X)/X.
inline DetIdentityReport det_identity_check(const HeckeData& h, int n) {
  if (n < 1) throw input_error("det_identity_check: n must be >= 1");
  DetIdentityReport rep;
  rep.n = n;
  const QuadRing R = quad_ring(h);
  const QPoly det = mat_det(matrix_Mn(h, n));
  const UniPoly prod = prod_phi(h.p, 1, n, Var::X);

  // kappa = eps^(-2) p^(-n-2) (beta - alpha) = eps^(-2) p^(-n-2) (tr - 2T)
  Rat scale = 1 / (h.eps_p * h.eps_p);
  Int ppow;
  mpz_pow_ui(ppow.get_mpz_t(), Int(h.p).get_mpz_t(), static_cast<unsigned long>(n + 2));
  scale /= Rat(ppow);
  const QuadElem kappa = qmul(R, qelem(scale), QuadElem{h.a_p, Rat(-2)});
  rep.kappa = kappa;

  const QPoly expected = qp_scale(R, kappa, QPoly::from_unipoly(prod));
  rep.identity_pass = (det == expected);
  if (!rep.identity_pass) {
    for (std::size_t k = 0;; ++k) {
      if (det.coeff(k) != expected.coeff(k)) {
        rep.mismatch = "first differing coefficient at degree " + std::to_string(k);
        break;
      }
    }
  }

  Int pn;
  mpz_pow_ui(pn.get_mpz_t(), Int(h.p).get_mpz_t(), static_cast<unsigned long>(n));
  const std::vector<Rat> merc = mercator_coeffs(11);
  for (int k = 0; k <= 10; ++k) {
    const Rat diff = prod.coeff(static_cast<std::size_t>(k)) / Rat(pn) -
                     merc[static_cast<std::size_t>(k)];
    rep.mercator_diag.push_back(vp_rat(diff, h.p));
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Pollack's plus/minus logarithm truncations (a_p = 0 companions)
// ---------------------------------------------------------------------------

/// Partial product with M factors of (1/p) prod Phi_{2m}/p (plus) or
/// (1/p) prod Phi_{2m-1}/p (minus), as an exact polynomial in X.
inline UniPoly pollack_log_trunc(long p, TSign sign, int factors) {
  require_odd_prime(p);
  if (factors < 1) throw input_error("pollack_log_trunc: factor count must be >= 1");
  UniPoly acc = UniPoly::constant(Var::X, rat(1, p));
  for (int m = 1; m <= factors; ++m) {
    const int idx = sign == TSign::plus ? 2 * m : 2 * m - 1;
    acc = rat(1, p) * (acc * cyclotomic_phi(p, idx, Var::X));
  }
  return acc;
}

// ---------------------------------------------------------------------------
// a_p = 0 structure
// ---------------------------------------------------------------------------

/// With a_p = 0 every C_j is antidiagonal, so products of consecutive C_j
/// alternate between diagonal and antidiagonal ("checkerboard"), one row of
/// the evaluation at w_n vanishes according to the parity of n, and the
/// products of the two entries in each row of M_n are constant multiples of
/// the squared even/odd cyclotomic products. The ratio of the two constants
/// is reported as eta_n; no closed form for it is asserted.
inline CheckReport ap_zero_structure_check(long p, const Rat& eps, int n,
                                           QuadElem* eta_out = nullptr) {
  if (n < 2) throw input_error("ap_zero_structure_check: n must be >= 2");
  const HeckeData h = make_hecke(p, Rat(0), eps);
  const QuadRing R = quad_ring(h);
  CheckReport rep;

  // (a) checkerboard support of C_1...C_k for k <= n
  bool checker = true;
  PolyMat2 acc = matrix_Cj(h, 1);
  for (int k = 1; k <= n; ++k) {
    if (k > 1) acc = mat_mul(acc, matrix_Cj(h, k));
    const bool diag_zero = acc.at(0, 0).is_zero() && acc.at(1, 1).is_zero();
    const bool anti_zero = acc.at(0, 1).is_zero() && acc.at(1, 0).is_zero();
    if (k % 2 == 0 && !anti_zero) checker = false;
    if (k % 2 == 1 && !diag_zero) checker = false;
  }
  // even-length products are diag(prod -eps*Phi_even, prod -eps*Phi_odd)
  if (n >= 2) {
    const int k = n - n % 2;
    PolyMat2 even_acc = matrix_Cj(h, 1);
    for (int j = 2; j <= k; ++j) even_acc = mat_mul(even_acc, matrix_Cj(h, j));
    UniPoly even_prod = UniPoly::constant(Var::X, Rat(1));
    UniPoly odd_prod = UniPoly::constant(Var::X, Rat(1));
    for (int j = 2; j <= k; j += 2) even_prod = even_prod * (-h.eps_p * cyclotomic_phi(p, j, Var::X));
    for (int j = 1; j <= k; j += 2) odd_prod = odd_prod * (-h.eps_p * cyclotomic_phi(p, j, Var::X));
    if (!(even_acc.at(0, 0) == QPoly::from_unipoly(even_prod) &&
          even_acc.at(1, 1) == QPoly::from_unipoly(odd_prod)))
      checker = false;
  }
  rep.add("checkerboard support of C_1..C_k, k <= " + std::to_string(n), checker);

  // (b) row vanishing of the evaluation at w_n: top row dies at even n,
  // bottom row at odd n.
  const FactoredEvalMat ev = eval_mlog(h, n);
  const int dead_row = n % 2 == 0 ? 0 : 1;
  const bool row_dead =
      ev.at(dead_row, 0).cyclo.is_zero() && ev.at(dead_row, 1).cyclo.is_zero();
  const bool row_alive =
      !ev.at(1 - dead_row, 0).cyclo.is_zero() && !ev.at(1 - dead_row, 1).cyclo.is_zero();
  rep.add("row vanishing by parity at n = " + std::to_string(n), row_dead && row_alive);

  // (c) constancy of ab / (prod Phi_even)^2 and cd / (prod Phi_odd)^2
  const PolyMat2 Mn = matrix_Mn(h, n);
  const QPoly ab = qp_mul(R, Mn.at(0, 0), Mn.at(0, 1));
  const QPoly cd = qp_mul(R, Mn.at(1, 0), Mn.at(1, 1));
  UniPoly even_sq = prod_phi(p, 2, n, Var::X, 2);
  UniPoly odd_sq = prod_phi(p, 1, n, Var::X, 2);
  even_sq = even_sq * even_sq;
  odd_sq = odd_sq * odd_sq;
  bool const_even = false, const_odd = false;
  QuadElem ca, cc;
  try {
    const QPoly q1 = qp_div_exact(R, ab, QPoly::from_unipoly(even_sq));
    const_even = q1.degree() == 0;
    if (const_even) ca = q1.coeff(0);
    const QPoly q2 = qp_div_exact(R, cd, QPoly::from_unipoly(odd_sq));
    const_odd = q2.degree() == 0;
    if (const_odd) cc = q2.coeff(0);
  } catch (const input_error&) {
    // inexact division: leave the flags false
  }
  rep.add("ab is a constant multiple of (prod Phi_even)^2", const_even);
  rep.add("cd is a constant multiple of (prod Phi_odd)^2", const_odd);
  if (const_even && const_odd) {
    const QuadElem eta = qmul(R, cc, qinv(R, ca));
    rep.add("eta_" + std::to_string(n) + " = " + eta.str(), true);
    if (eta_out) *eta_out = eta;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Stabilization
// ---------------------------------------------------------------------------

/// M_m(w_n) = M_n(w_n) for m > n: the C_j(w_n) with j > n equal C and cancel
/// against the extra C^(-1) factors. Both sides are evaluated exactly.
inline CheckReport stabilization_check(const HeckeData& h, int n, int m) {
  if (!(2 <= n && n < m)) throw input_error("stabilization_check requires 2 <= n < m");
  const CycloCtxPtr ctx = make_cyclo_ctx(h.p, n);
  const CycloElem w = CycloElem::uniformizer(ctx);
  const PolyMat2 Mn = matrix_Mn(h, n);
  const PolyMat2 Mm = matrix_Mn(h, m);
  CheckReport rep;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const CycloQuad a = qp_eval(Mn.at(i, j), w);
      const CycloQuad b = qp_eval(Mm.at(i, j), w);
      rep.add("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") stable",
              a == b);
    }
  return rep;
}

}  // namespace logmat
