#include "logmat/logmatrix.hpp"

#include <gtest/gtest.h>

using namespace logmat;

namespace {

ValMat vm(const char* a, const char* b, const char* c, const char* d) {
  ValMat m;
  m.at(0, 0) = parse_ext_rat(a);
  m.at(0, 1) = parse_ext_rat(b);
  m.at(1, 0) = parse_ext_rat(c);
  m.at(1, 1) = parse_ext_rat(d);
  return m;
}

// Value of a factored entry as an element of Q(zeta) tensor the quotient ring.
CycloQuad factored_value(const QuadRing& R, const FactoredEntry& ent) {
  const QuadElem lam = ent.uses_beta ? quad_beta(R) : quad_alpha();
  const QuadElem power = qpow(R, lam, ent.exponent);
  const Rat sign(ent.sign);
  return {(sign * power.c0) * ent.cyclo, (sign * power.c1) * ent.cyclo};
}

}  // namespace

TEST(LogMatrix, TnValues) {
  EXPECT_EQ(t_n(3, 4, TSign::plus), rat(10, 81));
  EXPECT_EQ(t_n(3, 5, TSign::minus), rat(10, 27));
  EXPECT_EQ(t_n(3, 1, TSign::plus), Rat(0));
  EXPECT_EQ(t_n(5, 1, TSign::minus), Rat(0));
  EXPECT_EQ(t_n(3, 0, TSign::plus), Rat(0));
  EXPECT_EQ(t_plus_delta(3, 2), rat(1, 9));
  EXPECT_EQ(t_plus_delta(3, 3), Rat(0));
  EXPECT_EQ(t_plus_delta(3, 4), rat(1, 81));
}

TEST(LogMatrix, Builders) {
  const HeckeData h = make_hecke(3, Rat(3), Rat(1));
  const PolyMat2 C = matrix_C(h);
  EXPECT_EQ(C.at(0, 0), QPoly::constant(qelem(Rat(3))));
  EXPECT_EQ(C.at(1, 0), QPoly::constant(qelem(Rat(-3))));
  EXPECT_TRUE(C.at(1, 1).is_zero());
  EXPECT_EQ(mat_det(C), QPoly::constant(qelem(Rat(3))));  // eps * p

  const PolyMat2 C1 = matrix_Cj(h, 1);
  EXPECT_EQ(C1.at(1, 0), QPoly::from_unipoly(Rat(-1) * cyclotomic_phi(3, 1, Var::X)));
  EXPECT_EQ(mat_det(C1), QPoly::from_unipoly(cyclotomic_phi(3, 1, Var::X)));

  // det A = beta - alpha, whose square is a_p^2 - 4c = -3 here
  const QPoly detA = mat_det(matrix_A(h));
  EXPECT_EQ(detA.degree(), 0);
  const QuadElem d = detA.coeff(0);
  EXPECT_EQ(qmul(quad_ring(h), d, d), qelem(Rat(-3)));

  // C * C^-1 = identity
  const PolyMat2 prod = mat_mul(C, matrix_C_inv(h));
  EXPECT_EQ(prod.at(0, 0), QPoly::constant(qelem(Rat(1))));
  EXPECT_EQ(prod.at(1, 1), QPoly::constant(qelem(Rat(1))));
  EXPECT_TRUE(prod.at(0, 1).is_zero() && prod.at(1, 0).is_zero());

  // determinants scale with the nebentype unit
  const HeckeData hm = make_hecke(3, Rat(3), Rat(-1));
  EXPECT_EQ(mat_det(matrix_C(hm)), QPoly::constant(qelem(Rat(-3))));
  EXPECT_EQ(mat_det(matrix_Cj(hm, 1)), QPoly::from_unipoly(Rat(-1) * cyclotomic_phi(3, 1, Var::X)));
}

TEST(LogMatrix, M1AtZeroIsCinvSquaredA) {
  const HeckeData h = make_hecke(3, Rat(3), Rat(1));
  const PolyMat2 M1 = matrix_Mn(h, 1);
  const PolyMat2 cinv = matrix_C_inv(h);
  const PolyMat2 expect = mat_mul(mat_mul(cinv, cinv), matrix_A(h));
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) EXPECT_EQ(M1.at(i, j).coeff(0), expect.at(i, j).coeff(0));
}

TEST(LogMatrix, EvalFactoredEntries) {
  const HeckeData h = make_hecke(3, Rat(3), Rat(1));
  const FactoredEvalMat ev = eval_mlog(h, 2);
  const auto ctx = ev.at(0, 0).cyclo.ctx();
  // P = C_1(w_2): P11 = 3, P21 = -(w^2 + 3w + 3)
  EXPECT_EQ(ev.at(0, 0).cyclo, CycloElem::from_rat(ctx, Rat(3)));
  EXPECT_EQ(ev.at(1, 0).cyclo, -CycloElem(ctx, {3, 3, 1}));
  EXPECT_EQ(ev.at(0, 1).cyclo, ev.at(0, 0).cyclo);  // rows share the cyclo part
  EXPECT_EQ(ev.at(0, 0).exponent, -3);
  EXPECT_FALSE(ev.at(0, 0).uses_beta);
  EXPECT_TRUE(ev.at(0, 1).uses_beta);
  EXPECT_EQ(ev.at(0, 0).sign, -1);
  EXPECT_THROW(eval_mlog(h, 1), input_error);
}

TEST(LogMatrix, EvalMatchesDirectHornerEvaluation) {
  // dual route: factored evaluation vs Horner evaluation of M_n at w_n
  for (const Rat& ap : {Rat(3), Rat(0), Rat(9)}) {
    const HeckeData h = make_hecke(3, ap, Rat(1));
    const QuadRing R = quad_ring(h);
    for (int n = 2; n <= 3; ++n) {
      const FactoredEvalMat ev = eval_mlog(h, n);
      const PolyMat2 Mn = matrix_Mn(h, n);
      const CycloElem w = CycloElem::uniformizer(make_cyclo_ctx(h.p, n));
      for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
          EXPECT_EQ(factored_value(R, ev.at(i, j)), qp_eval(Mn.at(i, j), w))
              << "ap=" << rat_str(ap) << " n=" << n << " entry " << i << j;
    }
  }
}

TEST(LogMatrix, OrdOfEvalValues) {
  const HeckeData h = make_hecke(3, Rat(3), Rat(1));
  EXPECT_EQ(ord_of_eval(eval_mlog(h, 2), h), vm("-1/2", "-1/2", "-7/6", "-7/6"));
  EXPECT_EQ(ord_of_eval(eval_mlog(h, 3), h), vm("-5/3", "-5/3", "-8/9", "-8/9"));

  const HeckeData h0 = make_hecke(3, Rat(0), Rat(1));
  EXPECT_EQ(ord_of_eval(eval_mlog(h0, 2), h0), vm("inf", "inf", "-7/6", "-7/6"));
}

TEST(LogMatrix, ClosedFormValues) {
  EXPECT_EQ(closed_form_ord(3, ExtRat(1), rat(1, 2), rat(1, 2), 2),
            vm("-1/2", "-1/2", "-7/6", "-7/6"));
  EXPECT_EQ(closed_form_ord(3, ExtRat(1), rat(1, 2), rat(1, 2), 3),
            vm("-5/3", "-5/3", "-8/9", "-8/9"));
  EXPECT_EQ(closed_form_ord(3, ExtRat(2), rat(1, 2), rat(1, 2), 2),
            vm("1/2", "1/2", "-7/6", "-7/6"));
  EXPECT_EQ(closed_form_ord(3, ExtRat::infinity(), rat(1, 2), rat(1, 2), 2),
            vm("inf", "inf", "-7/6", "-7/6"));
  EXPECT_THROW(closed_form_ord(3, ExtRat(rat(1, 7)), rat(1, 2), rat(1, 2), 2), input_error);
  EXPECT_THROW(closed_form_ord(3, ExtRat(1), rat(1, 2), rat(1, 2), 1), input_error);
}

TEST(LogMatrix, OrdMatchesClosedFormSweep) {
  for (const Rat& ap : {Rat(3), Rat(9)}) {
    const HeckeData h = make_hecke(3, ap, Rat(1));
    for (int n = 2; n <= 4; ++n) {
      EXPECT_EQ(ord_of_eval(eval_mlog(h, n), h),
                closed_form_ord(h.p, h.r, h.v_alpha, h.v_beta, n))
          << "ap=" << rat_str(ap) << " n=" << n;
    }
  }
}

TEST(LogMatrix, ColumnsShareValuationWhenSlopesEqual) {
  const HeckeData h = make_hecke(3, Rat(3), Rat(1));
  for (int n = 2; n <= 4; ++n) {
    const ValMat m = ord_of_eval(eval_mlog(h, n), h);
    EXPECT_EQ(m.at(0, 0), m.at(0, 1));
    EXPECT_EQ(m.at(1, 0), m.at(1, 1));
  }
}

TEST(LogMatrix, EveryEntryFiniteSomewhere) {
  // each of the four limit-matrix entries has finite valuation at some w_n
  for (const Rat& ap : {Rat(3), Rat(0)}) {
    const HeckeData h = make_hecke(3, ap, Rat(1));
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        bool finite = false;
        for (int n = 2; n <= 3 && !finite; ++n)
          finite = !ord_of_eval(eval_mlog(h, n), h).at(i, j).is_inf();
        EXPECT_TRUE(finite) << "entry " << i << j;
      }
  }
}

TEST(LogMatrix, DetIdentity) {
  const HeckeData h = make_hecke(3, Rat(3), Rat(1));
  const DetIdentityReport rep = det_identity_check(h, 2);
  EXPECT_TRUE(rep.pass());
  EXPECT_EQ(rep.kappa, (QuadElem{rat(1, 27), rat(-2, 81)}));  // (3 - 2T)/81

  const HeckeData h0 = make_hecke(3, Rat(0), Rat(1));
  const DetIdentityReport rep0 = det_identity_check(h0, 3);
  EXPECT_TRUE(rep0.pass());
  const QuadRing R0 = quad_ring(h0);
  // kappa = (beta - alpha)/p^5; its square is (a_p^2 - 4c)/p^10 = -12/3^10
  const QuadElem k2 = qmul(R0, rep0.kappa, rep0.kappa);
  EXPECT_EQ(k2, qelem(rat(-12, 59049)));

  for (const Rat& ap : {Rat(3), Rat(0)}) {
    const HeckeData hh = make_hecke(3, ap, Rat(1));
    for (int n = 1; n <= 4; ++n) EXPECT_TRUE(det_identity_check(hh, n).pass()) << n;
  }
}

TEST(LogMatrix, MercatorDiagnosticAgainstBinomialOracle) {
  // independent oracle: coeff_k(prod_{j<=n} Phi_j / p^n) = binom(p^n, k+1)/p^n
  const HeckeData h = make_hecke(3, Rat(3), Rat(1));
  const auto merc = mercator_coeffs(11);
  std::vector<std::vector<ExtRat>> diags;
  for (int n = 2; n <= 5; ++n) {
    const auto diag = det_identity_check(h, n).mercator_diag;
    Int pn;
    mpz_pow_ui(pn.get_mpz_t(), Int(3).get_mpz_t(), static_cast<unsigned long>(n));
    for (int k = 0; k <= 10; ++k) {
      Int binom;
      mpz_bin_ui(binom.get_mpz_t(), pn.get_mpz_t(), static_cast<unsigned long>(k + 1));
      const Rat diff = rat(binom, pn) - merc[static_cast<std::size_t>(k)];
      EXPECT_EQ(diag[static_cast<std::size_t>(k)], vp_rat(diff, 3)) << "n=" << n << " k=" << k;
    }
    diags.push_back(diag);
  }
  // valuations grow with n wherever the truncation has not already matched
  // the Mercator coefficient exactly (an infinite entry means exact
  // agreement at that level; at k = p^n - 1 the top coefficient coincides)
  for (std::size_t k = 0; k <= 10; ++k)
    for (std::size_t i = 0; i + 1 < diags.size(); ++i) {
      if (diags[i][k].is_inf()) continue;
      EXPECT_TRUE(diags[i][k] <= diags[i + 1][k]) << "k=" << k << " step " << i;
    }
  // the degree-0 coefficient matches exactly at every level
  for (const auto& d : diags) EXPECT_TRUE(d[0].is_inf());
}

TEST(LogMatrix, PollackTruncations) {
  EXPECT_EQ(pollack_log_trunc(3, TSign::minus, 1), rat(1, 9) * cyclotomic_phi(3, 1, Var::X));
  EXPECT_EQ(pollack_log_trunc(3, TSign::plus, 1), rat(1, 9) * cyclotomic_phi(3, 2, Var::X));
  for (int m = 1; m <= 3; ++m) {
    EXPECT_EQ(pollack_log_trunc(3, TSign::plus, m).eval(Rat(0)), rat(1, 3));
    EXPECT_EQ(pollack_log_trunc(3, TSign::minus, m).eval(Rat(0)), rat(1, 3));
  }
}

TEST(LogMatrix, PollackPartialProductCompatibility) {
  // log+ * log- * p^2 = prod_{j<=2M} Phi_j / p^(2M)
  for (long p : {3L, 5L}) {
    for (int m = 1; m <= (p == 3 ? 3 : 2); ++m) {
      const UniPoly lhs = Rat(p * p) * (pollack_log_trunc(p, TSign::plus, m) *
                                        pollack_log_trunc(p, TSign::minus, m));
      Int pw;
      mpz_pow_ui(pw.get_mpz_t(), Int(p).get_mpz_t(), static_cast<unsigned long>(2 * m));
      const UniPoly rhs = rat(Int(1), pw) * prod_phi(p, 1, 2 * m, Var::X);
      EXPECT_EQ(lhs, rhs) << "p=" << p << " M=" << m;
    }
  }
}

TEST(LogMatrix, ApZeroStructure) {
  for (int n = 2; n <= 4; ++n) {
    const CheckReport rep = ap_zero_structure_check(3, Rat(1), n);
    for (const auto& it : rep.items) EXPECT_TRUE(it.pass) << "n=" << n << ": " << it.name;
  }
  EXPECT_TRUE(ap_zero_structure_check(3, Rat(-1), 4).all_pass());
}

TEST(LogMatrix, Stabilization) {
  const HeckeData h = make_hecke(3, Rat(3), Rat(1));
  EXPECT_TRUE(stabilization_check(h, 2, 4).all_pass());
  const HeckeData h0 = make_hecke(3, Rat(0), Rat(1));
  EXPECT_TRUE(stabilization_check(h0, 3, 5).all_pass());
  EXPECT_THROW(stabilization_check(h, 2, 2), input_error);
}
