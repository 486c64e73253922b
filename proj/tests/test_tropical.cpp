#include "logmat/tropical.hpp"

#include <gtest/gtest.h>

#include <random>

#include "logmat/cyclo.hpp"

using namespace logmat;

namespace {

TropMat tmat(const char* a, const char* b, const char* c, const char* d) {
  TropMat m;
  m.at(0, 0) = {parse_ext_rat(a), true};
  m.at(0, 1) = {parse_ext_rat(b), true};
  m.at(1, 0) = {parse_ext_rat(c), true};
  m.at(1, 1) = {parse_ext_rat(d), true};
  return m;
}

CycloElem random_elem(std::mt19937_64& gen, const CycloCtxPtr& ctx) {
  std::uniform_int_distribution<long> coeff(-20, 20);
  std::vector<Rat> c(static_cast<std::size_t>(ctx->degree()));
  for (auto& x : c) x = Rat(coeff(gen));
  return CycloElem(ctx, std::move(c));
}

struct ElemMat {
  std::array<CycloElem, 4> e;

  const CycloElem& at(int i, int j) const { return e[static_cast<std::size_t>(2 * i + j)]; }
};

ElemMat random_mat(std::mt19937_64& gen, const CycloCtxPtr& ctx) {
  return {{random_elem(gen, ctx), random_elem(gen, ctx), random_elem(gen, ctx),
           random_elem(gen, ctx)}};
}

ElemMat mul(const ElemMat& a, const ElemMat& b) {
  ElemMat r = a;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.e[static_cast<std::size_t>(2 * i + j)] =
          a.at(i, 0) * b.at(0, j) + a.at(i, 1) * b.at(1, j);
  return r;
}

TropMat ord_mat(const ElemMat& m) {
  TropMat r;
  for (std::size_t k = 0; k < 4; ++k) r.e[k] = {val_min(m.e[k]), true};
  return r;
}

}  // namespace

TEST(Tropical, ProductExample) {
  const TropMat lhs = tmat("1", "0", "1/3", "inf");
  const TropMat rhs = tmat("-3/2", "-3/2", "inf", "inf");
  EXPECT_EQ(trop_mul(lhs, rhs), tmat("-1/2", "-1/2", "-7/6", "-7/6"));
}

TEST(Tropical, CheckedTieRaises) {
  const TropMat a = tmat("0", "0", "inf", "inf");
  const TropMat b = tmat("0", "inf", "0", "inf");
  EXPECT_THROW(trop_mul(a, b), tie_error);
  const TropMat lb = trop_mul(a, b, TieMode::lower_bound);
  EXPECT_EQ(lb.at(0, 0).value, ExtRat(0));
  EXPECT_FALSE(lb.at(0, 0).exact);
}

TEST(Tropical, IdentityMatrix) {
  const TropMat id = tmat("0", "inf", "inf", "0");
  const TropMat n = tmat("1/2", "-3", "7", "0");
  EXPECT_EQ(trop_mul(id, n), n);
  EXPECT_EQ(trop_mul(n, id), n);
}

TEST(Tropical, SoundOnTieFreeExactMatrices) {
  std::mt19937_64 gen(31);
  const auto ctx = make_cyclo_ctx(3, 2);
  int done = 0;
  while (done < 100) {
    const ElemMat a = random_mat(gen, ctx);
    const ElemMat b = random_mat(gen, ctx);
    TropMat predicted;
    try {
      predicted = trop_mul(ord_mat(a), ord_mat(b));
    } catch (const tie_error&) {
      continue;  // resample tie patterns
    }
    EXPECT_EQ(ord_mat(mul(a, b)).values(), predicted.values());
    ++done;
  }
}

TEST(Tropical, AssociativeOnTieFreeChains) {
  // the closed-form chains are tie-free; check both association orders
  for (long p : {3L, 5L}) {
    for (int n = 3; n <= 6; ++n) {
      std::vector<TropMat> f;
      for (int m = 1; m <= n - 1; ++m) {
        Int pw;
        mpz_pow_ui(pw.get_mpz_t(), Int(p).get_mpz_t(), static_cast<unsigned long>(n - m));
        TropMat t;
        t.at(0, 0) = {ExtRat(1), true};  // r = 1
        t.at(0, 1) = {ExtRat(0), true};
        t.at(1, 0) = {ExtRat(rat(Int(1), pw)), true};
        t.at(1, 1) = {ExtRat::infinity(), true};
        f.push_back(t);
      }
      TropMat left = f[0];
      for (std::size_t i = 1; i < f.size(); ++i) left = trop_mul(left, f[i]);
      TropMat right = f.back();
      for (std::size_t i = f.size() - 1; i-- > 0;) right = trop_mul(f[i], right);
      EXPECT_EQ(left.values(), right.values()) << "p=" << p << " n=" << n;
    }
  }
}

TEST(Tropical, LowerBoundNeverExceedsTruth) {
  // engineered cancellations: entries with equal valuations that cancel
  std::mt19937_64 gen(37);
  const auto ctx = make_cyclo_ctx(3, 2);
  for (int trial = 0; trial < 50; ++trial) {
    ElemMat a = random_mat(gen, ctx);
    ElemMat b = random_mat(gen, ctx);
    // force the (1,1) candidates to tie and partially cancel:
    // a11*b11 + a12*b21 with a12 = a11, b21 = -b11 + something small
    a.e[1] = a.e[0];
    b.e[2] = -b.e[0] + Rat(9) * random_elem(gen, ctx);
    const TropMat lb = trop_mul(ord_mat(a), ord_mat(b), TieMode::lower_bound);
    const TropMat truth = ord_mat(mul(a, b));
    for (std::size_t k = 0; k < 4; ++k)
      EXPECT_TRUE(lb.e[k].value <= truth.e[k].value) << "entry " << k;
  }
}

TEST(Tropical, SymbolicCompare) {
  const long p = 3;
  const SymbolicVal r = SymbolicVal::sym_r();
  const SymbolicVal two_r = r + r;
  // 2r > 1/p is exactly the hypothesis
  EXPECT_EQ(sym_compare(two_r, SymbolicVal::constant(rat(1, p)), p), 1);
  // 2r vs 1/p^2: decidable since 1/p^2 < 1/p
  EXPECT_EQ(sym_compare(two_r, SymbolicVal::constant(rat(1, 9)), p), 1);
  // r vs 1/2: not decidable from r > 1/6 alone
  EXPECT_THROW(sym_compare(r, SymbolicVal::constant(rat(1, 2)), p), undecidable_error);
  // a-dependent comparisons are undecidable unless identical
  EXPECT_THROW(sym_compare(SymbolicVal::sym_a(), SymbolicVal::constant(Rat(0)), p),
               undecidable_error);
  EXPECT_EQ(sym_compare(SymbolicVal::sym_a(), SymbolicVal::sym_a(), p), 0);
  EXPECT_EQ(sym_compare(SymbolicVal::infinity(), r, p), 1);
}

TEST(Tropical, ChainExamples) {
  const long p = 3;
  const SymbolicVal r = SymbolicVal::sym_r();
  const SymbolicVal a = SymbolicVal::sym_a();
  const SymbolicVal b = SymbolicVal::sym_b();

  // n = 2: [[r+a, r+b], [1/p+a, 1/p+b]]
  const SymMat c2 = claim_chain(p, r, 2, a, b);
  EXPECT_EQ(c2[0], r + a);
  EXPECT_EQ(c2[1], r + b);
  EXPECT_EQ(c2[2], SymbolicVal::constant(rat(1, 3)) + a);
  EXPECT_EQ(c2[3], SymbolicVal::constant(rat(1, 3)) + b);

  // n = 3: [[1/p+a, 1/p+b], [r+1/p^2+a, r+1/p^2+b]]
  const SymMat c3 = claim_chain(p, r, 3, a, b);
  EXPECT_EQ(c3[0], SymbolicVal::constant(rat(1, 3)) + a);
  EXPECT_EQ(c3[2], r + SymbolicVal::constant(rat(1, 9)) + a);

  // n = 5: [[t_5^- + a, ...], [r + t_5^+ + a, ...]]
  const SymMat c5 = claim_chain(p, r, 5, a, b);
  EXPECT_EQ(c5[0], SymbolicVal::constant(t_n(p, 5, TSign::minus)) + a);
  EXPECT_EQ(c5[2], r + SymbolicVal::constant(t_n(p, 5, TSign::plus)) + a);
}

TEST(Tropical, ChainMatchesClosedFormSymbolicR) {
  // fully symbolic r, decided only through r > 1/(2p)
  for (long p : {3L, 5L}) {
    const SymbolicVal r = SymbolicVal::sym_r();
    const SymbolicVal a = SymbolicVal::sym_a();
    const SymbolicVal b = SymbolicVal::sym_b();
    for (int n = 2; n <= 8; ++n)
      EXPECT_EQ(claim_chain(p, r, n, a, b), claim_closed_form(p, r, n, a, b))
          << "p=" << p << " n=" << n;
  }
}

TEST(Tropical, VerifyChain) {
  EXPECT_TRUE(verify_chain(3, Rat(1), 6).pass());
  EXPECT_TRUE(verify_chain(3, rat(1, 2), 8).pass());
  EXPECT_THROW(verify_chain(3, rat(1, 7), 4), input_error);  // 2/7 < 1/3

  const ChainCheckReport rep = verify_chain(3, Rat(1), 6);
  ASSERT_EQ(rep.deltas.size(), 5u);
  EXPECT_EQ(rep.deltas[0], rat(1, 9));   // n = 2
  EXPECT_EQ(rep.deltas[1], Rat(0));      // n = 3
  EXPECT_EQ(rep.deltas[2], rat(1, 81));  // n = 4
}
