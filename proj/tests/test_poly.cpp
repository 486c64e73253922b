#include "logmat/poly.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace logmat;

namespace {

UniPoly ypoly(std::initializer_list<long> coeffs) {
  std::vector<Rat> c;
  for (long v : coeffs) c.emplace_back(v);
  return UniPoly(Var::Y, std::move(c));
}

UniPoly random_poly(std::mt19937_64& gen, int max_deg, bool monic = false) {
  std::uniform_int_distribution<int> deg(0, max_deg);
  std::uniform_int_distribution<long> coeff(-9, 9);
  const int d = deg(gen);
  std::vector<Rat> c(static_cast<std::size_t>(d) + 1);
  for (auto& x : c) x = Rat(coeff(gen));
  if (monic)
    c.back() = 1;
  else if (c.back() == 0)
    c.back() = 1;
  return UniPoly(Var::Y, std::move(c));
}

}  // namespace

TEST(Poly, ArithmeticExamples) {
  const UniPoly f = ypoly({3, 3, 1});  // Y^2 + 3Y + 3
  EXPECT_EQ(f * ypoly({0, 1}), ypoly({0, 3, 3, 1}));
  EXPECT_EQ(f.eval(Rat(0)), Rat(3));

  const auto [q, r] = divmod(ypoly({0, 0, 0, 1}), f);  // Y^3 by Y^2+3Y+3
  EXPECT_EQ(q, ypoly({-3, 1}));
  EXPECT_EQ(r, ypoly({9, 6}));

  EXPECT_THROW(divmod(f, UniPoly(Var::Y)), input_error);
  EXPECT_THROW(f + UniPoly(Var::X), input_error);
}

TEST(Poly, DivmodRoundTrip) {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 200; ++trial) {
    const UniPoly a = random_poly(gen, 8);
    const UniPoly b = random_poly(gen, 4);
    const auto [q, r] = divmod(a, b);
    EXPECT_EQ(q * b + r, a);
    EXPECT_LT(r.degree(), b.degree());
  }
}

TEST(Poly, ResultantExamples) {
  EXPECT_EQ(resultant(ypoly({3, 3, 1}), ypoly({0, 1})), Rat(3));
  EXPECT_EQ(resultant(ypoly({3, 3, 1}), ypoly({3})), Rat(9));
  EXPECT_EQ(resultant(ypoly({-1, 1}), ypoly({-2, 1})), Rat(-1));
  EXPECT_THROW(resultant(UniPoly(Var::Y), UniPoly(Var::Y)), input_error);
}

TEST(Poly, ResultantMultiplicativeForMonicLeft) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 100; ++trial) {
    const UniPoly a = random_poly(gen, 4, /*monic=*/true);
    const UniPoly b = random_poly(gen, 3);
    const UniPoly c = random_poly(gen, 3);
    EXPECT_EQ(resultant(a, b * c), resultant(a, b) * resultant(a, c));
  }
}

TEST(Poly, ResultantAgainstRootProducts) {
  // res(a, b) = lc(a)^deg(b) * prod b(root_i) for a with known roots
  const UniPoly a = ypoly({-1, 1}) * ypoly({-2, 1}) * ypoly({5, 1});  // roots 1, 2, -5
  std::mt19937_64 gen(9);
  for (int trial = 0; trial < 50; ++trial) {
    const UniPoly b = random_poly(gen, 4);
    EXPECT_EQ(resultant(a, b), b.eval(Rat(1)) * b.eval(Rat(2)) * b.eval(Rat(-5)));
  }
}

TEST(Poly, CyclotomicExamples) {
  EXPECT_EQ(cyclotomic_phi(3, 1), ypoly({3, 3, 1}));
  EXPECT_EQ(cyclotomic_phi(3, 2), ypoly({3, 9, 18, 21, 15, 6, 1}));
  const UniPoly p5 = cyclotomic_phi(5, 1);
  EXPECT_EQ(p5.degree(), 4);
  EXPECT_EQ(p5.coeff(0), Rat(5));
  EXPECT_TRUE(p5.is_monic());
  EXPECT_THROW(cyclotomic_phi(3, 0), input_error);
  EXPECT_THROW(cyclotomic_phi(4, 1), input_error);
}

TEST(Poly, CyclotomicEisenstein) {
  for (long p : {3L, 5L}) {
    for (int j = 1; j <= 4; ++j) {
      const UniPoly phi = cyclotomic_phi(p, j);
      EXPECT_EQ(phi.degree(), static_cast<long>(std::pow(p, j - 1)) * (p - 1));
      EXPECT_TRUE(phi.is_monic());
      EXPECT_EQ(phi.coeff(0), Rat(p));
      EXPECT_EQ(phi.eval(Rat(0)), Rat(p));
      for (long k = 0; k < phi.degree(); ++k) {
        // every non-leading coefficient divisible by p, constant not by p^2
        EXPECT_TRUE(vp_rat(phi.coeff(static_cast<std::size_t>(k)), p) >= ExtRat(1));
      }
      EXPECT_EQ(vp_rat(phi.coeff(0), p), ExtRat(1));
    }
  }
}

TEST(Poly, CyclotomicTelescoping) {
  // (1+Y)^(p^j) - 1 = ((1+Y)^(p^(j-1)) - 1) * Phi_{p^j}(1+Y)
  const UniPoly one = UniPoly::constant(Var::Y, Rat(1));
  for (long p : {3L, 5L}) {
    for (int j = 1; j <= 4; ++j) {
      unsigned long pj = 1, pj1 = 1;
      for (int i = 0; i < j; ++i) pj *= static_cast<unsigned long>(p);
      for (int i = 0; i < j - 1; ++i) pj1 *= static_cast<unsigned long>(p);
      const UniPoly base = ypoly({1, 1});
      EXPECT_EQ(base.pow(pj) - one, (base.pow(pj1) - one) * cyclotomic_phi(p, j));
    }
  }
}

TEST(Poly, MercatorCoeffs) {
  const auto c = mercator_coeffs(6);
  EXPECT_EQ(c[0], Rat(1));
  EXPECT_EQ(c[1], rat(-1, 2));
  EXPECT_EQ(c[2], rat(1, 3));
  EXPECT_EQ(c[5], rat(-1, 6));
  EXPECT_THROW(mercator_coeffs(0), input_error);
}
