#pragma once

// The abstract quadratic quotient ring Q[T]/(T^2 - tr*T + nrm), where T
// stands for the Hecke root alpha and tr - T for beta. Polynomials in X with
// coefficients in this ring, and 2x2 matrices of those, are enough to carry
// every symbolic computation with C, C_j, A and their products without ever
// choosing an embedding of the roots.

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "logmat/cyclo.hpp"
#include "logmat/hecke.hpp"
#include "logmat/poly.hpp"
#include "logmat/rational.hpp"

namespace logmat {

struct QuadRing {
  Rat tr;   // alpha + beta
  Rat nrm;  // alpha * beta

  friend bool operator==(const QuadRing&, const QuadRing&) = default;
};

inline QuadRing quad_ring(const HeckeData& h) { return QuadRing{h.a_p, h.c}; }

/// c0 + c1*T. Addition is ring-independent; multiplication reduces T^2 via
/// the ring relation.
struct QuadElem {
  Rat c0;
  Rat c1;

  bool is_zero() const { return c0 == 0 && c1 == 0; }
  bool is_rational() const { return c1 == 0; }

  friend bool operator==(const QuadElem&, const QuadElem&) = default;
  friend QuadElem operator+(const QuadElem& a, const QuadElem& b) {
    return {a.c0 + b.c0, a.c1 + b.c1};
  }
  friend QuadElem operator-(const QuadElem& a, const QuadElem& b) {
    return {a.c0 - b.c0, a.c1 - b.c1};
  }
  friend QuadElem operator-(const QuadElem& a) { return {-a.c0, -a.c1}; }

  std::string str() const {
    if (c1 == 0) return rat_str(c0);
    std::string out = rat_str(c1) + "*T";
    if (c0 != 0) out = rat_str(c0) + " + " + out;
    return out;
  }
};

inline QuadElem qelem(const Rat& q) { return {q, Rat(0)}; }
inline QuadElem quad_alpha() { return {Rat(0), Rat(1)}; }
inline QuadElem quad_beta(const QuadRing& R) { return {R.tr, Rat(-1)}; }

inline QuadElem qmul(const QuadRing& R, const QuadElem& a, const QuadElem& b) {
  // (a0 + a1 T)(b0 + b1 T) with T^2 = tr*T - nrm
  return {a.c0 * b.c0 - R.nrm * a.c1 * b.c1,
          a.c0 * b.c1 + a.c1 * b.c0 + R.tr * a.c1 * b.c1};
}

/// N(c0 + c1 T) = (c0 + c1 alpha)(c0 + c1 beta).
inline Rat qnorm(const QuadRing& R, const QuadElem& a) {
  return a.c0 * a.c0 + R.tr * a.c0 * a.c1 + R.nrm * a.c1 * a.c1;
}

inline QuadElem qinv(const QuadRing& R, const QuadElem& a) {
  const Rat n = qnorm(R, a);
  if (n == 0) throw input_error("quadratic ring element with zero norm is not invertible");
  // conjugate (c0 + tr*c1) - c1*T over the norm
  return {(a.c0 + R.tr * a.c1) / n, -a.c1 / n};
}

inline QuadElem qpow(const QuadRing& R, QuadElem base, long e) {
  if (e < 0) {
    base = qinv(R, base);
    e = -e;
  }
  QuadElem acc = qelem(Rat(1));
  while (e > 0) {
    if (e & 1) acc = qmul(R, acc, base);
    e >>= 1;
    if (e) base = qmul(R, base, base);
  }
  return acc;
}

/// Dense polynomial in X over the quadratic quotient ring.
class QPoly {
 public:
  QPoly() = default;
  explicit QPoly(std::vector<QuadElem> coeffs) : c_(std::move(coeffs)) { trim(); }

  static QPoly constant(const QuadElem& q) { return QPoly({q}); }
  static QPoly from_unipoly(const UniPoly& f) {
    std::vector<QuadElem> c(f.coeffs().size());
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = qelem(f.coeffs()[i]);
    return QPoly(std::move(c));
  }

  const std::vector<QuadElem>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  QuadElem coeff(std::size_t k) const { return k < c_.size() ? c_[k] : QuadElem{}; }

  friend bool operator==(const QPoly&, const QPoly&) = default;

  friend QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<QuadElem> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return QPoly(std::move(r));
  }
  friend QPoly operator-(const QPoly& a, const QPoly& b) {
    std::vector<QuadElem> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return QPoly(std::move(r));
  }
  friend QPoly operator-(const QPoly& a) {
    std::vector<QuadElem> r(a.c_);
    for (auto& x : r) x = -x;
    return QPoly(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<QuadElem> c_;
};

inline QPoly qp_mul(const QuadRing& R, const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) return QPoly();
  std::vector<QuadElem> r(a.coeffs().size() + b.coeffs().size() - 1);
  for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
    if (a.coeffs()[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
      if (b.coeffs()[j].is_zero()) continue;
      r[i + j] = r[i + j] + qmul(R, a.coeffs()[i], b.coeffs()[j]);
    }
  }
  return QPoly(std::move(r));
}

inline QPoly qp_scale(const QuadRing& R, const QuadElem& s, const QPoly& a) {
  std::vector<QuadElem> r(a.coeffs());
  for (auto& x : r) x = qmul(R, s, x);
  return QPoly(std::move(r));
}

/// Exact division by a polynomial with invertible (nonzero-norm) leading
/// coefficient; throws if the remainder is nonzero.
inline QPoly qp_div_exact(const QuadRing& R, const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw input_error("division by zero polynomial");
  if (a.is_zero()) return QPoly();
  if (a.degree() < b.degree()) throw input_error("inexact polynomial division");
  std::vector<QuadElem> rem(a.coeffs());
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<QuadElem> quo(rem.size() - db);
  const QuadElem lead_inv = qinv(R, b.coeffs()[db]);
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    QuadElem f = qmul(R, rem[k], lead_inv);
    quo[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j)
      rem[k - db + j] = rem[k - db + j] - qmul(R, f, b.coeffs()[j]);
  }
  for (std::size_t j = 0; j < db; ++j)
    if (!rem[j].is_zero()) throw input_error("inexact polynomial division");
  return QPoly(std::move(quo));
}

/// 2x2 matrix of quotient-ring polynomials in X.
struct PolyMat2 {
  QuadRing ring;
  std::array<QPoly, 4> m;  // row-major

  const QPoly& at(int i, int j) const { return m[static_cast<std::size_t>(2 * i + j)]; }
  QPoly& at(int i, int j) { return m[static_cast<std::size_t>(2 * i + j)]; }

  friend bool operator==(const PolyMat2&, const PolyMat2&) = default;
};

inline PolyMat2 mat_mul(const PolyMat2& a, const PolyMat2& b) {
  if (!(a.ring == b.ring)) throw input_error("quadratic ring mismatch");
  PolyMat2 r{a.ring, {}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      r.at(i, j) = qp_mul(a.ring, a.at(i, 0), b.at(0, j)) + qp_mul(a.ring, a.at(i, 1), b.at(1, j));
  return r;
}

inline QPoly mat_det(const PolyMat2& a) {
  return qp_mul(a.ring, a.at(0, 0), a.at(1, 1)) - qp_mul(a.ring, a.at(0, 1), a.at(1, 0));
}

/// Element of Q(zeta_{p^n}) tensored with the quadratic quotient ring:
/// a + b*T with cyclotomic a, b. Used to evaluate matrix entries at w.
struct CycloQuad {
  CycloElem c0;
  CycloElem c1;

  friend bool operator==(const CycloQuad& a, const CycloQuad& b) {
    return a.c0 == b.c0 && a.c1 == b.c1;
  }
};

inline CycloQuad cq_zero(const CycloCtxPtr& ctx) {
  return {CycloElem::zero(ctx), CycloElem::zero(ctx)};
}

inline CycloQuad cq_add(const CycloQuad& a, const CycloQuad& b) {
  return {a.c0 + b.c0, a.c1 + b.c1};
}

inline CycloQuad cq_mul_elem(const CycloQuad& a, const CycloElem& s) {
  return {a.c0 * s, a.c1 * s};
}

inline CycloQuad cq_embed(const CycloCtxPtr& ctx, const QuadElem& q) {
  return {CycloElem::from_rat(ctx, q.c0), CycloElem::from_rat(ctx, q.c1)};
}

/// Horner evaluation of a quotient-ring polynomial at a cyclotomic point.
/// The point is a scalar for the T-component, so no ring reduction occurs.
inline CycloQuad qp_eval(const QPoly& f, const CycloElem& x) {
  const CycloCtxPtr& ctx = x.ctx();
  CycloQuad acc = cq_zero(ctx);
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    acc = cq_add(cq_mul_elem(acc, x), cq_embed(ctx, f.coeffs()[i]));
  }
  return acc;
}

}  // namespace logmat
