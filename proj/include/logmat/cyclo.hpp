#pragma once

// Exact arithmetic in Q(zeta_{p^n}) written on the power basis of the
// uniformizer w = zeta_{p^n} - 1, together with the valuation extending vp.
// The extension is totally ramified of degree e = p^(n-1)(p-1), so the
// valuation of a nonzero element is the minimum of vp(coeff_i) + i/e; the
// candidates have pairwise distinct fractional parts, hence no ties ever.

#include <memory>
#include <vector>

#include "logmat/poly.hpp"
#include "logmat/rational.hpp"

namespace logmat {

class CycloCtx;
using CycloCtxPtr = std::shared_ptr<const CycloCtx>;

/// The field Q(zeta_{p^n}) presented as Q[Y] modulo the p^n-th cyclotomic
/// polynomial in 1+Y. Immutable; share freely.
class CycloCtx {
 public:
  CycloCtx(long p, int n)
      : p_(p), n_(n), modulus_(cyclotomic_phi(p, n, Var::Y)),
        e_(modulus_.degree()) {
    if (n < 1) throw input_error("cyclotomic context needs level >= 1");
  }

  long p() const { return p_; }
  int level() const { return n_; }
  long degree() const { return e_; }
  const UniPoly& modulus() const { return modulus_; }

  bool same(const CycloCtx& other) const { return p_ == other.p_ && n_ == other.n_; }

 private:
  long p_;
  int n_;
  UniPoly modulus_;
  long e_;
};

inline CycloCtxPtr make_cyclo_ctx(long p, int n) {
  return std::make_shared<const CycloCtx>(p, n);
}

/// Element sum_i coeffs[i] * w^i with exactly e stored coefficients.
class CycloElem {
 public:
  CycloElem(CycloCtxPtr ctx, std::vector<Rat> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    c_.resize(static_cast<std::size_t>(ctx_->degree()));
  }

  static CycloElem zero(CycloCtxPtr ctx) { return CycloElem(std::move(ctx), {}); }
  static CycloElem from_rat(CycloCtxPtr ctx, const Rat& q) { return CycloElem(std::move(ctx), {q}); }
  static CycloElem uniformizer(CycloCtxPtr ctx) {
    return CycloElem(std::move(ctx), {Rat(0), Rat(1)});
  }

  const CycloCtxPtr& ctx() const { return ctx_; }
  const std::vector<Rat>& coeffs() const { return c_; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const CycloElem& a, const CycloElem& b) {
    a.check_ctx(b);
    return a.c_ == b.c_;
  }

  friend CycloElem operator+(const CycloElem& a, const CycloElem& b) {
    a.check_ctx(b);
    std::vector<Rat> r(a.c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.c_[i] + b.c_[i];
    return CycloElem(a.ctx_, std::move(r));
  }
  friend CycloElem operator-(const CycloElem& a, const CycloElem& b) {
    a.check_ctx(b);
    std::vector<Rat> r(a.c_.size());
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.c_[i] - b.c_[i];
    return CycloElem(a.ctx_, std::move(r));
  }
  friend CycloElem operator-(const CycloElem& a) {
    std::vector<Rat> r(a.c_);
    for (auto& x : r) x = -x;
    return CycloElem(a.ctx_, std::move(r));
  }
  friend CycloElem operator*(const Rat& s, const CycloElem& a) {
    std::vector<Rat> r(a.c_);
    for (auto& x : r) x *= s;
    return CycloElem(a.ctx_, std::move(r));
  }

  UniPoly as_poly() const { return UniPoly(Var::Y, c_); }

  void check_ctx(const CycloElem& other) const {
    if (!ctx_->same(*other.ctx_)) throw input_error("cyclotomic context mismatch");
  }

 private:
  CycloCtxPtr ctx_;
  std::vector<Rat> c_;
};

/// Reduces a polynomial in Y modulo the context modulus.
inline CycloElem cyclo_reduce(const CycloCtxPtr& ctx, const UniPoly& f) {
  if (f.var() != Var::Y) throw input_error("cyclo_reduce expects a polynomial in Y");
  if (f.degree() < ctx->degree()) return CycloElem(ctx, f.coeffs());
  auto [q, r] = divmod(f, ctx->modulus());
  return CycloElem(ctx, r.coeffs());
}

inline CycloElem operator*(const CycloElem& a, const CycloElem& b) {
  a.check_ctx(b);
  if (a.is_zero() || b.is_zero()) return CycloElem::zero(a.ctx());
  return cyclo_reduce(a.ctx(), a.as_poly() * b.as_poly());
}

/// Phi_{p^j}(1+Y) evaluated at Y = w. For j < n the value has valuation
/// 1/p^(n-j); for j = n it is zero; for j > n it is the constant p.
inline CycloElem phi_at_varpi(const CycloCtxPtr& ctx, int j) {
  return cyclo_reduce(ctx, cyclotomic_phi(ctx->p(), j, Var::Y));
}

/// Valuation via the basis-minimum rule: min_i vp(c_i) + i/e. Exact and
/// tie-free because the i/e have distinct fractional parts while vp of a
/// rational is an integer. +inf exactly for zero.
inline ExtRat val_min(const CycloElem& x) {
  const long p = x.ctx()->p();
  const long e = x.ctx()->degree();
  ExtRat best = ExtRat::infinity();
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    const Rat& c = x.coeffs()[i];
    if (c == 0) continue;
    ExtRat cand = vp_rat(c, p) + ExtRat(rat(static_cast<long>(i), e));
    best = min(best, cand);
  }
  return best;
}

/// Independent valuation oracle through the norm: v(x) equals
/// vp(resultant(modulus, x)) / e since p is totally ramified with a unique
/// prime above it. Slower than val_min; kept as a cross-check.
inline ExtRat val_norm_oracle(const CycloElem& x) {
  if (x.is_zero()) return ExtRat::infinity();
  const Rat nrm = resultant(x.ctx()->modulus(), x.as_poly());
  ExtRat v = vp_rat(nrm, x.ctx()->p());
  return ExtRat(v.finite() / x.ctx()->degree());
}

}  // namespace logmat
