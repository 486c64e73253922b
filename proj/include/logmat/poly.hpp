#pragma once

// Dense univariate polynomials over the rationals, with the handful of exact
// primitives the rest of the library needs: ring arithmetic, division,
// resultants (integer subresultant PRS after clearing denominators),
// cyclotomic polynomials in the shifted variable, and the Mercator series.

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "logmat/rational.hpp"

namespace logmat {

enum class Var : std::uint8_t { X, Y };

inline const char* var_name(Var v) { return v == Var::X ? "X" : "Y"; }

/// Dense polynomial, coefficients low-degree first, trailing zeros stripped.
/// The zero polynomial has an empty coefficient vector and degree -1.
class UniPoly {
 public:
  explicit UniPoly(Var var = Var::X) : var_(var) {}
  UniPoly(Var var, std::vector<Rat> coeffs) : var_(var), c_(std::move(coeffs)) { trim(); }

  static UniPoly constant(Var var, const Rat& c) {
    return UniPoly(var, std::vector<Rat>{c});
  }
  static UniPoly monomial(Var var, const Rat& c, std::size_t k) {
    std::vector<Rat> v(k + 1);
    v[k] = c;
    return UniPoly(var, std::move(v));
  }

  Var var() const { return var_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  long degree() const { return static_cast<long>(c_.size()) - 1; }

  const Rat& coeff(std::size_t k) const {
    static const Rat zero(0);
    return k < c_.size() ? c_[k] : zero;
  }
  const Rat& leading() const {
    if (c_.empty()) throw std::logic_error("leading coefficient of zero polynomial");
    return c_.back();
  }
  bool is_monic() const { return !c_.empty() && c_.back() == 1; }

  friend bool operator==(const UniPoly& a, const UniPoly& b) {
    return a.var_ == b.var_ && a.c_ == b.c_;
  }

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    check_vars(a, b);
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) + b.coeff(i);
    return UniPoly(a.var_, std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b) {
    check_vars(a, b);
    std::vector<Rat> r(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = a.coeff(i) - b.coeff(i);
    return UniPoly(a.var_, std::move(r));
  }
  friend UniPoly operator-(const UniPoly& a) {
    std::vector<Rat> r(a.c_);
    for (auto& x : r) x = -x;
    return UniPoly(a.var_, std::move(r));
  }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    check_vars(a, b);
    if (a.is_zero() || b.is_zero()) return UniPoly(a.var_);
    std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(a.var_, std::move(r));
  }
  friend UniPoly operator*(const Rat& s, const UniPoly& a) {
    if (s == 0) return UniPoly(a.var_);
    std::vector<Rat> r(a.c_);
    for (auto& x : r) x *= s;
    return UniPoly(a.var_, std::move(r));
  }

  Rat eval(const Rat& x) const {  // Horner
    Rat acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  UniPoly pow(unsigned long e) const {
    UniPoly base = *this;
    UniPoly acc = constant(var_, Rat(1));
    while (e > 0) {
      if (e & 1) acc = acc * base;
      e >>= 1;
      if (e) base = base * base;
    }
    return acc;
  }

  std::string str() const {
    if (is_zero()) return "0";
    std::string out;
    const char* v = var_name(var_);
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      if (!out.empty()) out += " + ";
      if (i == 0) {
        out += rat_str(c_[i]);
      } else {
        if (c_[i] != 1) out += rat_str(c_[i]) + "*";
        out += v;
        if (i > 1) out += "^" + std::to_string(i);
      }
    }
    return out;
  }

 private:
  static void check_vars(const UniPoly& a, const UniPoly& b) {
    if (a.var_ != b.var_)
      throw input_error(std::string("variable mismatch: ") + var_name(a.var_) + " vs " +
                        var_name(b.var_));
  }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  Var var_;
  std::vector<Rat> c_;
};

/// Euclidean division: a = q*b + r with deg r < deg b. Exact over Q.
inline std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (a.var() != b.var()) throw input_error("divmod: variable mismatch");
  if (b.is_zero()) throw input_error("divmod by zero polynomial");
  if (a.degree() < b.degree()) return {UniPoly(a.var()), a};
  std::vector<Rat> rem(a.coeffs());
  const auto db = static_cast<std::size_t>(b.degree());
  std::vector<Rat> quo(rem.size() - db);
  const Rat& lead = b.leading();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k] == 0) continue;
    Rat f = rem[k] / lead;
    quo[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs()[j];
  }
  rem.resize(db);  // everything at degree >= deg b cancelled exactly
  return {UniPoly(a.var(), std::move(quo)), UniPoly(a.var(), std::move(rem))};
}

namespace detail {

// Z[Y] helpers for the subresultant PRS; coefficients low-first, trimmed.
using ZPoly = std::vector<Int>;

inline void ztrim(ZPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline ZPoly zscale(const ZPoly& f, const Int& s) {
  ZPoly r(f);
  for (auto& x : r) x *= s;
  return r;
}

// Pseudo-remainder of lc(b)^(deg a - deg b + 1) * a by b; exact in Z[Y].
// The exponent is fixed up at the end so skipped degrees (from interior
// cancellation) still yield the exact power the subresultant PRS expects.
inline ZPoly zprem(ZPoly a, const ZPoly& b) {
  const Int& lb = b.back();
  long e = static_cast<long>(a.size()) - static_cast<long>(b.size()) + 1;
  while (!a.empty() && a.size() >= b.size()) {
    const Int top = a.back();
    const std::size_t shift = a.size() - b.size();
    for (auto& x : a) x *= lb;
    for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] -= top * b[j];
    a.pop_back();  // leading term cancels exactly
    ztrim(a);
    --e;
  }
  if (e > 0 && !a.empty()) {
    Int lbe;
    mpz_pow_ui(lbe.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(e));
    for (auto& x : a) x *= lbe;
  }
  return a;
}

inline ZPoly zdiv_exact(const ZPoly& f, const Int& d) {
  ZPoly r(f);
  for (auto& x : r) {
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), d.get_mpz_t());
    x = q;
  }
  return r;
}

// Resultant of two nonzero integer polynomials by the subresultant PRS.
inline Int zresultant(ZPoly a, ZPoly b) {
  ztrim(a);
  ztrim(b);
  if (a.empty() || b.empty()) throw std::logic_error("zresultant of zero polynomial");
  int sign = 1;
  if (a.size() < b.size()) {
    if (((a.size() - 1) & 1) && ((b.size() - 1) & 1)) sign = -sign;
    std::swap(a, b);
  }
  if (b.size() == 1) {  // constant: res = b^deg(a)
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b[0].get_mpz_t(), a.size() - 1);
    return sign * r;
  }
  Int g(1), h(1);
  while (true) {
    const long da = static_cast<long>(a.size()) - 1;
    const long db = static_cast<long>(b.size()) - 1;
    const long delta = da - db;
    if ((da & 1) && (db & 1)) sign = -sign;
    ZPoly r = zprem(a, b);
    a = std::move(b);
    Int divisor = g;
    for (long i = 0; i < delta; ++i) divisor *= h;
    b = r.empty() ? r : zdiv_exact(r, divisor);
    if (b.empty()) return Int(0);  // common factor
    g = a.back();
    // h <- h^(1-delta) * g^delta
    Int gn;
    mpz_pow_ui(gn.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
    if (delta >= 1) {
      Int hd;
      mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), gn.get_mpz_t(), hd.get_mpz_t());
    } else {
      h = h * gn;  // delta == 0
    }
    if (b.size() == 1) {
      const long dA = static_cast<long>(a.size()) - 1;
      Int num;
      mpz_pow_ui(num.get_mpz_t(), b[0].get_mpz_t(), static_cast<unsigned long>(dA));
      Int den;
      mpz_pow_ui(den.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(dA - 1));
      Int res;
      mpz_divexact(res.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
      return sign * res;
    }
  }
}

// Writes f = (1/den) * F with F integral; returns (F, den), den > 0.
inline std::pair<ZPoly, Int> clear_denominators(const UniPoly& f) {
  Int den(1);
  for (const auto& c : f.coeffs()) {
    Int d = c.get_den();
    Int g = gcd(den, d);
    den = den / g * d;
  }
  ZPoly F(f.coeffs().size());
  for (std::size_t i = 0; i < F.size(); ++i) {
    const Rat& c = f.coeffs()[i];
    F[i] = c.get_num() * (den / c.get_den());
  }
  return {std::move(F), std::move(den)};
}

}  // namespace detail

/// Resultant over Q. For monic a, resultant(a, b) = prod of b over the roots
/// of a, which is how the norm oracle uses it.
inline Rat resultant(const UniPoly& a, const UniPoly& b) {
  if (a.var() != b.var()) throw input_error("resultant: variable mismatch");
  if (a.is_zero()) throw input_error("resultant: first argument is zero");
  if (b.is_zero()) return Rat(0);
  auto [A, da] = detail::clear_denominators(a);
  auto [B, db] = detail::clear_denominators(b);
  Int zres = detail::zresultant(A, B);
  // res(a, b) = da^(-deg b) db^(-deg a) res(A, B)
  Int dapow, dbpow;
  mpz_pow_ui(dapow.get_mpz_t(), da.get_mpz_t(), static_cast<unsigned long>(b.degree()));
  mpz_pow_ui(dbpow.get_mpz_t(), db.get_mpz_t(), static_cast<unsigned long>(a.degree()));
  return rat(zres, dapow * dbpow);
}

/// Cyclotomic polynomial of the p^j-th roots of unity, written in 1+Y:
/// sum_{i=0}^{p-1} (1+Y)^(i*p^(j-1)). Monic of degree p^(j-1)(p-1),
/// constant term p, Eisenstein at p.
inline UniPoly cyclotomic_phi(long p, int j, Var var = Var::Y) {
  require_odd_prime(p);
  if (j < 1) throw input_error("cyclotomic_phi: level must be >= 1");
  unsigned long inner = 1;
  for (int i = 1; i < j; ++i) inner *= static_cast<unsigned long>(p);
  const UniPoly one_plus = UniPoly(var, {Rat(1), Rat(1)});
  const UniPoly q = one_plus.pow(inner);  // (1+Y)^(p^(j-1))
  UniPoly acc = UniPoly::constant(var, Rat(1));
  UniPoly qpow = q;
  for (long i = 1; i < p; ++i) {
    acc = acc + qpow;
    if (i + 1 < p) qpow = qpow * q;
  }
  return acc;
}

/// First D coefficients of log(1+X)/X: c_k = (-1)^k / (k+1).
inline std::vector<Rat> mercator_coeffs(int D) {
  if (D < 1) throw input_error("mercator_coeffs: D must be >= 1");
  std::vector<Rat> c(static_cast<std::size_t>(D));
  for (int k = 0; k < D; ++k) c[static_cast<std::size_t>(k)] = rat(k % 2 == 0 ? 1 : -1, k + 1);
  return c;
}

}  // namespace logmat
