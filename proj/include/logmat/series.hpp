#pragma once

// Truncated one- and two-variable power series over Q, exact modulo X^D
// (resp. (Xp^D, Xq^D)). These stand in for Iwasawa-algebra elements at a
// finite cap: all ring operations are exact below the cap, division requires
// a constant term that is a p-adic unit, and the cyclotomic specialization
// maps (Xp, Xq) -> (X, X).

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "logmat/poly.hpp"
#include "logmat/rational.hpp"

namespace logmat {

class TruncSeries1 {
 public:
  explicit TruncSeries1(int cap) : cap_(check_cap(cap)), c_(static_cast<std::size_t>(cap)) {}
  TruncSeries1(int cap, std::vector<Rat> coeffs) : cap_(check_cap(cap)), c_(std::move(coeffs)) {
    c_.resize(static_cast<std::size_t>(cap_));
  }

  int cap() const { return cap_; }
  const std::vector<Rat>& coeffs() const { return c_; }
  const Rat& coeff(int k) const { return c_[static_cast<std::size_t>(k)]; }
  Rat& coeff(int k) { return c_[static_cast<std::size_t>(k)]; }

  bool is_zero() const {
    for (const auto& x : c_)
      if (x != 0) return false;
    return true;
  }

  /// Index of the first nonzero coefficient; cap() for the zero series.
  int order() const {
    for (int k = 0; k < cap_; ++k)
      if (c_[static_cast<std::size_t>(k)] != 0) return k;
    return cap_;
  }

  friend bool operator==(const TruncSeries1& a, const TruncSeries1& b) {
    a.check_cap_match(b);
    return a.c_ == b.c_;
  }

  friend TruncSeries1 operator+(const TruncSeries1& a, const TruncSeries1& b) {
    a.check_cap_match(b);
    TruncSeries1 r(a.cap_);
    for (int k = 0; k < a.cap_; ++k) r.coeff(k) = a.coeff(k) + b.coeff(k);
    return r;
  }
  friend TruncSeries1 operator-(const TruncSeries1& a, const TruncSeries1& b) {
    a.check_cap_match(b);
    TruncSeries1 r(a.cap_);
    for (int k = 0; k < a.cap_; ++k) r.coeff(k) = a.coeff(k) - b.coeff(k);
    return r;
  }
  friend TruncSeries1 operator-(const TruncSeries1& a) {
    TruncSeries1 r(a.cap_);
    for (int k = 0; k < a.cap_; ++k) r.coeff(k) = -a.coeff(k);
    return r;
  }
  friend TruncSeries1 operator*(const TruncSeries1& a, const TruncSeries1& b) {
    a.check_cap_match(b);
    TruncSeries1 r(a.cap_);
    for (int i = 0; i < a.cap_; ++i) {
      if (a.coeff(i) == 0) continue;
      for (int j = 0; i + j < a.cap_; ++j) r.coeff(i + j) += a.coeff(i) * b.coeff(j);
    }
    return r;
  }
  friend TruncSeries1 operator*(const Rat& s, const TruncSeries1& a) {
    TruncSeries1 r(a.cap_);
    for (int k = 0; k < a.cap_; ++k) r.coeff(k) = s * a.coeff(k);
    return r;
  }

  /// True when the first `upto` coefficients agree.
  bool prefix_equal(const TruncSeries1& b, int upto) const {
    check_cap_match(b);
    for (int k = 0; k < upto && k < cap_; ++k)
      if (coeff(k) != b.coeff(k)) return false;
    return true;
  }

  UniPoly as_poly(Var var) const { return UniPoly(var, c_); }

  std::string str() const { return as_poly(Var::X).str(); }

  void check_cap_match(const TruncSeries1& b) const {
    if (cap_ != b.cap_) throw input_error("series cap mismatch");
  }

 private:
  static int check_cap(int cap) {
    if (cap < 1) throw input_error("series cap must be >= 1");
    return cap;
  }
  int cap_;
  std::vector<Rat> c_;
};

inline TruncSeries1 ts1_constant(int cap, const Rat& v) {
  TruncSeries1 r(cap);
  r.coeff(0) = v;
  return r;
}

/// Division F/G mod X^cap where G(0) is a p-adic unit; the quotient Q is
/// the unique series with Q*G = F below the cap.
inline TruncSeries1 divide_by_unit(const TruncSeries1& f, const TruncSeries1& g, long p) {
  f.check_cap_match(g);
  const ExtRat v0 = vp_rat(g.coeff(0), p);
  if (!(v0 == ExtRat(0)))
    throw input_error("division by non-unit series: constant term has valuation " + v0.str());
  TruncSeries1 q(f.cap());
  for (int k = 0; k < f.cap(); ++k) {
    Rat acc = f.coeff(k);
    for (int j = 0; j < k; ++j) acc -= q.coeff(j) * g.coeff(k - j);
    q.coeff(k) = acc / g.coeff(0);
  }
  return q;
}

/// Division with rational (field) coefficients: only a nonzero constant term
/// is required. Used for integral-domain cancellation steps, where the
/// quotient need not stay p-integral.
inline TruncSeries1 divide_by_nonzero(const TruncSeries1& f, const TruncSeries1& g) {
  f.check_cap_match(g);
  if (g.coeff(0) == 0) throw input_error("divide_by_nonzero: zero constant term");
  TruncSeries1 q(f.cap());
  for (int k = 0; k < f.cap(); ++k) {
    Rat acc = f.coeff(k);
    for (int j = 0; j < k; ++j) acc -= q.coeff(j) * g.coeff(k - j);
    q.coeff(k) = acc / g.coeff(0);
  }
  return q;
}

/// Drops a factor X^k: returns F/X^k on the reduced cap, throwing if any of
/// the first k coefficients is nonzero. Effective precision shrinks by k.
inline TruncSeries1 shift_down(const TruncSeries1& f, int k) {
  if (k < 0 || k >= f.cap()) throw input_error("shift_down: bad shift");
  for (int j = 0; j < k; ++j)
    if (f.coeff(j) != 0) throw input_error("shift_down: series not divisible by X^k");
  TruncSeries1 r(f.cap() - k);
  for (int j = 0; j + k < f.cap(); ++j) r.coeff(j) = f.coeff(j + k);
  return r;
}

enum class Var2 : std::uint8_t { Xp, Xq };

class TruncSeries2 {
 public:
  explicit TruncSeries2(int cap)
      : cap_(cap), g_(static_cast<std::size_t>(cap) * static_cast<std::size_t>(cap)) {
    if (cap < 1) throw input_error("series cap must be >= 1");
  }

  int cap() const { return cap_; }
  const Rat& at(int i, int j) const {
    return g_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cap_) +
              static_cast<std::size_t>(j)];
  }
  Rat& at(int i, int j) {
    return g_[static_cast<std::size_t>(i) * static_cast<std::size_t>(cap_) +
              static_cast<std::size_t>(j)];
  }

  bool is_zero() const {
    for (const auto& x : g_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const TruncSeries2& a, const TruncSeries2& b) {
    a.check_cap_match(b);
    return a.g_ == b.g_;
  }

  friend TruncSeries2 operator+(const TruncSeries2& a, const TruncSeries2& b) {
    a.check_cap_match(b);
    TruncSeries2 r(a.cap_);
    for (std::size_t k = 0; k < a.g_.size(); ++k) r.g_[k] = a.g_[k] + b.g_[k];
    return r;
  }
  friend TruncSeries2 operator-(const TruncSeries2& a, const TruncSeries2& b) {
    a.check_cap_match(b);
    TruncSeries2 r(a.cap_);
    for (std::size_t k = 0; k < a.g_.size(); ++k) r.g_[k] = a.g_[k] - b.g_[k];
    return r;
  }
  friend TruncSeries2 operator*(const Rat& s, const TruncSeries2& a) {
    TruncSeries2 r(a.cap_);
    for (std::size_t k = 0; k < a.g_.size(); ++k) r.g_[k] = s * a.g_[k];
    return r;
  }

  /// Full truncated product; quartic in the cap, fine at desk scale.
  friend TruncSeries2 operator*(const TruncSeries2& a, const TruncSeries2& b) {
    a.check_cap_match(b);
    TruncSeries2 r(a.cap_);
    for (int i = 0; i < a.cap_; ++i)
      for (int j = 0; j < a.cap_; ++j) {
        if (a.at(i, j) == 0) continue;
        for (int u = 0; i + u < a.cap_; ++u)
          for (int v = 0; j + v < a.cap_; ++v) r.at(i + u, j + v) += a.at(i, j) * b.at(u, v);
      }
    return r;
  }

  void check_cap_match(const TruncSeries2& b) const {
    if (cap_ != b.cap_) throw input_error("series cap mismatch");
  }

 private:
  int cap_;
  std::vector<Rat> g_;
};

/// Embeds a one-variable series as a series in the chosen variable.
inline TruncSeries2 lift_series(const TruncSeries1& f, Var2 var) {
  TruncSeries2 r(f.cap());
  for (int k = 0; k < f.cap(); ++k) {
    if (var == Var2::Xp)
      r.at(k, 0) = f.coeff(k);
    else
      r.at(0, k) = f.coeff(k);
  }
  return r;
}

/// Product with a one-variable series along one variable; cubic in the cap.
inline TruncSeries2 mul_1var(const TruncSeries2& a, const TruncSeries1& f, Var2 var) {
  if (a.cap() != f.cap()) throw input_error("series cap mismatch");
  TruncSeries2 r(a.cap());
  for (int k = 0; k < f.cap(); ++k) {
    if (f.coeff(k) == 0) continue;
    for (int i = 0; i + (var == Var2::Xp ? k : 0) < a.cap(); ++i) {
      for (int j = 0; j + (var == Var2::Xq ? k : 0) < a.cap(); ++j) {
        if (var == Var2::Xp)
          r.at(i + k, j) += f.coeff(k) * a.at(i, j);
        else
          r.at(i, j + k) += f.coeff(k) * a.at(i, j);
      }
    }
  }
  return r;
}

/// Division by a two-variable series whose constant term is a p-adic unit.
inline TruncSeries2 divide_by_unit(const TruncSeries2& f, const TruncSeries2& g, long p) {
  f.check_cap_match(g);
  const ExtRat v0 = vp_rat(g.at(0, 0), p);
  if (!(v0 == ExtRat(0)))
    throw input_error("division by non-unit series: constant term has valuation " + v0.str());
  TruncSeries2 q(f.cap());
  for (int i = 0; i < f.cap(); ++i)
    for (int j = 0; j < f.cap(); ++j) {
      Rat acc = f.at(i, j);
      for (int u = 0; u <= i; ++u)
        for (int v = 0; v <= j; ++v) {
          if (u == 0 && v == 0) continue;
          acc -= g.at(u, v) * q.at(i - u, j - v);
        }
      q.at(i, j) = acc / g.at(0, 0);
    }
  return q;
}

/// Cyclotomic specialization Xp -> X, Xq -> X: the k-th coefficient is the
/// sum of the grid along the antidiagonal i + j = k, truncated at the cap.
inline TruncSeries1 cyc_specialize(const TruncSeries2& f) {
  TruncSeries1 r(f.cap());
  for (int i = 0; i < f.cap(); ++i)
    for (int j = 0; i + j < f.cap(); ++j) r.coeff(i + j) += f.at(i, j);
  return r;
}

/// Xp - Xq as a series, handy for prescribing cyclotomic specializations.
inline TruncSeries2 var_difference(int cap) {
  TruncSeries2 r(cap);
  if (cap >= 2) {
    r.at(1, 0) = 1;
    r.at(0, 1) = -1;
  }
  return r;
}

}  // namespace logmat
