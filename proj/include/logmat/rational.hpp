#pragma once

// Exact rational arithmetic and p-adic valuations. Everything downstream is
// built on mpq_class kept in canonical (lowest-terms, positive-denominator)
// form; no floating point is used anywhere in the library.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace logmat {

using Rat = mpq_class;
using Int = mpz_class;

/// Raised when arguments fall outside an operation's domain (bad prime,
/// malformed rational string, mismatched contexts, ...).
class input_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised by the checked tropical product when two finite candidates tie.
class tie_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline Rat rat(long n) { return Rat(n); }

/// Builds n/d in lowest terms. mpq_class(n, d) alone does not canonicalize.
inline Rat rat(long n, long d) {
  if (d == 0) throw input_error("rational with zero denominator");
  Rat q(n, d);
  q.canonicalize();
  return q;
}

inline Rat rat(const Int& n, const Int& d) {
  if (d == 0) throw input_error("rational with zero denominator");
  Rat q(n, d);
  q.canonicalize();
  return q;
}

/// Parses "n" or "n/d" (optional leading '-') into a canonical rational.
inline Rat parse_rat(std::string_view s) {
  std::string str(s);
  if (str.empty()) throw input_error("empty rational literal");
  mpq_class q;
  if (q.set_str(str, 10) != 0) throw input_error("malformed rational: " + str);
  if (q.get_den() == 0) throw input_error("rational with zero denominator: " + str);
  q.canonicalize();
  return q;
}

/// "n" when the denominator is 1, otherwise "n/d". Exact; never a float.
inline std::string rat_str(const Rat& q) { return q.get_str(); }

inline bool is_prime(long p) {
  if (p < 2) return false;
  mpz_class z(p);
  return mpz_probab_prime_p(z.get_mpz_t(), 40) != 0;
}

inline bool is_odd_prime(long p) { return p > 2 && is_prime(p); }

inline void require_odd_prime(long p) {
  if (!is_odd_prime(p)) throw input_error("p must be an odd prime, got " + std::to_string(p));
}

/// p-adic valuation of a nonzero integer.
inline long vp_int(const Int& n, long p) {
  if (n == 0) throw input_error("vp_int of zero");
  mpz_class rem, abs_n = abs(n);
  mpz_class pz(p);
  return static_cast<long>(mpz_remove(rem.get_mpz_t(), abs_n.get_mpz_t(), pz.get_mpz_t()));
}

/// A rational extended with +infinity, the valuation of zero. Infinity
/// absorbs addition and is the identity for min.
class ExtRat {
 public:
  ExtRat() : inf_(false), v_(0) {}
  ExtRat(const Rat& v) : inf_(false), v_(v) {}  // NOLINT: intentionally implicit
  ExtRat(long v) : inf_(false), v_(v) {}         // NOLINT: intentionally implicit

  static ExtRat infinity() {
    ExtRat e;
    e.inf_ = true;
    return e;
  }

  bool is_inf() const { return inf_; }

  const Rat& finite() const {
    if (inf_) throw std::logic_error("finite() on +inf");
    return v_;
  }

  friend ExtRat operator+(const ExtRat& a, const ExtRat& b) {
    if (a.inf_ || b.inf_) return infinity();
    return ExtRat(a.v_ + b.v_);
  }

  friend ExtRat operator-(const ExtRat& a, const Rat& b) {
    if (a.inf_) return infinity();
    return ExtRat(a.v_ - b);
  }

  ExtRat scaled(long k) const {  // k * this, k a plain integer
    if (inf_) return infinity();
    return ExtRat(v_ * k);
  }

  friend bool operator==(const ExtRat& a, const ExtRat& b) {
    if (a.inf_ != b.inf_) return false;
    return a.inf_ || a.v_ == b.v_;
  }

  // +inf compares greater than every finite value.
  friend bool operator<(const ExtRat& a, const ExtRat& b) {
    if (a.inf_) return false;
    if (b.inf_) return true;
    return a.v_ < b.v_;
  }
  friend bool operator<=(const ExtRat& a, const ExtRat& b) { return a == b || a < b; }
  friend bool operator>(const ExtRat& a, const ExtRat& b) { return b < a; }
  friend bool operator>=(const ExtRat& a, const ExtRat& b) { return b <= a; }

  friend ExtRat min(const ExtRat& a, const ExtRat& b) { return a < b ? a : b; }

  std::string str() const { return inf_ ? "inf" : rat_str(v_); }

 private:
  bool inf_;
  Rat v_;
};

inline ExtRat parse_ext_rat(std::string_view s) {
  if (s == "inf") return ExtRat::infinity();
  return ExtRat(parse_rat(s));
}

/// Exact p-adic valuation of a rational, normalized so vp_rat(p, p) = 1.
/// vp_rat(0, p) = +infinity.
inline ExtRat vp_rat(const Rat& q, long p) {
  if (!is_prime(p)) throw input_error("vp_rat: " + std::to_string(p) + " is not prime");
  if (q == 0) return ExtRat::infinity();
  return ExtRat(Rat(vp_int(q.get_num(), p) - vp_int(q.get_den(), p)));
}

}  // namespace logmat
