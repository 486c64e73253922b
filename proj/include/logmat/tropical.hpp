#pragma once

// Min-plus calculus on 2x2 valuation matrices. The product formula
//   ord(MM')_{ij} = min_k ( ord(M)_{ik} + ord(M')_{kj} )
// computes the valuation matrix of an actual matrix product only when no two
// finite candidates tie; a tie leaves room for p-adic cancellation, so by
// default it is an error. A lower-bound mode returns the tied minimum and
// marks the entry inexact instead.
//
// The symbolic side multiplies the chain of ord(C_m(w_n)) factors against a
// final column [[a, b], [inf, inf]] with a, b free symbols, resolving every
// min under the hypothesis r > 1/(2p). This reproduces the closed form for
// ord(M_log(w_n)) without touching field arithmetic.

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "logmat/logmatrix.hpp"
#include "logmat/rational.hpp"

namespace logmat {

// ---------------------------------------------------------------------------
// Numeric tropical product
// ---------------------------------------------------------------------------

struct TropEntry {
  ExtRat value;
  bool exact = true;

  friend bool operator==(const TropEntry&, const TropEntry&) = default;
};

struct TropMat {
  std::array<TropEntry, 4> e;

  const TropEntry& at(int i, int j) const { return e[static_cast<std::size_t>(2 * i + j)]; }
  TropEntry& at(int i, int j) { return e[static_cast<std::size_t>(2 * i + j)]; }

  static TropMat of(const ValMat& v) {
    TropMat m;
    for (std::size_t k = 0; k < 4; ++k) m.e[k] = {v.v[k], true};
    return m;
  }
  ValMat values() const {
    ValMat v;
    for (std::size_t k = 0; k < 4; ++k) v.v[k] = e[k].value;
    return v;
  }

  friend bool operator==(const TropMat&, const TropMat&) = default;
};

enum class TieMode { checked, lower_bound };

inline TropMat trop_mul(const TropMat& a, const TropMat& b, TieMode mode = TieMode::checked) {
  TropMat out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const TropEntry& x0 = a.at(i, 0);
      const TropEntry& x1 = a.at(i, 1);
      const TropEntry& y0 = b.at(0, j);
      const TropEntry& y1 = b.at(1, j);
      const ExtRat c0 = x0.value + y0.value;
      const ExtRat c1 = x1.value + y1.value;
      bool exact = x0.exact && x1.exact && y0.exact && y1.exact;
      if (c0 == c1 && !c0.is_inf()) {
        if (mode == TieMode::checked)
          throw tie_error("tie at entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                          "): formula inapplicable");
        exact = false;
      }
      out.at(i, j) = {min(c0, c1), exact};
    }
  return out;
}

// ---------------------------------------------------------------------------
// Symbolic values q + cr*r + ca*a + cb*b, with +inf
// ---------------------------------------------------------------------------

/// Raised when a symbolic min cannot be resolved from r > 1/(2p) alone;
/// this is exactly what happens outside the 2r > 1/p regime.
class undecidable_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SymbolicVal {
  bool inf = false;
  Rat q;   // constant part
  Rat cr;  // coefficient of the symbol r
  Rat ca;  // coefficient of the symbol a
  Rat cb;  // coefficient of the symbol b

  static SymbolicVal infinity() {
    SymbolicVal s;
    s.inf = true;
    return s;
  }
  static SymbolicVal constant(const Rat& v) {
    SymbolicVal s;
    s.q = v;
    return s;
  }
  static SymbolicVal sym_r() {
    SymbolicVal s;
    s.cr = 1;
    return s;
  }
  static SymbolicVal sym_a() {
    SymbolicVal s;
    s.ca = 1;
    return s;
  }
  static SymbolicVal sym_b() {
    SymbolicVal s;
    s.cb = 1;
    return s;
  }

  friend bool operator==(const SymbolicVal&, const SymbolicVal&) = default;

  friend SymbolicVal operator+(const SymbolicVal& x, const SymbolicVal& y) {
    if (x.inf || y.inf) return infinity();
    SymbolicVal s;
    s.q = x.q + y.q;
    s.cr = x.cr + y.cr;
    s.ca = x.ca + y.ca;
    s.cb = x.cb + y.cb;
    return s;
  }

  std::string str() const {
    if (inf) return "inf";
    std::string out;
    auto term = [&out](const Rat& c, const char* name) {
      if (c == 0) return;
      if (!out.empty()) out += " + ";
      if (c == 1)
        out += name;
      else
        out += rat_str(c) + "*" + name;
    };
    term(cr, "r");
    term(ca, "a");
    term(cb, "b");
    if (q != 0 || out.empty()) {
      if (!out.empty()) out += " + ";
      out += rat_str(q);
    }
    return out;
  }
};

/// Sign of x - y over all admissible assignments: r > 1/(2p), a and b
/// arbitrary rationals. Returns -1, 0 (identically equal) or +1; throws
/// undecidable_error when the sign is not constant on the region.
inline int sym_compare(const SymbolicVal& x, const SymbolicVal& y, long p) {
  if (x.inf && y.inf) return 0;
  if (x.inf) return 1;
  if (y.inf) return -1;
  const Rat q = x.q - y.q;
  const Rat cr = x.cr - y.cr;
  const Rat ca = x.ca - y.ca;
  const Rat cb = x.cb - y.cb;
  if (ca != 0 || cb != 0)
    throw undecidable_error("comparison depends on the free symbols a, b");
  if (cr == 0) return q > 0 ? 1 : (q < 0 ? -1 : 0);
  // q + cr*r on r in (1/(2p), inf); value at the open endpoint:
  const Rat at_bound = q + cr * rat(1, 2 * p);
  if (cr > 0) {
    if (at_bound >= 0) return 1;  // strictly increasing past a nonnegative limit
    throw undecidable_error("sign of " + rat_str(q) + " + " + rat_str(cr) +
                            "*r changes on r > 1/(2p)");
  }
  if (at_bound <= 0) return -1;
  throw undecidable_error("sign of " + rat_str(q) + " + " + rat_str(cr) +
                          "*r changes on r > 1/(2p)");
}

/// Checked symbolic min: a finite identical tie is an error, mirroring the
/// numeric product's caveat.
inline SymbolicVal sym_min(const SymbolicVal& x, const SymbolicVal& y, long p) {
  const int c = sym_compare(x, y, p);
  if (c == 0 && !x.inf) throw tie_error("symbolic tie: formula inapplicable");
  return c <= 0 ? x : y;
}

using SymMat = std::array<SymbolicVal, 4>;  // row-major 2x2

inline SymMat sym_mat_mul(const SymMat& a, const SymMat& b, long p) {
  SymMat out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      out[static_cast<std::size_t>(2 * i + j)] =
          sym_min(a[static_cast<std::size_t>(2 * i)] + b[static_cast<std::size_t>(j)],
                  a[static_cast<std::size_t>(2 * i + 1)] + b[static_cast<std::size_t>(2 + j)], p);
  return out;
}

/// Left-to-right tropical product of ord(C_m(w_n)) = [[r, 0], [p^-(n-m), inf]]
/// for m = 1..n-1 against the column matrix [[a, b], [inf, inf]].
inline SymMat claim_chain(long p, const SymbolicVal& r, int n, const SymbolicVal& a,
                          const SymbolicVal& b) {
  require_odd_prime(p);
  if (n < 2) throw input_error("claim_chain: n must be >= 2");
  SymMat acc;
  bool first = true;
  for (int m = 1; m <= n - 1; ++m) {
    Int ppow;
    mpz_pow_ui(ppow.get_mpz_t(), Int(p).get_mpz_t(), static_cast<unsigned long>(n - m));
    const SymMat factor = {r, SymbolicVal::constant(Rat(0)),
                           SymbolicVal::constant(rat(Int(1), ppow)), SymbolicVal::infinity()};
    acc = first ? factor : sym_mat_mul(acc, factor, p);
    first = false;
  }
  const SymMat last = {a, b, SymbolicVal::infinity(), SymbolicVal::infinity()};
  return sym_mat_mul(acc, last, p);
}

/// Expected chain value from the closed form: the r-row is r + t_{n-1}^+,
/// the other row t_n^-, rows ordered by the parity of n.
inline SymMat claim_closed_form(long p, const SymbolicVal& r, int n, const SymbolicVal& a,
                                const SymbolicVal& b) {
  const SymbolicVal r_row = r + SymbolicVal::constant(t_n(p, n - 1, TSign::plus));
  const SymbolicVal o_row = SymbolicVal::constant(t_n(p, n, TSign::minus));
  const SymbolicVal top = n % 2 == 0 ? r_row : o_row;
  const SymbolicVal bot = n % 2 == 0 ? o_row : r_row;
  return {top + a, top + b, bot + a, bot + b};
}

struct ChainCheckReport {
  CheckReport checks;
  std::vector<Rat> deltas;  // t_n^+ - t_{n-1}^+ per n = 2..n_max

  bool pass() const { return checks.all_pass(); }
};

/// Verifies the chain against the closed form for n = 2..n_max with a and b
/// symbolic, r a fixed rational satisfying 2r > 1/p.
inline ChainCheckReport verify_chain(long p, const Rat& r, int n_max) {
  require_odd_prime(p);
  if (!(2 * r > rat(1, p)))
    throw input_error("verify_chain: hypothesis 2r > 1/p violated (2r = " + rat_str(2 * r) + ")");
  if (n_max < 2) throw input_error("verify_chain: n_max must be >= 2");
  ChainCheckReport rep;
  const SymbolicVal rv = SymbolicVal::constant(r);
  const SymbolicVal a = SymbolicVal::sym_a();
  const SymbolicVal b = SymbolicVal::sym_b();
  for (int n = 2; n <= n_max; ++n) {
    const Rat delta = t_plus_delta(p, n);
    rep.deltas.push_back(delta);
    std::string name = "n = " + std::to_string(n) + " chain equals closed form";
    if (delta != 0) name += " (t_n^+ form differs by " + rat_str(delta) + ")";
    try {
      const SymMat lhs = claim_chain(p, rv, n, a, b);
      const SymMat rhs = claim_closed_form(p, rv, n, a, b);
      rep.checks.add(name, lhs == rhs);
    } catch (const undecidable_error& e) {
      rep.checks.add(name, false, e.what());
    } catch (const tie_error& e) {
      rep.checks.add(name, false, e.what());
    }
  }
  return rep;
}

}  // namespace logmat
