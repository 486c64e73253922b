#pragma once

// Command-line front end. One subcommand per claim family:
//   ord         exact valuation matrix at w_n vs the closed form
//   verify-prop the same as a sweep over n
//   claim       symbolic tropical chain vs closed form
//   det         determinant identity + Mercator convergence diagnostic
//   ap0         a_p = 0 structure (checkerboard, row vanishing, constancy)
//   stab        stabilization M_m(w_n) = M_n(w_n)
//   tn          table of t_n^{+/-}
//   artin       synthetic-instance batch (expansion/defect/mixed checks)
//   endgame     forced slope r = 1/(p+1) and the contradiction flag
//   pollack     plus/minus logarithm truncations
// Exit codes: 0 all checks passed, 1 some check failed, 2 input error.

#include <CLI11.hpp>

#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "logmat/logmatrix.hpp"
#include "logmat/report.hpp"
#include "logmat/synth.hpp"
#include "logmat/tropical.hpp"
#include "logmat/weierstrass.hpp"

namespace logmat {

struct RunConfig {
  long p = 3;
  std::string ap = "3";
  std::string eps = "1";
  int n = 2;
  int n_max = 0;  // per-subcommand default applied below
  int m = 0;
  int cap = 32;
  std::uint64_t seed = 1;
  int trials = 50;
  int factors = 3;
  long e_F = 2;
  std::string r;
  std::string r_bound;
  std::string format = "text";
  std::string out_path;
  bool no_timestamp = false;
};

namespace cli_detail {

inline HeckeData hecke_from(const RunConfig& cfg) {
  require_odd_prime(cfg.p);
  return make_hecke(cfg.p, parse_rat(cfg.ap), parse_rat(cfg.eps));
}

inline Json ord_item(const HeckeData& h, int n) {
  const ValMat ord = ord_of_eval(eval_mlog(h, n), h);
  const ValMat closed = closed_form_ord(h.p, h.r, h.v_alpha, h.v_beta, n);
  Json item;
  item["item"] = "ord matrix at n = " + std::to_string(n);
  item["pass"] = ord == closed;
  item["ord_matrix"] = json_of(ord);
  item["closed_form"] = json_of(closed);
  item["matches_closed_form"] = ord == closed;
  item["t_plus_delta"] = rat_str(t_plus_delta(h.p, n));
  return item;
}

inline void run_ord(const RunConfig& cfg, Report& rep) {
  const HeckeData h = hecke_from(cfg);
  if (cfg.n < 2) throw input_error("--n must be >= 2");
  rep.add(ord_item(h, cfg.n));
}

inline void run_verify_prop(const RunConfig& cfg, Report& rep) {
  const HeckeData h = hecke_from(cfg);
  const int n_max = cfg.n_max ? cfg.n_max : 5;
  if (n_max < 2) throw input_error("--n-max must be >= 2");
  for (int n = 2; n <= n_max; ++n) rep.add(ord_item(h, n));
}

inline void run_claim(const RunConfig& cfg, Report& rep) {
  require_odd_prime(cfg.p);
  const int n_max = cfg.n_max ? cfg.n_max : 8;
  const ChainCheckReport chain = verify_chain(cfg.p, parse_rat(cfg.r), n_max);
  int n = 2;
  for (std::size_t i = 0; i < chain.checks.items.size(); ++i, ++n) {
    Json item;
    item["item"] = chain.checks.items[i].name;
    item["pass"] = chain.checks.items[i].pass;
    item["n"] = n;
    item["t_plus_delta"] = rat_str(chain.deltas[i]);
    if (!chain.checks.items[i].detail.empty()) item["detail"] = chain.checks.items[i].detail;
    rep.add(std::move(item));
  }
}

inline void run_det(const RunConfig& cfg, Report& rep) {
  const HeckeData h = hecke_from(cfg);
  const int n_max = cfg.n_max ? cfg.n_max : 4;
  for (int n = 1; n <= n_max; ++n) {
    const DetIdentityReport d = det_identity_check(h, n);
    Json item;
    item["item"] = "det identity at n = " + std::to_string(n);
    item["pass"] = d.pass();
    item["kappa"] = d.kappa.str();
    if (!d.mismatch.empty()) item["mismatch"] = d.mismatch;
    Json diag = Json::array();
    for (const auto& v : d.mercator_diag) diag.push_back(v.str());
    item["mercator_diag"] = std::move(diag);
    rep.add(std::move(item));
  }
}

inline void run_ap0(const RunConfig& cfg, Report& rep) {
  require_odd_prime(cfg.p);
  const int n_max = cfg.n_max ? cfg.n_max : 4;
  for (int n = 2; n <= n_max; ++n)
    rep.add_check_report(ap_zero_structure_check(cfg.p, parse_rat(cfg.eps), n),
                         "n = " + std::to_string(n));
}

inline void run_stab(const RunConfig& cfg, Report& rep) {
  const HeckeData h = hecke_from(cfg);
  rep.add_check_report(stabilization_check(h, cfg.n, cfg.m),
                       "M_" + std::to_string(cfg.m) + "(w_" + std::to_string(cfg.n) + ")");
}

inline void run_tn(const RunConfig& cfg, Report& rep) {
  require_odd_prime(cfg.p);
  const int n_max = cfg.n_max ? cfg.n_max : 10;
  for (int n = 1; n <= n_max; ++n) {
    Json item;
    item["item"] = "t_" + std::to_string(n);
    item["pass"] = true;
    item["n"] = n;
    item["t_plus"] = rat_str(t_n(cfg.p, n, TSign::plus));
    item["t_minus"] = rat_str(t_n(cfg.p, n, TSign::minus));
    rep.add(std::move(item));
  }
}

inline void run_artin(const RunConfig& cfg, Report& rep) {
  const HeckeData h = hecke_from(cfg);
  if (cfg.trials < 1) throw input_error("--trials must be >= 1");
  for (int t = 0; t < cfg.trials; ++t) {
    const std::uint64_t seed = cfg.seed + static_cast<std::uint64_t>(t);
    const SynthInstance inst = make_instance(h, cfg.cap, seed, Hypothesis::artin_diagonal);
    const bool ok = expansion_check(inst).all_pass() && defect_identity_check(inst).all_pass() &&
                    mixed_artin_check(inst).all_pass();
    Json item;
    item["item"] = "hypothesis instance seed " + std::to_string(seed);
    item["pass"] = ok;
    rep.add(std::move(item));
  }
  int failures = 0;
  for (int t = 0; t < cfg.trials; ++t) {
    const std::uint64_t seed = cfg.seed + 1000000 + static_cast<std::uint64_t>(t);
    const SynthInstance inst = make_instance(h, cfg.cap, seed, Hypothesis::none);
    bool failed;
    try {
      failed = !mixed_artin_check(inst).all_pass();
    } catch (const input_error&) {
      failed = true;  // degenerate matrix counts as a failing control
    }
    if (failed) ++failures;
  }
  Json neg;
  neg["item"] = "negative controls fail the mixed check";
  neg["pass"] = 20 * failures >= 19 * cfg.trials;  // >= 95%
  neg["failed_controls"] = failures;
  neg["controls"] = cfg.trials;
  rep.add(std::move(neg));
}

inline void run_endgame(const RunConfig& cfg, Report& rep) {
  require_odd_prime(cfg.p);
  const Rat bound = cfg.r_bound.empty() ? rat(1, cfg.p) : parse_rat(cfg.r_bound);
  const EndgameReport e = solve_endgame(cfg.p, cfg.e_F, bound);
  Json item;
  item["item"] = "forced slope from the limit equations";
  item["pass"] = true;
  item["forced_r"] = rat_str(e.forced_r);
  item["mu_diff"] = rat_str(e.mu_diff);
  item["mu_equal"] = e.mu_equal;
  item["r_bound"] = rat_str(e.bound);
  item["contradiction"] = e.contradiction;
  rep.add(std::move(item));
}

inline void run_pollack(const RunConfig& cfg, Report& rep) {
  require_odd_prime(cfg.p);
  if (cfg.factors < 1) throw input_error("--factors must be >= 1");
  for (const TSign sign : {TSign::plus, TSign::minus}) {
    const UniPoly f = pollack_log_trunc(cfg.p, sign, cfg.factors);
    Json item;
    item["item"] = std::string("log") + (sign == TSign::plus ? "+" : "-") + " truncation, " +
                   std::to_string(cfg.factors) + " factors";
    item["pass"] = f.eval(Rat(0)) == rat(1, cfg.p);
    item["value_at_0"] = rat_str(f.eval(Rat(0)));
    Json coeffs = Json::array();
    for (const auto& c : f.coeffs()) coeffs.push_back(rat_str(c));
    item["coefficients"] = std::move(coeffs);
    rep.add(std::move(item));
  }
  // partial products recombine to prod Phi_j / p^(2M)
  const UniPoly lhs = Rat(cfg.p * cfg.p) * (pollack_log_trunc(cfg.p, TSign::plus, cfg.factors) *
                                            pollack_log_trunc(cfg.p, TSign::minus, cfg.factors));
  Int pw;
  mpz_pow_ui(pw.get_mpz_t(), Int(cfg.p).get_mpz_t(), static_cast<unsigned long>(2 * cfg.factors));
  const UniPoly rhs = rat(Int(1), pw) * prod_phi(cfg.p, 1, 2 * cfg.factors, Var::X);
  Json compat;
  compat["item"] = "log+ log- p^2 = prod Phi_j / p^(2M)";
  compat["pass"] = lhs == rhs;
  rep.add(std::move(compat));
}

}  // namespace cli_detail

/// Parses argv-style arguments (without the program name), runs the chosen
/// subcommand, emits the report. Returns 0 (all pass), 1 (check failed) or
/// 2 (input error).
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact logarithmic-matrix valuation calculus"};
  app.require_subcommand(1);

  RunConfig cfg;
  const auto add_common = [&cfg](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "output format: text, json or csv")
        ->check(CLI::IsMember({"text", "json", "csv"}));
    sub->add_option("--out", cfg.out_path, "write the report to this path");
    sub->add_flag("--no-timestamp", cfg.no_timestamp, "omit the timestamp field");
  };
  const auto add_hecke = [&cfg](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "odd prime")->required();
    sub->add_option("--ap", cfg.ap, "Hecke eigenvalue a_p, as 'n' or 'n/d'");
    sub->add_option("--eps", cfg.eps, "nebentype unit eps(p)");
  };

  CLI::App* ord = app.add_subcommand("ord", "valuation matrix at w_n vs closed form");
  add_hecke(ord);
  ord->add_option("--n", cfg.n, "level of w_n (>= 2)");
  add_common(ord);

  CLI::App* vp = app.add_subcommand("verify-prop", "closed-form sweep over n = 2..n_max");
  add_hecke(vp);
  vp->add_option("--n-max", cfg.n_max, "largest level (default 5)");
  add_common(vp);

  CLI::App* claim = app.add_subcommand("claim", "symbolic tropical chain vs closed form");
  claim->add_option("--p", cfg.p, "odd prime")->required();
  claim->add_option("--r", cfg.r, "slope r as 'n' or 'n/d' (needs 2r > 1/p)")->required();
  claim->add_option("--n-max", cfg.n_max, "largest level (default 8)");
  add_common(claim);

  CLI::App* det = app.add_subcommand("det", "determinant identity and Mercator diagnostic");
  add_hecke(det);
  det->add_option("--n-max", cfg.n_max, "largest level (default 4)");
  add_common(det);

  CLI::App* ap0 = app.add_subcommand("ap0", "a_p = 0 structure checks");
  ap0->add_option("--p", cfg.p, "odd prime")->required();
  ap0->add_option("--eps", cfg.eps, "nebentype unit eps(p)");
  ap0->add_option("--n-max", cfg.n_max, "largest level (default 4)");
  add_common(ap0);

  CLI::App* stab = app.add_subcommand("stab", "stabilization M_m(w_n) = M_n(w_n)");
  add_hecke(stab);
  stab->add_option("--n", cfg.n, "evaluation level (>= 2)")->required();
  stab->add_option("--m", cfg.m, "matrix index m > n")->required();
  add_common(stab);

  CLI::App* tn = app.add_subcommand("tn", "table of t_n^+ and t_n^-");
  tn->add_option("--p", cfg.p, "odd prime")->required();
  tn->add_option("--n-max", cfg.n_max, "largest n (default 10)");
  add_common(tn);

  CLI::App* artin = app.add_subcommand("artin", "synthetic-instance batch checks");
  add_hecke(artin);
  artin->add_option("--D", cfg.cap, "series truncation cap (default 32)");
  artin->add_option("--seed", cfg.seed, "base seed (default 1)");
  artin->add_option("--trials", cfg.trials, "instances per batch (default 50)");
  add_common(artin);

  CLI::App* endgame = app.add_subcommand("endgame", "forced slope and contradiction flag");
  endgame->add_option("--p", cfg.p, "odd prime")->required();
  endgame->add_option("--e", cfg.e_F, "ramification index e of the coefficient field");
  endgame->add_option("--r-bound", cfg.r_bound, "hypothesis bound in r > bound (default 1/p)");
  add_common(endgame);

  CLI::App* pollack = app.add_subcommand("pollack", "plus/minus logarithm truncations");
  pollack->add_option("--p", cfg.p, "odd prime")->required();
  pollack->add_option("--factors", cfg.factors, "number of factors (default 3)");
  add_common(pollack);

  std::vector<const char*> argv;
  argv.push_back("logmat");
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n" << app.help();
    return 2;
  }

  Report rep(app.get_subcommands().front()->get_name());
  try {
    rep.param("p", cfg.p);
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "ord") {
      rep.param("ap", cfg.ap);
      rep.param("eps", cfg.eps);
      rep.param("n", cfg.n);
      cli_detail::run_ord(cfg, rep);
    } else if (name == "verify-prop") {
      rep.param("ap", cfg.ap);
      rep.param("eps", cfg.eps);
      rep.param("n_max", cfg.n_max ? cfg.n_max : 5);
      cli_detail::run_verify_prop(cfg, rep);
    } else if (name == "claim") {
      rep.param("r", cfg.r);
      rep.param("n_max", cfg.n_max ? cfg.n_max : 8);
      cli_detail::run_claim(cfg, rep);
    } else if (name == "det") {
      rep.param("ap", cfg.ap);
      rep.param("eps", cfg.eps);
      rep.param("n_max", cfg.n_max ? cfg.n_max : 4);
      cli_detail::run_det(cfg, rep);
    } else if (name == "ap0") {
      rep.param("eps", cfg.eps);
      rep.param("n_max", cfg.n_max ? cfg.n_max : 4);
      cli_detail::run_ap0(cfg, rep);
    } else if (name == "stab") {
      rep.param("ap", cfg.ap);
      rep.param("eps", cfg.eps);
      rep.param("n", cfg.n);
      rep.param("m", cfg.m);
      cli_detail::run_stab(cfg, rep);
    } else if (name == "tn") {
      rep.param("n_max", cfg.n_max ? cfg.n_max : 10);
      cli_detail::run_tn(cfg, rep);
    } else if (name == "artin") {
      rep.param("ap", cfg.ap);
      rep.param("eps", cfg.eps);
      rep.param("D", cfg.cap);
      rep.param("seed", static_cast<long>(cfg.seed));
      rep.param("trials", cfg.trials);
      cli_detail::run_artin(cfg, rep);
    } else if (name == "endgame") {
      rep.param("e", cfg.e_F);
      cli_detail::run_endgame(cfg, rep);
    } else if (name == "pollack") {
      rep.param("factors", cfg.factors);
      cli_detail::run_pollack(cfg, rep);
    }
  } catch (const input_error& e) {
    err << "input error: " << e.what() << "\n";
    return 2;
  }

  rep.finalize(!cfg.no_timestamp);

  std::string text;
  if (cfg.format == "json") {
    text = rep.to_json();
  } else if (cfg.format == "csv") {
    text = report_to_csv(rep);
  } else {
    const bool color = cfg.out_path.empty() && &out == &std::cout && isatty(1) &&
                       std::getenv("NO_COLOR") == nullptr;
    text = report_to_text(rep, color);
  }

  if (!cfg.out_path.empty()) {
    std::ofstream f(cfg.out_path);
    if (!f) {
      err << "cannot write to " << cfg.out_path << "\n";
      return 2;
    }
    f << text;
    if (!f.good()) {
      err << "cannot write to " << cfg.out_path << "\n";
      return 2;
    }
  } else {
    out << text;
  }
  return rep.all_pass() ? 0 : 1;
}

}  // namespace logmat
