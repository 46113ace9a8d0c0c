#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end: argument parsing, dispatch and reporting.
 *
 *   steinfill <subcommand> [flags] [--format human|json|csv]
 *
 * Exit codes: 0 all checks held, 1 a check failed or an internal check
 * tripped, 2 usage error.
 */

#include <steinfill/bernoulli.hpp>
#include <steinfill/congruence.hpp>
#include <steinfill/exact_arith.hpp>
#include <steinfill/fillability.hpp>
#include <steinfill/report.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace steinfill::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailed = 1;
inline constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// --help or --version; carries the text to print.
struct InfoRequested {
  std::string text;
};

struct BernCommand {
  enum class Kind { top, nt, top_sweep, nt_sweep };
  Kind kind;
  std::int64_t value;
};
struct VscCommand {
  bool sweep;
  std::int64_t n;
};
struct PartsCommand {
  bool sweep;
  std::int64_t k;
};
struct CarlitzCommand {
  bool sweep;
  std::int64_t n, w, r;  ///< upper bounds when sweeping
};
struct PropA4Command {
  bool sweep;
  std::int64_t n, m;  ///< m is the upper bound when sweeping
};
struct ThmA1Command {
  bool sweep;
  std::int64_t k;
};
struct AhatCommand {
  std::int64_t k;
  BigInt sigma, tau_sq;
};
struct AdmitsCommand {
  ManifoldInvariants invariants;
};
struct AuditYangCommand {
  std::int64_t max_k;
};
struct SelfCheckCommand {
  std::int64_t max_n;
};

using Action = std::variant<BernCommand, VscCommand, PartsCommand, CarlitzCommand, PropA4Command,
                            ThmA1Command, AhatCommand, AdmitsCommand, AuditYangCommand,
                            SelfCheckCommand>;

struct Command {
  Action action;
  Format format = Format::human;
  std::string echo;
};

namespace detail {

inline std::string join(const std::vector<std::string>& args) {
  std::string out;
  for (const auto& a : args) {
    if (!out.empty()) out += ' ';
    out += a;
  }
  return out;
}

inline BigInt parse_bigint(const std::string& flag, const std::string& text) {
  BigInt v;
  const bool plain = !text.empty() &&
                     std::all_of(text.begin() + (text[0] == '-' || text[0] == '+' ? 1 : 0),
                                 text.end(), [](char c) { return c >= '0' && c <= '9'; }) &&
                     text.size() > (text[0] == '-' || text[0] == '+' ? 1u : 0u);
  if (!plain || v.set_str(text[0] == '+' ? text.substr(1) : text, 10) != 0) {
    throw UsageError(flag + ": malformed integer '" + text + "'");
  }
  return v;
}

inline void require(bool ok, const std::string& message) {
  if (!ok) throw UsageError(message);
}

inline std::string flag_value(const std::string& flag, std::int64_t v) {
  return flag + " " + std::to_string(v);
}

}  // namespace detail

/// Parses arguments (program name excluded). Throws UsageError naming the
/// offending token, or InfoRequested for --help / --version.
inline Command parse(const std::vector<std::string>& args) {
  CLI::App app{"Exact Bernoulli-number congruences and stable complex structure conditions",
               "steinfill"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.set_version_flag("--version", std::string("steinfill ") + kVersion);

  std::string format = "human";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"human", "json", "csv"}));

  std::optional<std::int64_t> top, nt, max_k, max_n, n, m, k, w, r, max_w, max_r, max_m;
  std::optional<std::string> sigma, tau2;
  bool tau_in_image = false;

  auto* bern = app.add_subcommand("bern", "Bernoulli numbers in either convention");
  bern->add_option("--top", top, "B_k, topologist convention");
  bern->add_option("--nt", nt, "NT_n, number-theoretic convention");
  bern->add_option("--max-k", max_k, "B_1..B_k");
  bern->add_option("--max-n", max_n, "NT_0..NT_n");

  auto* vsc = app.add_subcommand("vsc", "Denominators against the prime product");
  vsc->add_option("--n", n, "Single even index");
  vsc->add_option("--max-n", max_n, "All even indices in [2, n]");

  auto* parts = app.add_subcommand("parts", "N_k, D_k, D'_k decomposition of B_k");
  parts->add_option("--k", k);
  parts->add_option("--max-k", max_k);

  auto* carlitz = app.add_subcommand("carlitz", "Finite-difference congruences");
  carlitz->add_option("--n", n);
  carlitz->add_option("--w", w);
  carlitz->add_option("--r", r);
  carlitz->add_option("--max-n", max_n);
  carlitz->add_option("--max-w", max_w);
  carlitz->add_option("--max-r", max_r);

  auto* prop = app.add_subcommand("prop-a4", "Differences of reciprocals 1/NT_n - 1/NT_m");
  prop->add_option("--n", n);
  prop->add_option("--m", m);
  prop->add_option("--max-m", max_m, "All even 2 <= n < m <= max");

  auto* thm = app.add_subcommand("thm-a1", "ord2((B_2k - B_k)/(B_2k B_k)) >= ord2(k) + 3");
  thm->add_option("--k", k);
  thm->add_option("--max-k", max_k, "All even k in [2, max]");

  auto* ahat_cmd = app.add_subcommand("ahat", "A-hat genus from signature and tau^2");
  ahat_cmd->add_option("--k", k)->required();
  ahat_cmd->add_option("--sigma", sigma)->required();
  ahat_cmd->add_option("--tau2", tau2)->required();

  auto* admits = app.add_subcommand("admits", "Decide a stable complex structure for one tuple");
  admits->add_option("--k", k)->required();
  admits->add_option("--sigma", sigma)->required();
  admits->add_option("--tau2", tau2)->required();
  admits->add_flag("--tau-in-image", tau_in_image);

  auto* audit = app.add_subcommand("audit-yang", "Equivalence audit of both conditions");
  audit->add_option("--max-k", max_k, "Largest k (default 32)");

  auto* self = app.add_subcommand("self-check", "Cross-check both Bernoulli algorithms");
  self->add_option("--max-n", max_n)->required();

  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--format") {
      ++i;
      continue;
    }
    if (args[i].starts_with("-")) continue;
    if (app.get_subcommand_no_throw(args[i]) == nullptr) {
      throw UsageError("unknown subcommand '" + args[i] + "'");
    }
    break;
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw InfoRequested{app.help()};
  } catch (const CLI::CallForAllHelp&) {
    throw InfoRequested{app.help("", CLI::AppFormatMode::All)};
  } catch (const CLI::CallForVersion&) {
    throw InfoRequested{std::string("steinfill ") + kVersion + "\n"};
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  using detail::require;
  Command cmd;
  cmd.echo = detail::join(args);
  cmd.format = format == "json" ? Format::json : (format == "csv" ? Format::csv : Format::human);

  const auto exactly_one = [](std::initializer_list<bool> given) {
    return std::count(given.begin(), given.end(), true) == 1;
  };

  if (bern->parsed()) {
    require(exactly_one({top.has_value(), nt.has_value(), max_k.has_value(), max_n.has_value()}),
            "bern: give exactly one of --top, --nt, --max-k, --max-n");
    if (top) {
      require(*top >= 1, detail::flag_value("--top", *top) + ": k must be >= 1");
      cmd.action = BernCommand{BernCommand::Kind::top, *top};
    } else if (nt) {
      require(*nt >= 0, detail::flag_value("--nt", *nt) + ": n must be >= 0");
      cmd.action = BernCommand{BernCommand::Kind::nt, *nt};
    } else if (max_k) {
      require(*max_k >= 0, detail::flag_value("--max-k", *max_k) + ": must be >= 0");
      cmd.action = BernCommand{BernCommand::Kind::top_sweep, *max_k};
    } else {
      require(*max_n >= 0, detail::flag_value("--max-n", *max_n) + ": must be >= 0");
      cmd.action = BernCommand{BernCommand::Kind::nt_sweep, *max_n};
    }
  } else if (vsc->parsed()) {
    require(exactly_one({n.has_value(), max_n.has_value()}), "vsc: give exactly one of --n, --max-n");
    if (n) {
      require(*n >= 2 && *n % 2 == 0, detail::flag_value("--n", *n) + ": n must be even and >= 2");
      cmd.action = VscCommand{false, *n};
    } else {
      require(*max_n >= 0, detail::flag_value("--max-n", *max_n) + ": must be >= 0");
      cmd.action = VscCommand{true, *max_n};
    }
  } else if (parts->parsed()) {
    require(exactly_one({k.has_value(), max_k.has_value()}), "parts: give exactly one of --k, --max-k");
    if (k) {
      require(*k >= 1, detail::flag_value("--k", *k) + ": k must be >= 1");
      cmd.action = PartsCommand{false, *k};
    } else {
      require(*max_k >= 0, detail::flag_value("--max-k", *max_k) + ": must be >= 0");
      cmd.action = PartsCommand{true, *max_k};
    }
  } else if (carlitz->parsed()) {
    const bool single = n || w || r;
    const bool sweep = max_n || max_w || max_r;
    require(single != sweep, "carlitz: give either --n/--w/--r or --max-n/--max-w/--max-r");
    if (single) {
      require(n && w && r, "carlitz: --n, --w and --r are all required");
      require(*n >= 2 && *n % 2 == 0, detail::flag_value("--n", *n) + ": n must be even and >= 2");
      require(*w >= 2 && *w % 2 == 0, detail::flag_value("--w", *w) + ": w must be even and >= 2");
      require(*r >= 1, detail::flag_value("--r", *r) + ": r must be >= 1");
      cmd.action = CarlitzCommand{false, *n, *w, *r};
    } else {
      require(max_n && max_w && max_r, "carlitz: --max-n, --max-w and --max-r are all required");
      require(*max_n >= 0, detail::flag_value("--max-n", *max_n) + ": must be >= 0");
      require(*max_w >= 0, detail::flag_value("--max-w", *max_w) + ": must be >= 0");
      require(*max_r >= 0, detail::flag_value("--max-r", *max_r) + ": must be >= 0");
      cmd.action = CarlitzCommand{true, *max_n, *max_w, *max_r};
    }
  } else if (prop->parsed()) {
    const bool single = n || m;
    require(single != max_m.has_value(), "prop-a4: give either --n/--m or --max-m");
    if (single) {
      require(n && m, "prop-a4: --n and --m are both required");
      require(*n >= 2 && *n % 2 == 0, detail::flag_value("--n", *n) + ": n must be even and >= 2");
      require(*m > *n && *m % 2 == 0, detail::flag_value("--m", *m) + ": m must be even and > n");
      cmd.action = PropA4Command{false, *n, *m};
    } else {
      require(*max_m >= 0, detail::flag_value("--max-m", *max_m) + ": must be >= 0");
      cmd.action = PropA4Command{true, 0, *max_m};
    }
  } else if (thm->parsed()) {
    require(exactly_one({k.has_value(), max_k.has_value()}), "thm-a1: give exactly one of --k, --max-k");
    if (k) {
      require(*k >= 2 && *k % 2 == 0, detail::flag_value("--k", *k) + ": k must be even and >= 2");
      cmd.action = ThmA1Command{false, *k};
    } else {
      require(*max_k >= 0, detail::flag_value("--max-k", *max_k) + ": must be >= 0");
      cmd.action = ThmA1Command{true, *max_k};
    }
  } else if (ahat_cmd->parsed()) {
    require(*k >= 1, detail::flag_value("--k", *k) + ": k must be >= 1");
    cmd.action = AhatCommand{*k, detail::parse_bigint("--sigma", *sigma),
                             detail::parse_bigint("--tau2", *tau2)};
  } else if (admits->parsed()) {
    require(*k >= 1, detail::flag_value("--k", *k) + ": k must be >= 1");
    ManifoldInvariants inv{*k, detail::parse_bigint("--sigma", *sigma),
                           detail::parse_bigint("--tau2", *tau2), tau_in_image};
    const auto violations = validate_invariants(inv);
    if (!violations.empty()) {
      std::string msg = "admits: invalid invariants:";
      for (const auto& v : violations) msg += " [" + v + "]";
      throw UsageError(msg);
    }
    if (inv.k >= 3) {
      const auto forced = forced_sigma_valuation(inv.k);
      require(ord2(inv.sigma).at_least(forced),
              "--sigma " + *sigma + ": must be divisible by 2^" + std::to_string(forced) +
                  " when k=" + std::to_string(inv.k));
    }
    cmd.action = AdmitsCommand{std::move(inv)};
  } else if (audit->parsed()) {
    const std::int64_t bound = max_k.value_or(32);
    require(bound >= 1, detail::flag_value("--max-k", bound) + ": must be >= 1");
    cmd.action = AuditYangCommand{bound};
  } else {
    require(*max_n >= 0 && *max_n % 2 == 0,
            detail::flag_value("--max-n", *max_n) + ": must be even and >= 0");
    cmd.action = SelfCheckCommand{*max_n};
  }
  return cmd;
}

namespace detail {

inline std::string convention_name(Convention c) {
  return c == Convention::topological ? "top" : "nt";
}

/// Sign law: B_k > 0; NT_n alternates for even n > 0, vanishes for odd n > 1.
inline bool sign_law_holds(const BernoulliValue& v) {
  if (v.convention == Convention::topological) return v.value.sign() > 0;
  const std::int64_t n = v.index;
  if (n == 0) return v.value == Rational(1L);
  if (n == 1) return v.value == Rational(BigInt(-1), BigInt(2));
  if (n % 2 == 1) return v.value.is_zero();
  return v.value.sign() == ((n / 2) % 2 == 1 ? 1 : -1);
}

inline void run_action(const BernCommand& c, Report& report) {
  report.columns = {"convention", "index", "value"};
  const auto add = [&](const BernoulliValue& v) {
    report.add({convention_name(v.convention), v.index, v.value.to_string()}, sign_law_holds(v));
  };
  switch (c.kind) {
    case BernCommand::Kind::top:
      add(bernoulli_value(TopIndex(c.value)));
      break;
    case BernCommand::Kind::nt:
      add(bernoulli_value(NTIndex(c.value)));
      break;
    case BernCommand::Kind::top_sweep:
      for (std::int64_t k = 1; k <= c.value; ++k) add(bernoulli_value(TopIndex(k)));
      break;
    case BernCommand::Kind::nt_sweep:
      for (std::int64_t n = 0; n <= c.value; ++n) add(bernoulli_value(NTIndex(n)));
      break;
  }
}

inline void run_action(const VscCommand& c, Report& report) {
  report.columns = {"n", "prime_product", "denominator"};
  const std::int64_t lo = c.sweep ? 2 : c.n;
  for (std::int64_t n = lo; n <= c.n; n += 2) {
    const BigInt law = vsc_denominator(NTIndex(n));
    const BigInt den = bernoulli_nt(NTIndex(n)).denominator();
    report.add({n, law.get_str(), den.get_str()}, law == den);
  }
}

inline void run_action(const PartsCommand& c, Report& report) {
  report.columns = {"k", "N_k", "D_k", "D'_k"};
  const std::int64_t lo = c.sweep ? 1 : c.k;
  for (std::int64_t k = lo; k <= c.k; ++k) {
    const auto p = num_den_parts(TopIndex(k));
    report.add({k, p.numerator.get_str(), p.denominator.get_str(), p.odd_denominator.get_str()},
               true);
  }
}

inline void run_action(const CarlitzCommand& c, Report& report) {
  report.columns = {"n", "w", "r", "e", "lambda", "ord", "bound", "difference"};
  const auto add = [&](const CarlitzParams& p) {
    const auto rep = check_carlitz(p);
    report.add({p.n(), p.w(), p.r(), p.e(), p.lambda(), rep.observed_ord.to_string(), rep.bound,
                rep.witness.to_string()},
               rep.holds);
  };
  if (!c.sweep) {
    add(CarlitzParams(c.n, c.w, c.r));
    return;
  }
  for (std::int64_t n = 2; n <= c.n; n += 2) {
    for (std::int64_t w = 2; w <= c.w; w += 2) {
      for (std::int64_t r = 1; r <= c.r; ++r) add(CarlitzParams(n, w, r));
    }
  }
}

inline void run_action(const PropA4Command& c, Report& report) {
  report.columns = {"n", "m", "ord", "shifted_ord", "bound", "denominator_ord"};
  const auto add = [&](std::int64_t n, std::int64_t m) {
    const auto rep = check_prop_a4(n, m);
    report.add({n, m, rep.observed_ord.to_string(), (2 + ord2(bernoulli_nt(NTIndex(n)) -
                                                             bernoulli_nt(NTIndex(m))))
                                                        .to_string(),
                rep.bound,
                ord2((bernoulli_nt(NTIndex(n)) * bernoulli_nt(NTIndex(m))).denominator())
                    .to_string()},
               rep.holds);
  };
  if (!c.sweep) {
    add(c.n, c.m);
    return;
  }
  for (std::int64_t m = 4; m <= c.m; m += 2) {
    for (std::int64_t n = 2; n < m; n += 2) add(n, m);
  }
}

inline void run_action(const ThmA1Command& c, Report& report) {
  report.columns = {"k", "j", "ord", "bound", "strict"};
  const std::int64_t lo = c.sweep ? 2 : c.k;
  for (std::int64_t k = lo; k <= c.k; k += 2) {
    const auto rep = check_theorem_a1(k);
    report.add({k, ord2(k), rep.observed_ord.to_string(), rep.bound, rep.strict()}, rep.holds);
  }
}

inline void run_action(const AhatCommand& c, Report& report) {
  report.columns = {"k", "sigma", "tau2", "ahat", "integer"};
  const auto a = ahat(c.k, c.sigma, c.tau_sq);
  report.add({c.k, c.sigma.get_str(), c.tau_sq.get_str(), a.value.to_string(), a.is_integer}, true);
}

inline std::vector<std::string> admissibility_columns() {
  return {"k",    "sigma",          "tau2",           "tau_in_image", "yang", "yang_plus",
          "consistent", "condition_value", "condition_ord2"};
}

inline void add_admissibility_row(const ManifoldInvariants& inv, Report& report) {
  const auto rep = decide_admissibility(inv);
  const auto audit_value = [&](const std::string& name) {
    for (const auto& e : rep.audit) {
      if (e.name == name) return e.value;
    }
    return std::string("-");
  };
  report.add({inv.k, inv.sigma.get_str(), inv.tau_sq.get_str(), inv.tau_in_image,
              rep.yang_verdict, rep.yang_plus_verdict, rep.consistent,
              audit_value("condition_value"), audit_value("condition_ord2")},
             rep.consistent);
}

inline void run_action(const AdmitsCommand& c, Report& report) {
  report.columns = admissibility_columns();
  add_admissibility_row(c.invariants, report);
}

inline void run_action(const AuditYangCommand& c, Report& report) {
  report.columns = admissibility_columns();
  for (const auto& inv : audit_instances(c.max_k)) add_admissibility_row(inv, report);
}

inline void run_action(const SelfCheckCommand& c, Report& report) {
  report.columns = {"max_n", "values_checked", "first_discrepancy"};
  const auto rep = self_check(NTIndex(c.max_n));
  std::string where = "-";
  if (rep.first_discrepancy) {
    where = "n=" + std::to_string(rep.first_discrepancy->n) + ": " + rep.first_discrepancy->what;
  }
  report.add({rep.n_max, rep.checked, where}, rep.ok());
}

}  // namespace detail

/// Executes a parsed command. Internal check failures are captured in the
/// report (exit code 1) instead of propagating.
inline Report run(const Command& cmd) {
  Report report;
  report.command = cmd.echo;
  try {
    std::visit([&](const auto& action) { detail::run_action(action, report); }, cmd.action);
  } catch (const InternalCheckFailure& e) {
    report.internal_error = e.what();
  }
  return report;
}

struct Outcome {
  int exit_code;
  std::string out;
  std::string err;
};

/// parse + run + render, mapped onto exit codes.
inline Outcome execute(const std::vector<std::string>& args) {
  try {
    const Command cmd = parse(args);
    const Report report = run(cmd);
    Outcome o{report.exit_code(), render(report, cmd.format), ""};
    if (report.internal_error) o.err = "INTERNAL CHECK FAILURE: " + *report.internal_error + "\n";
    return o;
  } catch (const InfoRequested& info) {
    return {kExitOk, info.text, ""};
  } catch (const UsageError& e) {
    return {kExitUsage, "", std::string("usage error: ") + e.what() + "\n"};
  } catch (const std::domain_error& e) {
    return {kExitUsage, "", std::string("usage error: ") + e.what() + "\n"};
  }
}

}  // namespace steinfill::cli
