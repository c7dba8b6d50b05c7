// Command-line front end: eval, table, verify, moments, pmf, derive.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <CLI11.hpp>
#include <iostream>
#include <optional>
#include <regex>
#include <sstream>

#include "rbell/calculus.hpp"
#include "rbell/families.hpp"
#include "rbell/oracle.hpp"
#include "rbell/rbell.hpp"
#include "rbell/stochastic.hpp"
#include "verify.hpp"

namespace {

using namespace rbell;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

// eval

struct EvalArgs {
  unsigned n = 0, k = 0, r = 0;
  std::optional<std::string> a, b;
  std::string method = "egf";
  bool json = false;
};

int cmd_eval(const EvalArgs& args) {
  RBellQuery q{args.n, args.k, args.r};
  if (args.a) q.a = VarSeq::values(parse_rational_list(*args.a), VarKind::A);
  if (args.b) q.b = VarSeq::values(parse_rational_list(*args.b), VarKind::B);
  const Poly value = compute_rbell(q, parse_method(args.method));
  const bool numeric = args.a && args.b;
  if (!numeric) {
    print_json(to_json(value));
  } else if (args.json) {
    print_json({{"n", args.n}, {"k", args.k}, {"r", args.r}, {"value", to_string(value.constant_term())}});
  } else {
    std::cout << to_string(value.constant_term()) << "\n";
  }
  return 0;
}

// table

struct TableArgs {
  std::string family;
  unsigned m = 1, r = 0;
  std::string mode = "plain";
  std::optional<unsigned> threshold;
  unsigned n_max = 0;
  std::string format = "csv";
  std::string source = "egf";
  bool sign = false;
  bool printed_sign = false;
  bool json = false;
};

int cmd_table(const TableArgs& args) {
  SeqSpec spec{parse_family(args.family), args.r, args.m, parse_mode(args.mode), 1};
  if (spec.mode == Mode::Associated || spec.mode == Mode::Truncated) {
    if (!args.threshold) throw UsageError("--mode " + args.mode + " needs --threshold");
    spec.threshold = *args.threshold;
  } else if (args.threshold) {
    throw UsageError("--threshold only applies to the associated and truncated modes");
  }
  spec.validate();

  NumberTable table;
  if (args.source == "egf") {
    table = table_via_egf(spec, args.n_max);
  } else if (args.source == "rbell") {
    table = table_via_rbell(spec, args.n_max);
    if (spec.family == Family::RWhitney1) {
      std::cerr << "note: the r-Bell specialisation of r-whitney1 differs from its EGF (see verify --suite families)\n";
    }
  } else if (args.source == "oracle") {
    table = oracle_count_table(spec, args.n_max);
  } else {
    throw UsageError("--source must be egf, rbell or oracle");
  }

  const bool signed_out = args.sign || args.printed_sign;
  const SignConvention convention = args.printed_sign ? SignConvention::Printed : SignConvention::Standard;
  auto value = [&](unsigned n, unsigned k) {
    return signed_out ? signed_entry(table, n, k, convention) : table.at(n, k);
  };

  const std::string family(to_string(spec.family));
  const std::string mode = mode_label(spec);
  if (args.format == "csv" && !args.json) {
    std::cout << "family,m,r,mode,n,k,value\n";
    for (unsigned n = 0; n <= args.n_max; ++n) {
      for (unsigned k = 0; k <= n; ++k) {
        std::cout << family << ',' << spec.m << ',' << spec.r << ',' << mode << ',' << n << ',' << k << ','
                  << value(n, k).get_str() << '\n';
      }
    }
  } else if (args.format == "json" || args.json) {
    nlohmann::json rows = nlohmann::json::array();
    for (unsigned n = 0; n <= args.n_max; ++n) {
      nlohmann::json row = nlohmann::json::array();
      for (unsigned k = 0; k <= n; ++k) row.push_back(value(n, k).get_str());
      rows.push_back(std::move(row));
    }
    const char* sign = !spec.first_kind() || !signed_out ? (spec.first_kind() ? "absolute" : "none")
                       : args.printed_sign                 ? "(-1)^(n-k+r)"
                                                         : "(-1)^(n-k)";
    print_json({{"metadata",
                 {{"family", family},
                  {"m", spec.m},
                  {"r", spec.r},
                  {"mode", mode},
                  {"n_max", args.n_max},
                  {"indexing", spec.total_indexing() ? "total" : "reduced"},
                  {"source", args.source},
                  {"sign", sign}}},
                {"rows", std::move(rows)}});
  } else {
    throw UsageError("--format must be csv or json");
  }
  return 0;
}

// verify

struct VerifyArgs {
  std::string suite = "all";
  cli::VerifyBounds bounds;
  bool json = false;
};

std::string plural(std::size_t count, const std::string& one, const std::string& many) {
  return std::to_string(count) + " " + (count == 1 ? one : many);
}

// A check name with its index triple removed, so that one printed form over
// many (n,k,r) is reported once.
std::string form_of(const std::string& name) {
  static const std::regex indices(R"( ?\(n=[^)]*\))");
  static const std::regex family_prefix(R"(^r-\S+( m=\d+)? r=\d+( mode=\S+)?: )");
  return std::regex_replace(std::regex_replace(name, indices, ""), family_prefix, "");
}

int cmd_verify(const VerifyArgs& args) {
  std::vector<std::string> suites;
  if (args.suite == "all") {
    suites = cli::suite_names();
  } else {
    const auto& names = cli::suite_names();
    if (std::find(names.begin(), names.end(), args.suite) == names.end()) {
      throw UsageError("unknown suite '" + args.suite + "'");
    }
    suites = {args.suite};
  }

  bool all_passed = true;
  nlohmann::json suites_json = nlohmann::json::object();
  nlohmann::json known = nlohmann::json::array();
  std::ostringstream text;
  for (const std::string& name : suites) {
    const cli::SuiteResult result = cli::run_suite(name, args.bounds);
    const IdentityReport& report = result.report;
    std::size_t failed = 0, diag_holding = 0;
    nlohmann::json failures = nlohmann::json::array();
    nlohmann::json diag_failing = nlohmann::json::object();
    for (const auto& c : report.checks) {
      if (c.passed) continue;
      ++failed;
      failures.push_back({{"name", c.name}, {"detail", c.detail}});
    }
    for (const auto& d : report.diagnostics) {
      if (d.passed) {
        ++diag_holding;
        continue;
      }
      auto& entry = diag_failing[form_of(d.name)];
      if (entry.is_null()) entry = {{"count", 0}, {"first", d.name + (d.detail.empty() ? "" : " -> " + d.detail)}};
      entry["count"] = entry["count"].get<std::size_t>() + 1;
    }
    all_passed = all_passed && failed == 0;
    for (const auto& k : result.known_discrepancies) known.push_back(k);

    text << "suite " << name << ": " << (failed == 0 ? "PASS" : "FAIL") << " ("
         << report.checks.size() - failed << "/" << report.checks.size() << " checks)\n";
    for (const auto& f : failures) {
      text << "  failed: " << f["name"].get<std::string>() << " " << f["detail"].get<std::string>() << "\n";
    }
    if (!report.diagnostics.empty()) {
      text << "  diagnostics: " << diag_holding << "/" << report.diagnostics.size() << " printed forms hold\n";
      for (const auto& [form, entry] : diag_failing.items()) {
        text << "    does not hold (" << entry["count"].get<std::size_t>() << "x): " << form << "\n";
      }
    }
    suites_json[name] = {{"passed", failed == 0},
                         {"checks", report.checks.size()},
                         {"failed", failures},
                         {"diagnostics", {{"total", report.diagnostics.size()},
                                          {"holding", diag_holding},
                                          {"not_holding", diag_failing}}}};
  }
  if (!known.empty()) {
    text << "known-discrepancy: " << plural(known.size(), "r-whitney1 crosscheck differs", "r-whitney1 crosschecks differ")
         << " from the printed specialisation (reported, not failed)\n";
    for (const auto& k : known) {
      text << "  m=" << k["m"] << " r=" << k["r"] << ": "
           << plural(k["known_discrepancy"]["entries"].size(), "entry differs", "entries differ") << "\n";
    }
  }
  text << (all_passed ? "PASS" : "FAIL") << "\n";

  if (args.json) {
    print_json({{"passed", all_passed},
                {"bounds",
                 {{"n_max", args.bounds.n_max},
                  {"r_max", args.bounds.r_max},
                  {"seed", args.bounds.seed},
                  {"trials", args.bounds.trials}}},
                {"suites", suites_json},
                {"known-discrepancy", known}});
  } else {
    std::cout << text.str();
  }
  return all_passed ? 0 : kExitFailure;
}

// moments / pmf

struct MomentArgs {
  unsigned p = 1, q = 0, n = 0;
  std::string mu;
  std::string nu = "1";
  bool json = false;
};

int cmd_moments(const MomentArgs& args) {
  const MomentSpec spec = MomentSpec::from_lists(parse_rational_list(args.mu), parse_rational_list(args.nu));
  const Rational value = moment_of_sum(args.p, args.q, args.n, spec);
  if (args.json) {
    print_json({{"p", args.p}, {"q", args.q}, {"n", args.n}, {"moment", to_string(value)}});
  } else {
    std::cout << to_string(value) << "\n";
  }
  return 0;
}

struct PmfArgs {
  unsigned p = 1, q = 0;
  std::optional<unsigned> n;
  std::string px;
  std::string py = "1";
  bool json = false;
};

int cmd_pmf(const PmfArgs& args) {
  const PmfSpec spec{parse_rational_list(args.px), parse_rational_list(args.py)};
  std::vector<unsigned> points;
  if (args.n) {
    points.push_back(*args.n);
  } else {
    spec.validate();
    for (unsigned n = 0; n <= support_max(args.p, args.q, spec); ++n) points.push_back(n);
  }
  nlohmann::json values = nlohmann::json::array();
  for (unsigned n : points) {
    const Rational v = pmf_of_sum(args.p, args.q, n, spec);
    if (args.json) {
      values.push_back({{"n", n}, {"probability", to_string(v)}});
    } else if (args.n) {
      std::cout << to_string(v) << "\n";
    } else {
      std::cout << n << "," << to_string(v) << "\n";
    }
  }
  if (args.json) print_json({{"p", args.p}, {"q", args.q}, {"pmf", values}});
  return 0;
}

// derive

struct DeriveArgs {
  unsigned n = 0, r = 0;
  std::string f, g;
  std::string h = "0";
  std::string method = "rbell";
  bool json = false;
};

int cmd_derive(const DeriveArgs& args) {
  const JetSpec jet =
      JetSpec::from_rationals(parse_rational_list(args.f), parse_rational_list(args.g), parse_rational_list(args.h));
  Poly value;
  if (args.method == "rbell") {
    value = derivative_via_rbell(args.n, args.r, jet);
  } else if (args.method == "series") {
    value = derivative_via_series(args.n, args.r, jet);
  } else {
    throw UsageError("--method must be rbell or series");
  }
  if (args.json) {
    print_json({{"n", args.n}, {"r", args.r}, {"method", args.method}, {"value", to_string(value.constant_term())}});
  } else {
    std::cout << to_string(value.constant_term()) << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact partial r-Bell polynomials and their number families"};
  app.require_subcommand(1);
  // -h would clash with derive's --h jet.
  app.set_help_flag("--help", "Print this help message and exit");

  EvalArgs eval;
  auto* e = app.add_subcommand("eval", "Evaluate B^{(r)}_{n+r,k+r}(a; b), symbolically or at given weights");
  e->add_option("--n", eval.n, "reduced first index")->required();
  e->add_option("--k", eval.k, "reduced second index")->required();
  e->add_option("--r", eval.r, "number of distinguished elements")->required();
  e->add_option("--a", eval.a, "a_1,a_2,... as exact rationals");
  e->add_option("--b", eval.b, "b_1,b_2,... as exact rationals");
  e->add_option("--method", eval.method, "egf|composition|lambda|convolution|recurrence");
  e->add_flag("--json", eval.json, "JSON output for numeric results");

  TableArgs table;
  auto* t = app.add_subcommand("table", "Emit a number-family triangle");
  t->add_option("--family", table.family, "r-stirling2|r-stirling1|r-lah|r-whitney2|r-whitney1|r-whitney-lah")
      ->required();
  t->add_option("--m", table.m, "Whitney parameter");
  t->add_option("--r", table.r, "number of distinguished elements");
  t->add_option("--mode", table.mode, "plain|associated|truncated|even|odd");
  t->add_option("--threshold", table.threshold, "size bound for associated/truncated modes");
  t->add_option("--n-max", table.n_max, "last row")->required();
  t->add_option("--format", table.format, "csv|json");
  t->add_option("--source", table.source, "egf|rbell|oracle");
  t->add_flag("--signed", table.sign, "first-kind entries with sign (-1)^(n-k)");
  t->add_flag("--printed-sign", table.printed_sign, "first-kind entries with the printed sign (-1)^(n-k+r)");
  t->add_flag("--json", table.json, "same as --format json");

  VerifyArgs verify;
  auto* v = app.add_subcommand("verify", "Run verification suites");
  v->add_option("--suite", verify.suite, "paths|oracle|identities|families|stochastic|calculus|all");
  v->add_option("--n-max", verify.bounds.n_max, "size bound");
  v->add_option("--r-max", verify.bounds.r_max, "bound on r");
  v->add_option("--seed", verify.bounds.seed, "seed for random instances and Monte Carlo");
  v->add_option("--trials", verify.bounds.trials, "Monte Carlo trials per case (>= 10000)");
  v->add_flag("--json", verify.json, "JSON report");

  MomentArgs moments;
  auto* mo = app.add_subcommand("moments", "E(S^n) for S = X_1+...+X_p + Y_1+...+Y_q");
  mo->add_option("--p", moments.p, "number of X summands (>= 1)");
  mo->add_option("--q", moments.q, "number of Y summands");
  mo->add_option("--n", moments.n, "moment order")->required();
  mo->add_option("--mu", moments.mu, "E(X^0),E(X^1),...")->required();
  mo->add_option("--nu", moments.nu, "E(Y^0),E(Y^1),...");
  mo->add_flag("--json", moments.json, "JSON output");

  PmfArgs pmf;
  auto* pm = app.add_subcommand("pmf", "P(S = n) for finitely supported integer laws");
  pm->add_option("--p", pmf.p, "number of X summands (>= 1)");
  pm->add_option("--q", pmf.q, "number of Y summands");
  pm->add_option("--n", pmf.n, "point; omit for the whole support");
  pm->add_option("--px", pmf.px, "P(X=0),P(X=1),...")->required();
  pm->add_option("--py", pmf.py, "P(Y=0),P(Y=1),...");
  pm->add_flag("--json", pmf.json, "JSON output");

  DeriveArgs derive;
  auto* d = app.add_subcommand("derive", "n-th derivative of H'(x)^r F(G(x)) from Taylor data");
  d->add_option("--n", derive.n, "derivative order")->required();
  d->add_option("--r", derive.r, "power of H'");
  d->add_option("--f", derive.f, "F(G(a)),F'(G(a)),...")->required();
  d->add_option("--g", derive.g, "G(a)-G(a)=0,G'(a),G''(a),...")->required();
  d->add_option("--h", derive.h, "H(a),H'(a),H''(a),... (H(a) is ignored)");
  d->add_option("--method", derive.method, "rbell|series");
  d->add_flag("--json", derive.json, "JSON output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& err) {
    return app.exit(err);
  } catch (const CLI::CallForAllHelp& err) {
    return app.exit(err);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kExitUsage;
  }

  try {
    if (*e) return cmd_eval(eval);
    if (*t) return cmd_table(table);
    if (*v) return cmd_verify(verify);
    if (*mo) return cmd_moments(moments);
    if (*pm) return cmd_pmf(pmf);
    if (*d) return cmd_derive(derive);
  } catch (const std::exception& err) {
    // Anything thrown before output is complete is a problem with the inputs.
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
