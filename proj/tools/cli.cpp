#include "cli.hpp"

#include "appell/appell.hpp"
#include "appell/errors.hpp"
#include "appell/fault.hpp"
#include "appell/families.hpp"
#include "appell/output.hpp"
#include "appell/stirling.hpp"
#include "appell/verify.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <optional>

namespace appell::cli {

namespace {

constexpr std::size_t kDefaultOrder = 20;
constexpr std::size_t kSoftCap = 64;

struct Common {
  std::size_t order = kDefaultOrder;
  std::string format = "text";
  std::string out_path;
};

struct TableArgs {
  std::string kind;
  std::string distribution;
  std::string route = "definition-sum";
};

struct SequenceArgs {
  std::string family;
  std::string distribution;
  std::string t = "1";
  std::string route;
  std::string eval;
  bool float_mode = false;
};

struct VerifyArgs {
  std::string suite = "all";
  std::vector<std::string> distributions;
  std::string inject_fault;
  unsigned seed = verify::Options{}.seed;
};

std::size_t soft_cap() {
  if (const char* env = std::getenv("APPELL_MAX_N")) {
    try {
      return static_cast<std::size_t>(std::stoul(env));
    } catch (const std::exception&) {
      // unparsable override: keep the default cap
    }
  }
  return kSoftCap;
}

void warn_if_large(std::size_t order, std::ostream& err) {
  const std::size_t cap = soft_cap();
  if (order > cap) {
    err << "warning: N = " << order << " exceeds the soft cap " << cap
        << "; binomial-route powers and generating-function tables grow quickly\n";
  }
}

Rational parse_rational_flag(const std::string& name, const std::string& text) {
  try {
    return Rational::parse(text);
  } catch (const RationalParseError& e) {
    throw UsageError("--" + name + ": " + e.what());
  }
}

bool looks_decimal(const std::string& text) {
  return text.find_first_of(".eE") != std::string::npos;
}

double parse_decimal(const std::string& text) {
  std::size_t used = 0;
  double value = 0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw UsageError("--eval: not a number: '" + text + "'");
  }
  if (used != text.size()) throw UsageError("--eval: not a number: '" + text + "'");
  return value;
}

ConstantsRoute parse_constants_route(const std::string& name) {
  if (name == "stirling-form") return ConstantsRoute::StirlingForm;
  if (name == "moment-form") return ConstantsRoute::MomentForm;
  if (name == "binomial-route") return ConstantsRoute::BinomialRoute;
  if (name == "series-oracle") return ConstantsRoute::SeriesOracle;
  throw UsageError("unknown route '" + name + "'");
}

StirlingRoute parse_stirling_route(const std::string& name) {
  if (name == "definition-sum") return StirlingRoute::DefinitionSum;
  if (name == "generating-function") return StirlingRoute::GeneratingFunction;
  if (name == "lemma2-expansion") return StirlingRoute::Lemma2Expansion;
  throw UsageError("unknown Stirling route '" + name + "'");
}

void emit(const std::string& document, const Common& common, std::ostream& out) {
  if (common.out_path.empty()) {
    out << document;
    return;
  }
  std::ofstream file(common.out_path, std::ios::binary);
  if (!file) throw InputError("cannot write output file '" + common.out_path + "'");
  file << document;
}

int cmd_table(const TableArgs& args, const Common& common, std::ostream& out, std::ostream& err) {
  const auto format = output::parse_format(common.format);
  warn_if_large(common.order, err);
  const MomentSequence mu = parse_distribution(args.distribution, common.order);
  output::Metadata meta{{"distribution", mu.tag().describe()}, {"n", std::to_string(common.order)}};
  if (args.kind == "stirling") {
    const auto route = parse_stirling_route(args.route);
    meta["route"] = to_string(route);
    emit(output::render_stirling(stirling_prob_table(mu, common.order, route), meta, format), common, out);
  } else {
    emit(output::render_sum_moments(sum_moment_table(mu, common.order), meta, format), common, out);
  }
  return kExitOk;
}

struct ResolvedSequence {
  std::vector<Rational> constants;
  output::Metadata meta;
};

ResolvedSequence resolve_sequence(const SequenceArgs& args, std::size_t order) {
  const bool has_family = !args.family.empty();
  const bool has_distribution = !args.distribution.empty();
  if (has_family == has_distribution) throw UsageError("give exactly one of --family or --distribution");

  ResolvedSequence resolved;
  resolved.meta["n"] = std::to_string(order);
  if (has_family) {
    const FamilySpec spec = parse_family(args.family);
    resolved.meta["family"] = spec.describe();
    const std::string route = args.route.empty() ? "closed-form" : args.route;
    resolved.meta["route"] = route;
    if (route == "closed-form") {
      resolved.constants = family_constants(spec, order);
    } else {
      const FamilyLaw law = family_law(spec, order);
      resolved.constants = appell_constants(law.moments, law.t, order, parse_constants_route(route));
    }
    return resolved;
  }
  const Rational t = parse_rational_flag("order", args.t);
  const MomentSequence mu = parse_distribution(args.distribution, order);
  const ConstantsRoute route = args.route.empty() ? ConstantsRoute::StirlingForm : parse_constants_route(args.route);
  resolved.meta["distribution"] = mu.tag().describe();
  resolved.meta["t"] = t.str();
  resolved.meta["route"] = to_string(route);
  resolved.constants = appell_constants(mu, t, order, route);
  return resolved;
}

int cmd_coeffs(const SequenceArgs& args, const Common& common, std::ostream& out, std::ostream& err) {
  const auto format = output::parse_format(common.format);
  warn_if_large(common.order, err);
  const ResolvedSequence seq = resolve_sequence(args, common.order);
  std::vector<output::Value> values;
  for (const auto& c : seq.constants) {
    output::Value v{c, std::nullopt};
    if (args.float_mode) v.approx = c.to_double();
    values.push_back(std::move(v));
  }
  emit(output::render_coeffs(values, seq.meta, format), common, out);
  return kExitOk;
}

int cmd_poly(const SequenceArgs& args, const Common& common, std::ostream& out, std::ostream& err) {
  const auto format = output::parse_format(common.format);
  warn_if_large(common.order, err);
  ResolvedSequence seq = resolve_sequence(args, common.order);
  const auto polys = build_polynomials(seq.constants);
  const Polynomial& p = polys.at(common.order);

  std::optional<output::Evaluation> eval;
  if (!args.eval.empty()) {
    output::Evaluation e{args.eval, {}};
    if (looks_decimal(args.eval)) {
      const double x = parse_decimal(args.eval);
      e.value.approx = evaluate_float(p, x);
    } else {
      const Rational x = parse_rational_flag("eval", args.eval);
      e.value.exact = evaluate(p, x);
      if (args.float_mode) e.value.approx = evaluate_float(p, x.to_double());
    }
    eval = std::move(e);
  }
  emit(output::render_poly(p, common.order, eval, args.float_mode, seq.meta, format), common, out);
  return kExitOk;
}

int cmd_verify(const VerifyArgs& args, const Common& common, std::ostream& out, std::ostream& err) {
  const auto format = output::parse_format(common.format);
  warn_if_large(common.order, err);
  verify::Options options;
  options.suite = verify::parse_suite(args.suite);
  options.order = common.order;
  options.seed = args.seed;
  for (const auto& d : args.distributions) options.extra_distributions.push_back(parse_distribution(d, common.order));

  struct Disarm {
    ~Disarm() {
      if (fault::hooks_enabled()) fault::arm("");
    }
  } disarm;
  if (!args.inject_fault.empty()) fault::arm(args.inject_fault);

  const verify::Report report = verify::run(options);
  emit(output::render_report(report, format), common, out);
  if (!report.passed()) {
    err << report.failures() << " of " << report.checks.size() << " checks failed\n";
    return kExitVerifyFailed;
  }
  return kExitOk;
}

void add_common(CLI::App* cmd, Common& common, bool with_csv = true) {
  cmd->add_option("--n", common.order, "Truncation order N")->check(CLI::NonNegativeNumber);
  auto* fmt = cmd->add_option("--format", common.format, "Output format");
  fmt->check(with_csv ? CLI::IsMember({"text", "csv", "json"}) : CLI::IsMember({"text", "json"}));
  cmd->add_option("--out", common.out_path, "Write the document to this file instead of standard output");
}

void add_sequence(CLI::App* cmd, SequenceArgs& seq) {
  cmd->add_option("--family", seq.family,
                  "classical-bernoulli | gen-bernoulli:t,m | bernoulli-order:t | apostol-euler:t,beta | "
                  "classical-euler | bstar:t,beta");
  cmd->add_option("--distribution", seq.distribution,
                  "Law of Y: point-mass-one | uniform01 | beta:m | bernoulli:b | bernoulli-times-uniform:b | "
                  "custom:<path>");
  cmd->add_option("--order", seq.t,
                  "Order t with --distribution: the generating function is e^{xz} / (E e^{zY})^t (default 1)");
  cmd->add_option("--route", seq.route,
                  "closed-form (families only) | stirling-form | moment-form | binomial-route | series-oracle");
  cmd->add_flag("--float", seq.float_mode, "Also print double-precision values (exact output otherwise)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Appell sequences generated by e^{xz} / (E e^{zY})^t"};
  app.name("appell");
  app.require_subcommand(1);

  Common common;
  TableArgs table;
  SequenceArgs sequence;
  VerifyArgs verify_args;

  auto* table_cmd = app.add_subcommand("table", "Probabilistic Stirling triangle or iid-sum moment table");
  table_cmd->add_option("kind", table.kind, "stirling | sum-moments")
      ->required()
      ->check(CLI::IsMember({"stirling", "sum-moments"}));
  table_cmd->add_option("--distribution", table.distribution, "Law of Y (see coeffs --help)")->required();
  table_cmd->add_option("--route", table.route, "definition-sum | generating-function | lemma2-expansion");
  add_common(table_cmd, common);

  auto* coeffs_cmd = app.add_subcommand("coeffs", "Appell constants A_0(t;0)..A_N(t;0)");
  add_sequence(coeffs_cmd, sequence);
  add_common(coeffs_cmd, common);

  auto* poly_cmd = app.add_subcommand("poly", "Polynomial A_N(t;x), optionally evaluated");
  add_sequence(poly_cmd, sequence);
  poly_cmd->add_option("--eval", sequence.eval, "Evaluate at x: exact for p/q, double precision for decimals");
  add_common(poly_cmd, common);

  auto* verify_cmd = app.add_subcommand("verify", "Run the identity and cross-route checks");
  verify_cmd->add_option("--suite", verify_args.suite, "all | arith | series | moments | stirling | diffops | appell | families");
  verify_cmd->add_option("--distribution", verify_args.distributions, "Extra law(s) to include, e.g. custom:<path>");
  verify_cmd->add_option("--seed", verify_args.seed, "Seed for the randomized cases");
  if (fault::hooks_enabled()) {
    verify_cmd->add_option("--inject-fault", verify_args.inject_fault,
                           "Test hook: corrupt one entry of sum-moments | stirling | classical-stirling");
  }
  add_common(verify_cmd, common, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*table_cmd) return cmd_table(table, common, out, err);
    if (*coeffs_cmd) return cmd_coeffs(sequence, common, out, err);
    if (*poly_cmd) return cmd_poly(sequence, common, out, err);
    if (*verify_cmd) return cmd_verify(verify_args, common, out, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputFile;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}

}  // namespace appell::cli
