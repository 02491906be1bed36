#pragma once

#include "appell/moments.hpp"
#include "appell/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace appell::verify {

struct Mismatch {
  std::string location;  // e.g. "n=4" or "n=5,m=2"
  std::string expected;
  std::string actual;
};

struct CheckResult {
  std::string name;
  std::map<std::string, std::string> params;
  std::size_t cases = 0;  // number of exact comparisons performed
  std::optional<Mismatch> mismatch;

  bool passed() const { return !mismatch.has_value(); }
};

struct Report {
  std::string suite;
  std::size_t order = 0;
  std::vector<CheckResult> checks;  // sorted by name

  bool passed() const;
  std::size_t failures() const;
};

enum class Suite { All, Arith, Series, Moments, Stirling, Diffops, Appell, Families };

/// Throws UsageError for unknown names.
Suite parse_suite(std::string_view name);
const char* to_string(Suite suite);

struct Options {
  Suite suite = Suite::All;
  std::size_t order = 20;
  std::vector<MomentSequence> extra_distributions;  // appended to the named grid
  unsigned seed = 20170;                            // randomized diffops/series cases
  std::size_t random_cases = 200;
};

/// Runs every check in the suite. Checks with exponential cost clamp their own
/// order (recorded in params as "n_max").
Report run(const Options& options);

/// Distribution grid used by the suites: point-mass-one, beta(1..5),
/// bernoulli(0,1/3,1/2,1), bernoulli-times-uniform(1/3,1/2,1).
std::vector<MomentSequence> named_grid(std::size_t order);

/// t in {-2,-1,-1/2,0,1/2,1,2,3}.
std::vector<Rational> order_grid();

/// First index where the lists differ, or nullopt. Length mismatch reports the first missing index.
std::optional<Mismatch> compare(const std::vector<Rational>& expected, const std::vector<Rational>& actual,
                                std::string_view index_name = "n");

}  // namespace appell::verify
