#pragma once

#include "appell/moments.hpp"
#include "appell/polynomial.hpp"
#include "appell/stirling.hpp"
#include "appell/verify.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace appell::output {

enum class Format { Text, Csv, Json };

/// Throws UsageError for anything but text, csv or json.
Format parse_format(std::string_view name);

/// Descriptor echo carried by every document ("distribution", "family", "t", ...).
using Metadata = std::map<std::string, std::string>;

std::string render_stirling(const StirlingTable& table, const Metadata& meta, Format format);
std::string render_sum_moments(const SumMomentTable& table, const Metadata& meta, Format format);

/// A value printed either exactly ("p/q") or, in float mode, as a shortest
/// round-trip decimal.
struct Value {
  Rational exact;
  std::optional<double> approx;

  std::string str() const;
};

std::string render_coeffs(const std::vector<Value>& coeffs, const Metadata& meta, Format format);

struct Evaluation {
  std::string x;  // as given on the command line
  Value value;
};

std::string render_poly(const Polynomial& poly, std::size_t n, const std::optional<Evaluation>& eval,
                        bool float_coeffs, const Metadata& meta, Format format);

std::string render_report(const verify::Report& report, Format format);

/// Shortest decimal that round-trips to the same double.
std::string format_double(double value);

}  // namespace appell::output
