#include "appell/output.hpp"

#include "appell/errors.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <sstream>

namespace appell::output {

namespace {

using nlohmann::json;

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

json rational_list(const std::vector<Rational>& values) {
  json out = json::array();
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

json value_json(const Value& v) {
  if (v.approx) return *v.approx;
  return v.exact.str();
}

std::string join(const std::vector<Rational>& values, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += sep;
    out += values[i].str();
  }
  return out;
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  throw UsageError("unknown format '" + std::string(name) + "' (expected text, csv or json)");
}

std::string format_double(double value) {
  char buffer[64];
  const auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  if (ec != std::errc()) return "nan";
  return std::string(buffer, end);
}

std::string Value::str() const { return approx ? format_double(*approx) : exact.str(); }

std::string render_stirling(const StirlingTable& table, const Metadata& meta, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Text:
      for (std::size_t n = 0; n <= table.order(); ++n) out << "n=" << n << ": " << join(table.row(n), " ") << "\n";
      return out.str();
    case Format::Csv:
      out << "n,m,value\n";
      for (std::size_t n = 0; n <= table.order(); ++n) {
        for (std::size_t m = 0; m <= n; ++m) out << n << "," << m << "," << table.at(n, m) << "\n";
      }
      return out.str();
    case Format::Json: {
      json rows = json::array();
      for (const auto& row : table.rows()) rows.push_back(rational_list(row));
      json doc = {{"kind", "stirling"}, {"metadata", meta}, {"order", table.order()},
                  {"route", to_string(table.source())}, {"rows", rows}};
      return dump(doc);
    }
  }
  return {};
}

std::string render_sum_moments(const SumMomentTable& table, const Metadata& meta, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Text:
      for (std::size_t k = 0; k <= table.order(); ++k) out << "k=" << k << ": " << join(table.row(k), " ") << "\n";
      return out.str();
    case Format::Csv:
      out << "k,n,value\n";
      for (std::size_t k = 0; k <= table.order(); ++k) {
        for (std::size_t n = 0; n <= table.order(); ++n) out << k << "," << n << "," << table.at(k, n) << "\n";
      }
      return out.str();
    case Format::Json: {
      json rows = json::array();
      for (const auto& row : table.values()) rows.push_back(rational_list(row));
      json doc = {{"kind", "sum-moments"}, {"metadata", meta}, {"order", table.order()}, {"rows", rows}};
      return dump(doc);
    }
  }
  return {};
}

std::string render_coeffs(const std::vector<Value>& coeffs, const Metadata& meta, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Text:
      out << "[";
      for (std::size_t i = 0; i < coeffs.size(); ++i) out << (i ? ", " : "") << coeffs[i].str();
      out << "]\n";
      return out.str();
    case Format::Csv:
      out << "n,value\n";
      for (std::size_t i = 0; i < coeffs.size(); ++i) out << i << "," << coeffs[i].str() << "\n";
      return out.str();
    case Format::Json: {
      json values = json::array();
      for (const auto& v : coeffs) values.push_back(value_json(v));
      json doc = {{"kind", "coefficients"}, {"metadata", meta}, {"order", coeffs.empty() ? 0 : coeffs.size() - 1},
                  {"values", values}};
      return dump(doc);
    }
  }
  return {};
}

std::string render_poly(const Polynomial& poly, std::size_t n, const std::optional<Evaluation>& eval,
                        bool float_coeffs, const Metadata& meta, Format format) {
  std::vector<Value> coeffs;
  for (std::size_t i = 0; i <= poly.degree(); ++i) {
    Value v{poly.coeff(i), std::nullopt};
    if (float_coeffs) v.approx = v.exact.to_double();
    coeffs.push_back(std::move(v));
  }
  std::ostringstream out;
  switch (format) {
    case Format::Text:
      if (float_coeffs) {
        for (std::size_t i = coeffs.size(); i-- > 0;) {
          out << coeffs[i].str() << (i > 0 ? "*x^" + std::to_string(i) + " + " : "");
        }
        out << "\n";
      } else {
        out << poly.str() << "\n";
      }
      if (eval) out << eval->value.str() << "\n";
      return out.str();
    case Format::Csv:
      out << "power,coefficient\n";
      for (std::size_t i = 0; i < coeffs.size(); ++i) out << i << "," << coeffs[i].str() << "\n";
      if (eval) out << "eval@" << eval->x << "," << eval->value.str() << "\n";
      return out.str();
    case Format::Json: {
      json cs = json::array();
      for (const auto& v : coeffs) cs.push_back(value_json(v));
      json doc = {{"kind", "polynomial"}, {"metadata", meta}, {"n", n}, {"coefficients", cs}};
      if (!float_coeffs) doc["polynomial"] = poly.str();
      if (eval) doc["evaluation"] = {{"x", eval->x}, {"value", value_json(eval->value)}};
      return dump(doc);
    }
  }
  return {};
}

std::string render_report(const verify::Report& report, Format format) {
  std::ostringstream out;
  switch (format) {
    case Format::Text:
    case Format::Csv:
      if (format == Format::Csv) out << "name,passed,cases,location,expected,actual\n";
      for (const auto& check : report.checks) {
        if (format == Format::Csv) {
          out << check.name << "," << (check.passed() ? "true" : "false") << "," << check.cases;
          if (check.mismatch) {
            out << "," << check.mismatch->location << "," << check.mismatch->expected << "," << check.mismatch->actual;
          } else {
            out << ",,,";
          }
          out << "\n";
          continue;
        }
        if (check.passed()) {
          out << "PASS " << check.name << " (" << check.cases << " cases)\n";
        } else {
          out << "FAIL " << check.name << " at " << check.mismatch->location << ": expected "
              << check.mismatch->expected << ", got " << check.mismatch->actual << "\n";
        }
      }
      if (format == Format::Text) {
        out << report.checks.size() << " checks, " << report.failures() << " failed (suite " << report.suite
            << ", n = " << report.order << ")\n";
      }
      return out.str();
    case Format::Json: {
      json checks = json::array();
      for (const auto& check : report.checks) {
        json entry = {{"name", check.name}, {"params", check.params}, {"cases", check.cases}, {"passed", check.passed()}};
        if (check.mismatch) {
          entry["mismatch"] = {{"location", check.mismatch->location},
                               {"expected", check.mismatch->expected},
                               {"actual", check.mismatch->actual}};
        }
        checks.push_back(std::move(entry));
      }
      json doc = {{"kind", "verify-report"}, {"suite", report.suite}, {"order", report.order},
                  {"passed", report.passed()}, {"total", report.checks.size()}, {"failures", report.failures()},
                  {"checks", checks}};
      return dump(doc);
    }
  }
  return {};
}

}  // namespace appell::output
