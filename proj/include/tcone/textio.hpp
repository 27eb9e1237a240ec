#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tcone/cone.hpp"
#include "tcone/groebner.hpp"
#include "tcone/polynomial.hpp"

namespace tcone {

struct VerificationReport;

// Parsed ideal file: one `vars` line followed by `poly` lines.
struct IdealFile {
  ContextPtr variables;
  std::vector<Polynomial> polynomials;
  std::string source;              // file name used in diagnostics
  std::vector<std::size_t> lines;  // source line of each polynomial
};

// Throws ParseError with 1-based line and column on malformed input.
IdealFile parse_ideal(std::string_view text, std::string source = "<input>");

// Parses a single expression over `ctx` (the `expr` rule of the file grammar).
Polynomial parse_polynomial(std::string_view text, const ContextPtr& ctx);

struct ParsedPoint {
  std::vector<std::complex<double>> values;
  // Present when every entry has a zero imaginary part.
  std::optional<std::vector<Rational>> exact;
};

// Comma-separated entries: `a`, `a/b`, `ci`, `a/b+c/di`, ...
ParsedPoint parse_point(std::string_view text, const VariableContext& ctx);

std::string render_polynomial(const Polynomial& f, MonomialOrder order);

std::string render_json(const Basis& basis);
std::string render_json(const ConeDescription& cone);
std::string render_json(const VerificationReport& report);

std::string render_text(const Basis& basis);
std::string render_text(const ConeDescription& cone);
std::string render_text(const VerificationReport& report);

}  // namespace tcone
