#include <cmath>
#include <sstream>

#include "json.hpp"

#include "tcone/numeric.hpp"
#include "tcone/textio.hpp"

namespace tcone {

namespace {

using Json = nlohmann::ordered_json;

std::string render_monomial(const Monomial& m, const VariableContext& ctx) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ctx.name(i);
    if (m[i] > 1) out += "^" + std::to_string(m[i]);
  }
  return out;
}

Json polynomial_list(const std::vector<Polynomial>& polys, MonomialOrder order) {
  Json list = Json::array();
  for (const auto& p : polys) list.push_back(render_polynomial(p, order));
  return list;
}

Json number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return nullptr;
  return v > 0 ? "inf" : "-inf";
}

Json complex_point(const ComplexPoint& p) {
  Json coords = Json::array();
  for (const auto& c : p.coords) coords.push_back(Json::array({number(c.real()), number(c.imag())}));
  return coords;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

std::string format_complex(const Complex& c) {
  if (c.imag() == 0.0) return format_double(c.real());
  return format_double(c.real()) + (c.imag() < 0 ? "-" : "+") + format_double(std::abs(c.imag())) + "i";
}

}  // namespace

std::string render_polynomial(const Polynomial& f, MonomialOrder order) {
  if (f.is_zero()) return "0";
  const auto& ctx = *f.context();
  std::string out;
  bool first = true;
  for (const auto& t : f.sorted_terms(order)) {
    const bool negative = t.coefficient.sign() < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    const Rational magnitude = t.coefficient.abs();
    const std::string mono = render_monomial(t.monomial, ctx);
    if (mono.empty()) {
      out += magnitude.to_string();
    } else if (magnitude.is_one()) {
      out += mono;
    } else {
      out += magnitude.to_string() + "*" + mono;
    }
  }
  return out;
}

std::string render_json(const Basis& basis) {
  Json j;
  j["vars"] = basis.generators.front().context()->names();
  j["order"] = std::string(basis.order.name());
  j["groebner_basis"] = polynomial_list(basis.generators, basis.order);
  return j.dump(2) + "\n";
}

std::string render_json(const ConeDescription& cone) {
  Json j;
  j["vars"] = cone.context()->names();
  j["order"] = std::string(cone.source_order.name());
  j["groebner_basis"] = polynomial_list(cone.groebner_basis.generators, cone.groebner_basis.order);
  j["cone_generators"] = polynomial_list(cone.generators.generators, cone.generators.order);
  return j.dump(2) + "\n";
}

std::string render_json(const VerificationReport& report) {
  Json j;
  j["kind"] = std::string(to_string(report.kind));
  j["vars"] = report.variables;
  if (report.direction) j["direction"] = complex_point(*report.direction);
  if (report.schedule) {
    j["schedule"] = {{"t0", report.schedule->t0}, {"factor", report.schedule->factor}, {"steps", report.schedule->steps}};
  }
  const char* key = report.kind == ReportKind::Sample ? "R" : "t";
  Json samples = Json::array();
  for (const auto& s : report.samples) samples.push_back({{key, number(s.parameter)}, {"value", number(s.value)}});
  j["samples"] = std::move(samples);
  j["fitted_decay_exponent"] = report.fitted_decay_exponent ? number(*report.fitted_decay_exponent) : Json(nullptr);
  j["verdict"] = std::string(to_string(report.verdict));
  j["seed"] = report.seed;
  j["diagnostics"] = report.diagnostics;
  if (report.kind == ReportKind::Sample) {
    Json dirs = Json::array();
    for (const auto& d : report.directions) dirs.push_back(complex_point(d));
    j["directions"] = std::move(dirs);
  }
  return j.dump(2) + "\n";
}

std::string render_text(const Basis& basis) {
  std::string out;
  for (const auto& g : basis.generators) out += render_polynomial(g, basis.order) + "\n";
  return out;
}

std::string render_text(const ConeDescription& cone) {
  std::string out = "groebner basis (" + std::string(cone.source_order.name()) + "):\n";
  for (const auto& g : cone.groebner_basis.generators) out += "  " + render_polynomial(g, cone.groebner_basis.order) + "\n";
  out += "cone generators:\n";
  for (const auto& g : cone.generators.generators) out += "  " + render_polynomial(g, cone.generators.order) + "\n";
  return out;
}

std::string render_text(const VerificationReport& report) {
  std::ostringstream os;
  os << "kind: " << to_string(report.kind) << "\n";
  if (report.direction) {
    os << "direction: (";
    for (std::size_t i = 0; i < report.direction->size(); ++i) {
      os << (i ? ", " : "") << format_complex(report.direction->coords[i]);
    }
    os << ")\n";
  }
  if (report.kind == ReportKind::Sample) {
    os << "directions: " << report.directions.size() << "\n";
  } else {
    const char* label = report.kind == ReportKind::Ratio ? "r(t)" : "dist/t";
    os << "t\t" << label << "\n";
    for (const auto& s : report.samples) os << format_double(s.parameter) << "\t" << format_double(s.value) << "\n";
  }
  os << "fitted decay exponent: "
     << (report.fitted_decay_exponent ? format_double(*report.fitted_decay_exponent) : std::string("n/a")) << "\n";
  os << "verdict: " << to_string(report.verdict) << "\n";
  os << "seed: " << report.seed << "\n";
  if (!report.diagnostics.empty()) os << "diagnostics: " << report.diagnostics << "\n";
  return os.str();
}

}  // namespace tcone
