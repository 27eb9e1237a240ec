#include "tcone/cone.hpp"

#include <stdexcept>
#include <string>

#include "tcone/error.hpp"

namespace tcone {

Polynomial homogenize(const Polynomial& f, std::string_view fresh_var) {
  if (f.is_zero()) throw ZeroPolynomial("homogenize: the zero polynomial has no homogenization");
  const auto& ctx = *f.context();
  if (ctx.contains(fresh_var)) {
    throw Error("homogenize: variable '" + std::string(fresh_var) + "' already exists");
  }
  std::vector<std::string> names = ctx.names();
  names.emplace_back(fresh_var);
  const ContextPtr extended = VariableContext::create_internal(std::move(names));

  const auto d = total_degree(f);
  Polynomial::TermMap out;
  for (const auto& [m, c] : f.terms()) {
    auto exps = m.exponents();
    exps.push_back(static_cast<Monomial::Exponent>(d - m.degree()));
    out.emplace(Monomial(std::move(exps)), c);
  }
  return Polynomial(extended, std::move(out));
}

Polynomial restrict_infinity(const Polynomial& g, std::string_view var) {
  const auto& ctx = *g.context();
  const std::size_t k = ctx.index_of(var);
  if (k == ctx.size()) throw Error("restrict_infinity: unknown variable '" + std::string(var) + "'");
  if (ctx.size() == 1) throw Error("restrict_infinity: cannot drop the only variable");

  std::vector<std::string> names;
  for (std::size_t i = 0; i < ctx.size(); ++i) {
    if (i != k) names.push_back(ctx.name(i));
  }
  const ContextPtr reduced = VariableContext::create_internal(std::move(names));

  Polynomial::TermMap out;
  for (const auto& [m, c] : g.terms()) {
    if (m[k] != 0) continue;
    auto exps = m.exponents();
    exps.erase(exps.begin() + static_cast<std::ptrdiff_t>(k));
    out.emplace(Monomial(std::move(exps)), c);
  }
  return Polynomial(reduced, std::move(out));
}

ConeDescription tangent_cone_at_infinity(std::span<const Polynomial> generators, MonomialOrder order) {
  if (!order.is_degree_compatible()) {
    throw Error("tangent cone at infinity requires a degree order (grlex or grevlex), got " +
                std::string(order.name()));
  }
  Basis gb = buchberger(generators, order);
  const ContextPtr ctx = gb.generators.front().context();
  const std::string fresh = ctx->fresh_name("h");

  std::vector<Polynomial> forms;
  forms.reserve(gb.generators.size());
  for (const auto& g : gb.generators) {
    const Polynomial at_infinity = restrict_infinity(homogenize(g, fresh), fresh).with_context(ctx);
    const Polynomial top = leading_form(g);
    if (!(at_infinity == top)) {
      throw std::logic_error("tangent cone: homogenize/restrict disagrees with leading_form");
    }
    forms.push_back(top);
  }
  // Leading forms of a degree-order Groebner basis form a Groebner basis of
  // the leading-form ideal, so reduce_basis applies directly.
  Basis cone = reduce_basis(forms, order);
  return ConeDescription{std::move(cone), std::move(gb), order};
}

bool cone_membership(const ConeDescription& cone, std::span<const Rational> point) {
  if (point.size() != cone.context()->size()) throw Error("cone_membership: point has wrong number of coordinates");
  for (const auto& g : cone.generators.generators) {
    if (!evaluate_exact(g, point).is_zero()) return false;
  }
  return true;
}

std::vector<Polynomial> naive_leading_form_set(std::span<const Polynomial> generators) {
  std::vector<Polynomial> out;
  out.reserve(generators.size());
  for (const auto& f : generators) out.push_back(leading_form(f));
  return out;
}

}  // namespace tcone
