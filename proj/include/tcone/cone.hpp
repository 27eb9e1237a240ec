#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "tcone/groebner.hpp"
#include "tcone/polynomial.hpp"

namespace tcone {

// Homogeneous ideal cutting out the tangent cone at infinity, stored as its
// reduced Groebner basis. `groebner_basis` is the reduced basis of the input
// ideal it was derived from.
struct ConeDescription {
  Basis generators;
  Basis groebner_basis;
  MonomialOrder source_order;

  const ContextPtr& context() const { return generators.generators.front().context(); }
  // Whole-ring ideal: the cone variety is empty.
  bool is_empty_cone() const { return generators.is_unit_ideal(); }
};

// x0^deg(f) * f(x/x0) with x0 = `fresh_var` appended as the last variable.
Polynomial homogenize(const Polynomial& f, std::string_view fresh_var);

// g with `var` set to 0, expressed over the context without `var`.
Polynomial restrict_infinity(const Polynomial& g, std::string_view var);

// Requires a degree-compatible order. For a radical input ideal the result
// cuts out the tangent cone at infinity exactly; otherwise a superset of it.
// Each basis element goes through both homogenize/restrict and leading_form;
// disagreement raises std::logic_error.
ConeDescription tangent_cone_at_infinity(std::span<const Polynomial> generators,
                                         MonomialOrder order = MonomialOrder::grevlex());

bool cone_membership(const ConeDescription& cone, std::span<const Rational> point);

// Leading forms of the generators as given, without a Groebner basis. This is
// generally NOT the cone ideal; it is kept for comparison.
std::vector<Polynomial> naive_leading_form_set(std::span<const Polynomial> generators);

}  // namespace tcone
