#pragma once

#include <span>
#include <vector>

#include "tcone/polynomial.hpp"

namespace tcone {

// Generating set of an ideal together with the order it was computed under.
// When `reduced` is set the generators are monic, inter-reduced and sorted
// ascending by leading monomial, which makes the basis unique for the ideal.
struct Basis {
  std::vector<Polynomial> generators;
  MonomialOrder order;
  bool reduced = false;

  bool is_unit_ideal() const { return generators.size() == 1 && generators.front().is_constant(); }
};

// Full reduction of f by the divisors in list order; the largest reducible
// term is always eliminated first, so the result is deterministic.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, MonomialOrder order);
Polynomial normal_form(const Polynomial& f, const Basis& basis);

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order);

// Reduced Groebner basis of <generators>. Zero entries are skipped; an
// all-zero list throws tcone::Error("zero ideal").
Basis buchberger(std::span<const Polynomial> generators, MonomialOrder order);

// Canonical reduced form of a Groebner basis (caller guarantees the input is
// one).
Basis reduce_basis(std::span<const Polynomial> groebner_basis, MonomialOrder order);

bool ideal_member(const Polynomial& f, const Basis& basis);

bool ideal_equal(std::span<const Polynomial> lhs, std::span<const Polynomial> rhs,
                 MonomialOrder order = MonomialOrder::grevlex());

// Generators of <lhs> ∩ <rhs> obtained by eliminating an auxiliary variable w
// from <w*lhs, (1-w)*rhs>.
std::vector<Polynomial> ideal_intersect(std::span<const Polynomial> lhs, std::span<const Polynomial> rhs);

}  // namespace tcone
