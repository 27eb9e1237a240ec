#include <algorithm>
#include <optional>
#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "tcone/error.hpp"
#include "tcone/groebner.hpp"

using namespace tcone;
using namespace tcone::testing;

namespace {

const MonomialOrder kGrevlex = MonomialOrder::grevlex();

std::vector<Polynomial> fivelines() { return Ps({"x*y", "z*(x^3 - y^2 + z^2)"}); }

bool is_reduced(const Basis& b) {
  const auto& g = b.generators;
  for (std::size_t i = 0; i < g.size(); ++i) {
    const Term lt = leading_term(g[i], b.order);
    if (!lt.coefficient.is_one()) return false;
    if (i > 0 && !b.order.less(leading_term(g[i - 1], b.order).monomial, lt.monomial)) return false;
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      for (const auto& [m, c] : g[j].terms()) {
        if (lt.monomial.divides(m)) return false;
      }
    }
  }
  return true;
}

void check_groebner_properties(std::span<const Polynomial> input, MonomialOrder order) {
  const Basis b = buchberger(input, order);
  CHECK(b.reduced);
  CHECK(is_reduced(b));
  for (std::size_t i = 0; i < b.generators.size(); ++i) {
    for (std::size_t j = i + 1; j < b.generators.size(); ++j) {
      CHECK(normal_form(s_polynomial(b.generators[i], b.generators[j], order), b).is_zero());
    }
  }
  for (const auto& f : input) CHECK(normal_form(f, b).is_zero());

  std::vector<Polynomial> perm(input.begin(), input.end());
  std::sort(perm.begin(), perm.end(), [](const Polynomial& a, const Polynomial& c) { return a.terms() < c.terms(); });
  do {
    const Basis other = buchberger(perm, order);
    CHECK(other.generators == b.generators);
  } while (std::next_permutation(perm.begin(), perm.end(),
                                 [](const Polynomial& a, const Polynomial& c) { return a.terms() < c.terms(); }));
}

// Exact Gaussian elimination: is `target` in the column span of `columns`?
// Each vector is a map from monomial to coefficient.
bool in_span(std::vector<Polynomial::TermMap> columns, Polynomial::TermMap target) {
  std::vector<Monomial> rows;
  for (const auto& c : columns)
    for (const auto& [m, v] : c) rows.push_back(m);
  for (const auto& [m, v] : target) rows.push_back(m);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());

  const std::size_t ncols = columns.size();
  std::vector<std::vector<Rational>> a(rows.size(), std::vector<Rational>(ncols + 1));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < ncols; ++c) {
      auto it = columns[c].find(rows[r]);
      if (it != columns[c].end()) a[r][c] = it->second;
    }
    auto it = target.find(rows[r]);
    if (it != target.end()) a[r][ncols] = it->second;
  }
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < ncols && pivot_row < rows.size(); ++c) {
    std::size_t p = pivot_row;
    while (p < rows.size() && a[p][c].is_zero()) ++p;
    if (p == rows.size()) continue;
    std::swap(a[p], a[pivot_row]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row || a[r][c].is_zero()) continue;
      const Rational factor = a[r][c] / a[pivot_row][c];
      for (std::size_t k = c; k <= ncols; ++k) a[r][k] -= factor * a[pivot_row][k];
    }
    ++pivot_row;
  }
  for (std::size_t r = pivot_row; r < rows.size(); ++r) {
    if (!a[r][ncols].is_zero()) return false;
  }
  return true;
}

// f in <gens> with cofactors of degree <= bound, by linear algebra.
bool cofactor_member(const Polynomial& f, std::span<const Polynomial> gens, unsigned bound) {
  const auto c = f.context();
  std::vector<Polynomial::TermMap> columns;
  for (const auto& g : gens) {
    for (unsigned a = 0; a <= bound; ++a)
      for (unsigned b = 0; a + b <= bound; ++b) columns.push_back((Polynomial::term(c, Monomial({a, b}), 1) * g).terms());
  }
  return in_span(std::move(columns), f.terms());
}

}  // namespace

TEST_CASE("normal_form examples") {
  const auto f = fivelines();
  CHECK(normal_form(P("x*y"), f, kGrevlex).is_zero());
  CHECK(normal_form(P("y^3*z - y*z^3"), f, kGrevlex) == P("y^3*z - y*z^3"));
  const std::vector<Polynomial> xy_only = {P("x*y")};
  CHECK(normal_form(P("x*(x*y)"), xy_only, kGrevlex).is_zero());
  CHECK_THROWS_AS(normal_form(P("x", xy()), xy_only, kGrevlex), ContextMismatch);
}

TEST_CASE("normal_form is deterministic in divisor order") {
  // x^2*y reduced by [x*y - 1, x^2] gives x; by [x^2, x*y - 1] gives 0.
  const auto a = Ps({"x*y - 1", "x^2"}, xy());
  const auto b = Ps({"x^2", "x*y - 1"}, xy());
  CHECK(normal_form(P("x^2*y", xy()), a, kGrevlex) == P("x", xy()));
  CHECK(normal_form(P("x^2*y", xy()), b, kGrevlex).is_zero());
}

TEST_CASE("s_polynomial examples") {
  const auto f = fivelines();
  CHECK(s_polynomial(f[0], f[1], kGrevlex) == P("y^3*z - y*z^3"));
  CHECK(s_polynomial(f[1], f[1], kGrevlex).is_zero());
  const auto x_and_y = Ps({"x", "y"});
  CHECK(normal_form(s_polynomial(x_and_y[0], x_and_y[1], kGrevlex), x_and_y, kGrevlex).is_zero());
  CHECK_THROWS_AS(s_polynomial(Polynomial(xyz()), f[0], kGrevlex), ZeroPolynomial);
}

TEST_CASE("buchberger examples") {
  // Monic under grevlex: the leading term is -y^3.
  CHECK(buchberger(Ps({"x^2 - y^3"}, xy()), kGrevlex).generators == Ps({"y^3 - x^2"}, xy()));

  const Basis b = buchberger(fivelines(), kGrevlex);
  CHECK(b.reduced);
  CHECK(b.generators == Ps({"x*y", "y^3*z - y*z^3", "x^3*z - y^2*z + z^3"}));

  CHECK(buchberger(Ps({"x", "y - x^2"}), kGrevlex).generators == Ps({"y", "x"}));

  const Basis unit = buchberger(Ps({"x*y", "3", "z"}), kGrevlex);
  CHECK(unit.is_unit_ideal());
  CHECK(unit.generators == Ps({"1"}));

  CHECK(buchberger(Ps({"0", "2*x"}), kGrevlex).generators == Ps({"x"}));
  CHECK_THROWS_WITH_AS(buchberger(Ps({"0"}), kGrevlex), "zero ideal", Error);
  CHECK_THROWS_AS(buchberger(std::vector<Polynomial>{}, kGrevlex), Error);
}

TEST_CASE("buchberger under lex") {
  // Lex basis of the twisted cubic.
  const Basis b = buchberger(Ps({"y - x^2", "z - x^3"}), MonomialOrder::lex());
  CHECK(is_reduced(b));
  CHECK(b.generators == Ps({"y^3 - z^2", "x*z - y^2", "x*y - z", "x^2 - y"}));
}

TEST_CASE("reduce_basis examples") {
  CHECK(reduce_basis(Ps({"x", "y - x^2", "y"}), kGrevlex).generators == Ps({"y", "x"}));
  const auto reduced = buchberger(fivelines(), kGrevlex).generators;
  CHECK(reduce_basis(reduced, kGrevlex).generators == reduced);
  CHECK(reduce_basis(Ps({"2*x"}), kGrevlex).generators == Ps({"x"}));
}

TEST_CASE("ideal_member examples") {
  CHECK(ideal_member(P("y*z*(y^2 - z^2)"), buchberger(fivelines(), kGrevlex)));
  CHECK_FALSE(ideal_member(P("1"), buchberger(Ps({"x", "y"}), kGrevlex)));
  CHECK(ideal_member(P("x"), buchberger(Ps({"x"}), kGrevlex)));
}

TEST_CASE("ideal_equal examples") {
  CHECK(ideal_equal(fivelines(), Ps({"x*y", "x^3*z - y^2*z + z^3", "y^3*z - y*z^3"})));
  CHECK_FALSE(ideal_equal(Ps({"x"}), Ps({"x^2"})));
  CHECK(ideal_equal(fivelines(), Ps({"z*(x^3 - y^2 + z^2)", "x*y"})));
  CHECK(ideal_equal(fivelines(), Ps({"x*y", "x^3*z - y^2*z + z^3", "y^3*z - y*z^3"}), MonomialOrder::lex()));
}

TEST_CASE("ideal_intersect examples") {
  auto c = xy();
  const auto meet = ideal_intersect(Ps({"x"}, c), Ps({"y - x^2"}, c));
  CHECK(ideal_equal(meet, Ps({"x*y - x^3"}, c)));
  const Basis in_x = buchberger(Ps({"x"}, c), kGrevlex);
  const Basis in_parabola = buchberger(Ps({"y - x^2"}, c), kGrevlex);
  for (const auto& g : meet) {
    CHECK(ideal_member(g, in_x));
    CHECK(ideal_member(g, in_parabola));
  }
  CHECK(ideal_equal(ideal_intersect(Ps({"x"}, c), Ps({"x"}, c)), Ps({"x"}, c)));
  CHECK(ideal_equal(ideal_intersect(Ps({"x", "y"}, c), Ps({"1"}, c)), Ps({"x", "y"}, c)));
  // Generators come back in the caller's variables.
  for (const auto& g : meet) CHECK(g.context()->names() == c->names());
}

TEST_CASE("property: groebner soundness on example ideals") {
  check_groebner_properties(fivelines(), kGrevlex);
  check_groebner_properties(fivelines(), MonomialOrder::grlex());
  check_groebner_properties(fivelines(), MonomialOrder::lex());
  check_groebner_properties(Ps({"x^2 - y^3"}, xy()), kGrevlex);
  check_groebner_properties(Ps({"x", "y - x^2"}, xy()), kGrevlex);
  check_groebner_properties(Ps({"x*y - x^3"}, xy()), kGrevlex);
  check_groebner_properties(Ps({"x^2 + y^2 + z^2 - 1", "x*y - z", "x - y + z^2"}), kGrevlex);
}

TEST_CASE("property: groebner soundness on random ideals") {
  Gen gen(404);
  for (int k = 0; k < 40; ++k) {
    std::vector<Polynomial> input;
    const int count = gen.integer(1, 3);
    for (int i = 0; i < count; ++i) input.push_back(gen.nonzero_polynomial(xyz(), 3, 3, 5));
    CAPTURE(k);
    check_groebner_properties(input, k % 2 ? kGrevlex : MonomialOrder::grlex());
  }
}

TEST_CASE("property: normal_form idempotence and remainder shape") {
  Gen gen(505);
  const Basis b = buchberger(fivelines(), kGrevlex);
  for (int k = 0; k < 100; ++k) {
    const auto f = gen.polynomial(xyz(), 6, 6);
    const auto r = normal_form(f, b);
    CHECK(normal_form(r, b) == r);
    CHECK(ideal_member(f - r, b));
    for (const auto& [m, c] : r.terms()) {
      for (const auto& g : b.generators) CHECK_FALSE(leading_term(g, kGrevlex).monomial.divides(m));
    }
  }
}

TEST_CASE("property: intersection contains products and lies in both ideals") {
  Gen gen(606);
  auto c = xy();
  for (int k = 0; k < 25; ++k) {
    const auto f = gen.nonzero_polynomial(c, 2, 3, 5);
    const auto g = gen.nonzero_polynomial(c, 2, 3, 5);
    const std::vector<Polynomial> F = {f}, G = {g};
    const auto meet = ideal_intersect(F, G);
    const Basis meet_basis = buchberger(meet, kGrevlex);
    CHECK(ideal_member(f * g, meet_basis));
    const Basis bf = buchberger(F, kGrevlex), bg = buchberger(G, kGrevlex);
    for (const auto& h : meet) {
      CHECK(ideal_member(h, bf));
      CHECK(ideal_member(h, bg));
    }
  }
}

TEST_CASE("property: ideal_member agrees with cofactor search") {
  Gen gen(707);
  auto c = xy();
  int members = 0, non_members = 0;
  for (int k = 0; k < 60; ++k) {
    std::vector<Polynomial> gens;
    const int count = gen.integer(1, 2);
    for (int i = 0; i < count; ++i) gens.push_back(gen.nonzero_polynomial(c, 2, 3, 4));
    const Basis b = buchberger(gens, kGrevlex);

    // A combination with small cofactors, sometimes perturbed off the ideal.
    Polynomial f(c);
    for (const auto& g : gens) f += gen.polynomial(c, 2, 3, 4) * g;
    if (gen.integer(0, 1)) f += gen.nonzero_polynomial(c, 2, 2, 4);
    if (f.is_zero()) continue;

    const bool expected = cofactor_member(f, gens, 4);
    CAPTURE(k);
    CHECK(ideal_member(f, b) == expected);
    (expected ? members : non_members) += 1;
  }
  CHECK(members > 10);
  CHECK(non_members > 10);
}
