#include <algorithm>
#include <vector>

#include "doctest.h"
#include "support.hpp"
#include "tcone/error.hpp"
#include "tcone/polynomial.hpp"

using namespace tcone;
using namespace tcone::testing;

TEST_CASE("rational canonical form") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(3, -6).to_string() == "-1/2");
  CHECK(Rational(0, 5).to_string() == "0");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("+7").is_integer());
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("1.5"), Error);
  CHECK_THROWS_AS(Rational(1) / Rational(0), Error);
  CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
}

TEST_CASE("variable context validation") {
  CHECK_THROWS_AS(VariableContext::create({}), Error);
  CHECK_THROWS_AS(VariableContext::create({"x", "x"}), Error);
  CHECK_THROWS_AS(VariableContext::create({"1x"}), Error);
  CHECK_THROWS_AS(VariableContext::create({"_h"}), Error);
  CHECK(VariableContext::create_internal({"_h", "x"})->size() == 2);
  auto c = VariableContext::create_internal({"x", "_h"});
  CHECK(c->fresh_name("h") == "__h");
  CHECK(xyz()->fresh_name("h") == "_h");
}

TEST_CASE("add") {
  auto c = xy();
  CHECK(P("x^2 - y^3", c) + P("y^3", c) == P("x^2", c));
  CHECK(add(P("x^2 - y^3", c), Polynomial(c)) == P("x^2 - y^3", c));
  CHECK((P("x^2 - y^3", c) + P("y^3 - x^2", c)).is_zero());
  CHECK_THROWS_AS(P("x") + P("x", c), ContextMismatch);
}

TEST_CASE("multiply") {
  const auto f1 = P("x*y");
  const auto f2 = P("z*(x^3 - y^2 + z^2)");
  CHECK(multiply(P("z*x^2"), f1) - multiply(P("y"), f2) == P("y^3*z - y*z^3"));
  CHECK(P("y*z*(y^2 - z^2)") == P("y^3*z - y*z^3"));
  CHECK(P("(x - y)*(x + y)") == P("x^2 - y^2"));
  CHECK((Polynomial(xyz()) * f2).is_zero());
}

TEST_CASE("self aliasing arithmetic") {
  auto f = P("x + 1");
  f += f;
  CHECK(f == P("2*x + 2"));
  f -= f;
  CHECK(f.is_zero());
  auto g = P("x + 1");
  g *= g;
  CHECK(g == P("x^2 + 2*x + 1"));
}

TEST_CASE("differentiate") {
  auto c = xy();
  CHECK(differentiate(P("x^2 - y^3", c), 0) == P("2*x", c));
  CHECK(differentiate(P("x^2 - y^3", c), 1) == P("-3*y^2", c));
  CHECK(differentiate(P("x*y"), 2).is_zero());
  CHECK_THROWS(differentiate(P("x*y"), 3));
}

TEST_CASE("total degree") {
  CHECK(total_degree(P("z*(x^3 - y^2 + z^2)")) == 4);
  CHECK(total_degree(P("x*y")) == 2);
  CHECK(total_degree(P("5")) == 0);
  CHECK_THROWS_AS(total_degree(Polynomial(xyz())), ZeroPolynomial);
}

TEST_CASE("homogeneous components and leading form") {
  auto c = xy();
  const auto comps = homogeneous_components(P("x^2 - y^3", c));
  REQUIRE(comps.size() == 2);
  CHECK(comps.at(2) == P("x^2", c));
  CHECK(comps.at(3) == P("-y^3", c));
  CHECK(homogeneous_components(P("x*y - y^2", c)).size() == 1);
  CHECK(homogeneous_components(Polynomial(c)).empty());

  CHECK(leading_form(P("x^2 - y^3", c)) == P("-y^3", c));
  CHECK(leading_form(P("y - x^2", c)) == P("-x^2", c));
  CHECK(leading_form(P("x*y", c)) == P("x*y", c));
  CHECK_THROWS_AS(leading_form(Polynomial(c)), ZeroPolynomial);
}

TEST_CASE("compare_monomials examples") {
  const Monomial x3z({3, 0, 1}), y2z({0, 2, 1});
  CHECK(compare_monomials(x3z, y2z, MonomialOrder::grevlex()) == std::strong_ordering::greater);
  CHECK(compare_monomials(Monomial({1, 0}), Monomial({0, 3}), MonomialOrder::lex()) == std::strong_ordering::greater);
  CHECK(compare_monomials(Monomial({0, 3}), Monomial({2, 0}), MonomialOrder::grlex()) == std::strong_ordering::greater);
  // grlex and grevlex disagree on x*z versus y^2.
  CHECK(compare_monomials(Monomial({1, 0, 1}), Monomial({0, 2, 0}), MonomialOrder::grlex()) ==
        std::strong_ordering::greater);
  CHECK(compare_monomials(Monomial({1, 0, 1}), Monomial({0, 2, 0}), MonomialOrder::grevlex()) ==
        std::strong_ordering::less);
  // Block order: any power of the first variable dominates.
  CHECK(compare_monomials(Monomial({1, 0, 0}), Monomial({0, 5, 5}), MonomialOrder::eliminate_first()) ==
        std::strong_ordering::greater);
}

TEST_CASE("leading term") {
  const auto g = MonomialOrder::grevlex();
  auto lt = leading_term(P("x^3*z - y^2*z + z^3"), g);
  CHECK(lt.monomial == Monomial({3, 0, 1}));
  CHECK(lt.coefficient == 1);
  CHECK(leading_term(P("x*y"), MonomialOrder::lex()).monomial == Monomial({1, 1, 0}));
  CHECK(leading_term(P("y^3*z - y*z^3"), g).monomial == Monomial({0, 3, 1}));
  CHECK_THROWS_AS(leading_term(Polynomial(xyz()), g), ZeroPolynomial);
}

TEST_CASE("evaluate_exact") {
  CHECK(evaluate_exact(P("y*z*(y^2 - z^2)"), Q({0, 2, 1})) == 6);
  CHECK(evaluate_exact(P("x^2 + 3*y - 7/2"), Q({0, 0, 0})) == Rational(-7, 2));
  CHECK(evaluate_exact(P("x*y"), Q({0, 0, 1})) == 0);
  CHECK_THROWS_AS(evaluate_exact(P("x*y"), Q({1, 2})), Error);
}

TEST_CASE("remap variables") {
  auto big = ctx({"w", "x", "y", "z"});
  CHECK(remap_variables(P("x*y + z"), big) == P("x*y + z", big));
  CHECK_THROWS_AS(remap_variables(P("w*x", big), xyz()), Error);
}

TEST_CASE("property: ring axioms") {
  Gen gen(101);
  for (int k = 0; k < 150; ++k) {
    const auto f = gen.polynomial(xyz(), 4, 5);
    const auto g = gen.polynomial(xyz(), 4, 5);
    const auto h = gen.polynomial(xyz(), 3, 4);
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f + g) + h == f + (g + h));
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f - f).is_zero());
    if (!f.is_zero() && !g.is_zero()) CHECK(total_degree(f * g) == total_degree(f) + total_degree(g));
  }
}

TEST_CASE("property: homogeneous decomposition") {
  Gen gen(202);
  for (int k = 0; k < 150; ++k) {
    const auto f = gen.polynomial(xyz(), 6, 8);
    Polynomial sum(xyz());
    for (const auto& [d, comp] : homogeneous_components(f)) {
      CHECK(comp.is_homogeneous());
      CHECK(total_degree(comp) == d);
      sum += comp;
    }
    CHECK(sum == f);
    if (!f.is_zero()) CHECK(leading_form(f) == homogeneous_components(f).at(total_degree(f)));
  }
}

TEST_CASE("property: homogeneous scaling") {
  Gen gen(303);
  for (int k = 0; k < 100; ++k) {
    const auto h = leading_form(gen.nonzero_polynomial(xyz(), 5, 6));
    const auto v = gen.point(3, 20);
    const Rational lambda = gen.nonzero_rational(12);
    std::vector<Rational> lv;
    for (const auto& c : v) lv.push_back(lambda * c);
    CHECK(evaluate_exact(h, lv) ==
          lambda.pow(static_cast<unsigned>(total_degree(h))) * evaluate_exact(h, v));
  }
}

TEST_CASE("property: monomial orders on degree <= 4 in 3 variables") {
  std::vector<Monomial> all;
  for (unsigned a = 0; a <= 4; ++a)
    for (unsigned b = 0; a + b <= 4; ++b)
      for (unsigned c = 0; a + b + c <= 4; ++c) all.push_back(Monomial({a, b, c}));
  REQUIRE(all.size() == 35);
  const std::vector<Monomial> multipliers = {Monomial({1, 0, 0}), Monomial({0, 1, 0}), Monomial({0, 0, 1}),
                                             Monomial({2, 1, 1})};

  for (auto ord : {MonomialOrder::lex(), MonomialOrder::grlex(), MonomialOrder::grevlex(),
                   MonomialOrder::eliminate_first()}) {
    CAPTURE(ord.name());
    bool ok = true;
    for (const auto& a : all) {
      if (ord.compare(a, a) != std::strong_ordering::equal) ok = false;
      if (!a.is_one() && !ord.less(Monomial(3), a)) ok = false;  // 1 is the minimum
      for (const auto& b : all) {
        const auto ab = ord.compare(a, b);
        const auto ba = ord.compare(b, a);
        if ((a == b) != (ab == 0)) ok = false;
        if ((ab < 0) != (ba > 0)) ok = false;
        if (ord.is_degree_compatible() && a.degree() < b.degree() && !(ab < 0)) ok = false;
        for (const auto& m : multipliers) {
          if (ord.compare(a * m, b * m) != ab) ok = false;
        }
        for (const auto& c : all) {
          if (ab < 0 && ord.less(b, c) && !ord.less(a, c)) ok = false;
        }
      }
    }
    CHECK(ok);

    // Sorting agrees with pairwise comparison; the order is total.
    auto sorted = all;
    std::sort(sorted.begin(), sorted.end(), MonomialLess{ord});
    CHECK(std::adjacent_find(sorted.begin(), sorted.end(),
                             [&](const Monomial& a, const Monomial& b) { return !ord.less(a, b); }) == sorted.end());
  }
}
