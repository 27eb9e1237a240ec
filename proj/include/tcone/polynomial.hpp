#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tcone/rational.hpp"

namespace tcone {

// Ordered list of distinct variable names. Shared between polynomials through
// ContextPtr; two contexts are compatible when their name lists agree.
class VariableContext {
 public:
  // Validates names (nonempty list, identifier syntax, pairwise distinct).
  static std::shared_ptr<const VariableContext> create(std::vector<std::string> names);
  // Same as create() but also allows a leading underscore; used for the
  // auxiliary variables introduced by homogenization and elimination.
  static std::shared_ptr<const VariableContext> create_internal(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  // Index of `name`, or size() when absent.
  std::size_t index_of(std::string_view name) const noexcept;
  bool contains(std::string_view name) const noexcept { return index_of(name) != size(); }

  friend bool operator==(const VariableContext& a, const VariableContext& b) { return a.names_ == b.names_; }

  // First name of the form "_<stem>", "__<stem>", ... not present here.
  std::string fresh_name(std::string_view stem) const;

 private:
  explicit VariableContext(std::vector<std::string> names) : names_(std::move(names)) {}
  std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VariableContext>;

bool is_identifier(std::string_view s) noexcept;

class Monomial {
 public:
  using Exponent = std::uint32_t;

  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {}

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }
  std::uint64_t degree() const noexcept;
  bool is_one() const noexcept;

  bool divides(const Monomial& other) const;
  // Exact quotient; requires rhs.divides(*this).
  Monomial operator/(const Monomial& rhs) const;
  Monomial lcm(const Monomial& other) const;
  bool coprime(const Monomial& other) const;

  Monomial operator*(const Monomial& rhs) const;

  // Storage order only (lexicographic on exponent vectors); monomial orders
  // used by algorithms live in MonomialOrder.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Exponent> exps_;
};

enum class OrderKind { Lex, Grlex, Grevlex, EliminateFirst };

// Total, multiplicative order on monomials over a fixed variable list.
// EliminateFirst compares the exponent of the first variable, then breaks ties
// with grevlex on the remaining variables.
class MonomialOrder {
 public:
  constexpr MonomialOrder() = default;
  constexpr explicit MonomialOrder(OrderKind kind) : kind_(kind) {}

  static MonomialOrder lex() { return MonomialOrder(OrderKind::Lex); }
  static MonomialOrder grlex() { return MonomialOrder(OrderKind::Grlex); }
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::Grevlex); }
  static MonomialOrder eliminate_first() { return MonomialOrder(OrderKind::EliminateFirst); }
  // "lex", "grlex", "grevlex", "elim"; throws tcone::Error otherwise.
  static MonomialOrder from_name(std::string_view name);

  OrderKind kind() const noexcept { return kind_; }
  std::string_view name() const noexcept;
  bool is_degree_compatible() const noexcept { return kind_ == OrderKind::Grlex || kind_ == OrderKind::Grevlex; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const;
  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }

  friend bool operator==(MonomialOrder, MonomialOrder) = default;

 private:
  OrderKind kind_ = OrderKind::Grevlex;
};

// Strict-weak-ordering adaptor for ordered containers.
struct MonomialLess {
  MonomialOrder order;
  bool operator()(const Monomial& a, const Monomial& b) const { return order.less(a, b); }
};

struct Term {
  Monomial monomial;
  Rational coefficient;
};

// Sparse polynomial with exact rational coefficients. Immutable in spirit:
// every operation returns a new value. Zero coefficients are never stored.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational>;

  explicit Polynomial(ContextPtr ctx);
  Polynomial(ContextPtr ctx, TermMap terms);

  static Polynomial constant(ContextPtr ctx, const Rational& c);
  static Polynomial variable(ContextPtr ctx, std::size_t index);
  static Polynomial term(ContextPtr ctx, Monomial m, const Rational& c);

  const ContextPtr& context() const noexcept { return ctx_; }
  std::size_t nvars() const noexcept { return ctx_->size(); }
  const TermMap& terms() const noexcept { return terms_; }
  std::size_t term_count() const noexcept { return terms_.size(); }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_homogeneous() const noexcept;
  Rational coefficient(const Monomial& m) const;

  // Terms sorted strictly descending under `order`.
  std::vector<Term> sorted_terms(MonomialOrder order) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }

  // Exact equality: same variable names and same terms.
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  // Moves the polynomial into another context with the same names. Used when
  // a computation rebuilds a context object that compares equal.
  Polynomial with_context(ContextPtr ctx) const;

 private:
  void check_same_context(const Polynomial& other, const char* op) const;

  ContextPtr ctx_;
  TermMap terms_;
};

Polynomial add(const Polynomial& f, const Polynomial& g);
Polynomial multiply(const Polynomial& f, const Polynomial& g);
Polynomial pow(const Polynomial& f, unsigned exponent);
Polynomial differentiate(const Polynomial& f, std::size_t var_index);

// Throws ZeroPolynomial for f == 0.
std::uint64_t total_degree(const Polynomial& f);

// Degree -> homogeneous component; empty for the zero polynomial.
std::map<std::uint64_t, Polynomial> homogeneous_components(const Polynomial& f);

// Highest-degree homogeneous component f^*. Throws ZeroPolynomial for f == 0.
Polynomial leading_form(const Polynomial& f);

Term leading_term(const Polynomial& f, MonomialOrder order);

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b, MonomialOrder order);

Rational evaluate_exact(const Polynomial& f, std::span<const Rational> point);

bool same_context(const VariableContext& a, const VariableContext& b) noexcept;

// Re-expresses f over `target`, matching variables by name. Every variable
// that occurs in f must exist in target; target may have extra variables.
Polynomial remap_variables(const Polynomial& f, ContextPtr target);

}  // namespace tcone
