#include "tcone/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "tcone/error.hpp"

namespace tcone {

// ---------------------------------------------------------------------------
// VariableContext

namespace {

bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)) != 0; }

void validate_names(const std::vector<std::string>& names, bool allow_internal) {
  if (names.empty()) throw Error("variable list must not be empty");
  std::set<std::string_view> seen;
  for (const auto& name : names) {
    std::string_view body = name;
    if (allow_internal) {
      while (!body.empty() && body.front() == '_') body.remove_prefix(1);
    }
    if (!is_identifier(body)) throw Error("invalid variable name '" + name + "'");
    if (!seen.insert(name).second) throw Error("duplicate variable name '" + name + "'");
  }
}

}  // namespace

ContextPtr VariableContext::create(std::vector<std::string> names) {
  validate_names(names, false);
  return ContextPtr(new VariableContext(std::move(names)));
}

ContextPtr VariableContext::create_internal(std::vector<std::string> names) {
  validate_names(names, true);
  return ContextPtr(new VariableContext(std::move(names)));
}

std::size_t VariableContext::index_of(std::string_view name) const noexcept {
  const auto it = std::find(names_.begin(), names_.end(), name);
  return static_cast<std::size_t>(it - names_.begin());
}

std::string VariableContext::fresh_name(std::string_view stem) const {
  std::string candidate = "_" + std::string(stem);
  while (contains(candidate)) candidate.insert(candidate.begin(), '_');
  return candidate;
}

bool is_identifier(std::string_view s) noexcept {
  if (s.empty() || !is_letter(s.front())) return false;
  return std::all_of(s.begin() + 1, s.end(), [](char c) { return is_letter(c) || is_digit(c) || c == '_'; });
}

bool same_context(const VariableContext& a, const VariableContext& b) noexcept {
  return &a == &b || a.names() == b.names();
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  Monomial m(nvars);
  m.exps_.at(index) = power;
  return m;
}

std::uint64_t Monomial::degree() const noexcept {
  return std::accumulate(exps_.begin(), exps_.end(), std::uint64_t{0});
}

bool Monomial::is_one() const noexcept {
  return std::all_of(exps_.begin(), exps_.end(), [](Exponent e) { return e == 0; });
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] > other.exps_[i]) return false;
  }
  return true;
}

Monomial Monomial::operator/(const Monomial& rhs) const {
  Monomial q(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) q.exps_[i] = exps_[i] - rhs.exps_[i];
  return q;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial l(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) l.exps_[i] = std::max(exps_[i], other.exps_[i]);
  return l;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t i = 0; i < exps_.size(); ++i) {
    if (exps_[i] != 0 && other.exps_[i] != 0) return false;
  }
  return true;
}

Monomial Monomial::operator*(const Monomial& rhs) const {
  Monomial p(exps_.size());
  for (std::size_t i = 0; i < exps_.size(); ++i) p.exps_[i] = exps_[i] + rhs.exps_[i];
  return p;
}

// ---------------------------------------------------------------------------
// Polynomial

Polynomial::Polynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {
  if (!ctx_) throw Error("polynomial requires a variable context");
}

Polynomial::Polynomial(ContextPtr ctx, TermMap terms) : Polynomial(std::move(ctx)) {
  for (auto& [m, c] : terms) {
    if (m.size() != ctx_->size()) throw ContextMismatch("monomial length does not match variable count");
    if (!c.is_zero()) terms_.emplace(m, std::move(c));
  }
}

Polynomial Polynomial::constant(ContextPtr ctx, const Rational& c) {
  const std::size_t n = ctx->size();
  return term(std::move(ctx), Monomial(n), c);
}

Polynomial Polynomial::variable(ContextPtr ctx, std::size_t index) {
  if (index >= ctx->size()) throw Error("variable index out of range");
  const std::size_t n = ctx->size();
  return term(std::move(ctx), Monomial::variable(n, index), Rational(1));
}

Polynomial Polynomial::term(ContextPtr ctx, Monomial m, const Rational& c) {
  Polynomial p(std::move(ctx));
  if (m.size() != p.nvars()) throw ContextMismatch("monomial length does not match variable count");
  if (!c.is_zero()) p.terms_.emplace(std::move(m), c);
  return p;
}

bool Polynomial::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool Polynomial::is_homogeneous() const noexcept {
  if (terms_.empty()) return true;
  const auto d = terms_.begin()->first.degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

Rational Polynomial::coefficient(const Monomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<Term> Polynomial::sorted_terms(MonomialOrder order) const {
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& [m, c] : terms_) out.push_back({m, c});
  std::sort(out.begin(), out.end(), [order](const Term& a, const Term& b) { return order.less(b.monomial, a.monomial); });
  return out;
}

void Polynomial::check_same_context(const Polynomial& other, const char* op) const {
  if (!same_context(*ctx_, *other.ctx_)) {
    throw ContextMismatch(std::string(op) + ": polynomials live in different variable contexts");
  }
}

Polynomial Polynomial::operator-() const {
  Polynomial r(ctx_);
  for (const auto& [m, c] : terms_) r.terms_.emplace_hint(r.terms_.end(), m, -c);
  return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  check_same_context(rhs, "add");
  if (&rhs == this) return *this *= Rational(2);
  for (const auto& [m, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  check_same_context(rhs, "subtract");
  if (&rhs == this) return *this *= Rational(0);
  for (const auto& [m, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(m, -c);
    if (!inserted) {
      it->second -= c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  *this = *this * rhs;
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, coef] : terms_) coef *= c;
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_same_context(b, "multiply");
  Polynomial r(a.ctx_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      auto prod = ca * cb;
      auto [it, inserted] = r.terms_.try_emplace(ma * mb, prod);
      if (!inserted) {
        it->second += prod;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  }
  return r;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_context(*a.ctx_, *b.ctx_) && a.terms_ == b.terms_;
}

Polynomial Polynomial::with_context(ContextPtr ctx) const {
  if (!same_context(*ctx_, *ctx)) throw ContextMismatch("with_context: variable names differ");
  Polynomial r(std::move(ctx));
  r.terms_ = terms_;
  return r;
}

// ---------------------------------------------------------------------------
// Free operations

Polynomial add(const Polynomial& f, const Polynomial& g) { return f + g; }

Polynomial multiply(const Polynomial& f, const Polynomial& g) { return f * g; }

Polynomial pow(const Polynomial& f, unsigned exponent) {
  Polynomial result = Polynomial::constant(f.context(), Rational(1));
  Polynomial base = f;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent > 0) base *= base;
  }
  return result;
}

Polynomial differentiate(const Polynomial& f, std::size_t var_index) {
  if (var_index >= f.nvars()) throw Error("differentiate: variable index out of range");
  Polynomial::TermMap out;
  for (const auto& [m, c] : f.terms()) {
    const auto e = m[var_index];
    if (e == 0) continue;
    auto exps = m.exponents();
    exps[var_index] = e - 1;
    out.emplace(Monomial(std::move(exps)), c * Rational(static_cast<std::int64_t>(e)));
  }
  return Polynomial(f.context(), std::move(out));
}

std::uint64_t total_degree(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial("total_degree: the zero polynomial has no degree");
  std::uint64_t d = 0;
  for (const auto& [m, c] : f.terms()) d = std::max(d, m.degree());
  return d;
}

std::map<std::uint64_t, Polynomial> homogeneous_components(const Polynomial& f) {
  std::map<std::uint64_t, Polynomial::TermMap> grouped;
  for (const auto& [m, c] : f.terms()) grouped[m.degree()].emplace(m, c);
  std::map<std::uint64_t, Polynomial> out;
  for (auto& [d, terms] : grouped) out.emplace(d, Polynomial(f.context(), std::move(terms)));
  return out;
}

Polynomial leading_form(const Polynomial& f) {
  if (f.is_zero()) throw ZeroPolynomial("leading_form: the zero polynomial has no leading form");
  const auto d = total_degree(f);
  Polynomial::TermMap top;
  for (const auto& [m, c] : f.terms()) {
    if (m.degree() == d) top.emplace(m, c);
  }
  return Polynomial(f.context(), std::move(top));
}

Term leading_term(const Polynomial& f, MonomialOrder order) {
  if (f.is_zero()) throw ZeroPolynomial("leading_term: the zero polynomial has no leading term");
  auto best = f.terms().begin();
  for (auto it = std::next(best); it != f.terms().end(); ++it) {
    if (order.less(best->first, it->first)) best = it;
  }
  return {best->first, best->second};
}

std::strong_ordering compare_monomials(const Monomial& a, const Monomial& b, MonomialOrder order) {
  return order.compare(a, b);
}

Rational evaluate_exact(const Polynomial& f, std::span<const Rational> point) {
  if (point.size() != f.nvars()) throw Error("evaluate: point has wrong number of coordinates");
  // Power tables keep the cost linear in the total exponent count.
  std::vector<std::vector<Rational>> powers(point.size());
  for (const auto& [m, c] : f.terms()) {
    for (std::size_t i = 0; i < m.size(); ++i) {
      auto& table = powers[i];
      if (table.empty()) table.emplace_back(1);
      while (table.size() <= m[i]) table.push_back(table.back() * point[i]);
    }
  }
  Rational sum(0);
  for (const auto& [m, c] : f.terms()) {
    Rational term = c;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] != 0) term *= powers[i][m[i]];
    }
    sum += term;
  }
  return sum;
}

Polynomial remap_variables(const Polynomial& f, ContextPtr target) {
  const auto& source = *f.context();
  std::vector<std::size_t> where(source.size());
  for (std::size_t i = 0; i < source.size(); ++i) where[i] = target->index_of(source.name(i));
  Polynomial::TermMap out;
  for (const auto& [m, c] : f.terms()) {
    std::vector<Monomial::Exponent> exps(target->size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (where[i] == target->size()) {
        throw ContextMismatch("remap: variable '" + source.name(i) + "' is missing from the target context");
      }
      exps[where[i]] = m[i];
    }
    out.emplace(Monomial(std::move(exps)), c);
  }
  return Polynomial(std::move(target), std::move(out));
}

}  // namespace tcone
