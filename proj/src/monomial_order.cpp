#include <string>

#include "tcone/error.hpp"
#include "tcone/polynomial.hpp"

namespace tcone {

namespace {

std::strong_ordering three_way(std::uint64_t a, std::uint64_t b) {
  return a < b ? std::strong_ordering::less : (a > b ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::strong_ordering lex_compare(const Monomial& a, const Monomial& b, std::size_t first) {
  for (std::size_t i = first; i < a.size(); ++i) {
    if (a[i] != b[i]) return three_way(a[i], b[i]);
  }
  return std::strong_ordering::equal;
}

// Degree first; among equal degrees, the monomial with the larger exponent in
// the last differing variable is the smaller one.
std::strong_ordering grevlex_compare(const Monomial& a, const Monomial& b, std::size_t first) {
  std::uint64_t da = 0;
  std::uint64_t db = 0;
  for (std::size_t i = first; i < a.size(); ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return three_way(da, db);
  for (std::size_t i = a.size(); i-- > first;) {
    if (a[i] != b[i]) return three_way(b[i], a[i]);
  }
  return std::strong_ordering::equal;
}

}  // namespace

MonomialOrder MonomialOrder::from_name(std::string_view name) {
  if (name == "lex") return lex();
  if (name == "grlex") return grlex();
  if (name == "grevlex") return grevlex();
  if (name == "elim") return eliminate_first();
  throw Error("unknown monomial order '" + std::string(name) + "'");
}

std::string_view MonomialOrder::name() const noexcept {
  switch (kind_) {
    case OrderKind::Lex:
      return "lex";
    case OrderKind::Grlex:
      return "grlex";
    case OrderKind::Grevlex:
      return "grevlex";
    case OrderKind::EliminateFirst:
      return "elim";
  }
  return "unknown";
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.size() != b.size()) throw ContextMismatch("compare: monomials have different lengths");
  switch (kind_) {
    case OrderKind::Lex:
      return lex_compare(a, b, 0);
    case OrderKind::Grlex: {
      const auto by_degree = three_way(a.degree(), b.degree());
      return by_degree != 0 ? by_degree : lex_compare(a, b, 0);
    }
    case OrderKind::Grevlex:
      return grevlex_compare(a, b, 0);
    case OrderKind::EliminateFirst: {
      if (a.size() == 0) return std::strong_ordering::equal;
      if (a[0] != b[0]) return three_way(a[0], b[0]);
      return grevlex_compare(a, b, 1);
    }
  }
  return std::strong_ordering::equal;
}

}  // namespace tcone
