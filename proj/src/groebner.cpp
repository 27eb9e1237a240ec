#include "tcone/groebner.hpp"

#include <algorithm>
#include <set>
#include <tuple>
#include <utility>

#include "tcone/error.hpp"

namespace tcone {

namespace {

// Divisor prepared for repeated use: leading term split from its tail.
struct Reducer {
  Monomial lead;
  Rational lead_coefficient;
  std::vector<Term> tail;
};

Reducer make_reducer(const Polynomial& g, MonomialOrder order) {
  const Term lt = leading_term(g, order);
  Reducer r{lt.monomial, lt.coefficient, {}};
  r.tail.reserve(g.term_count() - 1);
  for (const auto& [m, c] : g.terms()) {
    if (m != lt.monomial) r.tail.push_back({m, c});
  }
  return r;
}

using OrderedTerms = std::map<Monomial, Rational, MonomialLess>;

Polynomial reduce_with(const Polynomial& f, std::span<const Reducer> reducers, MonomialOrder order) {
  OrderedTerms work(MonomialLess{order});
  for (const auto& [m, c] : f.terms()) work.emplace(m, c);
  Polynomial::TermMap remainder;
  while (!work.empty()) {
    auto top = std::prev(work.end());
    const Reducer* divisor = nullptr;
    for (const auto& r : reducers) {
      if (r.lead.divides(top->first)) {
        divisor = &r;
        break;
      }
    }
    if (divisor == nullptr) {
      remainder.emplace(top->first, std::move(top->second));
      work.erase(top);
      continue;
    }
    const Monomial shift = top->first / divisor->lead;
    const Rational factor = top->second / divisor->lead_coefficient;
    work.erase(top);
    for (const auto& t : divisor->tail) {
      auto [it, inserted] = work.try_emplace(t.monomial * shift, -(factor * t.coefficient));
      if (!inserted) {
        it->second -= factor * t.coefficient;
        if (it->second.is_zero()) work.erase(it);
      }
    }
  }
  return Polynomial(f.context(), std::move(remainder));
}

Polynomial make_monic(const Polynomial& f, MonomialOrder order) {
  const Term lt = leading_term(f, order);
  if (lt.coefficient.is_one()) return f;
  return f * (Rational(1) / lt.coefficient);
}

void check_contexts(std::span<const Polynomial> polys, const char* op) {
  for (const auto& p : polys) {
    if (!same_context(*p.context(), *polys.front().context())) {
      throw ContextMismatch(std::string(op) + ": generators live in different variable contexts");
    }
  }
}

Basis unit_ideal(const ContextPtr& ctx, MonomialOrder order) {
  return Basis{{Polynomial::constant(ctx, Rational(1))}, order, true};
}

// Pending S-pair, ordered by the normal strategy: lcm degree, then indices.
struct Pair {
  std::uint64_t degree;
  std::size_t i;
  std::size_t j;

  friend bool operator<(const Pair& a, const Pair& b) {
    return std::tie(a.degree, a.i, a.j) < std::tie(b.degree, b.i, b.j);
  }
};

}  // namespace

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, MonomialOrder order) {
  std::vector<Reducer> reducers;
  reducers.reserve(divisors.size());
  for (const auto& g : divisors) {
    if (!same_context(*g.context(), *f.context())) {
      throw ContextMismatch("normal_form: divisor lives in a different variable context");
    }
    if (g.is_zero()) throw ZeroPolynomial("normal_form: zero divisor");
    reducers.push_back(make_reducer(g, order));
  }
  return reduce_with(f, reducers, order);
}

Polynomial normal_form(const Polynomial& f, const Basis& basis) {
  return normal_form(f, basis.generators, basis.order);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, MonomialOrder order) {
  if (f.is_zero() || g.is_zero()) throw ZeroPolynomial("s_polynomial: zero input");
  const Term lf = leading_term(f, order);
  const Term lg = leading_term(g, order);
  const Monomial l = lf.monomial.lcm(lg.monomial);
  const auto ctx = f.context();
  const Polynomial left = Polynomial::term(ctx, l / lf.monomial, Rational(1) / lf.coefficient) * f;
  const Polynomial right = Polynomial::term(ctx, l / lg.monomial, Rational(1) / lg.coefficient) * g;
  return left - right;
}

Basis buchberger(std::span<const Polynomial> generators, MonomialOrder order) {
  std::vector<Polynomial> basis;
  for (const auto& g : generators) {
    if (!g.is_zero()) basis.push_back(g);
  }
  if (basis.empty()) throw Error("zero ideal");
  check_contexts(basis, "buchberger");
  const ContextPtr ctx = basis.front().context();
  for (const auto& g : basis) {
    if (g.is_constant()) return unit_ideal(ctx, order);
  }

  std::vector<Reducer> reducers;
  for (auto& g : basis) {
    g = make_monic(g, order);
    reducers.push_back(make_reducer(g, order));
  }

  std::set<Pair> queue;
  std::set<std::pair<std::size_t, std::size_t>> pending;
  const auto enqueue = [&](std::size_t i, std::size_t j) {
    queue.insert({reducers[i].lead.lcm(reducers[j].lead).degree(), i, j});
    pending.emplace(i, j);
  };
  const auto is_pending = [&](std::size_t a, std::size_t b) { return pending.count({std::min(a, b), std::max(a, b)}) != 0; };

  for (std::size_t j = 1; j < basis.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) enqueue(i, j);
  }

  while (!queue.empty()) {
    const Pair pair = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pair.i, pair.j});

    const Monomial& lead_i = reducers[pair.i].lead;
    const Monomial& lead_j = reducers[pair.j].lead;
    if (lead_i.coprime(lead_j)) continue;

    const Monomial l = lead_i.lcm(lead_j);
    bool chain = false;
    for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
      if (k == pair.i || k == pair.j) continue;
      chain = reducers[k].lead.divides(l) && !is_pending(pair.i, k) && !is_pending(pair.j, k);
    }
    if (chain) continue;

    Polynomial remainder = reduce_with(s_polynomial(basis[pair.i], basis[pair.j], order), reducers, order);
    if (remainder.is_zero()) continue;
    if (remainder.is_constant()) return unit_ideal(ctx, order);

    basis.push_back(make_monic(remainder, order));
    reducers.push_back(make_reducer(basis.back(), order));
    const std::size_t added = basis.size() - 1;
    for (std::size_t i = 0; i < added; ++i) enqueue(i, added);
  }

  return reduce_basis(basis, order);
}

Basis reduce_basis(std::span<const Polynomial> groebner_basis, MonomialOrder order) {
  std::vector<Polynomial> monic;
  for (const auto& g : groebner_basis) {
    if (!g.is_zero()) monic.push_back(make_monic(g, order));
  }
  if (monic.empty()) throw Error("zero ideal");
  check_contexts(monic, "reduce_basis");
  const ContextPtr ctx = monic.front().context();
  for (const auto& g : monic) {
    if (g.is_constant()) return unit_ideal(ctx, order);
  }

  const auto lead = [order](const Polynomial& p) { return leading_term(p, order).monomial; };
  std::stable_sort(monic.begin(), monic.end(),
                   [&](const Polynomial& a, const Polynomial& b) { return order.less(lead(a), lead(b)); });

  // Ascending order guarantees that any divisor of a leading monomial was
  // already seen.
  std::vector<Polynomial> minimal;
  for (const auto& g : monic) {
    const Monomial lm = lead(g);
    const bool redundant =
        std::any_of(minimal.begin(), minimal.end(), [&](const Polynomial& h) { return lead(h).divides(lm); });
    if (!redundant) minimal.push_back(g);
  }

  std::vector<Polynomial> reduced = minimal;
  for (std::size_t i = 0; i < reduced.size(); ++i) {
    std::vector<Polynomial> others;
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      if (k != i) others.push_back(reduced[k]);
    }
    reduced[i] = make_monic(normal_form(reduced[i], others, order), order);
  }
  std::stable_sort(reduced.begin(), reduced.end(),
                   [&](const Polynomial& a, const Polynomial& b) { return order.less(lead(a), lead(b)); });
  return Basis{std::move(reduced), order, true};
}

bool ideal_member(const Polynomial& f, const Basis& basis) { return normal_form(f, basis).is_zero(); }

bool ideal_equal(std::span<const Polynomial> lhs, std::span<const Polynomial> rhs, MonomialOrder order) {
  const Basis a = buchberger(lhs, order);
  const Basis b = buchberger(rhs, order);
  return a.generators == b.generators;
}

std::vector<Polynomial> ideal_intersect(std::span<const Polynomial> lhs, std::span<const Polynomial> rhs) {
  std::vector<Polynomial> all(lhs.begin(), lhs.end());
  all.insert(all.end(), rhs.begin(), rhs.end());
  if (all.empty()) throw Error("ideal_intersect: empty generator list");
  check_contexts(all, "ideal_intersect");
  const ContextPtr ctx = all.front().context();
  const auto nonzero = [](std::span<const Polynomial> ps) {
    return std::any_of(ps.begin(), ps.end(), [](const Polynomial& p) { return !p.is_zero(); });
  };
  if (!nonzero(lhs) || !nonzero(rhs)) throw Error("ideal_intersect: zero ideal");

  std::vector<std::string> names{ctx->fresh_name("w")};
  names.insert(names.end(), ctx->names().begin(), ctx->names().end());
  const ContextPtr extended = VariableContext::create_internal(std::move(names));

  const Polynomial w = Polynomial::variable(extended, 0);
  const Polynomial one_minus_w = Polynomial::constant(extended, Rational(1)) - w;
  std::vector<Polynomial> gens;
  for (const auto& f : lhs) gens.push_back(w * remap_variables(f, extended));
  for (const auto& g : rhs) gens.push_back(one_minus_w * remap_variables(g, extended));

  const Basis eliminated = buchberger(gens, MonomialOrder::eliminate_first());
  std::vector<Polynomial> out;
  for (const auto& g : eliminated.generators) {
    // Block order: a w-free leading monomial means the whole generator is w-free.
    if (leading_term(g, eliminated.order).monomial[0] == 0) out.push_back(remap_variables(g, ctx));
  }
  return out;
}

}  // namespace tcone
