#include "adlv/isocrystal.hpp"

#include "adlv/intlinalg.hpp"

#include <algorithm>
#include <numeric>

namespace adlv {

BRep make_brep(const RootDatum& d, Cochar lambda, const std::vector<std::size_t>& word,
               std::optional<LeviSubset> levi) {
  if (lambda.size() != d.rank()) throw std::invalid_argument("make_brep: lambda has the wrong length");
  for (std::size_t i : word)
    if (i >= d.num_simple()) throw std::invalid_argument("make_brep: reflection index out of range");
  BRep b{std::move(lambda), weyl_from_word(d, word), std::move(levi)};
  if (b.levi && !in_weyl_group(d, b.w, *b.levi)) throw NotInLevi("make_brep: w is not in the Weyl group of the Levi");
  return b;
}

WeylElement frobenius_conjugate(const RootDatum& d, const WeylElement& u) {
  std::vector<std::size_t> word;
  for (std::size_t i : u.word()) word.push_back(d.sigma_permutation()[i]);
  WeylElement out = weyl_from_word(d, word);
  if (out.matrix() * d.sigma() != d.sigma() * u.matrix())
    throw std::logic_error("frobenius_conjugate: word does not represent the element");
  return out;
}

BRep sigma_conjugate_by(const RootDatum& d, const BRep& b, const WeylElement& u) {
  return BRep{u.apply(b.lambda), u * b.w * frobenius_conjugate(d, u).inverse(), std::nullopt};
}

IntMatrix frobenius_twist(const RootDatum& d, const WeylElement& w) { return w.matrix() * d.sigma(); }

Int twist_order(const RootDatum& d, const WeylElement& w, Int cap) { return matrix_order(frobenius_twist(d, w), cap); }

RatCochar newton_average(const RootDatum& d, const BRep& b, Int cap) {
  const IntMatrix psi = frobenius_twist(d, b.w);
  const Int n = matrix_order(psi, cap);
  RatCochar sum(d.rank(), Rat(0));
  Cochar v = b.lambda;
  for (Int i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < v.size(); ++k) sum[k] += v[k];
    v = psi.apply(v);
  }
  for (auto& x : sum) x /= n;
  return sum;
}

RatCochar newton_point(const RootDatum& d, const BRep& b, Int cap) {
  return dominant_rep(d, newton_average(d, b, cap), LeviSubset::full(d.num_simple())).first;
}

IVec kottwitz_point(const RootDatum& d, const BRep& b, const LeviSubset& l) {
  if (!in_weyl_group(d, b.w, l)) throw NotInLevi("kottwitz_point: w is not in the Weyl group of the Levi");
  return Pi1Group(d, l).coinvariant_class(b.lambda);
}

bool is_basic(const RootDatum& d, const BRep& b) { return is_basic_in(d, b, LeviSubset::full(d.num_simple())); }

bool is_basic_in(const RootDatum& d, const BRep& b, const LeviSubset& l) {
  if (!in_weyl_group(d, b.w, l)) throw NotInLevi("is_basic_in: w is not in the Weyl group of the Levi");
  const RatCochar avg = newton_average(d, b);
  return std::all_of(l.simple().begin(), l.simple().end(),
                     [&](std::size_t i) { return d.pair(d.simple_root(i), avg) == 0; });
}

LeviSubset centralizer_levi(const RootDatum& d, const BRep& b) {
  const RatCochar nu = newton_point(d, b);
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < d.num_simple(); ++i)
    if (d.pair(d.simple_root(i), nu) == 0) s.push_back(i);
  return LeviSubset(s);
}

namespace {

// a type-A component as a chain of simple roots read from its smallest end
std::optional<std::vector<std::size_t>> as_chain(const RootDatum& d, const std::vector<std::size_t>& comp) {
  auto adjacent = [&](std::size_t a, std::size_t b) { return a != b && d.cartan(a, b) != 0; };
  std::optional<std::size_t> start;
  for (std::size_t a : comp) {
    std::size_t deg = 0;
    for (std::size_t b : comp) {
      if (!adjacent(a, b)) continue;
      if (d.cartan(a, b) != -1 || d.cartan(b, a) != -1) return std::nullopt;
      ++deg;
    }
    if (deg > 2) return std::nullopt;
    if (deg <= 1 && !start) start = a;
  }
  if (!start) return std::nullopt;
  std::vector<std::size_t> chain{*start};
  while (chain.size() < comp.size()) {
    std::optional<std::size_t> next;
    for (std::size_t b : comp)
      if (adjacent(chain.back(), b) && std::find(chain.begin(), chain.end(), b) == chain.end()) next = b;
    if (!next) return std::nullopt;  // a cycle
    chain.push_back(*next);
  }
  return chain;
}

}  // namespace

std::vector<ResTypeAFactor> res_type_a_factors(const RootDatum& d, const LeviSubset& l) {
  if (!d.sigma_stable(l)) throw std::domain_error("res_type_a_factors: Levi is not sigma-stable");
  const auto& perm = d.sigma_permutation();
  auto comps = d.components(l);
  std::vector<bool> used(comps.size(), false);
  auto component_of = [&](std::size_t s) {
    for (std::size_t c = 0; c < comps.size(); ++c)
      if (std::binary_search(comps[c].begin(), comps[c].end(), s)) return c;
    throw std::logic_error("simple root outside every component");
  };

  std::vector<ResTypeAFactor> out;
  for (std::size_t c0 = 0; c0 < comps.size(); ++c0) {
    if (used[c0]) continue;
    auto chain = as_chain(d, comps[c0]);
    if (!chain) throw NotResTypeA("a factor of the adjoint Levi is not of type A");
    ResTypeAFactor f;
    f.h = chain->size() + 1;
    std::vector<std::size_t> cur = *chain;
    for (;;) {
      used[component_of(cur.front())] = true;
      f.chains.push_back(cur);
      std::vector<std::size_t> next(cur.size());
      std::transform(cur.begin(), cur.end(), next.begin(), [&](std::size_t i) { return perm[i]; });
      if (component_of(next.front()) == c0) {
        if (next != *chain) {
          // the return map reverses the chain: a unitary factor
          throw NotResTypeA("Frobenius acts on a type-A factor by its diagram involution");
        }
        break;
      }
      cur = std::move(next);
    }
    out.push_back(std::move(f));
  }
  return out;
}

Int chain_kottwitz_integer(const RootDatum& d, const std::vector<std::size_t>& chain, const Cochar& lambda) {
  const Int h = static_cast<Int>(chain.size()) + 1;
  Int m = 0;
  for (std::size_t k = 0; k < chain.size(); ++k)
    m = mod_floor(checked_add(m, checked_mul(static_cast<Int>(k + 1), d.pair(d.simple_root(chain[k]), lambda))), h);
  return m;
}

bool is_superbasic(const RootDatum& d, const BRep& b, const LeviSubset& l) {
  if (!is_basic_in(d, b, l)) return false;
  for (const auto& f : res_type_a_factors(d, l)) {
    Int total = 0;
    for (const auto& chain : f.chains) total += chain_kottwitz_integer(d, chain, b.lambda);
    if (std::gcd(total, static_cast<Int>(f.h)) != 1) return false;
  }
  return true;
}

StandardForm superbasic_standard_form(const RootDatum& d, const LeviSubset& l, const Cochar& representative) {
  const Cochar lambda = minuscule_in_class(d, representative, l);
  StandardForm out;
  WeylElement w = WeylElement::identity(d.rank());
  for (const auto& f : res_type_a_factors(d, l)) {
    Int total = 0;
    for (const auto& chain : f.chains) {
      Int m = 0;
      for (std::size_t k = 0; k < chain.size(); ++k)
        if (d.pair(d.simple_root(chain[k]), lambda) == 1) m = static_cast<Int>(k + 1);
      total += m;
      out.exponents.push_back(m);
      const WeylElement coxeter = weyl_from_word(d, chain);
      for (Int i = 0; i < m; ++i) w = w * coxeter;
    }
    if (std::gcd(total, static_cast<Int>(f.h)) != 1)
      throw GcdConditionFails("superbasic_standard_form: gcd(sum of Kottwitz integers, h) != 1");
  }
  out.b = BRep{lambda, std::move(w), l};
  out.note = "sign element t omitted: it lies in SL_h and does not change (lambda, w)";
  return out;
}

CosetDescriptor solve_c_bmu(const RootDatum& d, const BRep& b, const Cochar& mu, const LeviSubset& l) {
  if (!in_weyl_group(d, b.w, l)) throw NotInLevi("solve_c_bmu: w is not in the Weyl group of the Levi");
  return solve_c_bmu(Pi1Group(d, l), b.lambda, mu);
}

}  // namespace adlv
