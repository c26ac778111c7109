#include "adlv/hnstrat.hpp"

#include "adlv/intlinalg.hpp"

#include <algorithm>

namespace adlv {

RatCochar mu_bar(const RootDatum& d, const Cochar& mu) {
  RatCochar sum = to_rat(mu);
  Cochar v = d.apply_sigma(mu);
  Int n = 1;
  while (v != mu) {
    sum = add(sum, to_rat(v));
    v = d.apply_sigma(v);
    ++n;
  }
  for (auto& x : sum) x /= n;
  return sum;
}

namespace {

// L-dominant Newton point of b viewed in L
RatCochar newton_in(const RootDatum& d, const BRep& b, const LeviSubset& l) {
  return dominant_rep(d, newton_average(d, b), l).first;
}

}  // namespace

BGMuVerdict in_B_G_mu(const RootDatum& d, const BRep& b, const Cochar& mu, const LeviSubset& l) {
  if (!is_dominant(d, mu, l)) throw std::invalid_argument("in_B_G_mu: mu is not dominant for the Levi");
  BGMuVerdict v;
  v.kottwitz_match = kottwitz_point(d, b, l) == Pi1Group(d, l).coinvariant_class(mu);
  const RatCochar diff = sub(mu_bar(d, mu), newton_in(d, b, l));
  v.coefficients = levi_coroot_coefficients(d, diff, l);
  v.mazur = v.coefficients && std::all_of(v.coefficients->begin(), v.coefficients->end(), [](const Rat& c) { return c >= 0; });
  v.member = v.kottwitz_match && v.mazur;
  if (!v.kottwitz_match)
    v.reason = "kappa(b) differs from [mu] in pi_1 coinvariants";
  else if (!v.mazur)
    v.reason = "mu_bar - nu is not a non-negative combination of positive coroots";
  else
    v.reason = "kappa matches and mu_bar - nu is non-negative";
  return v;
}

BGMuVerdict in_B_G_mu(const RootDatum& d, const BRep& b, const Cochar& mu) {
  return in_B_G_mu(d, b, mu, LeviSubset::full(d.num_simple()));
}

BRep normalize_newton(const RootDatum& d, const BRep& b) {
  auto [nu, u] = dominant_rep(d, newton_average(d, b), LeviSubset::full(d.num_simple()));
  BRep out = sigma_conjugate_by(d, b, u);
  if (newton_average(d, out) != nu) throw std::logic_error("normalize_newton: average did not move to the dominant chamber");
  return out;
}

std::vector<LeviSubset> stable_levis(const RootDatum& d) {
  auto orbits = d.sigma_orbits_simple();
  if (orbits.size() > 20) throw ResourceExhausted("stable_levis: too many Frobenius orbits");
  std::vector<LeviSubset> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << orbits.size()); ++mask) {
    std::vector<std::size_t> s;
    for (std::size_t k = 0; k < orbits.size(); ++k)
      if (mask >> k & 1) s.insert(s.end(), orbits[k].begin(), orbits[k].end());
    out.emplace_back(s);
  }
  std::sort(out.begin(), out.end(), [](const LeviSubset& a, const LeviSubset& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::vector<LeviSubset> simple_factors(const RootDatum& d) {
  auto comps = d.components(LeviSubset::full(d.num_simple()));
  const auto& perm = d.sigma_permutation();
  std::vector<bool> used(comps.size(), false);
  std::vector<LeviSubset> out;
  for (std::size_t c = 0; c < comps.size(); ++c) {
    if (used[c]) continue;
    std::vector<std::size_t> orbit;
    std::vector<std::size_t> frontier{c};
    while (!frontier.empty()) {
      std::size_t k = frontier.back();
      frontier.pop_back();
      if (used[k]) continue;
      used[k] = true;
      orbit.insert(orbit.end(), comps[k].begin(), comps[k].end());
      std::size_t image = perm[comps[k].front()];
      for (std::size_t j = 0; j < comps.size(); ++j)
        if (std::binary_search(comps[j].begin(), comps[j].end(), image)) frontier.push_back(j);
    }
    out.emplace_back(orbit);
  }
  return out;
}

std::string to_string(HNClass c) {
  switch (c) {
    case HNClass::irreducible: return "irreducible";
    case HNClass::indecomposable_central: return "indecomposable-central";
    case HNClass::decomposable: return "decomposable";
  }
  return "?";
}

std::optional<LeviSubset> decomposing_levi(const RootDatum& d, const BRep& normalized, const Cochar& mu) {
  const LeviSubset mb = centralizer_levi(d, normalized);
  const LeviSubset full = LeviSubset::full(d.num_simple());
  for (const auto& m : stable_levis(d)) {
    if (m == full || !mb.subset_of(m)) continue;
    if (kottwitz_point(d, normalized, m) == Pi1Group(d, m).coinvariant_class(mu)) return m;
  }
  return std::nullopt;
}

bool hn_irreducible_by_definition(const RootDatum& d, const BRep& normalized, const Cochar& mu) {
  const LeviSubset mb = centralizer_levi(d, normalized);
  const LeviSubset full = LeviSubset::full(d.num_simple());
  const RatCochar target = sub(newton_average(d, normalized), to_rat(mu));
  const IntMatrix sigma_minus_one = d.sigma() - IntMatrix::identity(d.rank());
  for (const auto& m : stable_levis(d)) {
    if (m == full) continue;
    // classes of M with Newton point nu_b are basic classes of M' = M n M_b;
    // need y in [mu] + <coroots of M outside M'> with y = nu_b in pi_1(M')_Gamma (x) Q
    const LeviSubset inner = intersect(m, mb);
    std::vector<IVec> span;
    for (std::size_t i : inner.simple()) span.push_back(d.simple_coroot(i));
    IntMatrix sub_space = hstack(IntMatrix::from_columns(span, d.rank()), sigma_minus_one);
    IntMatrix annihilator = integer_kernel(sub_space.transpose()).transpose();
    RVec t = annihilator.apply(target);
    if (!is_integral(t)) continue;
    std::vector<IVec> gens;
    for (std::size_t i : m.simple())
      if (!inner.contains(i)) gens.push_back(annihilator.apply(d.simple_coroot(i)));
    if (solve_integer(IntMatrix::from_columns(gens, annihilator.rows()), to_int(t))) return false;
  }
  return true;
}

HNReport hn_classify(const RootDatum& d, const BRep& b, const Cochar& mu) {
  const LeviSubset full = LeviSubset::full(d.num_simple());
  HNReport r;
  r.membership = in_B_G_mu(d, b, mu, full);
  if (!r.membership.member) throw NotInBGMu("hn_classify: " + r.membership.reason);
  r.mu_bar = mu_bar(d, mu);
  r.normalized = normalize_newton(d, b);
  r.nu_dom = newton_average(d, r.normalized);
  r.centralizer = centralizer_levi(d, r.normalized);
  auto coeffs = d.coroot_coordinates(sub(r.mu_bar, r.nu_dom));
  if (!coeffs) throw std::logic_error("hn_classify: mu_bar - nu outside the coroot span");
  r.coefficients = *coeffs;

  r.condition3 = std::all_of(r.coefficients.begin(), r.coefficients.end(), [](const Rat& c) { return c > 0; });
  r.condition2 = true;
  for (std::size_t i = 0; i < d.num_simple(); ++i) {
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < d.num_simple(); ++j)
      if (j != i) rest.push_back(j);
    // every proper standard Levi lies in a maximal one, and <=_M only weakens as M grows
    if (dominance(d, r.nu_dom, r.mu_bar, DominanceMode::rational, LeviSubset(rest))) r.condition2 = false;
  }
  r.condition1 = hn_irreducible_by_definition(d, r.normalized, mu);
  r.decomposing_levi = decomposing_levi(d, r.normalized, mu);

  for (const auto& f : simple_factors(d)) {
    FactorVerdict v{f};
    v.irreducible = std::all_of(f.simple().begin(), f.simple().end(), [&](std::size_t i) { return r.coefficients[i] > 0; });
    v.central = std::all_of(f.simple().begin(), f.simple().end(), [&](std::size_t i) {
      return r.coefficients[i] == 0 && d.pair(d.simple_root(i), mu) == 0;
    });
    r.factors.push_back(std::move(v));
  }

  if (r.decomposing_levi)
    r.hn_class = HNClass::decomposable;
  else if (r.condition1)
    r.hn_class = HNClass::irreducible;
  else
    r.hn_class = HNClass::indecomposable_central;
  r.reduction_levi = reduce_to_indecomposable(d, b, mu).levi;
  return r;
}

Reduction reduce_to_indecomposable(const RootDatum& d, const BRep& b, const Cochar& mu) {
  BRep n = normalize_newton(d, b);
  const LeviSubset mb = centralizer_levi(d, n);
  for (const auto& m : stable_levis(d)) {
    if (!mb.subset_of(m)) continue;
    if (kottwitz_point(d, n, m) == Pi1Group(d, m).coinvariant_class(mu)) {
      n.levi = m;
      return {m, n};
    }
  }
  throw NotInBGMu("reduce_to_indecomposable: kappa(b) differs from [mu]");
}

CentralSplit split_central_factors(const RootDatum& d, const Cochar& mu, const BRep& b) {
  HNReport r = hn_classify(d, b, mu);
  if (r.decomposing_levi) throw std::invalid_argument("split_central_factors: the pair is HN-decomposable");
  CentralSplit s;
  for (const auto& f : r.factors) {
    if (f.irreducible)
      s.irreducible.push_back(f.simple);
    else if (f.central)
      s.central.push_back(f.simple);
    else
      throw std::logic_error("split_central_factors: factor neither irreducible nor central");
  }
  return s;
}

}  // namespace adlv
