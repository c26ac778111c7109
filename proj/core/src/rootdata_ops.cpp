#include "adlv/intlinalg.hpp"
#include "adlv/rootdata.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace adlv {

Int pairing(const RootDatum& d, const Character& chi, const Cochar& lambda) { return d.pair(chi, lambda); }
Rat pairing(const RootDatum& d, const Character& chi, const RatCochar& lambda) { return d.pair(chi, lambda); }

namespace {

template <class Vec>
std::pair<Vec, WeylElement> reduce_chamber(const RootDatum& d, Vec v, const LeviSubset& l, int sign) {
  WeylElement w = WeylElement::identity(d.rank());
  for (;;) {
    bool moved = false;
    for (std::size_t i : l.simple()) {
      auto p = d.pair(d.simple_root(i), v);
      if ((sign > 0 && p < 0) || (sign < 0 && p > 0)) {
        WeylElement s = d.simple_reflection(i);
        v = s.apply(v);
        w = s * w;
        moved = true;
        break;
      }
    }
    if (!moved) return {std::move(v), std::move(w)};
  }
}

}  // namespace

std::pair<Cochar, WeylElement> dominant_rep(const RootDatum& d, const Cochar& lambda, const LeviSubset& l) {
  return reduce_chamber(d, lambda, l, +1);
}

std::pair<RatCochar, WeylElement> dominant_rep(const RootDatum& d, const RatCochar& lambda, const LeviSubset& l) {
  return reduce_chamber(d, lambda, l, +1);
}

std::pair<Cochar, WeylElement> antidominant_rep(const RootDatum& d, const Cochar& lambda, const LeviSubset& l) {
  return reduce_chamber(d, lambda, l, -1);
}

bool is_dominant(const RootDatum& d, const Cochar& lambda, const LeviSubset& l) {
  for (std::size_t i : l.simple())
    if (d.pair(d.simple_root(i), lambda) < 0) return false;
  return true;
}

bool is_dominant(const RootDatum& d, const RatCochar& lambda, const LeviSubset& l) {
  for (std::size_t i : l.simple())
    if (d.pair(d.simple_root(i), lambda) < 0) return false;
  return true;
}

std::optional<RVec> levi_coroot_coefficients(const RootDatum& d, const RatCochar& v, const LeviSubset& l) {
  std::vector<RVec> cols;
  for (std::size_t i : l.simple()) cols.push_back(to_rat(d.simple_coroot(i)));
  auto s = solve_rational(cols, v);
  return s.x;
}

bool dominance(const RootDatum& d, const RatCochar& mu1, const RatCochar& mu2, DominanceMode mode, const LeviSubset& l) {
  if (mu1.size() != mu2.size()) throw std::invalid_argument("dominance: length mismatch");
  if (mode == DominanceMode::integral && (!is_integral(mu1) || !is_integral(mu2)))
    throw std::domain_error("integral dominance order is undefined on rational cocharacters");
  auto c = levi_coroot_coefficients(d, sub(mu2, mu1), l);
  if (!c) return false;
  for (const auto& x : *c) {
    if (x < 0) return false;
    if (mode == DominanceMode::integral && !is_integral(x)) return false;
  }
  return true;
}

bool dominance(const RootDatum& d, const Cochar& mu1, const Cochar& mu2, DominanceMode mode, const LeviSubset& l) {
  return dominance(d, to_rat(mu1), to_rat(mu2), mode, l);
}

Norms norms(const RootDatum& d, const Cochar& phi) {
  auto c = d.coroot_coordinates(phi);
  if (!c) throw std::domain_error("norms: vector is not in the coroot lattice");
  Norms out;
  for (Int x : *c) out.plain += x < 0 ? -x : x;
  for (const auto& orb : d.sigma_orbits_simple()) {
    Int s = 0;
    for (std::size_t i : orb) s += (*c)[i];
    out.galois += s < 0 ? -s : s;
  }
  return out;
}

WeylElement longest_element(const RootDatum& d, const LeviSubset& l) {
  WeylElement w = WeylElement::identity(d.rank());
  for (;;) {
    bool grown = false;
    for (std::size_t i : l.simple()) {
      if (d.root(d.weyl_root(w, i)).positive) {
        w = w * d.simple_reflection(i);
        grown = true;
        break;
      }
    }
    if (!grown) return w;
  }
}

bool is_minuscule(const RootDatum& d, const Cochar& lambda, const std::vector<std::size_t>& roots) {
  for (std::size_t r : roots) {
    Int p = d.pair(d.root(r).root, lambda);
    if (p < -1 || p > 1) return false;
  }
  return true;
}

bool is_minuscule(const RootDatum& d, const Cochar& lambda, const LeviSubset& l) {
  return is_minuscule(d, lambda, d.positive_roots_of(l));
}

bool RootSubsystem::contains(std::size_t idx) const { return std::binary_search(roots.begin(), roots.end(), idx); }

RootSubsystem closed_symmetric_closure(const RootDatum& d, const std::vector<std::size_t>& seed) {
  std::set<std::size_t> s;
  for (std::size_t r : seed) {
    s.insert(r);
    s.insert(d.negative_of(r));
  }
  for (bool grew = true; grew;) {
    grew = false;
    std::vector<std::size_t> cur(s.begin(), s.end());
    for (std::size_t a : cur)
      for (std::size_t b : cur) {
        auto c = d.find_root(add(d.root(a).root, d.root(b).root));
        if (c && s.insert(*c).second) {
          s.insert(d.negative_of(*c));
          grew = true;
        }
      }
  }
  return RootSubsystem{std::vector<std::size_t>(s.begin(), s.end())};
}

std::vector<std::size_t> subsystem_basis(const RootDatum& d, const RootSubsystem& s) {
  std::vector<std::size_t> pos;
  for (std::size_t r : s.roots)
    if (d.root(r).positive) pos.push_back(r);
  std::vector<std::size_t> basis;
  for (std::size_t a : pos) {
    bool decomposable = false;
    for (std::size_t b : pos) {
      if (a == b) continue;
      auto c = d.find_root(sub(d.root(a).root, d.root(b).root));
      if (c && d.root(*c).positive && s.contains(*c)) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) basis.push_back(a);
  }
  return basis;
}

std::vector<std::vector<std::size_t>> subsystem_components(const RootDatum& d, const RootSubsystem& s) {
  std::vector<std::vector<std::size_t>> comps;
  std::set<std::size_t> done;
  for (std::size_t r : s.roots) {
    if (done.count(r)) continue;
    std::vector<std::size_t> comp{r};
    done.insert(r);
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (std::size_t t : s.roots)
        if (!done.count(t) && d.pair(d.root(comp[k]).root, d.root(t).coroot) != 0) {
          done.insert(t);
          comp.push_back(t);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

std::pair<Cochar, std::vector<std::size_t>> dominant_rep_subsystem(const RootDatum& d, const Cochar& lambda,
                                                                   const std::vector<std::size_t>& basis) {
  Cochar v = lambda;
  std::vector<std::size_t> used;
  for (;;) {
    bool moved = false;
    for (std::size_t b : basis) {
      Int p = d.pair(d.root(b).root, v);
      if (p < 0) {
        v = sub(v, scale(p, d.root(b).coroot));
        used.push_back(b);
        moved = true;
        break;
      }
    }
    if (!moved) return {v, used};
  }
}

std::vector<std::size_t> orthogonal_decomposition(const RootDatum& d, const Cochar& mu1, const Cochar& mu2) {
  std::vector<std::size_t> all(d.roots().size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  if (!is_minuscule(d, mu1, all) || !is_minuscule(d, mu2, all))
    throw std::invalid_argument("orthogonal_decomposition: inputs must be minuscule");
  const LeviSubset full = LeviSubset::full(d.num_simple());
  if (dominant_rep(d, mu1, full).first != dominant_rep(d, mu2, full).first)
    throw std::invalid_argument("orthogonal_decomposition: inputs are not Weyl conjugate");

  const Int target = norms(d, sub(mu1, mu2)).plain;
  std::vector<std::size_t> chosen;
  std::function<bool(const Cochar&, Int)> search = [&](const Cochar& cur, Int used) -> bool {
    if (cur == mu2) return used == target;
    for (std::size_t g = 0; g < d.roots().size(); ++g) {
      const Root& r = d.root(g);
      if (d.pair(r.root, cur) != 1 || d.pair(r.root, mu2) != -1) continue;
      bool orth = true;
      for (std::size_t c : chosen)
        if (d.pair(r.root, d.root(c).coroot) != 0 || c == g) {
          orth = false;
          break;
        }
      if (!orth) continue;
      Int len = norms(d, r.coroot).plain;
      Cochar next = sub(cur, r.coroot);
      if (norms(d, sub(next, mu2)).plain != norms(d, sub(cur, mu2)).plain - len) continue;
      chosen.push_back(g);
      if (search(next, used + len)) return true;
      chosen.pop_back();
    }
    return false;
  };
  if (!search(mu1, 0)) throw std::logic_error("orthogonal_decomposition: no decomposition found");
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

namespace {

std::vector<std::size_t> regroup(const RootDatum& d, std::vector<std::size_t> s, bool coroot_side) {
  for (;;) {
    bool changed = false;
    for (std::size_t i = 0; i < s.size() && !changed; ++i)
      for (std::size_t j = 0; j < s.size() && !changed; ++j) {
        if (i == j) continue;
        const Root& a = d.root(s[i]);
        const Root& b = d.root(s[j]);
        Int p = coroot_side ? d.pair(b.root, a.coroot) : d.pair(a.root, b.coroot);
        if (p >= 0) continue;
        std::size_t hi = std::max(i, j), lo = std::min(i, j);
        if (s[i] == d.negative_of(s[j])) {
          s.erase(s.begin() + static_cast<std::ptrdiff_t>(hi));
          s.erase(s.begin() + static_cast<std::ptrdiff_t>(lo));
        } else {
          auto c = coroot_side ? d.find_coroot(add(a.coroot, b.coroot)) : d.find_root(add(a.root, b.root));
          if (!c) throw std::logic_error("regroup: sum of roots with negative pairing is not a root");
          s.erase(s.begin() + static_cast<std::ptrdiff_t>(hi));
          s[lo] = *c;
        }
        changed = true;
      }
    if (!changed) break;
  }
  std::sort(s.begin(), s.end());
  return s;
}

}  // namespace

std::vector<std::size_t> regroup_roots(const RootDatum& d, std::vector<std::size_t> summands) {
  return regroup(d, std::move(summands), false);
}

std::vector<std::size_t> regroup_coroots(const RootDatum& d, std::vector<std::size_t> summands) {
  return regroup(d, std::move(summands), true);
}

std::string root_label(const RootDatum& d, std::size_t idx) { return "a" + to_string(d.root(idx).coeffs); }

WeylElement weyl_from_word(const RootDatum& d, const std::vector<std::size_t>& word) {
  WeylElement w = WeylElement::identity(d.rank());
  for (std::size_t i : word) {
    if (i >= d.num_simple()) throw std::invalid_argument("Weyl word uses an unknown simple reflection");
    w = w * d.simple_reflection(i);
  }
  return w;
}

RatCochar regular_dominant(const RootDatum& d) {
  const std::size_t n = d.num_simple();
  RatCochar v(d.rank(), Rat(0));
  if (n == 0) return v;
  std::vector<RVec> cols;
  for (std::size_t j = 0; j < n; ++j) {
    RVec c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = Rat(d.cartan(i, j));
    cols.push_back(std::move(c));
  }
  auto coeffs = solve_rational(cols, RVec(n, Rat(1)));
  if (!coeffs.unique()) throw std::logic_error("Cartan matrix is singular");
  for (std::size_t j = 0; j < n; ++j) v = add(v, scale((*coeffs.x)[j], to_rat(d.simple_coroot(j))));
  return v;
}

bool in_weyl_group(const RootDatum& d, const WeylElement& w, const LeviSubset& l) {
  // the stabiliser of a regular vector is trivial
  const RatCochar v = regular_dominant(d);
  return dominant_rep(d, w.apply(v), l).first == v;
}

Cochar minuscule_in_class(const RootDatum& d, const Cochar& lambda, const LeviSubset& l) {
  const auto pos = d.positive_roots_of(l);
  Cochar v = dominant_rep(d, lambda, l).first;
  for (std::size_t guard = 0;; ++guard) {
    if (guard > 100000) throw std::runtime_error("minuscule descent did not terminate");
    bool moved = false;
    for (std::size_t r : pos)
      if (d.pair(d.root(r).root, v) >= 2) {
        v = dominant_rep(d, sub(v, d.root(r).coroot), l).first;
        moved = true;
        break;
      }
    if (!moved) return v;
  }
}

}  // namespace adlv

namespace adlv {

std::vector<Cochar> minuscule_dominant_in_box(const RootDatum& d, Int bound) {
  const auto full = LeviSubset::full(d.num_simple());
  std::vector<Cochar> out;
  Cochar cur(d.rank(), -bound);
  for (;;) {
    if (is_dominant(d, cur, full) && is_minuscule(d, cur, full)) out.push_back(cur);
    std::size_t k = 0;
    while (k < cur.size() && cur[k] == bound) cur[k++] = -bound;
    if (k == cur.size()) break;
    ++cur[k];
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace adlv
