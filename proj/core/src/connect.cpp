#include "adlv/connect.hpp"

#include "adlv/hnstrat.hpp"
#include "adlv/intlinalg.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace adlv {

namespace {

constexpr std::size_t kOrbitCap = 200000;

std::size_t sigma_power_root(const RootDatum& d, std::size_t r, Int k) {
  for (Int i = 0; i < k; ++i) r = d.sigma_root(r);
  return r;
}

std::vector<std::size_t> root_orbit(const RootDatum& d, std::size_t alpha) {
  std::vector<std::size_t> orbit{alpha};
  for (std::size_t r = d.sigma_root(alpha); r != alpha; r = d.sigma_root(r)) orbit.push_back(r);
  return orbit;
}

Cochar g_dominant(const RootDatum& d, const Cochar& v) {
  return dominant_rep(d, v, LeviSubset::full(d.num_simple())).first;
}

bool in_unipotent(const RootDatum& d, std::size_t alpha, const LeviSubset& m) {
  return d.root(alpha).positive && !d.in_levi(alpha, m);
}

// orbit of a cocharacter under the reflections in the given roots
std::set<Cochar> reflection_orbit(const RootDatum& d, const Cochar& seed, const std::vector<std::size_t>& roots) {
  std::set<Cochar> seen{seed};
  std::deque<Cochar> queue{seed};
  while (!queue.empty()) {
    Cochar v = std::move(queue.front());
    queue.pop_front();
    for (std::size_t r : roots) {
      const Int p = d.pair(d.root(r).root, v);
      if (p == 0) continue;
      Cochar w = sub(v, scale(p, d.root(r).coroot));
      if (seen.insert(w).second) {
        if (seen.size() > kOrbitCap) throw ResourceExhausted("Weyl orbit exceeds the enumeration cap");
        queue.push_back(std::move(w));
      }
    }
  }
  return seen;
}

ISet collect(const RootDatum& d, const std::set<Cochar>& orbit, const BRep& b, const LeviSubset& m) {
  if (!d.sigma_stable(m)) throw std::invalid_argument("the Levi is not sigma-stable");
  const Pi1Group p(d, m);
  ISet s;
  s.levi = m;
  s.b = b;
  s.kappa = kottwitz_point(d, b, m);
  for (const auto& v : orbit) {
    if (!is_dominant(d, v, m) || !is_minuscule(d, v, m)) continue;
    if (p.coinvariant_class(v) != s.kappa) continue;
    s.elements.push_back({p.class_of(v), v});
  }
  std::sort(s.elements.begin(), s.elements.end(), [](const ISetElement& a, const ISetElement& c) { return a.x < c.x; });
  return s;
}

// beta' <= beta for the order given by positive roots of M
bool below_in(const RootDatum& d, std::size_t lower, std::size_t upper, const LeviSubset& m) {
  const IVec diff = sub(d.root(upper).coeffs, d.root(lower).coeffs);
  for (std::size_t i = 0; i < diff.size(); ++i) {
    if (diff[i] < 0) return false;
    if (diff[i] != 0 && !m.contains(i)) return false;
  }
  return true;
}

bool is_longer_than_some_root(const RootDatum& d, std::size_t alpha) {
  const Root& a = d.root(alpha);
  for (const Root& r : d.roots()) {
    const Int ab = d.pair(a.root, r.coroot);
    const Int ba = d.pair(r.root, a.coroot);
    if (std::abs(ab) > std::abs(ba)) return true;
  }
  return false;
}

}  // namespace

Cochar minuscule_lift(const RootDatum& d, const IVec& x, const LeviSubset& m) {
  const Pi1Group p(d, m);
  const IVec reduced = p.group().reduce(x);
  Cochar mu = minuscule_in_class(d, p.lift().apply(reduced), m);
  if (p.class_of(mu) != reduced) throw std::logic_error("minuscule_lift: descent left the class");
  return mu;
}

WeylElement w_x_compute(const RootDatum& d, const Cochar& mu_x, const LeviSubset& m) {
  std::vector<std::size_t> centralizer;
  for (std::size_t i : m.simple())
    if (d.pair(d.simple_root(i), mu_x) == 0) centralizer.push_back(i);
  return longest_element(d, LeviSubset(centralizer)) * longest_element(d, m);
}

BRep b_x_compute(const RootDatum& d, const Cochar& mu_x, const LeviSubset& m) {
  return BRep{mu_x, w_x_compute(d, mu_x, m), m};
}

const ISetElement* ISet::find(const IVec& x) const {
  auto it = std::lower_bound(elements.begin(), elements.end(), x,
                             [](const ISetElement& e, const IVec& v) { return e.x < v; });
  return it != elements.end() && it->x == x ? &*it : nullptr;
}

ISet iset_enumerate(const RootDatum& d, const Cochar& mu, const BRep& b, const LeviSubset& m) {
  const LeviSubset full = LeviSubset::full(d.num_simple());
  if (!is_minuscule(d, mu, full)) throw std::invalid_argument("iset_enumerate: mu is not minuscule");
  std::vector<std::size_t> simple(d.num_simple());
  for (std::size_t i = 0; i < simple.size(); ++i) simple[i] = i;
  ISet s = collect(d, reflection_orbit(d, mu, simple), b, m);
  s.mu = g_dominant(d, mu);
  return s;
}

ISet iset_enumerate_in(const RootDatum& d, const IVec& x, const BRep& b, const LeviSubset& m, const RootSubsystem& sub) {
  const Cochar seed = minuscule_lift(d, x, m);
  const auto basis = subsystem_basis(d, sub);
  ISet s = collect(d, reflection_orbit(d, seed, basis), b, m);
  s.mu = dominant_rep_subsystem(d, seed, basis).first;
  s.subsystem = sub;
  return s;
}

bool is_adapted(const RootDatum& d, std::size_t alpha, const LeviSubset& m) {
  if (!in_unipotent(d, alpha, m)) throw std::invalid_argument("is_adapted: root is not in the unipotent radical");
  const Cochar& co = d.root(alpha).coroot;
  for (std::size_t i : m.simple())
    if (d.pair(d.simple_root(i), co) > 0) return false;
  for (std::size_t r : d.roots_of(m))
    if (std::abs(d.pair(d.root(r).root, co)) > 1) return false;
  return true;
}

std::size_t adapted_modify(const RootDatum& d, std::size_t alpha, const LeviSubset& m) {
  if (!in_unipotent(d, alpha, m)) throw std::invalid_argument("adapted_modify: root is not in the unipotent radical");
  const Pi1Group p(d, m);
  const IVec target = p.class_of(d.root(alpha).coroot);
  auto antidominant = [&](std::size_t r) {
    for (bool moved = true; moved;) {
      moved = false;
      for (std::size_t i : m.simple())
        if (d.pair(d.simple_root(i), d.root(r).coroot) > 0) {
          r = d.weyl_root(d.simple_reflection(i), r);
          moved = true;
        }
    }
    return r;
  };
  std::size_t cur = antidominant(alpha);
  for (std::size_t guard = 0; !is_adapted(d, cur, m); ++guard) {
    if (guard > d.roots().size()) throw std::logic_error("adapted_modify: no adapted root reached");
    std::optional<std::size_t> next;
    for (std::size_t r : d.roots_of(m))
      if (d.pair(d.root(r).root, d.root(cur).coroot) < -1) {
        next = d.find_coroot(add(d.root(cur).coroot, d.root(r).coroot));
        if (next) break;
      }
    if (!next) throw std::logic_error("adapted_modify: long-root correction is not a coroot");
    cur = antidominant(*next);
  }
  if (p.class_of(d.root(cur).coroot) != target) throw std::logic_error("adapted_modify: class in pi_1(M) changed");
  return cur;
}

std::string to_string(OmegaType t) {
  switch (t) {
    case OmegaType::I: return "I";
    case OmegaType::II: return "II";
    case OmegaType::III: return "III";
  }
  return "?";
}

OmegaClass omega_classify(const RootDatum& d, std::size_t alpha, const LeviSubset& m) {
  if (!in_unipotent(d, alpha, m)) throw std::invalid_argument("omega_classify: root is not in the unipotent radical");
  OmegaClass c;
  c.orbit = root_orbit(d, alpha);
  std::vector<std::size_t> seed = d.roots_of(m);
  seed.insert(seed.end(), c.orbit.begin(), c.orbit.end());
  c.closure = closed_symmetric_closure(d, seed);

  const auto comps = subsystem_components(d, c.closure);
  auto component_of = [&](std::size_t r) {
    for (std::size_t k = 0; k < comps.size(); ++k)
      if (std::binary_search(comps[k].begin(), comps[k].end(), r)) return k;
    throw std::logic_error("omega_classify: root outside the closure");
  };
  std::map<std::size_t, std::size_t> counts;
  for (std::size_t r : c.orbit) ++counts[component_of(r)];
  const std::size_t per = counts.begin()->second;
  for (const auto& [k, n] : counts)
    if (n != per) throw MalformedOmega("omega_classify: components meet the orbit unevenly");
  if (per < 1 || per > 3) throw MalformedOmega("omega_classify: a component meets the orbit more than three times");
  c.type = static_cast<OmegaType>(per);

  const std::size_t n = c.orbit.size();
  c.period = n;
  for (std::size_t k = 1; k < n; ++k)
    if (component_of(c.orbit[k]) == component_of(alpha)) {
      c.period = k;
      break;
    }
  if (c.period * per != n) throw MalformedOmega("omega_classify: orbit size is not type times period");

  c.adapted = is_adapted(d, alpha, m);
  if (!c.adapted) return c;
  if (c.type == OmegaType::I) {
    c.alpha_tilde = alpha;
    return c;
  }

  std::vector<std::size_t> partners;
  for (std::size_t k = 0; k < per; ++k) partners.push_back(c.orbit[k * c.period]);
  const auto basis = subsystem_basis(d, c.closure);
  auto adjacent = [&](std::size_t a, std::size_t b) { return d.pair(d.root(a).root, d.root(b).coroot) != 0; };
  const bool needs_neighbour = c.type == OmegaType::III || !adjacent(partners[0], partners[1]);
  if (needs_neighbour) {
    for (std::size_t r : basis) {
      if (std::find(partners.begin(), partners.end(), r) != partners.end()) continue;
      if (std::all_of(partners.begin(), partners.end(), [&](std::size_t a) { return adjacent(a, r); })) {
        c.beta = r;
        break;
      }
    }
    if (!c.beta) throw MalformedOmega("omega_classify: no common neighbour in the basis of G_Omega");
  }
  Character sum = d.root(alpha).root;
  for (std::size_t k = 1; k < per; ++k) sum = add(sum, d.root(partners[k]).root);
  if (c.beta) sum = add(sum, d.root(*c.beta).root);
  c.alpha_tilde = d.find_root(sum);
  if (!c.alpha_tilde || !d.root(*c.alpha_tilde).positive)
    throw MalformedOmega("omega_classify: alpha tilde is not a positive root");
  return c;
}

std::vector<std::vector<std::size_t>> unipotent_orbits(const RootDatum& d, const LeviSubset& m) {
  return d.sigma_orbits_roots(d.unipotent_roots(m));
}

IVec apply_move(const RootDatum& d, const Pi1Group& p, const IVec& x, std::size_t alpha, Int power) {
  const std::size_t image = sigma_power_root(d, alpha, power);
  return p.group().reduce(add(x, p.proj().apply(sub(d.root(alpha).coroot, d.root(image).coroot))));
}

namespace {

std::size_t orbit_id_of(const std::vector<std::vector<std::size_t>>& orbits, std::size_t alpha) {
  for (std::size_t k = 0; k < orbits.size(); ++k)
    if (std::find(orbits[k].begin(), orbits[k].end(), alpha) != orbits[k].end()) return k;
  throw MalformedMove("root is not in the unipotent radical");
}

bool immediate_with_certificate(const RootDatum& d, const ISet& s, const IVec& src, const IVec& dst,
                                std::size_t alpha, Int power) {
  const std::size_t adapted = adapted_modify(d, alpha, s.levi);
  const Int n = static_cast<Int>(root_orbit(d, alpha).size());
  const Int m = mod_floor(power, n);
  if (m == 0) return false;
  return is_immediate(d, s, src, dst, adapted, m);
}

// neighbours of y in lexicographic order, each with its first certificate
std::map<IVec, Move> neighbours(const RootDatum& d, const Pi1Group& p, const ISet& s,
                                const std::vector<std::vector<std::size_t>>& orbits, const IVec& y,
                                std::optional<std::size_t> only_orbit) {
  std::map<IVec, Move> out;
  for (std::size_t id = 0; id < orbits.size(); ++id) {
    if (only_orbit && *only_orbit != id) continue;
    const Int n = static_cast<Int>(orbits[id].size());
    for (std::size_t alpha : orbits[id])
      for (Int k = 1; k < n; ++k) {
        IVec z = apply_move(d, p, y, alpha, k);
        if (z == y || !s.contains(z) || out.count(z)) continue;
        Move mv{y, z, alpha, sigma_power_root(d, alpha, k), k, id, true, false};
        out.emplace(std::move(z), std::move(mv));
      }
  }
  return out;
}

std::vector<Move> refine_pair(const RootDatum& d, const Pi1Group& p, const ISet& s,
                              const std::vector<std::vector<std::size_t>>& orbits, const IVec& src, const IVec& dst,
                              std::size_t alpha, Int m, int depth) {
  if (depth > 64) throw std::logic_error("refine_immediate: recursion too deep");
  for (Int i = 1; i < m; ++i) {
    const std::size_t ai = sigma_power_root(d, alpha, i);
    IVec y = apply_move(d, p, src, ai, m - i);
    if (s.contains(y)) {
      auto left = refine_pair(d, p, s, orbits, src, y, ai, m - i, depth + 1);
      auto right = refine_pair(d, p, s, orbits, y, dst, alpha, i, depth + 1);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
    y = apply_move(d, p, src, alpha, i);
    if (s.contains(y)) {
      auto left = refine_pair(d, p, s, orbits, src, y, alpha, i, depth + 1);
      auto right = refine_pair(d, p, s, orbits, y, dst, ai, m - i, depth + 1);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
  if (!is_immediate(d, s, src, dst, alpha, m)) throw std::logic_error("refine_immediate: unsplittable step is not immediate");
  return {Move{src, dst, alpha, sigma_power_root(d, alpha, m), m, orbit_id_of(orbits, alpha), true, true}};
}

}  // namespace

std::vector<std::vector<IVec>> move_components(const RootDatum& d, const ISet& s, std::optional<std::size_t> only_orbit) {
  const Pi1Group p(d, s.levi);
  const auto orbits = unipotent_orbits(d, s.levi);
  std::set<IVec> seen;
  std::vector<std::vector<IVec>> out;
  for (const auto& e : s.elements) {
    if (seen.count(e.x)) continue;
    std::vector<IVec> comp{e.x};
    seen.insert(e.x);
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (const auto& [z, mv] : neighbours(d, p, s, orbits, comp[k], only_orbit))
        if (seen.insert(z).second) comp.push_back(z);
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

ChainWitness convexity_chain(const RootDatum& d, const ISet& s, const IVec& from, const IVec& to,
                             std::optional<std::size_t> only_orbit) {
  if (!s.contains(from) || !s.contains(to)) throw std::invalid_argument("convexity_chain: endpoint outside the set");
  const Pi1Group p(d, s.levi);
  const auto orbits = unipotent_orbits(d, s.levi);
  std::map<IVec, Move> parent;
  std::deque<IVec> queue{from};
  std::set<IVec> seen{from};
  while (!queue.empty() && !seen.count(to)) {
    IVec y = std::move(queue.front());
    queue.pop_front();
    for (auto& [z, mv] : neighbours(d, p, s, orbits, y, only_orbit))
      if (seen.insert(z).second) {
        parent.emplace(z, mv);
        queue.push_back(z);
      }
  }
  if (!seen.count(to)) throw NoChainFound("convexity_chain: no path of moves between the endpoints");
  ChainWitness c;
  for (IVec cur = to; cur != from;) {
    Move mv = parent.at(cur);
    mv.immediate = immediate_with_certificate(d, s, mv.from, mv.to, mv.alpha, mv.power);
    cur = mv.from;
    c.steps.push_back(std::move(mv));
  }
  std::reverse(c.steps.begin(), c.steps.end());
  c.nodes.push_back(from);
  for (const auto& mv : c.steps) c.nodes.push_back(mv.to);
  return c;
}

bool is_immediate(const RootDatum& d, const ISet& s, const IVec& from, const IVec& to, std::size_t alpha, Int power) {
  if (!s.contains(from) || !s.contains(to)) throw MalformedMove("is_immediate: endpoint outside the set");
  if (!is_adapted(d, alpha, s.levi)) throw MalformedMove("is_immediate: root is not adapted");
  const Pi1Group p(d, s.levi);
  if (apply_move(d, p, from, alpha, power) != to) throw MalformedMove("is_immediate: certificate does not match");
  const OmegaClass c = omega_classify(d, alpha, s.levi);
  const Int n = static_cast<Int>(c.orbit.size());
  const Int m = power;
  bool first = false;
  switch (c.type) {
    case OmegaType::I: first = 0 < m && m < n; break;
    case OmegaType::II: first = 0 < m && 2 * m <= n; break;
    case OmegaType::III: first = 0 < m && 3 * m < 2 * n; break;
  }
  if (!first) return false;
  for (Int i = 1; i < m; ++i) {
    if (s.contains(apply_move(d, p, from, sigma_power_root(d, alpha, i), m - i))) return false;
    if (s.contains(apply_move(d, p, from, alpha, i))) return false;
  }
  return true;
}

bool verify_chain(const RootDatum& d, const ISet& s, const ChainWitness& c) {
  if (c.nodes.empty() || c.nodes.size() != c.steps.size() + 1) return false;
  for (const auto& x : c.nodes)
    if (!s.contains(x)) return false;
  const Pi1Group p(d, s.levi);
  const auto orbits = unipotent_orbits(d, s.levi);
  for (std::size_t i = 0; i < c.steps.size(); ++i) {
    const Move& mv = c.steps[i];
    if (mv.from != c.nodes[i] || mv.to != c.nodes[i + 1]) return false;
    if (!in_unipotent(d, mv.alpha, s.levi)) return false;
    if (mv.alpha_prime != sigma_power_root(d, mv.alpha, mv.power)) return false;
    if (orbit_id_of(orbits, mv.alpha) != mv.orbit_id) return false;
    const IVec& src = mv.forward ? mv.from : mv.to;
    const IVec& dst = mv.forward ? mv.to : mv.from;
    if (apply_move(d, p, src, mv.alpha, mv.power) != dst) return false;
    if (immediate_with_certificate(d, s, src, dst, mv.alpha, mv.power) != mv.immediate) return false;
  }
  return true;
}

ChainWitness refine_immediate(const RootDatum& d, const ISet& s, const ChainWitness& c) {
  if (!verify_chain(d, s, c)) throw MalformedMove("refine_immediate: input chain does not verify");
  const Pi1Group p(d, s.levi);
  const auto orbits = unipotent_orbits(d, s.levi);
  ChainWitness out;
  out.nodes.push_back(c.nodes.front());
  for (const Move& mv : c.steps) {
    const IVec& src = mv.forward ? mv.from : mv.to;
    const IVec& dst = mv.forward ? mv.to : mv.from;
    const std::size_t alpha = adapted_modify(d, mv.alpha, s.levi);
    const Int n = static_cast<Int>(root_orbit(d, alpha).size());
    const Int m = mod_floor(mv.power, n);
    if (m == 0) throw MalformedMove("refine_immediate: trivial move");
    std::vector<Move> piece;
    bool reversed = !mv.forward;
    if (2 * m <= n) {
      piece = refine_pair(d, p, s, orbits, src, dst, alpha, m, 0);
    } else {
      // dst - src = alpha - alpha^m, so src - dst = alpha^m - sigma^{n-m}(alpha^m)
      piece = refine_pair(d, p, s, orbits, dst, src, sigma_power_root(d, alpha, m), n - m, 0);
      reversed = !reversed;
    }
    if (reversed) {
      std::reverse(piece.begin(), piece.end());
      for (auto& step : piece) {
        std::swap(step.from, step.to);
        step.forward = !step.forward;
      }
    }
    for (auto& step : piece) {
      out.nodes.push_back(step.to);
      out.steps.push_back(std::move(step));
    }
  }
  return out;
}

GenerationReport generation_check(const RootDatum& d, const Cochar& mu, const LeviSubset& m, const IVec& x0) {
  const Cochar mu_x0 = minuscule_lift(d, x0, m);
  const Cochar mu_dom = g_dominant(d, mu);
  if (g_dominant(d, mu_x0) != mu_dom) throw PreconditionViolated("generation_check: mu_x0 is not conjugate to mu");
  const BRep b = b_x_compute(d, mu_x0, m);
  try {
    if (hn_classify(d, b, mu_dom).hn_class != HNClass::irreducible)
      throw PreconditionViolated("generation_check: (mu, b) is not HN-irreducible");
  } catch (const NotInBGMu& e) {
    throw PreconditionViolated(std::string("generation_check: ") + e.what());
  }
  GenerationReport r;
  for (std::size_t alpha : d.unipotent_roots(m))
    if (is_adapted(d, alpha, m) && d.pair(d.root(alpha).root, mu_x0) < 0) r.adapted_negative.push_back(alpha);
  for (std::size_t alpha : r.adapted_negative)
    for (std::size_t g : root_orbit(d, alpha)) r.lattice_generators.push_back(d.root(g).coroot);
  for (std::size_t i : m.simple()) r.lattice_generators.push_back(d.simple_coroot(i));
  r.generates = lattices_equal(r.lattice_generators, d.simple_coroots(), d.rank());
  return r;
}

std::vector<std::size_t> weyl_orbit_conjugators(const RootDatum& d, std::size_t alpha, std::size_t gamma,
                                                const LeviSubset& h) {
  if (!d.root(alpha).positive) throw std::invalid_argument("weyl_orbit_conjugators: alpha must be positive");
  for (std::size_t i : h.simple())
    if (d.pair(d.root(alpha).root, d.simple_coroot(i)) > 0)
      throw std::invalid_argument("weyl_orbit_conjugators: alpha is not anti-dominant for H");
  std::set<std::size_t> orbit{alpha};
  std::vector<std::size_t> queue{alpha};
  for (std::size_t k = 0; k < queue.size(); ++k)
    for (std::size_t i : h.simple()) {
      std::size_t r = d.weyl_root(d.simple_reflection(i), queue[k]);
      if (orbit.insert(r).second) queue.push_back(r);
    }
  if (!orbit.count(gamma)) throw std::invalid_argument("weyl_orbit_conjugators: gamma is not in the orbit");
  if (gamma == alpha) return {};

  std::vector<std::size_t> summands;
  std::vector<std::size_t> out;
  if (!is_longer_than_some_root(d, alpha)) {
    const auto coeffs = d.root_coordinates(sub(d.root(gamma).root, d.root(alpha).root));
    if (!coeffs) throw std::logic_error("weyl_orbit_conjugators: difference outside the root lattice");
    for (std::size_t i = 0; i < coeffs->size(); ++i)
      for (Int k = 0; k < (*coeffs)[i]; ++k) summands.push_back(i);
    out = regroup_roots(d, summands);
  } else {
    const auto coeffs = d.coroot_coordinates(sub(d.root(gamma).coroot, d.root(alpha).coroot));
    if (!coeffs) throw std::logic_error("weyl_orbit_conjugators: difference outside the coroot lattice");
    for (std::size_t i = 0; i < coeffs->size(); ++i)
      for (Int k = 0; k < (*coeffs)[i]; ++k) summands.push_back(i);
    out = regroup_coroots(d, summands);
  }
  std::sort(out.begin(), out.end());

  Int height = d.root(alpha).height();
  std::size_t image = alpha;
  for (std::size_t i = 0; i < out.size(); ++i) {
    const Root& bi = d.root(out[i]);
    if (!bi.positive || !d.in_levi(out[i], h)) throw std::logic_error("weyl_orbit_conjugators: root outside H");
    for (std::size_t j = 0; j < out.size(); ++j)
      if (i != j && d.pair(bi.root, d.root(out[j]).coroot) != 0)
        throw std::logic_error("weyl_orbit_conjugators: roots are not orthogonal");
    const Int a = d.pair(d.root(alpha).root, bi.coroot);
    if (!(d.pair(d.root(gamma).root, bi.coroot) > 0 && a < 0))
      throw std::logic_error("weyl_orbit_conjugators: sign condition fails");
    height += -a * bi.height();
    image = d.weyl_root(d.reflection_in(out[i]), image);
  }
  if (image != gamma) throw std::logic_error("weyl_orbit_conjugators: reflections do not carry alpha to gamma");
  if (height != d.root(gamma).height()) throw std::logic_error("weyl_orbit_conjugators: height identity fails");
  return out;
}

ISetInvariants check_invariants(const RootDatum& d, const ISet& s) {
  ISetInvariants r;
  if (s.subsystem) throw std::invalid_argument("check_invariants: expects the set for the whole group");
  const LeviSubset& m = s.levi;
  const Pi1Group p(d, m);
  const auto orbits = unipotent_orbits(d, m);
  const WeylElement w0m = longest_element(d, m);
  const auto weyl_m = d.weyl_group(m);
  auto fail = [&](bool& flag, const std::string& what) {
    flag = false;
    r.failures.push_back(what);
  };
  auto lift_of = [&](const IVec& y) { return minuscule_lift(d, y, m); };
  auto class_plus = [&](const IVec& y, const Cochar& v) { return p.group().reduce(add(y, p.proj().apply(v))); };

  std::vector<std::size_t> adapted;
  for (std::size_t alpha : d.unipotent_roots(m))
    if (is_adapted(d, alpha, m)) adapted.push_back(alpha);

  for (const auto& e : s.elements) {
    const WeylElement wx = w_x_compute(d, e.mu_x, m);
    if (wx.inverse().apply(e.mu_x) != w0m.apply(e.mu_x)) fail(r.lift_identities, "w_x^-1 mu_x at " + to_string(e.x));
    for (std::size_t g : adapted) {
      const Cochar& co = d.root(g).coroot;
      if (dominant_rep(d, add(e.mu_x, co), m).first != lift_of(class_plus(e.x, co)))
        fail(r.lift_identities, "shift by +" + root_label(d, g) + " at " + to_string(e.x));
      if (sub(e.mu_x, wx.apply(co)) != lift_of(class_plus(e.x, neg(co))))
        fail(r.lift_identities, "shift by -" + root_label(d, g) + " at " + to_string(e.x));

      // w_x alpha maximises <w alpha, mu_x> over W_M and is the unique minimal maximiser
      std::set<std::size_t> images;
      for (const auto& w : weyl_m) images.insert(d.weyl_root(w, g));
      Int best = std::numeric_limits<Int>::min();
      for (std::size_t t : images) best = std::max(best, d.pair(d.root(t).root, e.mu_x));
      const std::size_t wxa = d.weyl_root(wx, g);
      std::vector<std::size_t> maximisers;
      for (std::size_t t : images)
        if (d.pair(d.root(t).root, e.mu_x) == best) maximisers.push_back(t);
      std::vector<std::size_t> minimal;
      for (std::size_t t : maximisers)
        if (std::none_of(maximisers.begin(), maximisers.end(),
                         [&](std::size_t u) { return u != t && below_in(d, u, t, m); }))
          minimal.push_back(t);
      if (d.pair(d.root(wxa).root, e.mu_x) != best || minimal != std::vector<std::size_t>{wxa})
        fail(r.w_x_alpha_minimal, "w_x " + root_label(d, g) + " at " + to_string(e.x));
    }
  }

  // adjacent pairs x' - x = alpha^vee - tau(alpha)^vee with alpha adapted
  for (const auto& e : s.elements) {
    const WeylElement wx = w_x_compute(d, e.mu_x, m);
    for (std::size_t alpha : adapted) {
      const auto orbit = root_orbit(d, alpha);
      for (std::size_t k = 1; k < orbit.size(); ++k) {
        const IVec y = apply_move(d, p, e.x, alpha, static_cast<Int>(k));
        if (!s.contains(y)) continue;
        const Cochar& a = d.root(alpha).coroot;
        const Cochar& ta = d.root(orbit[k]).coroot;
        const std::vector<Cochar> forms{lift_of(class_plus(e.x, a)), lift_of(class_plus(e.x, neg(ta))), add(e.mu_x, a),
                                        sub(e.mu_x, wx.apply(ta)), sub(add(e.mu_x, a), wx.apply(ta))};
        for (const auto& v : forms)
          if (g_dominant(d, v) != s.mu) fail(r.adjacent_dominance, "pair " + to_string(e.x) + " -> " + to_string(y));
      }
    }
  }

  for (std::size_t id = 0; id < orbits.size(); ++id) {
    const OmegaClass oc = omega_classify(d, orbits[id].front(), m);
    for (const auto& e : s.elements) {
      const ISet local = iset_enumerate_in(d, e.x, s.b, m, oc.closure);
      if (!local.contains(e.x)) fail(r.omega_subsets, "x outside its G_Omega set at " + to_string(e.x));
      for (const auto& f : local.elements) {
        if (!s.contains(f.x)) fail(r.omega_subsets, "G_Omega set leaves the set at " + to_string(f.x));
        for (std::size_t alpha : orbits[id])
          for (std::size_t k = 1; k < orbits[id].size(); ++k) {
            const IVec z = apply_move(d, p, f.x, alpha, static_cast<Int>(k));
            if (s.contains(z) && !local.contains(z)) fail(r.omega_subsets, "Omega-move leaves G_Omega set at " + to_string(f.x));
          }
      }
      if (oc.adapted && move_components(d, local, id).size() > 1)
        fail(r.omega_connected, "Omega-moves disconnected around " + to_string(e.x));
    }
  }

  const IntMatrix sigma_minus_one = d.sigma() - IntMatrix::identity(d.rank());
  for (const auto& e : s.elements)
    for (const auto& f : s.elements) {
      const bool found = std::any_of(weyl_m.begin(), weyl_m.end(), [&](const WeylElement& w) {
        return solve_integer(sigma_minus_one, sub(e.mu_x, w.apply(f.mu_x))).has_value();
      });
      if (!found) fail(r.weyl_coinvariant, "no W_M element relates " + to_string(e.x) + " and " + to_string(f.x));
    }

  if (move_components(d, s).size() > 1) fail(r.connected, "move graph is disconnected");
  return r;
}

}  // namespace adlv
