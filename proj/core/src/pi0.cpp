#include "adlv/pi0.hpp"

#include "adlv/intlinalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace adlv {

namespace {

// Homomorphism pi_1(src) -> pi_1(dst) induced by a lattice map on X_*(T).
IntMatrix induced(const Pi1Group& src, const Pi1Group& dst, const IntMatrix& lattice_map) {
  return dst.proj() * lattice_map * src.lift();
}

IntMatrix induced(const Pi1Group& src, const Pi1Group& dst) {
  return dst.proj() * src.lift();
}

IntMatrix block_diagonal(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() + b.rows(), a.cols() + b.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out(r, c) = a(r, c);
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) out(a.rows() + r, a.cols() + c) = b(r, c);
  return out;
}

AbGroup direct_sum(const AbGroup& a, const AbGroup& b) {
  IVec m = a.moduli();
  m.insert(m.end(), b.moduli().begin(), b.moduli().end());
  return AbGroup(std::move(m));
}

CosetDescriptor coset_from(const AbGroup& g, const IntMatrix& generator_columns, const IVec& base) {
  CosetDescriptor out;
  out.generators = canonical_generators(g, generator_columns);
  out.base = reduce_by_hermite(out.generators, g.reduce(base));
  out.torsion = g.moduli();
  return out;
}

// {y in c + span(gens) : f(y) in target}, inside pi_1(src).  Empty when no y qualifies.
std::optional<CosetDescriptor> pull_back(const Pi1Group& src, const Pi1Group& dst, const IntMatrix& f,
                                         const IVec& c, const CosetDescriptor& target) {
  const IntMatrix gens = src.invariants().incl;
  const IntMatrix image_gens = f * gens;
  // f(c + gens t) - target.base lies in the row span of target.generators (which includes the relations)
  IntMatrix system = hstack(image_gens, target.generators.transpose());
  if (system.cols() == 0) system = IntMatrix(dst.group().dim(), 0);
  IVec rhs = sub(target.base, f.apply(c));
  auto particular = solve_integer(system, rhs);
  if (!particular) return std::nullopt;
  IntMatrix ker = integer_kernel(system);
  const std::size_t t = gens.cols();
  IVec shift(t);
  for (std::size_t i = 0; i < t; ++i) shift[i] = (*particular)[i];
  IntMatrix t_part(t, ker.cols());
  for (std::size_t i = 0; i < t; ++i)
    for (std::size_t j = 0; j < ker.cols(); ++j) t_part(i, j) = ker(i, j);
  IntMatrix cols = gens * t_part;
  if (cols.rows() == 0) cols = IntMatrix(src.group().dim(), 0);
  return coset_from(src.group(), cols, add(c, gens.apply(shift)));
}

// pi_1(M)^Gamma -> pi_1(M')^Gamma x_{pi_1(G')^Gamma} pi_1(G)^Gamma is an isomorphism.
bool cartesian_square(const Pi1Group& m, const Pi1Group& m_q, const Pi1Group& g, const Pi1Group& g_q,
                      const IntMatrix& f) {
  const Subgroup inv_m = m.invariants();
  const Subgroup inv_mq = m_q.invariants();
  const Subgroup inv_g = g.invariants();
  const AbGroup target = direct_sum(m_q.group(), g.group());

  IntMatrix phi = vstack(induced(m, m_q, f) * inv_m.incl, induced(m, g) * inv_m.incl);
  if (!is_injective(phi, inv_m.group, target)) return false;

  const AbGroup pairs = direct_sum(inv_mq.group, inv_g.group);
  IntMatrix psi = hstack(induced(m_q, g_q) * inv_mq.incl,
                         IntMatrix(g_q.group().dim(), inv_g.group.dim()) - induced(g, g_q, f) * inv_g.incl);
  Subgroup fibre = kernel(psi, pairs, g_q.group());
  IntMatrix fibre_gens = block_diagonal(inv_mq.incl, inv_g.incl) * fibre.incl;
  return same_subgroup(target, phi, fibre_gens);
}

// ker(pi_1(M)^Gamma -> pi_1(M')) is the image of X_*(Z)^Gamma, Z = ker f.
bool torsor_kernel(const RootDatum& d, const Pi1Group& m, const Pi1Group& m_q, const IntMatrix& f) {
  const Subgroup inv = m.invariants();
  Subgroup k = kernel(induced(m, m_q, f) * inv.incl, inv.group, m_q.group());
  IntMatrix central = integer_kernel(vstack(f, d.sigma() - IntMatrix::identity(d.rank())));
  IntMatrix central_image = m.proj() * central;
  if (central_image.cols() == 0) central_image = IntMatrix(m.group().dim(), 0);
  return same_subgroup(m.group(), inv.incl * k.incl, central_image);
}

WeylElement transport_weyl(const RootDatum& q, const IntMatrix& f, const WeylElement& w) {
  auto matches = [&](const WeylElement& v) { return f * w.matrix() == v.matrix() * f; };
  bool word_ok = std::all_of(w.word().begin(), w.word().end(), [&](std::size_t i) { return i < q.num_simple(); });
  if (word_ok) {
    WeylElement v = weyl_from_word(q, w.word());
    if (matches(v)) return v;
  }
  for (const auto& v : q.weyl_group(LeviSubset::full(q.num_simple())))
    if (matches(v)) return v;
  throw std::invalid_argument("push_to_quotient: the Weyl element has no image in the quotient");
}

Pi0Descriptor empty_descriptor(const RootDatum& d, std::string reason) {
  Pi0Descriptor out;
  out.variant = Pi0Variant::empty;
  out.group = d.name();
  out.provenance = {"B(G,mu)-membership"};
  out.reason = std::move(reason);
  return out;
}

}  // namespace

std::string to_string(Pi0Variant v) {
  switch (v) {
    case Pi0Variant::empty: return "empty";
    case Pi0Variant::coset: return "coset";
    case Pi0Variant::discrete: return "discrete";
    case Pi0Variant::product: return "product";
  }
  return "?";
}

bool same_answer(const Pi0Descriptor& a, const Pi0Descriptor& b) {
  if (a.variant != b.variant || a.levi != b.levi || a.coset != b.coset || a.image != b.image) return false;
  if (a.factors.size() != b.factors.size()) return false;
  for (std::size_t i = 0; i < a.factors.size(); ++i) {
    const auto& x = a.factors[i];
    const auto& y = b.factors[i];
    if (x.simple != y.simple || x.central != y.central || x.coset != y.coset) return false;
  }
  return true;
}

Pi0Descriptor pi0_compute(const RootDatum& d, const Cochar& mu, const BRep& b) {
  const LeviSubset full = LeviSubset::full(d.num_simple());
  if (!is_dominant(d, mu, full)) throw std::invalid_argument("pi0_compute: mu is not dominant");
  if (!is_minuscule(d, mu, full)) throw std::invalid_argument("pi0_compute: mu is not minuscule");
  BGMuVerdict member = in_B_G_mu(d, b, mu);
  if (!member.member) return empty_descriptor(d, member.reason);

  Reduction red = reduce_to_indecomposable(d, b, mu);
  Pi0Descriptor out;
  out.group = d.name();
  out.levi = red.levi;
  out.image = solve_c_bmu(Pi1Group(d, full), red.b.lambda, mu);
  if (red.levi != full) out.provenance.push_back("levi-reduction");

  const RootDatum levi = levi_datum(d, red.levi);
  BRep b_levi{red.b.lambda, WeylElement(red.b.w.matrix(), {}), std::nullopt};
  HNReport hn = hn_classify(levi, b_levi, mu);
  const Pi1Group pm(d, red.levi);

  switch (hn.hn_class) {
    case HNClass::irreducible:
      out.variant = Pi0Variant::coset;
      out.coset = solve_c_bmu(pm, red.b.lambda, mu);
      out.provenance.push_back("hn-irreducible-coset");
      out.reason = "HN-irreducible in " + levi.name();
      return out;
    case HNClass::decomposable:
      throw std::logic_error("pi0_compute: the reduction Levi is still decomposable");
    case HNClass::indecomposable_central:
      break;
  }

  CentralSplit split = split_central_factors(levi, mu, b_levi);
  auto to_ambient = [&](const LeviSubset& f) {
    std::vector<std::size_t> idx;
    for (std::size_t j : f.simple()) idx.push_back(red.levi.simple()[j]);
    return LeviSubset(std::move(idx));
  };
  if (split.irreducible.empty()) {
    out.variant = Pi0Variant::discrete;
    out.provenance.push_back("basic-central-discrete");
    out.reason = "b is sigma-conjugate to p^mu with mu central; components are " + levi.name() + "(F)/" +
                 levi.name() + "(O_F)";
    return out;
  }

  out.variant = Pi0Variant::product;
  out.coset = solve_c_bmu(pm, red.b.lambda, mu);
  out.provenance.push_back("adjoint-cartesian-transfer");
  out.provenance.push_back("factor-product");
  out.reason = "HN-indecomposable with central factors; per-factor answers describe the image of pi_0";
  for (const auto& f : split.irreducible) {
    Pi0Factor pf;
    pf.simple = to_ambient(f);
    const RootDatum sub = levi_datum(d, pf.simple);
    const RootDatum ad = adjoint_of(sub);
    const IntMatrix proj = adjoint_projection(sub);
    pf.group = ad.name();
    pf.coset = solve_c_bmu(Pi1Group(ad, LeviSubset::full(ad.num_simple())), proj.apply(red.b.lambda), proj.apply(mu));
    out.factors.push_back(std::move(pf));
  }
  for (const auto& f : split.central) {
    Pi0Factor pf;
    pf.simple = to_ambient(f);
    pf.central = true;
    pf.group = adjoint_of(levi_datum(d, pf.simple)).name();
    out.factors.push_back(std::move(pf));
  }
  std::sort(out.factors.begin(), out.factors.end(),
            [](const Pi0Factor& x, const Pi0Factor& y) { return x.simple < y.simple; });
  return out;
}

QuotientData push_to_quotient(const RootDatum& d, const RootDatum& quotient, const IntMatrix& proj, const Cochar& mu,
                              const BRep& b) {
  if (proj.rows() != quotient.rank() || proj.cols() != d.rank())
    throw std::invalid_argument("push_to_quotient: projection has the wrong shape");
  QuotientData out;
  out.mu = proj.apply(mu);
  out.b = BRep{proj.apply(b.lambda), transport_weyl(quotient, proj, b.w), b.levi};
  return out;
}

TransferResult ad_transfer(const Pi0Descriptor& quotient_answer, const RootDatum& d, const RootDatum& quotient,
                           const IntMatrix& proj, const Cochar& mu, const BRep& b) {
  TransferResult out;
  Pi0Descriptor& desc = out.descriptor;
  desc.group = d.name();
  desc.variant = quotient_answer.variant;
  desc.provenance = quotient_answer.provenance;
  desc.provenance.push_back("center-quotient-pullback");
  desc.reason = quotient_answer.reason;
  if (quotient_answer.variant == Pi0Variant::empty) {
    desc.provenance = {"B(G,mu)-membership"};
    return out;
  }

  Reduction red = reduce_to_indecomposable(d, b, mu);
  if (red.levi != quotient_answer.levi)
    throw IncompatibleBasePoints("ad_transfer: reduction Levis differ between G and the quotient");
  desc.levi = red.levi;
  desc.factors = quotient_answer.factors;

  const LeviSubset full = LeviSubset::full(d.num_simple());
  const Pi1Group pm(d, red.levi);
  const Pi1Group pg(d, full);
  const Pi1Group qm(quotient, red.levi);
  const Pi1Group qg(quotient, LeviSubset::full(quotient.num_simple()));

  auto c_m = particular_c_bmu(pm, red.b.lambda, mu);
  auto c_g = particular_c_bmu(pg, red.b.lambda, mu);
  if (!c_m || !c_g) throw IncompatibleBasePoints("ad_transfer: no c_{b,mu} on G");

  if (quotient_answer.image) {
    auto img = pull_back(pg, qg, induced(pg, qg, proj), *c_g, *quotient_answer.image);
    if (!img) throw IncompatibleBasePoints("ad_transfer: c_{b,mu} does not map into the quotient's image coset");
    desc.image = *img;
  }
  if (quotient_answer.coset) {
    auto cs = pull_back(pm, qm, induced(pm, qm, proj), *c_m, *quotient_answer.coset);
    if (!cs) throw IncompatibleBasePoints("ad_transfer: the quotient coset misses the image of c_{b,mu}");
    desc.coset = *cs;
  }
  out.torsor = torsor_kernel(d, pm, qm, proj) && cartesian_square(pm, qm, pg, qg, proj);
  return out;
}

bool image_constraint_holds(const RootDatum& d, const Pi0Descriptor& desc, const Cochar& mu, const BRep& b) {
  if (!desc.coset) return desc.variant == Pi0Variant::empty || desc.variant == Pi0Variant::discrete;
  const Pi1Group pg(d, LeviSubset::full(d.num_simple()));
  const Pi1Group pm(d, desc.levi);
  auto c = particular_c_bmu(pg, b.lambda, mu);
  if (!c) return false;
  const CosetDescriptor target = make_coset(pg, *c);
  const IntMatrix w = induced(pm, pg);
  const IVec base = pg.group().reduce(w.apply(desc.coset->base));
  if (!target.contains(base)) return false;
  for (std::size_t r = 0; r < desc.coset->generators.rows(); ++r) {
    IVec step = pg.group().reduce(w.apply(desc.coset->generators.row(r)));
    if (!target.contains(pg.group().reduce(add(base, step)))) return false;
  }
  return true;
}

BasePointReport base_point_images(const RootDatum& d, const Cochar& mu, const LeviSubset& m, const IVec& x0) {
  const Pi1Group pm(d, m);
  const Pi1Group pg(d, LeviSubset::full(d.num_simple()));
  const BRep b = b_x_compute(d, minuscule_lift(d, x0, m), m);
  const ISet s = iset_enumerate(d, mu, b, m);
  const IntMatrix w = induced(pm, pg);

  BasePointReport out;
  out.target = solve_c_bmu(pg, b.lambda, mu);
  out.independent = !s.empty();
  for (const auto& e : s.elements) {
    CosetDescriptor local = solve_c_bmu(pm, b.lambda, e.mu_x);
    IntMatrix gens = w * local.generators.transpose();
    if (gens.cols() == 0) gens = IntMatrix(pg.group().dim(), 0);
    out.images.push_back(coset_from(pg.group(), gens, w.apply(local.base)));
    if (!(out.images.back() == out.target)) out.independent = false;
  }
  return out;
}

}  // namespace adlv
