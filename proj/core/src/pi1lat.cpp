#include "adlv/pi1lat.hpp"

#include "adlv/intlinalg.hpp"

#include <algorithm>
#include <numeric>

namespace adlv {

AbGroup::AbGroup(IVec moduli) : moduli_(std::move(moduli)) {
  for (Int m : moduli_)
    if (m < 0 || m == 1) throw std::invalid_argument("AbGroup: moduli must be 0 or >= 2");
}

std::size_t AbGroup::free_rank() const {
  return static_cast<std::size_t>(std::count(moduli_.begin(), moduli_.end(), 0));
}

IVec AbGroup::torsion() const {
  IVec t;
  for (Int m : moduli_)
    if (m != 0) t.push_back(m);
  return t;
}

IVec AbGroup::reduce(IVec v) const {
  if (v.size() != dim()) throw std::invalid_argument("AbGroup::reduce: dimension mismatch");
  for (std::size_t i = 0; i < v.size(); ++i)
    if (moduli_[i] != 0) v[i] = mod_floor(v[i], moduli_[i]);
  return v;
}

bool AbGroup::is_zero(const IVec& v) const { return adlv::is_zero(reduce(v)); }

IntMatrix AbGroup::relations() const {
  std::vector<IVec> cols;
  for (std::size_t i = 0; i < dim(); ++i)
    if (moduli_[i] != 0) {
      IVec c(dim(), 0);
      c[i] = moduli_[i];
      cols.push_back(std::move(c));
    }
  return IntMatrix::from_columns(cols, dim());
}

Quotient quotient_of_lattice(std::size_t n, const IntMatrix& relation_columns) {
  if (relation_columns.rows() != n) throw std::invalid_argument("quotient_of_lattice: relation shape");
  SmithForm s = smith_normal_form(relation_columns);
  IntMatrix uinv = inverse_unimodular(s.U);
  std::vector<std::size_t> keep;
  IVec moduli;
  for (std::size_t i = 0; i < n; ++i) {
    Int d = i < s.rank ? s.diagonal[i] : 0;
    if (d == 1) continue;
    keep.push_back(i);
    moduli.push_back(d);
  }
  return {AbGroup(std::move(moduli)), select_rows(s.U, keep), select_columns(uinv, keep)};
}

Quotient quotient(const AbGroup& g, const IntMatrix& generator_columns) {
  return quotient_of_lattice(g.dim(), hstack(g.relations(), generator_columns));
}

namespace {

// integer relations c among the generator columns modulo the relations of g
IntMatrix relation_module(const AbGroup& g, const IntMatrix& gens) {
  const std::size_t m = gens.cols();
  IntMatrix k = integer_kernel(hstack(gens, g.relations()));
  std::vector<std::size_t> top(m);
  std::iota(top.begin(), top.end(), 0);
  return select_rows(k, top);
}

}  // namespace

Subgroup subgroup(const AbGroup& g, const IntMatrix& generator_columns) {
  if (generator_columns.rows() != g.dim()) throw std::invalid_argument("subgroup: generator shape");
  const std::size_t m = generator_columns.cols();
  Quotient q = quotient_of_lattice(m, relation_module(g, generator_columns));
  IntMatrix incl = generator_columns * q.lift;
  for (std::size_t j = 0; j < incl.cols(); ++j)
    for (std::size_t i = 0; i < incl.rows(); ++i)
      if (g.moduli()[i] != 0) incl(i, j) = mod_floor(incl(i, j), g.moduli()[i]);
  return {q.group, incl};
}

Subgroup kernel(const IntMatrix& f, const AbGroup& src, const AbGroup& dst) {
  if (f.rows() != dst.dim() || f.cols() != src.dim()) throw std::invalid_argument("kernel: map shape");
  IntMatrix k = integer_kernel(hstack(f, dst.relations()));
  std::vector<std::size_t> top(src.dim());
  std::iota(top.begin(), top.end(), 0);
  return subgroup(src, select_rows(k, top));
}

std::optional<IVec> solve_in(const AbGroup& g, const IntMatrix& generator_columns, const IVec& v) {
  auto x = solve_integer(hstack(generator_columns, g.relations()), v);
  if (!x) return std::nullopt;
  x->resize(generator_columns.cols());
  return x;
}

bool in_subgroup(const AbGroup& g, const IntMatrix& generator_columns, const IVec& v) {
  return solve_in(g, generator_columns, v).has_value();
}

bool is_surjective(const IntMatrix& f, const AbGroup&, const AbGroup& dst) {
  for (std::size_t j = 0; j < dst.dim(); ++j) {
    IVec e(dst.dim(), 0);
    e[j] = 1;
    if (!in_subgroup(dst, f, e)) return false;
  }
  return true;
}

bool is_injective(const IntMatrix& f, const AbGroup& src, const AbGroup& dst) {
  return kernel(f, src, dst).group.is_trivial();
}

bool same_subgroup(const AbGroup& g, const IntMatrix& a, const IntMatrix& b) {
  for (const auto& c : a.column_list())
    if (!in_subgroup(g, b, c)) return false;
  for (const auto& c : b.column_list())
    if (!in_subgroup(g, a, c)) return false;
  return true;
}

IntMatrix factor_through(const Subgroup& s, const AbGroup& ambient, const IntMatrix& f) {
  std::vector<IVec> cols;
  for (const auto& c : f.column_list()) {
    auto x = solve_in(ambient, s.incl, c);
    if (!x) throw std::domain_error("factor_through: image leaves the subgroup");
    cols.push_back(s.group.reduce(*x));
  }
  return IntMatrix::from_columns(cols, s.group.dim());
}

IntMatrix canonical_generators(const AbGroup& g, const IntMatrix& generator_columns) {
  IntMatrix all = hstack(generator_columns, g.relations());
  if (all.cols() == 0) return IntMatrix(0, g.dim());
  return hermite_rows(all.transpose());
}

IVec canonical_coset_rep(const AbGroup& g, const IntMatrix& generator_columns, const IVec& v) {
  return reduce_by_hermite(canonical_generators(g, generator_columns), v);
}

// ---------------------------------------------------------------- Pi1Group

Pi1Group::Pi1Group(const RootDatum& d, LeviSubset l) : levi_(std::move(l)) {
  std::vector<IVec> cols;
  for (std::size_t i : levi_.simple()) cols.push_back(d.simple_coroot(i));
  quotient_ = quotient_of_lattice(d.rank(), IntMatrix::from_columns(cols, d.rank()));
  has_sigma_ = d.sigma_stable(levi_);
  if (has_sigma_) sigma_ = quotient_.proj * d.sigma() * quotient_.lift;
}

const IntMatrix& Pi1Group::sigma() const {
  if (!has_sigma_) throw std::domain_error("Frobenius does not preserve this Levi");
  return sigma_;
}

Subgroup Pi1Group::invariants() const {
  return kernel(sigma() - IntMatrix::identity(group().dim()), group(), group());
}

Quotient Pi1Group::coinvariants() const {
  return quotient(group(), sigma() - IntMatrix::identity(group().dim()));
}

IVec Pi1Group::coinvariant_class(const Cochar& lambda) const {
  Quotient c = coinvariants();
  return c.group.reduce(c.proj.apply(class_of(lambda)));
}

// ---------------------------------------------------------------- transitions

LeviTransition levi_transition(const RootDatum& d, const LeviSubset& m, const LeviSubset& l) {
  if (!m.subset_of(l)) throw std::invalid_argument("levi_transition: M is not contained in L");
  if (!d.sigma_stable(m) || !d.sigma_stable(l)) throw std::domain_error("levi_transition: Levis must be sigma-stable");
  Pi1Group pm(d, m), pl(d, l);
  LeviTransition t;
  t.plain = pl.proj() * pm.lift();

  Subgroup inv_m = pm.invariants(), inv_l = pl.invariants();
  IntMatrix inv_map = factor_through(inv_l, pl.group(), t.plain * inv_m.incl);
  t.invariant_kernel = kernel(inv_map, inv_m.group, inv_l.group);
  t.invariants_surjective = is_surjective(inv_map, inv_m.group, inv_l.group);

  for (const auto& orb : d.sigma_orbits_simple()) {
    if (!l.contains(orb.front()) || m.contains(orb.front())) continue;
    IVec s(d.rank(), 0);
    for (std::size_t i : orb) s = add(s, d.simple_coroot(i));
    t.orbit_sums.push_back(pm.class_of(s));
  }
  IntMatrix sums = factor_through(inv_m, pm.group(), IntMatrix::from_columns(t.orbit_sums, pm.group().dim()));
  t.kernel_matches_orbit_sums = same_subgroup(inv_m.group, t.invariant_kernel.incl, sums);

  Quotient co_m = pm.coinvariants(), co_l = pl.coinvariants();
  IntMatrix co_map = co_l.proj * t.plain * co_m.lift;
  t.coinvariant_kernel = kernel(co_map, co_m.group, co_l.group);
  t.coinvariant_kernel_torsion_free = t.coinvariant_kernel.group.is_torsion_free();
  return t;
}

CartesianReport adjoint_square(const RootDatum& d) {
  RootDatum ad = adjoint_of(d);
  const IntMatrix p = adjoint_projection(d);
  const AbGroup xa = AbGroup::free(d.rank()), xb = AbGroup::free(ad.rank());
  Subgroup a = kernel(d.sigma() - IntMatrix::identity(d.rank()), xa, xa);
  Subgroup b = kernel(ad.sigma() - IntMatrix::identity(ad.rank()), xb, xb);
  Pi1Group pg(d, LeviSubset::full(d.num_simple()));
  Pi1Group pa(ad, LeviSubset::full(ad.num_simple()));
  Subgroup c = pg.invariants(), dd = pa.invariants();
  const IntMatrix pi_map = pa.proj() * p * pg.lift();

  IntMatrix f_ab = factor_through(b, xb, p * a.incl);
  IntMatrix f_ac = factor_through(c, pg.group(), pg.proj() * a.incl);
  IntMatrix f_bd = factor_through(dd, pa.group(), pa.proj() * b.incl);
  IntMatrix f_cd = factor_through(dd, pa.group(), pi_map * c.incl);

  IVec bc_moduli = b.group.moduli();
  bc_moduli.insert(bc_moduli.end(), c.group.moduli().begin(), c.group.moduli().end());
  AbGroup bc(bc_moduli);
  IntMatrix to_d = hstack(f_bd, IntMatrix(f_cd.rows(), f_cd.cols()) - f_cd);
  Subgroup fibre = kernel(to_d, bc, dd.group);
  IntMatrix a_to_bc = vstack(f_ab, f_ac);

  CartesianReport r;
  for (const auto& col : (to_d * a_to_bc).column_list())
    if (!dd.group.is_zero(col)) throw std::logic_error("adjoint square does not commute");
  r.injective = is_injective(a_to_bc, a.group, bc);
  r.surjective = true;
  for (const auto& col : fibre.incl.column_list())
    if (!in_subgroup(bc, a_to_bc, col)) r.surjective = false;
  r.left_vertical_surjective = is_surjective(f_ac, a.group, c.group);
  r.right_vertical_surjective = is_surjective(f_bd, b.group, dd.group);
  return r;
}

// ---------------------------------------------------------------- cosets

bool CosetDescriptor::contains(const IVec& x) const { return reduce_by_hermite(generators, x) == base; }

CosetDescriptor make_coset(const Pi1Group& p, const IVec& c) {
  Subgroup inv = p.invariants();
  CosetDescriptor out;
  out.generators = canonical_generators(p.group(), inv.incl);
  out.base = reduce_by_hermite(out.generators, c);
  out.torsion = p.group().moduli();
  return out;
}

std::optional<IVec> particular_c_bmu(const Pi1Group& p, const Cochar& lambda_b, const Cochar& mu) {
  const std::size_t k = p.group().dim();
  IVec v = sub(p.class_of(lambda_b), p.class_of(mu));
  return solve_in(p.group(), IntMatrix::identity(k) - p.sigma(), v);
}

CosetDescriptor solve_c_bmu(const Pi1Group& p, const Cochar& lambda_b, const Cochar& mu) {
  auto c = particular_c_bmu(p, lambda_b, mu);
  if (!c) throw KottwitzMismatch("kappa(b) differs from [mu] in the Frobenius coinvariants of pi_1");
  return make_coset(p, *c);
}

}  // namespace adlv
