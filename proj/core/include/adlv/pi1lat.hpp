#pragma once

#include "adlv/numeric.hpp"
#include "adlv/rootdata.hpp"

#include <optional>
#include <vector>

namespace adlv {

// Finitely generated abelian group Z^k / (m_0 Z + ... + m_{k-1} Z) in diagonal coordinates.
// A modulus of 0 marks a free coordinate; moduli are never 1.
class AbGroup {
 public:
  AbGroup() = default;
  explicit AbGroup(IVec moduli);
  static AbGroup free(std::size_t rank) { return AbGroup(IVec(rank, 0)); }

  const IVec& moduli() const { return moduli_; }
  std::size_t dim() const { return moduli_.size(); }
  std::size_t free_rank() const;
  IVec torsion() const;
  bool is_trivial() const { return moduli_.empty(); }
  bool is_torsion_free() const { return torsion().empty(); }

  IVec reduce(IVec v) const;
  bool is_zero(const IVec& v) const;
  bool equal(const IVec& a, const IVec& b) const { return is_zero(sub(a, b)); }
  // relation columns m_i e_i for the torsion coordinates
  IntMatrix relations() const;

  friend bool operator==(const AbGroup&, const AbGroup&) = default;

 private:
  IVec moduli_;
};

// A homomorphism is a matrix acting on coordinates: dst.dim() x src.dim().
struct Quotient {
  AbGroup group;
  IntMatrix proj;  // old coordinates -> quotient coordinates
  IntMatrix lift;  // quotient coordinates -> old coordinates (a section on representatives)
};

struct Subgroup {
  AbGroup group;
  IntMatrix incl;  // subgroup coordinates -> ambient coordinates
};

// Z^n modulo the span of the given columns.
Quotient quotient_of_lattice(std::size_t n, const IntMatrix& relation_columns);
// g modulo the subgroup generated by the given columns.
Quotient quotient(const AbGroup& g, const IntMatrix& generator_columns);
Subgroup subgroup(const AbGroup& g, const IntMatrix& generator_columns);
Subgroup kernel(const IntMatrix& f, const AbGroup& src, const AbGroup& dst);

// Coefficients c with gens * c == v in g, if v lies in the generated subgroup.
std::optional<IVec> solve_in(const AbGroup& g, const IntMatrix& generator_columns, const IVec& v);
bool in_subgroup(const AbGroup& g, const IntMatrix& generator_columns, const IVec& v);
bool is_surjective(const IntMatrix& f, const AbGroup& src, const AbGroup& dst);
bool is_injective(const IntMatrix& f, const AbGroup& src, const AbGroup& dst);
// Same subgroup of g?
bool same_subgroup(const AbGroup& g, const IntMatrix& a, const IntMatrix& b);
// f : src -> ambient with image inside s; returns f' : src -> s with s.incl * f' == f.
IntMatrix factor_through(const Subgroup& s, const AbGroup& ambient, const IntMatrix& f);

// Canonical generators (Hermite rows, relations included) and coset representatives for a subgroup.
IntMatrix canonical_generators(const AbGroup& g, const IntMatrix& generator_columns);
IVec canonical_coset_rep(const AbGroup& g, const IntMatrix& generator_columns, const IVec& v);

// pi_1 of a standard Levi: X_*(T) modulo the coroots of L, with the induced Frobenius.
class Pi1Group {
 public:
  Pi1Group(const RootDatum& d, LeviSubset l);

  const LeviSubset& levi() const { return levi_; }
  const AbGroup& group() const { return quotient_.group; }
  const IntMatrix& proj() const { return quotient_.proj; }
  const IntMatrix& lift() const { return quotient_.lift; }
  bool has_sigma() const { return has_sigma_; }
  // sigma on quotient coordinates; only for sigma-stable L
  const IntMatrix& sigma() const;

  IVec class_of(const Cochar& lambda) const { return group().reduce(proj().apply(lambda)); }

  Subgroup invariants() const;
  Quotient coinvariants() const;
  IVec coinvariant_class(const Cochar& lambda) const;

 private:
  LeviSubset levi_;
  Quotient quotient_;
  IntMatrix sigma_;
  bool has_sigma_ = false;
};

// pi_1(M) -> pi_1(L) for M inside L, with its Galois-theoretic kernels.
struct LeviTransition {
  IntMatrix plain;                   // pi_1(M) -> pi_1(L)
  Subgroup invariant_kernel;         // ker(pi_1(M)^Gamma -> pi_1(L)^Gamma), via Smith forms, in pi_1(M)^Gamma coordinates
  std::vector<IVec> orbit_sums;      // images in pi_1(M) of Galois-orbit sums of simple coroots of L outside M
  bool kernel_matches_orbit_sums = false;
  bool invariants_surjective = false;
  Subgroup coinvariant_kernel;       // ker(pi_1(M)_Gamma -> pi_1(L)_Gamma)
  bool coinvariant_kernel_torsion_free = false;
};

LeviTransition levi_transition(const RootDatum& d, const LeviSubset& m, const LeviSubset& l);

// X_*(T)^Gamma -> X_*(T_ad)^Gamma over pi_1(G)^Gamma -> pi_1(G_ad)^Gamma.
struct CartesianReport {
  bool injective = false;     // X_*(T)^Gamma -> fibre product
  bool surjective = false;
  bool left_vertical_surjective = false;
  bool right_vertical_surjective = false;
  bool cartesian() const { return injective && surjective && left_vertical_surjective && right_vertical_surjective; }
};

CartesianReport adjoint_square(const RootDatum& d);

// The coset c * pi_1(L)^Gamma, stored canonically inside pi_1(L).
struct CosetDescriptor {
  IVec base;                // canonical representative
  IntMatrix generators;     // Hermite rows spanning pi_1(L)^Gamma (plus relations)
  IVec torsion;             // moduli of the ambient coordinates (0 = free)

  bool contains(const IVec& x) const;
  friend bool operator==(const CosetDescriptor&, const CosetDescriptor&) = default;
};

CosetDescriptor make_coset(const Pi1Group& p, const IVec& c);

struct KottwitzMismatch : std::domain_error {
  using std::domain_error::domain_error;
};

// c with [lambda_b] - [mu] = (1 - sigma) c in pi_1(L); throws KottwitzMismatch when unsolvable.
CosetDescriptor solve_c_bmu(const Pi1Group& p, const Cochar& lambda_b, const Cochar& mu);
// any particular solution c (uncanonicalised), used to compare solutions
std::optional<IVec> particular_c_bmu(const Pi1Group& p, const Cochar& lambda_b, const Cochar& mu);

}  // namespace adlv
