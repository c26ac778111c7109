#pragma once

#include "adlv/pi1lat.hpp"
#include "adlv/rootdata.hpp"

#include <optional>
#include <string>
#include <vector>

namespace adlv {

// b = p^lambda * w, optionally considered inside a standard Levi.
struct BRep {
  Cochar lambda;
  WeylElement w;
  std::optional<LeviSubset> levi;
};

BRep make_brep(const RootDatum& d, Cochar lambda, const std::vector<std::size_t>& word,
               std::optional<LeviSubset> levi = std::nullopt);

// sigma u sigma^-1, i.e. the Frobenius image of a Weyl element
WeylElement frobenius_conjugate(const RootDatum& d, const WeylElement& u);
// g b sigma(g)^-1 for g = u in W: (u lambda, u w sigma(u)^-1)
BRep sigma_conjugate_by(const RootDatum& d, const BRep& b, const WeylElement& u);

// psi = w o sigma on cocharacters
IntMatrix frobenius_twist(const RootDatum& d, const WeylElement& w);
Int twist_order(const RootDatum& d, const WeylElement& w, Int cap = 10000);

// average of the psi-orbit of lambda (not yet dominant)
RatCochar newton_average(const RootDatum& d, const BRep& b, Int cap = 10000);
// dominant Newton point
RatCochar newton_point(const RootDatum& d, const BRep& b, Int cap = 10000);

struct NotInLevi : std::domain_error {
  using std::domain_error::domain_error;
};

// kappa_L(b): the class of lambda in pi_1(L)_Gamma, in the coordinates of Pi1Group(d, L).coinvariants().
IVec kottwitz_point(const RootDatum& d, const BRep& b, const LeviSubset& l);

bool is_basic(const RootDatum& d, const BRep& b);
bool is_basic_in(const RootDatum& d, const BRep& b, const LeviSubset& l);
// M_b: simple roots orthogonal to the dominant Newton point
LeviSubset centralizer_levi(const RootDatum& d, const BRep& b);

// A sigma-orbit of type-A components of a Levi, each chain oriented compatibly with sigma.
struct ResTypeAFactor {
  std::size_t h = 0;                                // GL_h
  std::vector<std::vector<std::size_t>> chains;     // one oriented chain of simple roots per copy
};

struct NotResTypeA : std::domain_error {
  using std::domain_error::domain_error;
};

// Splits the adjoint group of L into Res PGL_h factors; throws NotResTypeA otherwise.
std::vector<ResTypeAFactor> res_type_a_factors(const RootDatum& d, const LeviSubset& l);

// sum_k k <beta_k, lambda> mod h along one chain
Int chain_kottwitz_integer(const RootDatum& d, const std::vector<std::size_t>& chain, const Cochar& lambda);

// Basic in L with gcd(sum_r m_r, h) = 1 on every factor.  Throws NotResTypeA when b is basic in L
// but some factor of L^ad is not of type Res PGL_h.
bool is_superbasic(const RootDatum& d, const BRep& b, const LeviSubset& l);

struct StandardForm {
  BRep b;
  std::vector<Int> exponents;  // m per component, in the order of res_type_a_factors chains
  std::string note;
};

struct GcdConditionFails : std::domain_error {
  using std::domain_error::domain_error;
};

// b'_min for the pi_1(L)-class of `representative`: the L-minuscule lift times a power of the Coxeter cycle
// on every component.
StandardForm superbasic_standard_form(const RootDatum& d, const LeviSubset& l, const Cochar& representative);

// c_{b,mu} coset in pi_1(L); b must lie in L.
CosetDescriptor solve_c_bmu(const RootDatum& d, const BRep& b, const Cochar& mu, const LeviSubset& l);

}  // namespace adlv
