#pragma once

#include "adlv/isocrystal.hpp"

#include <optional>
#include <string>
#include <vector>

namespace adlv {

// Average of the sigma-orbit of mu.
RatCochar mu_bar(const RootDatum& d, const Cochar& mu);

struct BGMuVerdict {
  bool member = false;
  bool kottwitz_match = false;
  bool mazur = false;
  std::optional<RVec> coefficients;  // mu_bar - nu in the simple coroots of L, when in their span
  std::string reason;
};

// Membership of [b] in B(L, mu); mu must be L-dominant and b must lie in L.
BGMuVerdict in_B_G_mu(const RootDatum& d, const BRep& b, const Cochar& mu, const LeviSubset& l);
BGMuVerdict in_B_G_mu(const RootDatum& d, const BRep& b, const Cochar& mu);

struct NotInBGMu : std::domain_error {
  using std::domain_error::domain_error;
};

// Weyl-conjugate representative with dominant Newton average; its w lies in W_{M_b}.
BRep normalize_newton(const RootDatum& d, const BRep& b);

// sigma-stable standard Levis (all of them, in increasing size then lexicographic order)
std::vector<LeviSubset> stable_levis(const RootDatum& d);

// F-simple factors of the adjoint group: sigma-orbits of connected components of the Dynkin diagram.
std::vector<LeviSubset> simple_factors(const RootDatum& d);

enum class HNClass { irreducible, indecomposable_central, decomposable };
std::string to_string(HNClass c);

struct FactorVerdict {
  LeviSubset simple;
  bool irreducible = false;  // every coefficient on the factor is positive
  bool central = false;      // mu central on the factor and mu_bar = nu there
};

struct HNReport {
  BGMuVerdict membership;
  RatCochar mu_bar;
  RatCochar nu_dom;
  BRep normalized;
  LeviSubset centralizer;
  RVec coefficients;  // mu_bar - nu_dom in simple coroots of G
  std::optional<LeviSubset> decomposing_levi;
  bool condition1 = false;  // HN-irreducible by definition
  bool condition2 = false;  // nu not below mu_bar in any proper standard Levi
  bool condition3 = false;  // all coefficients strictly positive
  HNClass hn_class = HNClass::decomposable;
  LeviSubset reduction_levi;
  std::vector<FactorVerdict> factors;
};

// Throws NotInBGMu unless b lies in B(G, mu); mu must be dominant.
HNReport hn_classify(const RootDatum& d, const BRep& b, const Cochar& mu);

// Decomposable in the definitional sense: a proper sigma-stable M containing M_b with kappa_M(b) = [mu].
std::optional<LeviSubset> decomposing_levi(const RootDatum& d, const BRep& normalized, const Cochar& mu);

// The definitional irreducibility test: no proper sigma-stable M carries a class of [b] with
// G-dominant M-Newton point whose kappa_M is [mu].
bool hn_irreducible_by_definition(const RootDatum& d, const BRep& normalized, const Cochar& mu);

struct Reduction {
  LeviSubset levi;
  BRep b;
};

// Minimal sigma-stable M containing M_b with kappa_M(b) = [mu]; M = G when none is proper.
Reduction reduce_to_indecomposable(const RootDatum& d, const BRep& b, const Cochar& mu);

struct CentralSplit {
  std::vector<LeviSubset> irreducible;
  std::vector<LeviSubset> central;
};

// Partition of the F-simple factors of an HN-indecomposable pair.
CentralSplit split_central_factors(const RootDatum& d, const Cochar& mu, const BRep& b);

}  // namespace adlv
