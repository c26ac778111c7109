#pragma once

#include "adlv/connect.hpp"
#include "adlv/hnstrat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace adlv {

enum class Pi0Variant { empty, coset, discrete, product };
std::string to_string(Pi0Variant v);

// One F-simple factor of the adjoint group of the reduction Levi.
struct Pi0Factor {
  LeviSubset simple;  // simple roots of the factor, indexed in G
  bool central = false;
  std::string group;                       // the adjoint factor's datum
  std::optional<CosetDescriptor> coset;    // c pi_1(factor)^Gamma when not central
};

// Connected components of X_mu(b):
//   empty    - b is not in B(G, mu);
//   coset    - components <-> coset (c pi_1(M)^Gamma inside pi_1(M)), M the reduction Levi;
//   discrete - M(F)/M(O_F);
//   product  - per-factor answers on the adjoint group; `coset` is then the w_M-image constraint only.
// `image` is c_{b,mu} pi_1(G)^Gamma, which contains the w_G-image of every component.
struct Pi0Descriptor {
  Pi0Variant variant = Pi0Variant::empty;
  std::string group;
  LeviSubset levi;
  std::optional<CosetDescriptor> coset;
  std::optional<CosetDescriptor> image;
  std::vector<Pi0Factor> factors;
  std::vector<std::string> provenance;
  std::string reason;
};

// Equality of the mathematical content (variant, Levi, cosets, factors); names and provenance ignored.
bool same_answer(const Pi0Descriptor& a, const Pi0Descriptor& b);

// mu dominant and minuscule; throws std::invalid_argument otherwise.
Pi0Descriptor pi0_compute(const RootDatum& d, const Cochar& mu, const BRep& b);

// Images of (mu, b) in a quotient G' = G / Z, given the projection X_*(T) -> X_*(T').
struct QuotientData {
  Cochar mu;
  BRep b;
};
QuotientData push_to_quotient(const RootDatum& d, const RootDatum& quotient, const IntMatrix& proj, const Cochar& mu,
                              const BRep& b);

struct IncompatibleBasePoints : std::domain_error {
  using std::domain_error::domain_error;
};

struct TransferResult {
  Pi0Descriptor descriptor;
  bool torsor = false;  // fibres over pi_1(M')^Gamma are X_*(Z)^Gamma-torsors
};

// Rebuild the answer for G from the answer for G' by pulling the coset back along pi_1(M) -> pi_1(M').
TransferResult ad_transfer(const Pi0Descriptor& quotient_answer, const RootDatum& d, const RootDatum& quotient,
                           const IntMatrix& proj, const Cochar& mu, const BRep& b);

// The descriptor's coset, mapped to pi_1(G), lies in c_{b,mu} pi_1(G)^Gamma (recomputed from scratch).
bool image_constraint_holds(const RootDatum& d, const Pi0Descriptor& desc, const Cochar& mu, const BRep& b);

// For b = b_{x0} superbasic in M: the image in pi_1(G) of c^M_{b,mu_x} pi_1(M)^Gamma for every x in the
// set of lifts; all of them should coincide with c_{b,mu} pi_1(G)^Gamma.
struct BasePointReport {
  std::vector<CosetDescriptor> images;
  CosetDescriptor target;
  bool independent = false;
};
BasePointReport base_point_images(const RootDatum& d, const Cochar& mu, const LeviSubset& m, const IVec& x0);

}  // namespace adlv
