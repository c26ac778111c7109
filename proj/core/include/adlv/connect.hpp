#pragma once

#include "adlv/isocrystal.hpp"
#include "adlv/pi1lat.hpp"

#include <optional>
#include <string>
#include <vector>

namespace adlv {

// The unique M-dominant, M-minuscule cocharacter in the class x of pi_1(M) (reduced coordinates).
Cochar minuscule_lift(const RootDatum& d, const IVec& x, const LeviSubset& m);

// w_x = w_0(M_x) w_0(M), where M_x is the centralizer of mu_x inside M.
WeylElement w_x_compute(const RootDatum& d, const Cochar& mu_x, const LeviSubset& m);

// b_x = (mu_x, w_x) as a representative inside M.
BRep b_x_compute(const RootDatum& d, const Cochar& mu_x, const LeviSubset& m);

struct ISetElement {
  IVec x;       // reduced coordinates in pi_1(M)
  Cochar mu_x;  // its minuscule lift
};

// Elements x of pi_1(M) whose lift is Weyl-conjugate to mu (inside W, or inside the Weyl group of a
// subsystem) with x = kappa_M(b) in the coinvariants.  Sorted by x.
struct ISet {
  LeviSubset levi;
  Cochar mu;  // dominant for the ambient (sub)system
  BRep b;
  IVec kappa;
  std::optional<RootSubsystem> subsystem;  // set when the ambient group is a G_Omega
  std::vector<ISetElement> elements;

  std::size_t size() const { return elements.size(); }
  bool empty() const { return elements.empty(); }
  const ISetElement* find(const IVec& x) const;
  bool contains(const IVec& x) const { return find(x) != nullptr; }
};

// mu must be minuscule; M sigma-stable; b.w in W_M.
ISet iset_enumerate(const RootDatum& d, const Cochar& mu, const BRep& b, const LeviSubset& m);
// The same set for the group generated by M and a subsystem, seeded by the lift of x.
ISet iset_enumerate_in(const RootDatum& d, const IVec& x, const BRep& b, const LeviSubset& m, const RootSubsystem& sub);

bool is_adapted(const RootDatum& d, std::size_t alpha, const LeviSubset& m);
// An adapted root of G_Omega with the same image in pi_1(M) as alpha.
std::size_t adapted_modify(const RootDatum& d, std::size_t alpha, const LeviSubset& m);

enum class OmegaType { I = 1, II = 2, III = 3 };
std::string to_string(OmegaType t);

struct OmegaClass {
  std::vector<std::size_t> orbit;  // orbit[i] = sigma^i(alpha)
  RootSubsystem closure;           // roots of G_Omega
  OmegaType type = OmegaType::I;
  std::size_t period = 0;          // least d > 0 with alpha, sigma^d(alpha) in one component
  bool adapted = false;
  std::optional<std::size_t> beta;         // common neighbour, absent when zero
  std::optional<std::size_t> alpha_tilde;  // only for adapted orbits
};

struct MalformedOmega : std::domain_error {
  using std::domain_error::domain_error;
};

OmegaClass omega_classify(const RootDatum& d, std::size_t alpha, const LeviSubset& m);

// Frobenius orbits of the roots of N, in a fixed order; the index is the orbit id.
std::vector<std::vector<std::size_t>> unipotent_orbits(const RootDatum& d, const LeviSubset& m);

// One step of a chain.  forward: to - from = alpha^vee - alpha_prime^vee; otherwise from - to is.
// alpha_prime = sigma^power(alpha).
struct Move {
  IVec from;
  IVec to;
  std::size_t alpha = 0;
  std::size_t alpha_prime = 0;
  Int power = 0;
  std::size_t orbit_id = 0;
  bool forward = true;
  bool immediate = false;
};

struct ChainWitness {
  std::vector<IVec> nodes;
  std::vector<Move> steps;
};

struct NoChainFound : std::logic_error {
  using std::logic_error::logic_error;
};
struct MalformedMove : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// x + alpha^vee - sigma^power(alpha)^vee in pi_1(M)
IVec apply_move(const RootDatum& d, const Pi1Group& p, const IVec& x, std::size_t alpha, Int power);

// Breadth-first search; neighbours visited in lexicographic order of coordinates.
// Only moves inside the orbit `only_orbit` are used when it is given.
ChainWitness convexity_chain(const RootDatum& d, const ISet& s, const IVec& from, const IVec& to,
                             std::optional<std::size_t> only_orbit = std::nullopt);
// Connected components of the move graph, each sorted.
std::vector<std::vector<IVec>> move_components(const RootDatum& d, const ISet& s,
                                               std::optional<std::size_t> only_orbit = std::nullopt);

// from -> to is immediate; the certificate must satisfy to - from = alpha^vee - sigma^power(alpha)^vee
// with alpha adapted.
bool is_immediate(const RootDatum& d, const ISet& s, const IVec& from, const IVec& to, std::size_t alpha, Int power);
// Re-check every step (membership, certificate, immediate flag).
bool verify_chain(const RootDatum& d, const ISet& s, const ChainWitness& c);
// Every step becomes immediate in one direction.
ChainWitness refine_immediate(const RootDatum& d, const ISet& s, const ChainWitness& c);

struct GenerationReport {
  bool generates = false;
  std::vector<std::size_t> adapted_negative;  // roots alpha with alpha^vee in C
  std::vector<IVec> lattice_generators;
};

struct PreconditionViolated : std::domain_error {
  using std::domain_error::domain_error;
};

// Does the Frobenius-saturation of C together with the coroots of M span the coroot lattice?
// Requires (mu, b_{x0}) to be HN-irreducible.
GenerationReport generation_check(const RootDatum& d, const Cochar& mu, const LeviSubset& m, const IVec& x0);

// Pairwise orthogonal positive roots beta_i of H with gamma = prod s_{beta_i}(alpha).
std::vector<std::size_t> weyl_orbit_conjugators(const RootDatum& d, std::size_t alpha, std::size_t gamma,
                                                const LeviSubset& h);

// Exhaustive checks of the structural identities on an enumerated set.
struct ISetInvariants {
  bool lift_identities = true;       // w_x^-1 mu_x = w_0M mu_x, shifts by adapted coroots
  bool adjacent_dominance = true;    // G-dominant forms along adjacent pairs
  bool w_x_alpha_minimal = true;
  bool omega_subsets = true;         // G_Omega subsets sit inside and are closed under Omega-moves
  bool omega_connected = true;       // Omega-move graph on each G_Omega subset is connected
  bool weyl_coinvariant = true;      // mu_x = w mu_x' in X_*(T)_Gamma
  bool connected = true;
  std::vector<std::string> failures;
  bool all() const {
    return lift_identities && adjacent_dominance && w_x_alpha_minimal && omega_subsets && omega_connected &&
           weyl_coinvariant && connected;
  }
};

ISetInvariants check_invariants(const RootDatum& d, const ISet& s);

}  // namespace adlv
