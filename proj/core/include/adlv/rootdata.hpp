#pragma once

#include "adlv/numeric.hpp"

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace adlv {

using Cochar = IVec;
using RatCochar = RVec;
using Character = IVec;

// A standard Levi, named by its set of simple-root indices (kept sorted).
class LeviSubset {
 public:
  LeviSubset() = default;
  explicit LeviSubset(std::vector<std::size_t> simple);
  static LeviSubset full(std::size_t num_simple);
  static LeviSubset torus() { return {}; }

  const std::vector<std::size_t>& simple() const { return simple_; }
  bool contains(std::size_t i) const;
  bool subset_of(const LeviSubset& other) const;
  std::size_t size() const { return simple_.size(); }
  bool empty() const { return simple_.empty(); }

  friend bool operator==(const LeviSubset&, const LeviSubset&) = default;
  friend auto operator<=>(const LeviSubset&, const LeviSubset&) = default;

 private:
  std::vector<std::size_t> simple_;
};

LeviSubset intersect(const LeviSubset& a, const LeviSubset& b);

// Weyl group element, canonically its matrix on the cocharacter lattice.  The word
// (simple reflection indices, leftmost applied last) is a certificate only.
class WeylElement {
 public:
  WeylElement() = default;
  WeylElement(IntMatrix m, std::vector<std::size_t> word) : matrix_(std::move(m)), word_(std::move(word)) {}
  static WeylElement identity(std::size_t rank) { return {IntMatrix::identity(rank), {}}; }

  const IntMatrix& matrix() const { return matrix_; }
  const std::vector<std::size_t>& word() const { return word_; }
  std::size_t length() const { return word_.size(); }
  bool is_identity() const { return matrix_ == IntMatrix::identity(matrix_.rows()); }

  Cochar apply(const Cochar& v) const { return matrix_.apply(v); }
  RatCochar apply(const RatCochar& v) const { return matrix_.apply(v); }
  WeylElement inverse() const;

  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.matrix_ == b.matrix_; }
  friend auto operator<=>(const WeylElement& a, const WeylElement& b) { return a.matrix_ <=> b.matrix_; }

 private:
  IntMatrix matrix_;
  std::vector<std::size_t> word_;
};

struct Root {
  Character root;
  Cochar coroot;
  IVec coeffs;     // expansion in simple roots
  IVec cocoeffs;   // expansion of the coroot in simple coroots
  bool positive = false;
  Int height() const;
};

struct RootDatumInput {
  std::string name;
  std::size_t cochar_rank = 0;
  std::vector<Character> simple_roots;
  std::vector<Cochar> simple_coroots;
  IntMatrix pairing;  // <chi, lambda> = chi^T * pairing * lambda
  IntMatrix sigma;    // action on cocharacters
};

struct RootDatumSolvers;

class RootDatum {
 public:
  // Validates the input and derives the full root system.
  explicit RootDatum(RootDatumInput in);

  const std::string& name() const { return name_; }
  std::size_t rank() const { return rank_; }
  std::size_t num_simple() const { return simple_roots_.size(); }
  const Character& simple_root(std::size_t i) const { return simple_roots_.at(i); }
  const Cochar& simple_coroot(std::size_t i) const { return simple_coroots_.at(i); }
  const std::vector<Character>& simple_roots() const { return simple_roots_; }
  const std::vector<Cochar>& simple_coroots() const { return simple_coroots_; }
  const IntMatrix& pairing_matrix() const { return pairing_; }
  const IntMatrix& sigma() const { return sigma_; }
  const IntMatrix& sigma_on_characters() const { return sigma_char_; }
  Int sigma_order() const { return sigma_order_; }
  const std::vector<std::size_t>& sigma_permutation() const { return sigma_perm_; }

  Int pair(const Character& chi, const Cochar& lambda) const;
  Rat pair(const Character& chi, const RatCochar& lambda) const;
  Int cartan(std::size_t i, std::size_t j) const { return cartan_(i, j); }
  const IntMatrix& cartan_matrix() const { return cartan_; }

  const std::vector<Root>& roots() const { return roots_; }
  const Root& root(std::size_t idx) const { return roots_.at(idx); }
  std::size_t num_positive() const { return num_positive_; }
  std::size_t simple_root_index(std::size_t i) const { return i; }
  std::size_t negative_of(std::size_t idx) const;
  std::optional<std::size_t> find_root(const Character& chi) const;
  std::optional<std::size_t> find_coroot(const Cochar& lambda) const;
  std::size_t sigma_root(std::size_t idx) const { return sigma_on_roots_[idx]; }
  std::size_t weyl_root(const WeylElement& w, std::size_t idx) const;

  // roots whose simple-root support lies in L
  std::vector<std::size_t> roots_of(const LeviSubset& l) const;
  std::vector<std::size_t> positive_roots_of(const LeviSubset& l) const;
  // positive roots not in L (the roots of the unipotent radical)
  std::vector<std::size_t> unipotent_roots(const LeviSubset& l) const;
  bool in_levi(std::size_t root_idx, const LeviSubset& l) const;
  bool sigma_stable(const LeviSubset& l) const;
  std::vector<std::vector<std::size_t>> components(const LeviSubset& l) const;
  std::vector<std::vector<std::size_t>> sigma_orbits_simple() const;
  std::vector<std::vector<std::size_t>> sigma_orbits_roots(const std::vector<std::size_t>& roots) const;

  WeylElement simple_reflection(std::size_t i) const { return reflections_.at(i); }
  // s_alpha on cocharacters
  WeylElement reflection_in(std::size_t root_idx) const;
  std::vector<WeylElement> weyl_group(const LeviSubset& l) const;

  // exact expansion of a cocharacter in simple coroots (if it lies in their span)
  std::optional<IVec> coroot_coordinates(const Cochar& lambda) const;
  std::optional<RVec> coroot_coordinates(const RatCochar& lambda) const;
  std::optional<IVec> root_coordinates(const Character& chi) const;

  Cochar apply_sigma(const Cochar& v, Int power = 1) const;
  RatCochar apply_sigma(const RatCochar& v, Int power = 1) const;

  const RootDatumInput& input() const { return input_; }

 private:
  RootDatumInput input_;
  std::string name_;
  std::size_t rank_ = 0;
  std::vector<Character> simple_roots_;
  std::vector<Cochar> simple_coroots_;
  IntMatrix pairing_;
  IntMatrix sigma_;
  IntMatrix sigma_char_;
  Int sigma_order_ = 1;
  std::vector<std::size_t> sigma_perm_;
  IntMatrix cartan_;
  std::vector<Root> roots_;
  std::size_t num_positive_ = 0;
  std::map<IVec, std::size_t> root_lookup_;
  std::map<IVec, std::size_t> coroot_lookup_;
  std::vector<std::size_t> sigma_on_roots_;
  std::vector<WeylElement> reflections_;
  IntMatrix simple_coroot_matrix_;
  IntMatrix simple_root_matrix_;
  std::shared_ptr<const RootDatumSolvers> solvers_;
};

struct RootDatumError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Presets.
RootDatum make_gl(std::size_t n);
RootDatum make_res_gl(std::size_t n, std::size_t d);
RootDatum make_gu(std::size_t n);
RootDatum make_gsp(std::size_t n);  // GSp(2n)
RootDatum make_so_even(std::size_t n, bool quasi_split = false);  // SO(2n), n >= 2
RootDatum make_d4_triality(bool simply_connected = false);
RootDatum make_product(const RootDatum& a, const RootDatum& b);
RootDatum adjoint_of(const RootDatum& d);
// The Levi as a root datum on the same cocharacter lattice; simple roots renumbered 0..|L|-1.
RootDatum levi_datum(const RootDatum& d, const LeviSubset& l);
RootDatum simply_connected_of(const RootDatum& d);
// X_*(T) -> X_*(T_ad), lambda |-> (<alpha_i, lambda>)_i
IntMatrix adjoint_projection(const RootDatum& d);

// Named presets: "GL", "PGL", "SL", "ResGL", "GU", "PGU", "GSp", "PGSp", "SO", "QSO", "D4-triality", ...
RootDatum make_preset(const std::string& name, const std::vector<Int>& params);
std::vector<std::string> preset_names();

// ---- operations ----

Int pairing(const RootDatum& d, const Character& chi, const Cochar& lambda);
Rat pairing(const RootDatum& d, const Character& chi, const RatCochar& lambda);

std::pair<Cochar, WeylElement> dominant_rep(const RootDatum& d, const Cochar& lambda, const LeviSubset& l);
std::pair<RatCochar, WeylElement> dominant_rep(const RootDatum& d, const RatCochar& lambda, const LeviSubset& l);
// anti-dominant representative of a coroot-side vector: <beta, v> <= 0 for simple beta in L
std::pair<Cochar, WeylElement> antidominant_rep(const RootDatum& d, const Cochar& lambda, const LeviSubset& l);
bool is_dominant(const RootDatum& d, const Cochar& lambda, const LeviSubset& l);
bool is_dominant(const RootDatum& d, const RatCochar& lambda, const LeviSubset& l);

enum class DominanceMode { integral, rational };

// mu1 <= mu2: mu2 - mu1 is a non-negative (integral / rational) combination of positive coroots of L.
bool dominance(const RootDatum& d, const RatCochar& mu1, const RatCochar& mu2, DominanceMode mode, const LeviSubset& l);
bool dominance(const RootDatum& d, const Cochar& mu1, const Cochar& mu2, DominanceMode mode, const LeviSubset& l);
// coefficients of v in the simple coroots of L, if v lies in their rational span
std::optional<RVec> levi_coroot_coefficients(const RootDatum& d, const RatCochar& v, const LeviSubset& l);

struct Norms {
  Int plain = 0;
  Int galois = 0;
};
Norms norms(const RootDatum& d, const Cochar& phi);

WeylElement longest_element(const RootDatum& d, const LeviSubset& l);

bool is_minuscule(const RootDatum& d, const Cochar& lambda, const std::vector<std::size_t>& roots);
bool is_minuscule(const RootDatum& d, const Cochar& lambda, const LeviSubset& l);

struct RootSubsystem {
  std::vector<std::size_t> roots;  // sorted root indices, symmetric and closed
  bool contains(std::size_t idx) const;
};

RootSubsystem closed_symmetric_closure(const RootDatum& d, const std::vector<std::size_t>& seed);
std::vector<std::size_t> subsystem_basis(const RootDatum& d, const RootSubsystem& s);
// connected components of a subsystem, via its basis
std::vector<std::vector<std::size_t>> subsystem_components(const RootDatum& d, const RootSubsystem& s);
std::pair<Cochar, std::vector<std::size_t>> dominant_rep_subsystem(const RootDatum& d, const Cochar& lambda,
                                                                   const std::vector<std::size_t>& basis);

// mu' - mu'' = sum of pairwise orthogonal coroots gamma_i^vee with <gamma_i, mu'> = 1, <gamma_i, mu''> = -1.
std::vector<std::size_t> orthogonal_decomposition(const RootDatum& d, const Cochar& mu1, const Cochar& mu2);

// Regroup a sum of roots into roots with pairwise non-negative pairings; every output root is a
// sum of a sub-multiset of the input.
std::vector<std::size_t> regroup_roots(const RootDatum& d, std::vector<std::size_t> summands);
// The same on the coroot side.
std::vector<std::size_t> regroup_coroots(const RootDatum& d, std::vector<std::size_t> summands);

WeylElement weyl_from_word(const RootDatum& d, const std::vector<std::size_t>& word);
// A rational cocharacter pairing to 1 with every simple root (half-sum-of-positive-coroots direction).
RatCochar regular_dominant(const RootDatum& d);
bool in_weyl_group(const RootDatum& d, const WeylElement& w, const LeviSubset& l);

// The L-dominant, L-minuscule cocharacter in the class of lambda modulo the coroots of L,
// by greedy descent: subtract gamma^vee while <gamma, lambda> >= 2 for a positive root gamma of L.
Cochar minuscule_in_class(const RootDatum& d, const Cochar& lambda, const LeviSubset& l);

// Dominant cocharacters with entries in [-bound, bound] that are minuscule for the whole root system.
std::vector<Cochar> minuscule_dominant_in_box(const RootDatum& d, Int bound);

// Pretty name for a root index: its simple-root coefficient vector.
std::string root_label(const RootDatum& d, std::size_t idx);

}  // namespace adlv
