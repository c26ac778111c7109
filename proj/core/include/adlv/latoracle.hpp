#pragma once

#include "adlv/isocrystal.hpp"
#include "adlv/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace adlv {

// Brute-force model of X_mu(b) for GL_n over F_q((t)): lattices L = g O^n with t^N L_0 <= L <= t^-N L_0.

struct OracleConfig {
  std::size_t n = 2;
  std::uint32_t q = 2;
  std::uint32_t m_min = 1;  // residue field degrees m_min .. m_max
  std::uint32_t m_max = 1;
  int depth = 1;            // window N
  Cochar mu;
  BRep b;                   // p^lambda w in GL_n; p = t, sigma raises coefficients to the q-th power
  std::size_t max_candidates = 0;  // 0: oracle_candidate_cap()
};

struct LatticePoint {
  LMatrix hermite;   // upper triangular, pivots t^{a_i}, entries above a pivot reduced below t^{a_i}
  Int w_G = 0;       // valuation of det
  Cochar rel_pos;    // inv(L, b sigma(L)), decreasing
  std::uint32_t field_degree = 1;
};

// Elementary divisors of a^{-1} b (valuations of its Smith form over F[[t]]), decreasing.
Cochar relative_position(const LaurentRing& ring, const LMatrix& a, const LMatrix& b);

// b as a Laurent matrix: entries t^{lambda_i} W_ij.
LMatrix b_matrix(const LaurentRing& ring, const BRep& b);

// All Hermite forms in the window with coefficients in F_{q^m} generating exactly F_{q^m}.
std::vector<LMatrix> window_lattices(const LaurentRing& ring, std::size_t n, int depth);

bool same_lattice(const LaurentRing& ring, const LMatrix& a, const LMatrix& b);

struct PointSet {
  std::vector<LatticePoint> points;  // sorted by (field degree, Hermite form)
  std::size_t examined = 0;
};

// Points with relative position mu (or <= mu when closure) over every F_{q^m}, m_min <= m <= m_max.
// Throws ResourceExhausted past the candidate cap.
PointSet adlv_points(const OracleConfig& cfg, bool closure, bool stop_at_first = false);

enum class OracleStatus { found, not_found, inconclusive };
std::string to_string(OracleStatus s);

struct OracleVerdict {
  OracleStatus status = OracleStatus::inconclusive;
  bool predicted = false;  // Kottwitz-Rapoport / Mazur prediction
  bool agrees = false;     // found == predicted; inconclusive never agrees
  std::uint32_t m = 0;     // where the search stopped
  int depth = 0;
  std::size_t examined = 0;
  bool truncated = false;  // the candidate budget ran out before the schedule finished
  std::optional<LatticePoint> witness;
  std::string note;
};

struct OracleStage {
  int depth = 0;
  std::uint32_t m = 1;
  friend bool operator==(const OracleStage&, const OracleStage&) = default;
};

// Stages (N, m) with N <= depth_limit, m <= m_limit, cheapest first: by N * m, then N.
std::vector<OracleStage> widening_schedule(int depth_limit, std::uint32_t m_limit);

// Runs the schedule until the first point; cfg.max_candidates is a budget shared by all stages.
// With closure the search accepts relative positions <= mu; the prediction is membership in B(G, mu) either way.
OracleVerdict nonempty_oracle(const OracleConfig& cfg, int depth_limit = 3, std::uint32_t m_limit = 3,
                              bool closure = false);

struct DeltaInvariant {
  int delta = -1;
  std::vector<std::size_t> offending;  // residues i (0-based) failing at delta
  std::optional<std::size_t> i_g;      // the unique offender when delta >= 1
  std::optional<Int> s_power;          // j with L = s^j L_0 when delta = -1 (verified)
};

// s: e_j -> e_{j+1}, e_{h-1} -> t e_0.
LMatrix s_matrix(std::size_t h, Int power = 1);

DeltaInvariant delta_invariant(const LaurentRing& ring, const LMatrix& g);

// Environment caps (defaults when unset or unparsable).
std::size_t oracle_candidate_cap();
std::size_t oracle_threads();

}  // namespace adlv
