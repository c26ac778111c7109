#pragma once

#include "adlv/cli/json_io.hpp"

#include <optional>
#include <vector>

namespace adlv::cli {

struct SurveyOracle {
  std::uint32_t q = 2;
  int depth = 2;
  std::uint32_t m_max = 2;
};

struct SurveySpec {
  std::vector<Cochar> mus;  // dominant
  std::vector<BRep> bs;
  std::optional<SurveyOracle> oracle;  // GL_n only
};

// One Frobenius orbit Omega of roots of N with its closure G_Omega.
struct OmegaSummary {
  std::size_t orbit_id = 0;
  std::size_t alpha = 0;  // first root of the orbit
  OmegaType type = OmegaType::I;
  bool adapted = false;
  std::size_t local_iset_size = 0;  // the set of lifts computed inside G_Omega
};

struct SurveyRow {
  Cochar mu;
  BRep b;
  bool member = false;
  std::optional<HNClass> hn_class;
  std::optional<Pi0Descriptor> descriptor;
  bool image_constraint = true;
  std::optional<OracleVerdict> oracle;
  // set when b carries a Levi in which it is superbasic and mu is minuscule
  std::optional<std::size_t> iset_size;
  std::optional<bool> iset_connected;
  std::optional<bool> generates;
  std::vector<OmegaSummary> omegas;
  std::string error;
  bool checked() const;
};

// Every dominant minuscule mu with coordinates in [-bound, bound].
std::vector<Cochar> survey_minuscule_mus(const RootDatum& d, Int bound);
// All (lambda, w) with |lambda_i| <= bound and w in W; empty when bound < 0.
std::vector<BRep> survey_all_bs(const RootDatum& d, Int bound);

// Rows for mus x bs in that order; rows run concurrently.  Throws ResourceExhausted above
// ADLV_SURVEY_MAX_ROWS (default 20000) rows.
std::vector<SurveyRow> run_survey(const RootDatum& d, const SurveySpec& spec);
std::size_t survey_row_cap();

Json survey_row_to_json(const RootDatum& d, const SurveyRow& r);

}  // namespace adlv::cli
