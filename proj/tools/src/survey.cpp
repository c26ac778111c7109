#include "adlv/cli/survey.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace adlv::cli {
namespace {

std::size_t env_size(const char* name, std::size_t fallback) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return fallback;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  return (*end == '\0' && v > 0) ? static_cast<std::size_t>(v) : fallback;
}

bool is_gl(const RootDatum& d) { return d.rank() > 0 && datum_to_json(d) == datum_to_json(make_gl(d.rank())); }

void superbasic_extras(const RootDatum& d, SurveyRow& row) {
  const LeviSubset& m = *row.b.levi;
  try {
    if (!d.sigma_stable(m) || !is_superbasic(d, row.b, m)) return;
  } catch (const NotResTypeA&) {
    return;
  }
  ISet s = iset_enumerate(d, row.mu, row.b, m);
  row.iset_size = s.size();
  row.iset_connected = move_components(d, s).size() <= 1;
  if (s.empty()) return;
  if (row.hn_class == HNClass::irreducible) row.generates = generation_check(d, row.mu, m, s.elements.front().x).generates;
  const auto orbits = unipotent_orbits(d, m);
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    OmegaSummary o;
    o.orbit_id = k;
    o.alpha = orbits[k].front();
    try {
      const OmegaClass c = omega_classify(d, o.alpha, m);
      o.type = c.type;
      o.adapted = c.adapted;
      o.local_iset_size = iset_enumerate_in(d, s.elements.front().x, row.b, m, c.closure).size();
    } catch (const MalformedOmega&) {
      continue;
    }
    row.omegas.push_back(o);
  }
}

SurveyRow compute_row(const RootDatum& d, const Cochar& mu, const BRep& b, const std::optional<SurveyOracle>& oracle) {
  SurveyRow row;
  row.mu = mu;
  row.b = b;
  try {
    row.member = in_B_G_mu(d, b, mu).member;
    const bool minuscule = is_minuscule(d, mu, LeviSubset::full(d.num_simple()));
    if (row.member) row.hn_class = hn_classify(d, b, mu).hn_class;
    if (minuscule) {
      row.descriptor = pi0_compute(d, mu, b);
      if (row.member) row.image_constraint = image_constraint_holds(d, *row.descriptor, mu, b);
    }
    if (oracle) {
      OracleConfig cfg;
      cfg.n = d.rank();
      cfg.q = oracle->q;
      cfg.mu = mu;
      cfg.b = BRep{b.lambda, b.w, std::nullopt};
      row.oracle = nonempty_oracle(cfg, oracle->depth, oracle->m_max, !minuscule);
    }
    if (b.levi && minuscule && row.member) superbasic_extras(d, row);
  } catch (const ResourceExhausted&) {
    throw;
  } catch (const std::exception& e) {
    row.error = e.what();
  }
  return row;
}

}  // namespace

bool SurveyRow::checked() const {
  return error.empty() && image_constraint && (!oracle || oracle->agrees) && iset_connected.value_or(true) &&
         generates.value_or(true);
}

std::size_t survey_row_cap() { return env_size("ADLV_SURVEY_MAX_ROWS", 20000); }

std::vector<Cochar> survey_minuscule_mus(const RootDatum& d, Int bound) {
  if (bound < 0) return {};
  return minuscule_dominant_in_box(d, bound);
}

std::vector<BRep> survey_all_bs(const RootDatum& d, Int bound) {
  if (bound < 0) return {};
  const auto weyl = d.weyl_group(LeviSubset::full(d.num_simple()));
  double count = static_cast<double>(weyl.size());
  for (std::size_t i = 0; i < d.rank(); ++i) count *= static_cast<double>(2 * bound + 1);
  if (count > static_cast<double>(survey_row_cap()))
    throw ResourceExhausted("survey: range too large (ADLV_SURVEY_MAX_ROWS)");
  std::vector<BRep> out;
  Cochar lambda(d.rank(), -bound);
  while (true) {
    for (const auto& w : weyl) out.push_back(BRep{lambda, w, std::nullopt});
    std::size_t i = d.rank();
    while (i > 0 && lambda[i - 1] == bound) lambda[--i] = -bound;
    if (i == 0) break;
    ++lambda[i - 1];
  }
  return out;
}

std::vector<SurveyRow> run_survey(const RootDatum& d, const SurveySpec& spec) {
  const std::size_t total = spec.mus.size() * spec.bs.size();
  if (total > survey_row_cap()) throw ResourceExhausted("survey: range too large (ADLV_SURVEY_MAX_ROWS)");
  if (spec.oracle && !is_gl(d)) throw std::invalid_argument("survey: the lattice oracle models GL_n only");
  std::vector<SurveyRow> rows(total);
  std::atomic<std::size_t> next{0};
  std::atomic<bool> exhausted{false};
  auto worker = [&] {
    for (std::size_t k = next++; k < total && !exhausted; k = next++) {
      try {
        rows[k] = compute_row(d, spec.mus[k / spec.bs.size()], spec.bs[k % spec.bs.size()], spec.oracle);
      } catch (const ResourceExhausted&) {
        exhausted = true;
      }
    }
  };
  const std::size_t threads = std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), total);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (exhausted) throw ResourceExhausted("survey: a row exceeded its resource cap");
  return rows;
}

Json survey_row_to_json(const RootDatum& d, const SurveyRow& r) {
  Json out;
  out["mu"] = r.mu;
  out["b"] = brep_to_json(d, r.b);
  out["member"] = r.member;
  if (r.hn_class) out["hn_class"] = to_string(*r.hn_class);
  if (r.descriptor) out["pi0"] = descriptor_to_json(*r.descriptor);
  Json checks;
  checks["image_constraint"] = r.image_constraint;
  if (r.oracle) checks["oracle"] = oracle_verdict_to_json(*r.oracle);
  if (r.iset_size) checks["iset_size"] = *r.iset_size;
  if (r.iset_connected) checks["iset_connected"] = *r.iset_connected;
  if (r.generates) checks["generates"] = *r.generates;
  if (!r.omegas.empty()) {
    Json omegas = Json::array();
    for (const auto& o : r.omegas) {
      Json jo;
      jo["orbit_id"] = o.orbit_id;
      jo["alpha"] = d.root(o.alpha).coeffs;
      jo["type"] = to_string(o.type);
      jo["adapted"] = o.adapted;
      jo["local_iset_size"] = o.local_iset_size;
      omegas.push_back(std::move(jo));
    }
    checks["omegas"] = std::move(omegas);
  }
  out["checks"] = std::move(checks);
  out["checked"] = r.checked();
  if (!r.error.empty()) out["error"] = r.error;
  return out;
}

}  // namespace adlv::cli
