#include "adlv/cli/json_io.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace adlv::cli {
namespace {

Int int_from_json(const Json& j, const std::string& what) {
  if (!j.is_number_integer()) throw SchemaError(what + ": expected an integer");
  return j.get<Int>();
}

// parameter names of each preset, in make_preset order
std::vector<std::string> preset_param_keys(const std::string& name) {
  if (name == "ResGL") return {"n", "d"};
  if (name == "D4-triality" || name == "Spin8-triality") return {};
  return {"n"};
}

IntMatrix matrix_from_json(const Json& j, std::size_t size, const std::string& what) {
  if (!j.is_array() || j.size() != size) throw SchemaError(what + ": expected " + std::to_string(size) + " rows");
  std::vector<IVec> rows;
  for (const Json& row : j) {
    IVec r = ints_from_json(row, what);
    if (r.size() != size) throw SchemaError(what + ": expected a square matrix");
    rows.push_back(std::move(r));
  }
  return IntMatrix::from_rows(rows, size);
}

std::vector<IVec> vectors_from_json(const Json& j, std::size_t size, const std::string& what) {
  if (!j.is_array()) throw SchemaError(what + ": expected an array of vectors");
  std::vector<IVec> out;
  for (const Json& v : j) {
    out.push_back(ints_from_json(v, what));
    if (out.back().size() != size) throw SchemaError(what + ": vectors must have length " + std::to_string(size));
  }
  return out;
}

std::vector<std::size_t> indices_from_json(const RootDatum& d, const Json& j, const std::string& what) {
  std::vector<std::size_t> out;
  for (Int i : ints_from_json(j, what)) {
    if (i < 1 || static_cast<std::size_t>(i) > d.num_simple())
      throw SchemaError(what + ": index " + std::to_string(i) + " outside 1.." + std::to_string(d.num_simple()));
    out.push_back(static_cast<std::size_t>(i - 1));
  }
  return out;
}

Json one_based(const std::vector<std::size_t>& v) {
  Json out = Json::array();
  for (std::size_t i : v) out.push_back(i + 1);
  return out;
}

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
  return out;
}

void require_keys(const Json& j, std::initializer_list<const char*> allowed, const std::string& what) {
  for (const auto& [key, value] : j.items())
    if (std::none_of(allowed.begin(), allowed.end(), [&](const char* k) { return key == k; }))
      throw SchemaError(what + ": unknown field \"" + key + "\"");
}

}  // namespace

IVec ints_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) throw SchemaError(what + ": expected an integer array");
  IVec out;
  for (const Json& x : j) out.push_back(int_from_json(x, what));
  return out;
}

RootDatum datum_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("datum: expected an object");
  if (j.contains("preset")) {
    require_keys(j, {"preset", "params"}, "datum");
    if (!j["preset"].is_string()) throw SchemaError("datum.preset: expected a string");
    const std::string name = j["preset"].get<std::string>();
    std::vector<Int> params;
    if (j.contains("params")) {
      const Json& p = j["params"];
      if (p.is_array()) {
        params = ints_from_json(p, "datum.params");
      } else if (p.is_object()) {
        const auto keys = preset_param_keys(name);
        for (const auto& [key, value] : p.items())
          if (std::find(keys.begin(), keys.end(), key) == keys.end())
            throw SchemaError("datum.params: preset " + name + " has no parameter \"" + key + "\"");
        for (const auto& key : keys) {
          if (!p.contains(key)) throw SchemaError("datum.params: missing \"" + key + "\"");
          params.push_back(int_from_json(p[key], "datum.params." + key));
        }
      } else {
        throw SchemaError("datum.params: expected an object or an array");
      }
    }
    return make_preset(name, params);
  }
  if (j.contains("product")) {
    require_keys(j, {"product"}, "datum");
    const Json& parts = j["product"];
    if (!parts.is_array() || parts.size() < 2) throw SchemaError("datum.product: expected at least two data");
    RootDatum out = datum_from_json(parts[0]);
    for (std::size_t i = 1; i < parts.size(); ++i) out = make_product(out, datum_from_json(parts[i]));
    return out;
  }
  require_keys(j, {"name", "cochar_rank", "simple_roots", "simple_coroots", "pairing", "sigma"}, "datum");
  for (const char* key : {"cochar_rank", "simple_roots", "simple_coroots"})
    if (!j.contains(key)) throw SchemaError(std::string("datum: missing \"") + key + "\"");
  const Int rank = int_from_json(j["cochar_rank"], "datum.cochar_rank");
  if (rank < 0 || rank > 64) throw SchemaError("datum.cochar_rank: out of range");
  RootDatumInput in;
  in.name = j.contains("name") && j["name"].is_string() ? j["name"].get<std::string>() : "custom";
  in.cochar_rank = static_cast<std::size_t>(rank);
  in.simple_roots = vectors_from_json(j["simple_roots"], in.cochar_rank, "datum.simple_roots");
  in.simple_coroots = vectors_from_json(j["simple_coroots"], in.cochar_rank, "datum.simple_coroots");
  in.pairing = j.contains("pairing") ? matrix_from_json(j["pairing"], in.cochar_rank, "datum.pairing")
                                     : IntMatrix::identity(in.cochar_rank);
  in.sigma = j.contains("sigma") ? matrix_from_json(j["sigma"], in.cochar_rank, "datum.sigma")
                                 : IntMatrix::identity(in.cochar_rank);
  return RootDatum(std::move(in));
}

Json datum_to_json(const RootDatum& d) {
  Json out;
  out["name"] = d.name();
  out["cochar_rank"] = d.rank();
  out["simple_roots"] = d.simple_roots();
  out["simple_coroots"] = d.simple_coroots();
  out["pairing"] = matrix_to_json(d.pairing_matrix());
  out["sigma"] = matrix_to_json(d.sigma());
  return out;
}

Cochar cochar_from_json(const RootDatum& d, const Json& j, const std::string& what) {
  Cochar c = ints_from_json(j, what);
  if (c.size() != d.rank())
    throw SchemaError(what + ": expected " + std::to_string(d.rank()) + " coordinates, got " + std::to_string(c.size()));
  return c;
}

LeviSubset levi_from_json(const RootDatum& d, const Json& j) {
  std::vector<std::size_t> idx = indices_from_json(d, j, "levi");
  if (std::set<std::size_t>(idx.begin(), idx.end()).size() != idx.size()) throw SchemaError("levi: repeated index");
  return LeviSubset(std::move(idx));
}

BRep brep_from_json(const RootDatum& d, const Json& j) {
  if (!j.is_object()) throw SchemaError("b: expected an object");
  require_keys(j, {"lambda", "w_word", "w", "levi"}, "b");
  if (!j.contains("lambda")) throw SchemaError("b: missing \"lambda\"");
  if (j.contains("w") && j.contains("w_word")) throw SchemaError("b: give either \"w\" or \"w_word\"");
  std::vector<std::size_t> word;
  if (j.contains("w_word")) word = indices_from_json(d, j["w_word"], "b.w_word");
  if (j.contains("w")) word = indices_from_json(d, j["w"], "b.w");
  std::optional<LeviSubset> levi;
  if (j.contains("levi")) levi = levi_from_json(d, j["levi"]);
  return make_brep(d, cochar_from_json(d, j["lambda"], "b.lambda"), word, levi);
}

std::vector<std::size_t> word_of(const RootDatum& d, const WeylElement& w) {
  // strip right descents: l(v s_i) < l(v) iff v sends the simple coroot to a negative coroot
  std::vector<std::size_t> tail;
  WeylElement v = w;
  while (!v.is_identity()) {
    std::optional<std::size_t> descent;
    for (std::size_t i = 0; i < d.num_simple() && !descent; ++i) {
      const auto idx = d.find_coroot(v.apply(d.simple_coroot(i)));
      if (!idx) throw std::invalid_argument("word_of: not an element of the Weyl group");
      if (!d.root(*idx).positive) descent = i;
    }
    if (!descent) throw std::invalid_argument("word_of: not an element of the Weyl group");
    v = v * d.simple_reflection(*descent);
    tail.push_back(*descent);
  }
  return {tail.rbegin(), tail.rend()};
}

Json levi_to_json(const LeviSubset& l) { return one_based(l.simple()); }

Json rationals_to_json(const RVec& v) {
  Json out = Json::array();
  for (const Rat& r : v) out.push_back(to_string(r));
  return out;
}

Json brep_to_json(const RootDatum& d, const BRep& b) {
  Json out;
  out["lambda"] = b.lambda;
  out["w_word"] = one_based(word_of(d, b.w));
  if (b.levi) out["levi"] = levi_to_json(*b.levi);
  return out;
}

Json coset_to_json(const CosetDescriptor& c) {
  Json out;
  out["base"] = c.base;
  out["generators"] = matrix_to_json(c.generators);
  out["torsion"] = c.torsion;
  return out;
}

Json verdict_to_json(const BGMuVerdict& v) {
  Json out;
  out["member"] = v.member;
  out["kottwitz_match"] = v.kottwitz_match;
  out["mazur"] = v.mazur;
  if (v.coefficients) out["coefficients"] = rationals_to_json(*v.coefficients);
  out["reason"] = v.reason;
  return out;
}

Json hn_report_to_json(const RootDatum& d, const HNReport& r) {
  Json out;
  out["hn_class"] = to_string(r.hn_class);
  out["membership"] = verdict_to_json(r.membership);
  out["mu_bar"] = rationals_to_json(r.mu_bar);
  out["nu"] = rationals_to_json(r.nu_dom);
  out["normalized_b"] = brep_to_json(d, r.normalized);
  out["centralizer_levi"] = levi_to_json(r.centralizer);
  out["coefficients"] = rationals_to_json(r.coefficients);
  Json cond;
  cond["irreducible_by_definition"] = r.condition1;
  cond["nu_not_below_mu_bar_in_proper_levi"] = r.condition2;
  cond["coefficients_positive"] = r.condition3;
  out["conditions"] = std::move(cond);
  if (r.decomposing_levi) out["decomposing_levi"] = levi_to_json(*r.decomposing_levi);
  out["reduction_levi"] = levi_to_json(r.reduction_levi);
  Json factors = Json::array();
  for (const auto& f : r.factors) {
    Json jf;
    jf["simple"] = levi_to_json(f.simple);
    jf["irreducible"] = f.irreducible;
    jf["central"] = f.central;
    factors.push_back(std::move(jf));
  }
  out["factors"] = std::move(factors);
  return out;
}

Json descriptor_to_json(const Pi0Descriptor& p) {
  Json out;
  out["variant"] = to_string(p.variant);
  out["group"] = p.group;
  out["levi"] = levi_to_json(p.levi);
  if (p.coset) out["coset"] = coset_to_json(*p.coset);
  if (p.image) out["image"] = coset_to_json(*p.image);
  if (!p.factors.empty()) {
    Json factors = Json::array();
    for (const auto& f : p.factors) {
      Json jf;
      jf["simple"] = levi_to_json(f.simple);
      jf["central"] = f.central;
      jf["group"] = f.group;
      if (f.coset) jf["coset"] = coset_to_json(*f.coset);
      factors.push_back(std::move(jf));
    }
    out["factors"] = std::move(factors);
  }
  out["provenance"] = p.provenance;
  out["reason"] = p.reason;
  return out;
}

Json iset_to_json(const RootDatum& d, const ISet& s) {
  Json out;
  out["levi"] = levi_to_json(s.levi);
  out["mu"] = s.mu;
  out["b"] = brep_to_json(d, s.b);
  out["kappa"] = s.kappa;
  if (s.subsystem) out["subsystem_roots"] = s.subsystem->roots.size();
  Json elems = Json::array();
  for (const auto& e : s.elements) {
    Json je;
    je["x"] = e.x;
    je["mu_x"] = e.mu_x;
    elems.push_back(std::move(je));
  }
  out["size"] = s.size();
  out["elements"] = std::move(elems);
  return out;
}

Json chain_to_json(const RootDatum& d, const ChainWitness& c) {
  Json out;
  out["nodes"] = c.nodes;
  Json steps = Json::array();
  for (const Move& m : c.steps) {
    Json js;
    js["from"] = m.from;
    js["to"] = m.to;
    js["alpha"] = d.root(m.alpha).coeffs;
    js["alpha_prime"] = d.root(m.alpha_prime).coeffs;
    js["power"] = m.power;
    js["orbit_id"] = m.orbit_id;
    js["forward"] = m.forward;
    js["immediate"] = m.immediate;
    steps.push_back(std::move(js));
  }
  out["steps"] = std::move(steps);
  return out;
}

Json point_to_json(const LatticePoint& p) {
  Json rows = Json::array();
  for (const auto& row : p.hermite) {
    Json jr = Json::array();
    for (const Laurent& e : row) {
      Json je;
      je["low"] = e.is_zero() ? 0 : e.low;
      je["coeffs"] = e.coeffs;
      jr.push_back(std::move(je));
    }
    rows.push_back(std::move(jr));
  }
  Json out;
  out["hermite_matrix"] = std::move(rows);
  out["w_G"] = p.w_G;
  out["rel_pos"] = p.rel_pos;
  out["field_degree"] = p.field_degree;
  return out;
}

Json oracle_verdict_to_json(const OracleVerdict& v) {
  Json out;
  out["status"] = to_string(v.status);
  out["predicted"] = v.predicted;
  out["agrees"] = v.agrees;
  out["depth"] = v.depth;
  out["m"] = v.m;
  out["examined"] = v.examined;
  out["truncated"] = v.truncated;
  if (v.witness) out["witness"] = point_to_json(*v.witness);
  if (!v.note.empty()) out["note"] = v.note;
  return out;
}

std::string points_csv(const PointSet& ps) {
  std::ostringstream os;
  os << "index,field_degree,w_G,rel_pos,hermite\n";
  auto join = [](const auto& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
  };
  for (std::size_t k = 0; k < ps.points.size(); ++k) {
    const LatticePoint& p = ps.points[k];
    os << k << ',' << p.field_degree << ',' << p.w_G << ',' << join(p.rel_pos) << ',';
    bool first = true;
    for (const auto& row : p.hermite)
      for (const Laurent& e : row) {
        os << (first ? "" : ";");
        first = false;
        if (e.is_zero()) os << '0';
        else os << e.low << ':' << join(e.coeffs);
      }
    os << '\n';
  }
  return os.str();
}

}  // namespace adlv::cli
