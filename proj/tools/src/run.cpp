#include "adlv/cli/job.hpp"
#include "adlv/cli/survey.hpp"

#include <iomanip>
#include <set>
#include <sstream>

namespace adlv::cli {
using adlv::to_string;

namespace {

const std::pair<Command, const char*> kCommands[] = {
    {Command::classify, "classify"}, {Command::pi0, "pi0"},       {Command::iset, "iset"},
    {Command::chain, "chain"},       {Command::oracle, "oracle"}, {Command::survey, "survey"},
};

// Failures detected while turning the document into library values.
struct InputError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

Int option_int(const Json& opts, const char* key, Int fallback, Int lo, Int hi) {
  if (!opts.contains(key)) return fallback;
  const Json& v = opts[key];
  if (!v.is_number_integer()) throw SchemaError(std::string("options.") + key + ": expected an integer");
  const Int x = v.get<Int>();
  if (x < lo || x > hi)
    throw SchemaError(std::string("options.") + key + ": outside " + std::to_string(lo) + ".." + std::to_string(hi));
  return x;
}

bool option_bool(const Json& opts, const char* key, bool fallback) {
  if (!opts.contains(key)) return fallback;
  if (!opts[key].is_boolean()) throw SchemaError(std::string("options.") + key + ": expected a boolean");
  return opts[key].get<bool>();
}

Cochar dominant_mu(const RootDatum& d, const Json& j) {
  Cochar mu = cochar_from_json(d, j, "mu");
  if (!is_dominant(d, mu, LeviSubset::full(d.num_simple())))
    throw InputError("mu " + to_string(mu) + " is not dominant");
  return mu;
}

struct Outcome {
  Json result;
  ExitCode code = ExitCode::ok;
  std::string csv;
};

Outcome classify(const RootDatum& d, const Cochar& mu, const BRep& b) {
  Outcome out;
  BGMuVerdict member = in_B_G_mu(d, b, mu);
  if (!member.member) {
    out.result["membership"] = verdict_to_json(member);
    out.result["provenance"] = {"B(G,mu)-membership"};
    out.code = ExitCode::empty_variety;
    return out;
  }
  out.result = hn_report_to_json(d, hn_classify(d, b, mu));
  out.result["provenance"] = {"B(G,mu)-membership", "hn-classification"};
  return out;
}

Outcome pi0(const RootDatum& d, const Cochar& mu, const BRep& b) {
  Outcome out;
  Pi0Descriptor desc = pi0_compute(d, mu, b);
  out.result = descriptor_to_json(desc);
  if (desc.variant == Pi0Variant::empty) {
    out.code = ExitCode::empty_variety;
    return out;
  }
  out.result["checks"]["image_constraint"] = image_constraint_holds(d, desc, mu, b);
  return out;
}

LeviSubset job_levi(const RootDatum& d, const JobSpec& job, const BRep& b) {
  if (job.options.contains("levi")) return levi_from_json(d, job.options["levi"]);
  if (b.levi) return *b.levi;
  throw SchemaError("a Levi is required (options.levi or b.levi)");
}

Json components_to_json(const std::vector<std::vector<IVec>>& comps) {
  Json out = Json::array();
  for (const auto& c : comps) out.push_back(c);
  return out;
}

Outcome iset(const RootDatum& d, const Cochar& mu, const BRep& b, const LeviSubset& m) {
  Outcome out;
  ISet s = iset_enumerate(d, mu, b, m);
  out.result = iset_to_json(d, s);
  const auto comps = move_components(d, s);
  out.result["components"] = components_to_json(comps);
  out.result["connected"] = comps.size() <= 1;
  out.result["provenance"] = {"iset-enumeration", "move-graph"};
  if (s.empty()) out.code = ExitCode::empty_variety;
  return out;
}

Outcome chain(const RootDatum& d, const Cochar& mu, const BRep& b, const LeviSubset& m, const Json& opts) {
  Outcome out;
  ISet s = iset_enumerate(d, mu, b, m);
  if (s.empty()) {
    out.result["iset_size"] = 0;
    out.code = ExitCode::empty_variety;
    return out;
  }
  auto endpoint = [&](const char* key, const IVec& fallback) {
    if (!opts.contains(key)) return fallback;
    IVec x = ints_from_json(opts[key], std::string("options.") + key);
    if (!s.contains(x)) throw InputError(std::string("options.") + key + " " + to_string(x) + " is not in the set");
    return x;
  };
  const IVec from = endpoint("from", s.elements.front().x);
  const IVec to = endpoint("to", s.elements.back().x);
  std::optional<std::size_t> orbit;
  if (opts.contains("orbit")) orbit = static_cast<std::size_t>(option_int(opts, "orbit", 0, 0, 1 << 20));
  ChainWitness w = convexity_chain(d, s, from, to, orbit);
  if (option_bool(opts, "refine", false)) w = refine_immediate(d, s, w);
  out.result["iset_size"] = s.size();
  out.result["from"] = from;
  out.result["to"] = to;
  out.result["witness"] = chain_to_json(d, w);
  out.result["verified"] = verify_chain(d, s, w);
  bool all_immediate = true;
  for (const Move& mv : w.steps) all_immediate = all_immediate && mv.immediate;
  out.result["all_immediate"] = all_immediate;
  out.result["provenance"] = {"convexity-chain"};
  return out;
}

Outcome oracle(const JobSpec& job, bool& parsed) {
  const Json& opts = job.options;
  const Int n = job.mu.is_array() ? static_cast<Int>(job.mu.size()) : 0;
  OracleConfig cfg;
  cfg.n = static_cast<std::size_t>(option_int(opts, "n", n, 1, 5));
  cfg.q = static_cast<std::uint32_t>(option_int(opts, "q", 2, 2, 65536));
  cfg.m_max = static_cast<std::uint32_t>(option_int(opts, "mmax", 1, 1, 16));
  cfg.depth = static_cast<int>(option_int(opts, "depth", 1, 0, 16));
  const bool closure = option_bool(opts, "closure", false);
  const bool dump = option_bool(opts, "points", true);
  if (!is_prime(cfg.q)) throw SchemaError("options.q: only prime residue fields are modelled");
  const RootDatum gl = make_gl(cfg.n);
  cfg.mu = dominant_mu(gl, job.mu);
  cfg.b = brep_from_json(gl, job.b);
  parsed = true;

  Outcome out;
  Json config;
  config["n"] = cfg.n;
  config["q"] = cfg.q;
  config["mmax"] = cfg.m_max;
  config["depth"] = cfg.depth;
  config["closure"] = closure;
  config["mu"] = cfg.mu;
  config["b"] = brep_to_json(gl, cfg.b);
  out.result["config"] = std::move(config);
  OracleVerdict v = nonempty_oracle(cfg, cfg.depth, cfg.m_max, closure);
  out.result["verdict"] = oracle_verdict_to_json(v);
  if (dump) {
    PointSet ps = adlv_points(cfg, closure);
    Json points = Json::array();
    std::set<Int> w_values;
    for (const auto& p : ps.points) {
      points.push_back(point_to_json(p));
      w_values.insert(p.w_G);
    }
    out.result["examined"] = ps.examined;
    out.result["point_count"] = ps.points.size();
    out.result["w_G_values"] = w_values;
    out.result["points"] = std::move(points);
    out.csv = points_csv(ps);
  }
  out.result["provenance"] = {"lattice-window-search", "B(G,mu)-membership"};
  if (v.status == OracleStatus::not_found) out.code = ExitCode::empty_variety;
  if (v.status == OracleStatus::inconclusive && v.truncated) out.code = ExitCode::resource_exhausted;
  return out;
}

Outcome survey(const RootDatum& d, const JobSpec& job) {
  const Json& opts = job.options;
  SurveySpec spec;
  if (job.mu.is_array()) {
    for (const Json& m : job.mu) spec.mus.push_back(dominant_mu(d, m));
  } else {
    spec.mus = survey_minuscule_mus(d, option_int(opts, "mu_bound", 1, -1, 8));
  }
  if (job.b.is_array()) {
    for (const Json& b : job.b) spec.bs.push_back(brep_from_json(d, b));
  } else {
    spec.bs = survey_all_bs(d, option_int(opts, "lambda_bound", 1, -1, 8));
  }
  if (opts.contains("oracle")) {
    const Json& o = opts["oracle"];
    if (!o.is_object()) throw SchemaError("options.oracle: expected an object");
    SurveyOracle so;
    so.q = static_cast<std::uint32_t>(option_int(o, "q", 2, 2, 65536));
    so.depth = static_cast<int>(option_int(o, "depth", 2, 0, 8));
    so.m_max = static_cast<std::uint32_t>(option_int(o, "mmax", 2, 1, 8));
    if (!is_prime(so.q)) throw SchemaError("options.oracle.q: only prime residue fields are modelled");
    spec.oracle = so;
  }
  const auto rows = run_survey(d, spec);
  Outcome out;
  Json table = Json::array();
  std::size_t checked = 0, nonempty = 0;
  for (const auto& r : rows) {
    table.push_back(survey_row_to_json(d, r));
    checked += r.checked();
    nonempty += r.member;
  }
  Json summary;
  summary["rows"] = rows.size();
  summary["checked"] = checked;
  summary["nonempty"] = nonempty;
  summary["all_checked"] = checked == rows.size();
  out.result["summary"] = std::move(summary);
  out.result["rows"] = std::move(table);
  return out;
}

Outcome execute(const JobSpec& job, bool& parsed) {
  if (job.command == Command::oracle) return oracle(job, parsed);
  const RootDatum d = datum_from_json(job.datum);
  if (job.command == Command::survey) {
    parsed = true;
    return survey(d, job);
  }
  const Cochar mu = cochar_from_json(d, job.mu, "mu");
  const BRep b = brep_from_json(d, job.b);
  std::optional<LeviSubset> m;
  if (job.command == Command::iset || job.command == Command::chain) m = job_levi(d, job, b);
  parsed = true;
  if (!is_dominant(d, mu, LeviSubset::full(d.num_simple())))
    throw InputError("mu " + to_string(mu) + " is not dominant");
  switch (job.command) {
    case Command::classify: return classify(d, mu, b);
    case Command::pi0: return pi0(d, mu, b);
    case Command::iset: return iset(d, mu, b, *m);
    case Command::chain: return chain(d, mu, b, *m, job.options);
    default: break;
  }
  throw std::logic_error("unhandled command");
}

Json input_echo(const JobSpec& job) {
  Json in;
  if (!job.datum.is_null()) in["datum"] = job.datum;
  if (!job.mu.is_null()) in["mu"] = job.mu;
  if (!job.b.is_null()) in["b"] = job.b;
  in["options"] = job.options;
  return in;
}

}  // namespace

std::string to_string(Command c) {
  for (const auto& [cmd, name] : kCommands)
    if (cmd == c) return name;
  return "?";
}

std::string to_string(ExitCode c) {
  switch (c) {
    case ExitCode::ok: return "ok";
    case ExitCode::failure: return "failure";
    case ExitCode::invalid_input: return "invalid_input";
    case ExitCode::empty_variety: return "empty_variety";
    case ExitCode::precondition: return "precondition_failed";
    case ExitCode::resource_exhausted: return "resource_exhausted";
  }
  return "?";
}

JobSpec parse_job(const Json& doc) {
  if (!doc.is_object()) throw SchemaError("job: expected an object");
  for (const auto& [key, value] : doc.items())
    if (key != "command" && key != "datum" && key != "mu" && key != "b" && key != "options")
      throw SchemaError("job: unknown field \"" + key + "\"");
  if (!doc.contains("command") || !doc["command"].is_string()) throw SchemaError("job: \"command\" must be a string");
  JobSpec job;
  const std::string name = doc["command"].get<std::string>();
  bool known = false;
  for (const auto& [cmd, label] : kCommands)
    if (name == label) job.command = cmd, known = true;
  if (!known) throw SchemaError("job: unknown command \"" + name + "\"");
  if (doc.contains("options")) {
    if (!doc["options"].is_object()) throw SchemaError("job: \"options\" must be an object");
    job.options = doc["options"];
  }
  if (doc.contains("datum")) job.datum = doc["datum"];
  if (doc.contains("mu")) job.mu = doc["mu"];
  if (doc.contains("b")) job.b = doc["b"];

  if (job.command == Command::oracle) {
    if (doc.contains("datum")) throw SchemaError("oracle: the group is GL_n from options.n; drop \"datum\"");
  } else if (!job.datum.is_object()) {
    throw SchemaError(name + ": \"datum\" object required");
  }
  if (job.command == Command::survey) {
    if (!job.mu.is_null() && !job.mu.is_array()) throw SchemaError("survey: \"mu\" must be a list of cocharacters");
    if (!job.b.is_null() && !job.b.is_array()) throw SchemaError("survey: \"b\" must be a list of b objects");
  } else {
    if (!job.mu.is_array()) throw SchemaError(name + ": \"mu\" integer array required");
    if (!job.b.is_object()) throw SchemaError(name + ": \"b\" object required");
  }
  return job;
}

JobResult run(const JobSpec& job) {
  JobResult out;
  out.report["command"] = to_string(job.command);
  out.report["input"] = input_echo(job);
  bool parsed = false;
  std::string error;
  try {
    Outcome o = execute(job, parsed);
    out.code = o.code;
    out.report["status"] = to_string(o.code);
    out.report["result"] = std::move(o.result);
    out.csv = std::move(o.csv);
    return out;
  } catch (const ResourceExhausted& e) {
    out.code = ExitCode::resource_exhausted;
    error = e.what();
  } catch (const SchemaError& e) {
    out.code = ExitCode::invalid_input;
    error = e.what();
  } catch (const RootDatumError& e) {
    out.code = ExitCode::invalid_input;
    error = e.what();
  } catch (const InputError& e) {
    out.code = ExitCode::precondition;
    error = e.what();
  } catch (const std::invalid_argument& e) {
    out.code = parsed ? ExitCode::precondition : ExitCode::invalid_input;
    error = e.what();
  } catch (const std::domain_error& e) {
    out.code = ExitCode::precondition;
    error = e.what();
  } catch (const std::exception& e) {
    out.code = ExitCode::failure;
    error = e.what();
  }
  out.report["status"] = to_string(out.code);
  out.report["error"] = error;
  return out;
}

std::string render_table(const Json& report) {
  std::ostringstream os;
  os << report.value("command", "?") << ": " << report.value("status", "?") << '\n';
  if (report.contains("error")) {
    os << "error: " << report["error"].get<std::string>() << '\n';
    return os.str();
  }
  const Json& result = report["result"];
  if (!result.contains("rows")) {
    for (const auto& [key, value] : result.items()) {
      os << std::left << std::setw(24) << key << ' ';
      if (value.is_string()) os << value.get<std::string>();
      else os << value.dump();
      os << '\n';
    }
    return os.str();
  }
  os << std::left << std::setw(18) << "mu" << std::setw(30) << "b (lambda; w)" << std::setw(8) << "member"
     << std::setw(24) << "hn_class" << std::setw(10) << "pi0" << "checked\n";
  for (const Json& row : result["rows"]) {
    const std::string b = row["b"]["lambda"].dump() + "; " + row["b"]["w_word"].dump();
    os << std::setw(18) << row["mu"].dump() << std::setw(30) << b << std::setw(8) << (row["member"].get<bool>() ? "yes" : "no")
       << std::setw(24) << row.value("hn_class", "-") << std::setw(10)
       << (row.contains("pi0") ? row["pi0"]["variant"].get<std::string>() : "-") << (row["checked"].get<bool>() ? "yes" : "NO")
       << '\n';
  }
  const Json& s = result["summary"];
  os << s["checked"].get<std::size_t>() << " of " << s["rows"].get<std::size_t>() << " rows checked\n";
  return os.str();
}

}  // namespace adlv::cli
