#include "adlv/cli/job.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using adlv::cli::Json;

struct Inline {
  std::string preset;
  std::vector<long long> params;
  std::vector<long long> mu, lambda, w, from, to;
  std::optional<std::string> levi;  // "torus" or "" selects the empty Levi
  std::size_t n = 0;
  unsigned q = 2, mmax = 1;
  int depth = 1;
  bool closure = false, no_points = false, refine = false;
  long long lambda_bound = 1, mu_bound = 1;
  bool survey_oracle = false;
};

Json inline_job(const std::string& command, const Inline& in) {
  Json job;
  job["command"] = command;
  if (command != "oracle") {
    job["datum"]["preset"] = in.preset;
    job["datum"]["params"] = in.params;
  }
  if (command != "survey" || !in.mu.empty()) job["mu"] = command == "survey" ? Json::array({in.mu}) : Json(in.mu);
  Json b;
  b["lambda"] = in.lambda;
  b["w_word"] = in.w;
  if (in.levi) {
    Json levi = Json::array();
    std::stringstream ss(*in.levi == "torus" ? std::string() : *in.levi);
    for (std::string tok; std::getline(ss, tok, ',');) {
      long long v = 0;
      const auto [end, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
      if (ec != std::errc() || end != tok.data() + tok.size())
        throw std::invalid_argument("--levi: not an integer: '" + tok + "'");
      levi.push_back(v);
    }
    b["levi"] = levi;
  }
  if (command != "survey") job["b"] = b;
  else if (!in.lambda.empty()) job["b"] = Json::array({b});
  Json& opts = job["options"] = Json::object();
  if (command == "oracle") {
    if (in.n) opts["n"] = in.n;
    opts["q"] = in.q;
    opts["mmax"] = in.mmax;
    opts["depth"] = in.depth;
    opts["closure"] = in.closure;
    opts["points"] = !in.no_points;
  }
  if (command == "chain") {
    if (!in.from.empty()) opts["from"] = in.from;
    if (!in.to.empty()) opts["to"] = in.to;
    opts["refine"] = in.refine;
  }
  if (command == "survey") {
    opts["lambda_bound"] = in.lambda_bound;
    opts["mu_bound"] = in.mu_bound;
    if (in.survey_oracle) opts["oracle"] = Json{{"q", in.q}, {"depth", in.depth}, {"mmax", in.mmax}};
  }
  return job;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connected components and nonemptiness of affine Deligne-Lusztig varieties"};
  app.require_subcommand(1);
  std::string spec_file, out_file, format = "json";
  Inline in;

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"classify", "Hodge-Newton classification of (mu, b)"},
      {"pi0", "connected components descriptor"},
      {"iset", "enumerate the set of minuscule lifts for a Levi"},
      {"chain", "convexity chain between two lifts"},
      {"oracle", "brute-force lattice search over F_q((t))"},
      {"survey", "classify and describe every (mu, b) in a range"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--spec", spec_file, "job document (JSON); inline flags are ignored")->check(CLI::ExistingFile);
    sub->add_option("--out", out_file, "write the report here instead of stdout");
    sub->add_option("--format", format, "json | table | csv (oracle points)")
        ->check(CLI::IsMember({"json", "table", "csv"}));
    sub->add_option("--mu", in.mu, "cocharacter, comma separated")->delimiter(',');
    sub->add_option("--lambda", in.lambda, "b = p^lambda w: lambda")->delimiter(',');
    sub->add_option("--w", in.w, "b = p^lambda w: word in simple reflections, 1-based")->delimiter(',');
    if (name != "oracle") {
      sub->add_option("--preset", in.preset, "GL, PGL, SL, ResGL, GU, PGU, GSp, PGSp, SO, QSO, PSO, D4-triality");
      sub->add_option("--params", in.params, "preset parameters, comma separated")->delimiter(',');
      sub->add_option("--levi", in.levi, "simple roots of the Levi, 1-based, comma separated; \"torus\" for none");
    }
    if (name == "oracle" || name == "survey") {
      sub->add_option("--q", in.q, "residue field size (prime)");
      sub->add_option("--mmax", in.mmax, "largest residue field degree");
      sub->add_option("--depth", in.depth, "window N: t^N L0 <= L <= t^-N L0");
    }
    if (name == "oracle") {
      sub->add_option("--n", in.n, "rank of GL_n");
      sub->add_flag("--closure", in.closure, "accept relative positions below mu");
      sub->add_flag("--no-points", in.no_points, "skip the point dump");
    }
    if (name == "chain") {
      sub->add_option("--from", in.from, "start, coordinates in pi_1(M)")->delimiter(',');
      sub->add_option("--to", in.to, "end, coordinates in pi_1(M)")->delimiter(',');
      sub->add_flag("--refine", in.refine, "refine into immediate steps");
    }
    if (name == "survey") {
      sub->add_option("--lambda-bound", in.lambda_bound, "|lambda_i| <= bound, all Weyl elements");
      sub->add_option("--mu-bound", in.mu_bound, "minuscule mu with entries in [-bound, bound]");
      sub->add_flag("--oracle", in.survey_oracle, "cross-check every row with the lattice oracle (GL_n)");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : static_cast<int>(adlv::cli::ExitCode::invalid_input);
  }

  const std::string command = app.get_subcommands().front()->get_name();
  adlv::cli::JobResult result;
  try {
    Json doc;
    if (!spec_file.empty()) {
      std::ifstream f(spec_file);
      doc = Json::parse(f);
      if (!doc.is_object()) throw adlv::cli::SchemaError("job: expected an object");
      if (!doc.contains("command")) doc["command"] = command;
      if (doc["command"] != command)
        throw adlv::cli::SchemaError("job command " + doc["command"].dump() + " does not match subcommand " + command);
    } else {
      doc = inline_job(command, in);
    }
    result = adlv::cli::run(adlv::cli::parse_job(doc));
  } catch (const std::exception& e) {
    result.code = adlv::cli::ExitCode::invalid_input;
    result.report["command"] = command;
    result.report["status"] = adlv::cli::to_string(result.code);
    result.report["error"] = e.what();
  }

  std::string text;
  if (format == "table") text = adlv::cli::render_table(result.report);
  else if (format == "csv") text = result.csv;
  else text = result.report.dump(2) + "\n";

  if (out_file.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_file);
    if (!f) {
      std::cerr << "cannot write " << out_file << '\n';
      return static_cast<int>(adlv::cli::ExitCode::failure);
    }
    f << text;
  }
  if (result.report.contains("error")) std::cerr << "adlv: " << result.report["error"].get<std::string>() << '\n';
  return static_cast<int>(result.code);
}
