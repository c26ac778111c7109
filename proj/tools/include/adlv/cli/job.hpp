#pragma once

#include "adlv/cli/json_io.hpp"

#include <optional>
#include <string>

namespace adlv::cli {

enum class Command { classify, pi0, iset, chain, oracle, survey };
std::string to_string(Command c);

enum class ExitCode : int {
  ok = 0,
  failure = 1,
  invalid_input = 2,
  empty_variety = 3,
  precondition = 4,
  resource_exhausted = 5,
};
std::string to_string(ExitCode c);

// {"command", "datum"?, "mu"?, "b"?, "options"?}; oracle jobs take GL_n from options.n instead of a datum.
struct JobSpec {
  Command command = Command::classify;
  Json datum;
  Json mu;
  Json b;
  Json options = Json::object();
};

// Structural validation only; values are checked against the datum when the job runs.
JobSpec parse_job(const Json& doc);

struct JobResult {
  Json report;
  ExitCode code = ExitCode::ok;
  std::string csv;  // oracle point dump
};

// Never throws; failures become an "error" report with the matching exit code.
JobResult run(const JobSpec& job);

// Human-readable rendering of a report.
std::string render_table(const Json& report);

}  // namespace adlv::cli
