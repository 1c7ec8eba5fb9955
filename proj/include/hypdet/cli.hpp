#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hypdet/rational.hpp"

namespace hypdet::cli {

enum ExitCode : int { ok = 0, property_false = 1, not_constructive = 2, parse_error = 3 };

struct JobSpec {
  std::string command;
  std::string input;
  std::string poly;
  std::string rep;
  std::string hint;
  std::string transcript;
  std::string pencil;
  std::string cert;
  std::string out;
  std::string plot_data;
  std::string direction = "0,0,1";
  Rational epsilon{1, 64};
  int budget = 20;
  std::optional<int> k, d;
  double numeric_tol = 1e-10;
  bool strict = false;
  bool search = false;
  int search_degree = -1;
  int search_height = 1;
  std::uint64_t seed = 0;
  double plot_lo = -3, plot_hi = 3;
  int plot_samples = 121;
};

struct JobResult {
  int exit_code = ok;
  std::string document;  // canonical output text, empty if none
  std::string message;   // one-line human summary
};

// Runs one job; never throws. Writes the document to job.out when set.
JobResult run(const JobSpec& job);

// Jobs from a manifest {"jobs": [{"command": ..., "input": ..., ...}]};
// relative paths resolve against the manifest's directory.
std::vector<JobSpec> read_manifest(const std::string& path);

// Runs jobs concurrently; results keep manifest order.
std::vector<JobResult> run_batch(const std::vector<JobSpec>& jobs, int threads);

// Seed from HYPDET_SEED, 0 when unset.
std::uint64_t env_seed();

int main(int argc, char** argv);

}  // namespace hypdet::cli
