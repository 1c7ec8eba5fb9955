#include "hypdet/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <omp.h>

#include <CLI11.hpp>

#include "hypdet/detrep.hpp"
#include "hypdet/hermite.hpp"
#include "hypdet/io.hpp"
#include "hypdet/nuij.hpp"
#include "hypdet/real_roots.hpp"

namespace hypdet::cli {

namespace {

using io::Json;

void require(const std::string& value, const char* flag) {
  if (value.empty()) throw ParseError(std::string("missing required option ") + flag);
}

Point3 parse_direction(const std::string& text) {
  std::vector<Rational> v;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) v.push_back(parse_rational(part));
  if (v.size() != 3) throw ParseError("direction needs three comma-separated rationals");
  return {v[0], v[1], v[2]};
}

int grading_k(const BiPoly& f, const JobSpec& job) { return job.k ? *job.k : minimal_grading(f); }
int grading_d(const BiPoly& f, const JobSpec& job) { return job.d ? *job.d : f.degree_t(); }

void emit_plot(const JobSpec& job, const std::vector<std::pair<std::string, BiPoly>>& series) {
  if (job.plot_data.empty()) return;
  std::ostringstream csv;
  io::write_plot_data(csv, series, job.plot_lo, job.plot_hi, job.plot_samples);
  io::write_file_atomic(job.plot_data, csv.str());
}

RepresentOptions represent_options(const JobSpec& job) {
  RepresentOptions opt;
  if (!job.hint.empty()) opt.hint = io::witness_from_json(io::read_file(job.hint));
  opt.search = job.search;
  opt.search_options.degree_bound = job.search_degree;
  opt.search_options.height = job.search_height;
  opt.search_options.seed = job.seed;
  opt.numeric_tolerance = job.numeric_tol;
  return opt;
}

std::string describe(const RejectionWitness& r) {
  std::string s = "rejected";
  if (r.x) s += " at x = " + to_string(*r.x);
  else if (r.x_interval) s += " at x in [" + to_string(r.x_interval->lo) + ", " + to_string(r.x_interval->hi) + "]";
  return s + " (" + std::to_string(r.real_roots) + " real roots counted with multiplicity, " +
         std::to_string(r.distinct_roots) + " distinct)";
}

JobResult do_certify(const JobSpec& job) {
  require(job.input, "--input");
  BiPoly f = io::bi_from_json(io::read_file(job.input));
  RootCertificate c = job.strict ? certify_strictly_real_rooted(f) : certify_real_rooted(f);
  emit_plot(job, {{"input", f}});
  JobResult r;
  r.document = io::dump(io::to_json(c));
  if (c.verdict == Verdict::rejected) {
    r.exit_code = property_false;
    r.message = describe(*c.rejection);
  } else {
    r.message = to_string(c.verdict);
  }
  return r;
}

JobResult do_perturb(const JobSpec& job) {
  require(job.input, "--input");
  BiPoly f = io::bi_from_json(io::read_file(job.input));
  JobResult r;
  try {
    auto [g, t] = smooth_approximate(f, grading_k(f, job), grading_d(f, job), job.epsilon, job.budget);
    emit_plot(job, {{"input", f}, {"output", g}});
    r.document = io::dump(io::to_json(t));
    r.message = "perturbed within coefficient distance " + to_string(t.distance);
  } catch (const PerturbationFailed& e) {
    r.document = io::dump(io::to_json(e.transcript));
    r.exit_code = not_constructive;
    r.message = e.what();
  }
  return r;
}

JobResult do_hermite(const JobSpec& job) {
  require(job.input, "--input");
  BiPoly f = io::bi_from_json(io::read_file(job.input));
  JobResult r;
  r.document = io::dump(io::to_json(hermite_matrix(f)));
  r.message = "hermite matrix of size " + std::to_string(f.degree_t());
  return r;
}

JobResult do_represent(const JobSpec& job) {
  require(job.input, "--input");
  BiPoly f = io::bi_from_json(io::read_file(job.input));
  Representation rep = represent(f, grading_k(f, job), grading_d(f, job), represent_options(job));
  JobResult r;
  r.document = io::dump(io::to_json(rep));
  r.message = to_string(rep.kind) + (rep.exact ? " exact" : " numeric") + " representation of size " +
              std::to_string(f.degree_t());
  return r;
}

JobResult verdict(bool ok, const std::string& what) {
  JobResult r;
  r.exit_code = ok ? cli::ok : property_false;
  r.document = io::dump(Json{{"check", what}, {"verified", ok}});
  r.message = what + (ok ? " verified" : " failed");
  return r;
}

JobResult do_verify(const JobSpec& job) {
  if (!job.transcript.empty()) return verdict(verify_transcript(io::transcript_from_json(io::read_file(job.transcript))), "transcript");
  require(job.poly, "--poly");
  const Json pj = io::read_file(job.poly);
  if (!job.pencil.empty()) {
    TriPoly f = io::tri_from_json(pj);
    return verdict(verify_pencil(f, io::pencil_from_json(io::read_file(job.pencil)), job.numeric_tol), "pencil");
  }
  BiPoly f = io::bi_from_json(pj);
  if (!job.cert.empty()) return verdict(verify_certificate(f, io::certificate_from_json(io::read_file(job.cert))), "certificate");
  require(job.rep, "--rep");
  Representation rep = io::representation_from_json(io::read_file(job.rep));
  return verdict(verify_representation(f, rep, grading_k(f, job), grading_d(f, job), job.numeric_tol), "representation");
}

JobResult do_hv(const JobSpec& job) {
  require(job.input, "--input");
  TriPoly f = io::tri_from_json(io::read_file(job.input));
  PencilRep p = hv_represent(f, parse_direction(job.direction), represent_options(job));
  JobResult r;
  r.document = io::dump(io::to_json(p));
  r.message = std::string(p.exact ? "exact" : "numeric") + " definite pencil of size " + std::to_string(p.dim);
  return r;
}

JobResult dispatch(const JobSpec& job) {
  if (job.command == "certify") return do_certify(job);
  if (job.command == "perturb") return do_perturb(job);
  if (job.command == "hermite") return do_hermite(job);
  if (job.command == "represent") return do_represent(job);
  if (job.command == "verify") return do_verify(job);
  if (job.command == "hv") return do_hv(job);
  throw ParseError("unknown command '" + job.command + "'");
}

std::string resolve(const std::filesystem::path& base, const std::string& p) {
  if (p.empty() || std::filesystem::path(p).is_absolute()) return p;
  return (base / p).string();
}

}  // namespace

std::uint64_t env_seed() {
  const char* s = std::getenv("HYPDET_SEED");
  if (s == nullptr || *s == '\0') return 0;
  try {
    return std::stoull(s);
  } catch (const std::exception&) {
    throw ParseError("HYPDET_SEED must be a non-negative integer");
  }
}

JobResult run(const JobSpec& job) {
  JobResult r;
  try {
    r = dispatch(job);
    if (!job.out.empty() && !r.document.empty()) io::write_file_atomic(job.out, r.document);
  } catch (const ParseError& e) {
    r = {parse_error, "", std::string("parse error: ") + e.what()};
  } catch (const NotConstructive& e) {
    r = {not_constructive, "", std::string("not constructive: ") + e.what()};
  } catch (const VerificationError& e) {
    r = {not_constructive, "", std::string("verification error: ") + e.what()};
  } catch (const DomainError& e) {
    r = {property_false, "", std::string("domain error: ") + e.what()};
  } catch (const std::exception& e) {
    r = {not_constructive, "", std::string("error: ") + e.what()};
  }
  return r;
}

std::vector<JobSpec> read_manifest(const std::string& path) {
  const Json m = io::read_file(path);
  if (!m.is_object() || !m.contains("jobs") || !m.at("jobs").is_array()) throw ParseError("manifest needs a 'jobs' list");
  const auto base = std::filesystem::path(path).parent_path();
  std::vector<JobSpec> jobs;
  try {
    for (const auto& j : m.at("jobs")) {
      JobSpec s;
      s.command = j.at("command").get<std::string>();
      auto str = [&](const char* key) { return resolve(base, j.value(key, std::string())); };
      s.input = str("input");
      s.poly = str("poly");
      s.rep = str("rep");
      s.hint = str("hint");
      s.transcript = str("transcript");
      s.pencil = str("pencil");
      s.cert = str("cert");
      s.out = str("out");
      s.plot_data = str("plot_data");
      s.direction = j.value("direction", s.direction);
      if (j.contains("epsilon")) s.epsilon = parse_rational(j.at("epsilon").get<std::string>());
      s.budget = j.value("budget", s.budget);
      if (j.contains("k")) s.k = j.at("k").get<int>();
      if (j.contains("d")) s.d = j.at("d").get<int>();
      s.numeric_tol = j.value("numeric_tol", s.numeric_tol);
      s.strict = j.value("strict", false);
      s.search = j.value("search", false);
      s.search_degree = j.value("search_degree", -1);
      s.search_height = j.value("search_height", 1);
      s.seed = env_seed();
      jobs.push_back(std::move(s));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed manifest: ") + e.what());
  }
  return jobs;
}

std::vector<JobResult> run_batch(const std::vector<JobSpec>& jobs, int threads) {
  std::vector<JobResult> results(jobs.size());
  const long n = static_cast<long>(jobs.size());
#pragma omp parallel for schedule(dynamic) num_threads(std::max(1, threads))
  for (long i = 0; i < n; ++i) results[static_cast<std::size_t>(i)] = run(jobs[static_cast<std::size_t>(i)]);
  return results;
}

namespace {

void add_common(CLI::App* sub, JobSpec& job, std::string& k_text, std::string& d_text) {
  sub->add_option("--out", job.out, "Output file (stdout when omitted)");
  sub->add_option("-k", k_text, "Grading parameter k (default: minimal)");
  sub->add_option("-d", d_text, "Degree d (default: degree in T)");
  sub->add_option("--numeric-tol", job.numeric_tol, "Relative tolerance for numeric modes");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Real-rootedness certificates and determinantal representations"};
  app.require_subcommand(1);
  JobSpec job;
  std::string k_text, d_text, epsilon_text, manifest;
  int threads = 1;

  auto* certify = app.add_subcommand("certify", "Certify (strict) real-rootedness in T");
  certify->add_option("--input", job.input, "Polynomial file")->required();
  certify->add_flag("--strict", job.strict, "Require strictly real-rooted");
  certify->add_option("--plot-data", job.plot_data, "CSV of sampled root loci");
  add_common(certify, job, k_text, d_text);

  auto* perturb = app.add_subcommand("perturb", "Perturb into a smooth strictly real-rooted polynomial");
  perturb->add_option("--input", job.input, "Polynomial file")->required();
  perturb->add_option("--epsilon", epsilon_text, "Initial epsilon (default 1/64)");
  perturb->add_option("--budget", job.budget, "Halvings allowed per stage");
  perturb->add_option("--plot-data", job.plot_data, "CSV of sampled root loci");
  add_common(perturb, job, k_text, d_text);

  auto* hermite = app.add_subcommand("hermite", "Parametric Hermite matrix");
  hermite->add_option("--input", job.input, "Polynomial file")->required();
  add_common(hermite, job, k_text, d_text);

  auto* rep = app.add_subcommand("represent", "Symmetric determinantal representation");
  rep->add_option("--input", job.input, "Polynomial file")->required();
  rep->add_option("--hint", job.hint, "Ideal witness file");
  rep->add_flag("--search", job.search, "Search for a witness when none is given");
  rep->add_option("--search-degree", job.search_degree, "X-degree bound for the search (default k*d)");
  rep->add_option("--search-height", job.search_height, "Coefficient bound for the search");
  add_common(rep, job, k_text, d_text);

  auto* verify = app.add_subcommand("verify", "Check a representation, transcript, certificate or pencil");
  verify->add_option("--poly", job.poly, "Polynomial file");
  verify->add_option("--rep", job.rep, "Representation file");
  verify->add_option("--transcript", job.transcript, "Perturbation transcript");
  verify->add_option("--pencil", job.pencil, "Pencil file (with a ternary --poly)");
  verify->add_option("--cert", job.cert, "Root certificate file");
  add_common(verify, job, k_text, d_text);

  auto* hv = app.add_subcommand("hv", "Definite linear pencil for a ternary hyperbolic form");
  hv->add_option("--input", job.input, "Ternary form file")->required();
  hv->add_option("--direction", job.direction, "Hyperbolicity direction as x,y,z");
  hv->add_option("--hint", job.hint, "Ideal witness file");
  hv->add_flag("--search", job.search, "Search for a witness when none is given");
  add_common(hv, job, k_text, d_text);

  auto* batch = app.add_subcommand("batch", "Run a manifest of jobs");
  batch->add_option("--manifest", manifest, "Manifest file")->required();
  batch->add_option("--jobs", threads, "Concurrent jobs");
  batch->add_option("--out", job.out, "Summary file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? ok : parse_error;
  }

  try {
    job.seed = env_seed();
    if (!k_text.empty()) job.k = std::stoi(k_text);
    if (!d_text.empty()) job.d = std::stoi(d_text);
    if (!epsilon_text.empty()) job.epsilon = parse_rational(epsilon_text);
  } catch (const std::exception& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return parse_error;
  }

  if (batch->parsed()) {
    std::vector<JobSpec> jobs;
    try {
      jobs = read_manifest(manifest);
    } catch (const Error& e) {
      std::cerr << "parse error: " << e.what() << '\n';
      return parse_error;
    }
    std::vector<JobResult> results = run_batch(jobs, threads);
    Json summary = Json::array();
    int worst = ok;
    for (std::size_t i = 0; i < results.size(); ++i) {
      summary.push_back(Json{{"job", i}, {"command", jobs[i].command}, {"exit", results[i].exit_code}, {"message", results[i].message}});
      worst = std::max(worst, results[i].exit_code);
      if (jobs[i].out.empty()) std::cout << results[i].document;
    }
    const std::string text = io::dump(Json{{"results", summary}});
    if (job.out.empty()) std::cout << text;
    else io::write_file_atomic(job.out, text);
    return worst;
  }

  for (auto* sub : app.get_subcommands()) job.command = sub->get_name();
  JobResult r = run(job);
  if (job.out.empty()) std::cout << r.document;
  std::cerr << r.message << '\n';
  return r.exit_code;
}

}  // namespace hypdet::cli
