#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>
#include <unistd.h>

#include "hypdet/io.hpp"

using namespace hypdet;
namespace fs = std::filesystem;

namespace {

const BiPoly T = BiPoly::var_t();
const BiPoly X = BiPoly::var_x();
BiPoly c(const Rational& v) { return BiPoly::constant(v); }

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("hypdet_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const io::Json& j) {
    io::write_file_atomic(path(name), io::dump(j));
    return path(name);
  }

  int run(const std::string& args, const std::string& env = "") {
    const std::string cmd = env + " " HYPDET_BINARY " " + args + " > " + path("stdout.txt") + " 2> " + path("stderr.txt");
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
  }

  std::string slurp(const std::string& p) const {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }

  fs::path dir_;
};

}  // namespace

TEST_F(Cli, VerifyWorkedPair) {
  PolyMatrix m(2, 2);
  m(0, 0) = UniPoly{0, 1};
  m(0, 1) = m(1, 0) = UniPoly::constant(1);
  m(1, 1) = UniPoly{0, -1};
  Representation rep;
  rep.matrix = m;
  auto f = write("f.json", io::to_json(T * T - X * X - c(1)));
  auto a = write("A.json", io::to_json(rep));
  EXPECT_EQ(run("verify --poly " + f + " --rep " + a), 0);
  auto g = write("g.json", io::to_json(T * T - X * X));
  EXPECT_EQ(run("verify --poly " + g + " --rep " + a), 1);
}

TEST_F(Cli, CertifyRejectsWithWitness) {
  auto f = write("tplusone.json", io::to_json(T * T + X * X + c(1)));
  EXPECT_EQ(run("certify --input " + f + " --out " + path("cert.json")), 1);
  auto cert = io::read_file(path("cert.json"));
  EXPECT_EQ(cert["verdict"], "rejected");
  EXPECT_EQ(cert["witnesses"]["rejection"]["x"], "0");
}

TEST_F(Cli, RepresentIrreducibleCubicWithoutHint) {
  auto f = write("irred3.json", io::to_json(T * T * T - X * X * T - c(2) * T + X));
  EXPECT_EQ(run("represent --input " + f), 2);
  EXPECT_NE(slurp(path("stderr.txt")).find("not constructive"), std::string::npos);
  EXPECT_EQ(run("represent --search --input " + f + " --out " + path("rep.json")), 0);
  EXPECT_EQ(run("verify --poly " + f + " --rep " + path("rep.json")), 0);
}

TEST_F(Cli, ParseErrorExitCode) {
  std::ofstream(path("bad.json")) << "{\"vars\": [\"X\", \"T\"], \"terms\": [";
  EXPECT_EQ(run("certify --input " + path("bad.json")), 3);
  EXPECT_EQ(run("certify --input " + path("missing.json")), 3);
  EXPECT_EQ(run("frobnicate"), 3);
}

TEST_F(Cli, PerturbTranscriptReplays) {
  auto f = write("f.json", io::to_json(T * T - X * X));
  EXPECT_EQ(run("perturb --input " + f + " -k 1 --epsilon 1/16 --out " + path("t.json") + " --plot-data " + path("roots.csv")), 0);
  EXPECT_EQ(run("verify --transcript " + path("t.json")), 0);
  EXPECT_EQ(slurp(path("roots.csv")).rfind("series,x,root_1,root_2\n", 0), 0u);
}

TEST_F(Cli, HermiteAndHv) {
  auto f = write("f.json", io::to_json(T * T * T - T));
  EXPECT_EQ(run("hermite --input " + f + " --out " + path("h.json")), 0);
  PolyMatrix h = io::poly_matrix_from_json(io::read_file(path("h.json")));
  EXPECT_EQ(h(0, 0), UniPoly::constant(3));
  TriPoly cone = TriPoly::monomial(1, {0, 0, 2}) - TriPoly::monomial(1, {2, 0, 0}) - TriPoly::monomial(1, {0, 2, 0});
  auto g = write("cone.json", io::to_json(cone));
  EXPECT_EQ(run("hv --input " + g + " --direction 0,0,1 --out " + path("p.json")), 0);
  EXPECT_EQ(run("verify --poly " + g + " --pencil " + path("p.json")), 0);
  auto sphere = write("sphere.json", io::to_json(TriPoly::monomial(1, {0, 0, 2}) + TriPoly::monomial(1, {2, 0, 0})));
  EXPECT_EQ(run("hv --input " + sphere), 1);
}

TEST_F(Cli, BatchIsDeterministic) {
  write("a.json", io::to_json(T * T - X * X));
  write("b.json", io::to_json(T * T * T - X * X * T - c(2) * T + X));
  write("c.json", io::to_json(T * (T * T - X * X - c(1))));
  io::Json manifest{{"jobs",
                     {{{"command", "perturb"}, {"input", "a.json"}, {"k", 1}, {"out", "a.out.json"}},
                      {{"command", "represent"}, {"input", "b.json"}, {"search", true}, {"out", "b.out.json"}},
                      {{"command", "represent"}, {"input", "c.json"}, {"out", "c.out.json"}},
                      {{"command", "certify"}, {"input", "a.json"}, {"strict", true}, {"out", "c.cert.json"}}}}};
  write("manifest.json", manifest);
  std::vector<std::string> first;
  for (int round = 0; round < 2; ++round) {
    EXPECT_EQ(run("batch --manifest " + path("manifest.json") + " --jobs 3 --out " + path("summary.json"), "HYPDET_SEED=5"), 1);
    std::vector<std::string> outputs;
    for (const char* name : {"a.out.json", "b.out.json", "c.out.json", "c.cert.json", "summary.json"}) outputs.push_back(slurp(path(name)));
    if (round == 0) first = outputs;
    else EXPECT_EQ(outputs, first);
  }
  EXPECT_FALSE(first[1].empty());
}
