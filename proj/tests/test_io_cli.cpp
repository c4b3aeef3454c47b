#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "centro/centro.hpp"
#include "centro/cli.hpp"

using namespace centro;
using nlohmann::json;

namespace {

struct CliRun {
  int code;
  std::string out, err;
};

CliRun run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "centro_cli");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string sample(const char* name) { return std::string(CENTRO_SAMPLES_DIR) + "/" + name; }

std::string temp_path(const char* name) {
  return (std::filesystem::temp_directory_path() / (std::string("centro_test_") + name)).string();
}

}  // namespace

TEST(ParseComplex, Forms) {
  EXPECT_EQ(io::parse_complex("3"), Complex(3, 0));
  EXPECT_EQ(io::parse_complex("-2+2i"), Complex(-2, 2));
  EXPECT_EQ(io::parse_complex(" -2 - 2i "), Complex(-2, -2));
  EXPECT_EQ(io::parse_complex("1.5e-3-4i"), Complex(1.5e-3, -4));
  EXPECT_EQ(io::parse_complex("1e+2+1e-1j"), Complex(100, 0.1));
  EXPECT_EQ(io::parse_complex("i"), Complex(0, 1));
  EXPECT_EQ(io::parse_complex("-i"), Complex(0, -1));
  EXPECT_EQ(io::parse_complex("3+i"), Complex(3, 1));
  EXPECT_EQ(io::parse_complex("2.5j"), Complex(0, 2.5));
}

TEST(ParseComplex, Rejects) {
  for (const char* bad : {"", "abc", "1+", "1+2k", "--1", "1,2"}) EXPECT_THROW(io::parse_complex(bad), Error) << bad;
}

TEST(ParseComplex, Csv) {
  const auto v = io::parse_complex_csv("4,-2+2i,-2-2i");
  EXPECT_EQ(v.size(), 3u);
  EXPECT_EQ(SpectrumList(v), SpectrumList::from_parts({4}, {{-2, 2}}));
  EXPECT_THROW(SpectrumList(io::parse_complex_csv("4,-2+2i")), Error);
  EXPECT_THROW(io::parse_real_csv("1,2i"), Error);
}

TEST(Problem, ParsesAllFields) {
  const io::ProblemFile p = io::parse_problem(R"({
    "spectrum": [10, 3, "1+i", [1, -1]],
    "method": "4x4-diag",
    "diagonal": [4, 3.5, 3.5, 4],
    "tolerance": 1e-9
  })");
  EXPECT_EQ(p.spectrum, SpectrumList::from_parts({10, 3}, {{1, 1}}));
  EXPECT_EQ(p.method, "4x4-diag");
  EXPECT_EQ(p.diagonal->entries, (std::vector<double>{4, 3.5, 3.5, 4}));
  EXPECT_EQ(*p.tolerance, 1e-9);
}

TEST(Problem, Errors) {
  auto code = [](const char* text) {
    try {
      io::parse_problem(text);
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::InvalidInput;
  };
  EXPECT_EQ(code("{"), Errc::ParseError);
  EXPECT_EQ(code("[]"), Errc::ParseError);
  EXPECT_EQ(code(R"({"method": "auto"})"), Errc::ParseError);
  EXPECT_EQ(code(R"({"spectrum": [1], "method": "magic"})"), Errc::ParseError);
  EXPECT_EQ(code(R"({"spectrum": [1], "diagonal": "x"})"), Errc::ParseError);
  EXPECT_EQ(code(R"({"spectrum": [{"re": 1}]})"), Errc::ParseError);
}

TEST(Problem, SampleFilesParse) {
  for (const char* f : {"example1.json", "example2.json", "obstruction.json", "four_by_four_diag.json"})
    EXPECT_NO_THROW(io::parse_problem([&] {
      std::ifstream in(sample(f));
      std::stringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }())) << f;
}

TEST(Json, MatrixRoundTrip) {
  const DenseMatrix m = fixtures::example1_c();
  EXPECT_EQ(io::matrix_from_json(json::parse(io::to_json(m).dump())), m);
  EXPECT_THROW(io::matrix_from_json(json::parse("[[1,2],[3]]")), Error);
}

TEST(Cli, RealizeSpectrum) {
  const CliRun r = run_cli({"realize", "--spectrum", "4,3,2,1"});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["order"], 4);
  EXPECT_TRUE(j["report"]["accepted"].get<bool>());
  EXPECT_EQ(j["report"]["centro_residual"], 0.0);
}

TEST(Cli, RealizeExampleOneFile) {
  const CliRun r = run_cli({"realize", "--in", sample("example1.json")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["provenance"]["construction"], "suleimanova");
  EXPECT_EQ(j["kind"], "nonnegative-centrosymmetric");
}

TEST(Cli, RealizeExampleTwoFile) {
  const CliRun r = run_cli({"realize", "--in", sample("example2.json")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(io::matrix_from_json(json::parse(r.out)["matrix"]), fixtures::example2_matrix());
}

TEST(Cli, ObstructionExitCode) {
  const CliRun r = run_cli({"realize", "--in", sample("obstruction.json")});
  EXPECT_EQ(r.code, cli::kObstructed);
  const json e = json::parse(r.err);
  EXPECT_EQ(e["error"], "ObstructedList");
  EXPECT_NE(e["message"].get<std::string>().find(kObstructionCitation), std::string::npos);
}

TEST(Cli, ConstructionFailureExitCode) {
  const CliRun r = run_cli({"realize", "--spectrum", "3,3,1", "--method", "positive"});
  EXPECT_EQ(r.code, cli::kNoConstruction);
  EXPECT_EQ(json::parse(r.err)["error"], "PerronNotStrict");
}

TEST(Cli, DiagonalConditionDetail) {
  const CliRun r = run_cli({"realize", "--spectrum", "6,5,-5,-2", "--method", "4x4-diag", "--diagonal", "1,1,1,1"});
  EXPECT_EQ(r.code, cli::kNoConstruction);
  EXPECT_EQ(json::parse(r.err)["detail"], "iv");
}

TEST(Cli, InputErrors) {
  EXPECT_EQ(run_cli({"realize"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"realize", "--spectrum", "4,x"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"realize", "--spectrum", "1", "--method", "magic"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"realize", "--in", "/nonexistent/problem.json"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kInputError);
  EXPECT_EQ(run_cli({}).code, cli::kInputError);
}

TEST(Cli, Fixtures) {
  for (const auto& name : fixtures::names()) {
    const CliRun a = run_cli({"fixtures", name});
    ASSERT_EQ(a.code, cli::kOk) << a.err;
    const json j = json::parse(a.out);
    for (const auto& item : j["items"]) EXPECT_TRUE(item["result"]["report"]["accepted"].get<bool>()) << item["name"];
    const CliRun b = run_cli({"--fixtures", name});
    EXPECT_EQ(b.code, cli::kOk);
    EXPECT_EQ(a.out, b.out);
  }
}

TEST(Cli, UnknownFixture) {
  const CliRun r = run_cli({"fixtures", "example3"});
  EXPECT_EQ(r.code, cli::kInputError);
  EXPECT_EQ(json::parse(r.err)["error"], "UnknownFixture");
}

TEST(Cli, CheckRoundTrip) {
  const std::string path = temp_path("roundtrip.json");
  ASSERT_EQ(run_cli({"realize", "--in", sample("example1.json"), "--out", path}).code, cli::kOk);
  const CliRun c = run_cli({"check", "--matrix", path});
  EXPECT_EQ(c.code, cli::kOk) << c.err;
  EXPECT_TRUE(json::parse(c.out)["report"]["accepted"].get<bool>());
  // Wrong target: rejected with exit 4.
  const CliRun w = run_cli({"check", "--matrix", path, "--spectrum", "1,1,1,1,1,1,1,1,1,1"});
  EXPECT_EQ(w.code, cli::kNotAccepted);
  std::remove(path.c_str());
}

TEST(Check, BareMatrix) {
  const CliRun r = run_cli({"check", "--matrix", sample("fixture_c.json"), "--spectrum",
                         "20,-1,-2,-3,-2+2i,-2-2i,-3+i,-3-i,-1+i,-1-i"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  const CliRun k = run_cli({"check", "--matrix", sample("fixture_c.json"), "--spectrum",
                         "20,-1,-2,-3,-2+2i,-2-2i,-3+i,-3-i,-1+i,-1-i", "--kind", "positive"});
  EXPECT_EQ(k.code, cli::kOk);  // every entry of the printed C is at least 1/5
  EXPECT_EQ(run_cli({"check", "--matrix", sample("fixture_c.json")}).code, cli::kInputError);
}
