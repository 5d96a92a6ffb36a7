#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "resdil/cli.hpp"
#include "test_support.hpp"

using namespace resdil;

namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  args.insert(args.begin(), "resdil");
  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct Csv {
  std::map<std::string, std::string> metadata;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  std::size_t column(const std::string& name) const {
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (columns[i] == name) return i;
    }
    ADD_FAILURE() << "no column " << name;
    return 0;
  }
  double meta(const std::string& key) const { return std::stod(metadata.at(key)); }
};

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, sep)) out.push_back(cell);
  return out;
}

Csv parse(const std::string& text) {
  Csv csv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind("# ", 0) == 0) {
      const auto eq = line.find('=');
      csv.metadata[line.substr(2, eq - 2)] = line.substr(eq + 1);
    } else if (csv.columns.empty()) {
      csv.columns = split(line, ',');
    } else {
      std::vector<double> row;
      for (const std::string& cell : split(line, ',')) row.push_back(std::stod(cell));
      csv.rows.push_back(row);
    }
  }
  return csv;
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("resdil_test_" + name);
}

}  // namespace

TEST(cli, EveryFigureRuns) {
  for (const std::string name : {"fig2", "fig3", "fig4", "fig5", "figS2", "figS3", "figQEC"}) {
    const CliRun r = run({"figure", name, "--grid", "20"});
    EXPECT_EQ(r.code, kExitOk) << name << ": " << r.err;
    const Csv csv = parse(r.out);
    EXPECT_EQ(csv.metadata.at("resdil"), "1.0.0");
    EXPECT_FALSE(csv.rows.empty()) << name;
    for (const auto& row : csv.rows) EXPECT_EQ(row.size(), csv.columns.size()) << name;
  }
}

TEST(cli, Fig2RhsIsConstant) {
  const CliRun r = run({"figure", "fig2"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Csv csv = parse(r.out);
  const std::size_t rhs = csv.column("rhs");
  const double expected = 1 - testing_support::h2((1 + std::sqrt(0.5)) / 2);
  for (const auto& row : csv.rows) EXPECT_NEAR(row[rhs], expected, 1e-9);
  EXPECT_NEAR(expected, 0.3992, 1e-4);
}

TEST(cli, Fig3PureMaximum) {
  const CliRun r = run({"figure", "fig3"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Csv csv = parse(r.out);
  const std::size_t pure = csv.column("pure");
  double best = -1;
  for (const auto& row : csv.rows) best = std::max(best, row[pure]);
  EXPECT_NEAR(best, 0.15, 0.01);
}

TEST(cli, FigQecDominatesDilution) {
  const CliRun r = run({"figure", "figQEC"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Csv csv = parse(r.out);
  const std::size_t qec = csv.column("qec");
  const std::size_t dil = csv.column("dilution");
  ASSERT_FALSE(csv.rows.empty());
  // Both columns vanish analytically at p = 1/2; allow for roundoff there.
  for (const auto& row : csv.rows) EXPECT_GE(row[qec], row[dil] - 1e-12) << "p=" << row[0];
}

TEST(cli, ThermalSweepArgmax) {
  const CliRun r = run({"sweep", "thermal", "--T", "0.3", "--p", "0.9"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NEAR(parse(r.out).meta("argmax_q"), 0.85, 0.01);
}

TEST(cli, ConstantSweepArgmaxIsFirstPoint) {
  // With p = 0 the purity rate is 1 for every q.
  const CliRun r = run({"sweep", "purity", "--p", "0", "--q-range", "0.1:0.4", "--grid", "13"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NEAR(parse(r.out).meta("argmax_q"), 0.1, 1e-12);
}

TEST(cli, ValidationErrors) {
  EXPECT_EQ(run({"sweep", "thermal", "--q-range", "1:0"}).code, kExitValidation);
  EXPECT_EQ(run({"sweep", "thermal", "--q-range", "0.5:0.5"}).code, kExitValidation);
  EXPECT_EQ(run({"figure", "fig9"}).code, kExitValidation);
  EXPECT_EQ(run({"sweep", "nonsense"}).code, kExitValidation);
  EXPECT_EQ(run({"figure", "fig2", "--grid", "1"}).code, kExitValidation);
  EXPECT_EQ(run({"figure", "fig2", "--lambda", "abc"}).code, kExitValidation);
  EXPECT_EQ(run({"--no-such-flag"}).code, kExitValidation);
  const CliRun r = run({"figure", "fig9"});
  EXPECT_NE(r.err.find("fig9"), std::string::npos);
}

TEST(cli, NumericalErrorExitCode) {
  const CliRun r =
      run({"sweep", "purity", "--q-range", "0.5:0.5000000000001", "--grid", "2"});
  EXPECT_EQ(r.code, kExitNumerical);
}

TEST(cli, IoErrorExitCode) {
  EXPECT_EQ(run({"figure", "fig2", "--out", "/nonexistent_dir/x/out.csv"}).code, kExitIo);
  EXPECT_EQ(run({"figure", "fig2", "--config", temp_path("missing.cfg").string()}).code, kExitIo);
}

TEST(cli, WritesOutputFile) {
  const std::filesystem::path path = temp_path("fig4.csv");
  const CliRun r = run({"figure", "fig4", "--grid", "10", "--out", path.string()});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream text;
  text << in.rdbuf();
  EXPECT_EQ(text.str(), run({"figure", "fig4", "--grid", "10"}).out);
  std::filesystem::remove(path);
}

TEST(cli, ConfigFilePrecedence) {
  const std::filesystem::path path = temp_path("precedence.cfg");
  {
    std::ofstream cfg(path);
    cfg << "lambda=0.3\ngrid=7\n";
  }
  const Csv from_file = parse(run({"figure", "fig2", "--config", path.string()}).out);
  EXPECT_EQ(from_file.metadata.at("lambda"), "0.3");
  EXPECT_EQ(from_file.metadata.at("grid"), "7");
  const Csv overridden =
      parse(run({"figure", "fig2", "--config", path.string(), "--lambda", "0.4"}).out);
  EXPECT_EQ(overridden.metadata.at("lambda"), "0.4");
  EXPECT_EQ(overridden.metadata.at("grid"), "7");
  const Csv defaults = parse(run({"figure", "fig2"}).out);
  EXPECT_EQ(defaults.metadata.at("lambda"), "0.5");
  EXPECT_EQ(defaults.metadata.at("grid"), "200");
  std::filesystem::remove(path);
}

TEST(cli, OutputIsDeterministic) {
  const std::vector<std::string> base{"qec-compare", "--samples", "3", "--u-grid", "8", "--seed", "9"};
  auto one = base;
  one.insert(one.end(), {"--workers", "1"});
  auto many = base;
  many.insert(many.end(), {"--workers", "4"});
  const CliRun a = run(one);
  ASSERT_EQ(a.code, kExitOk) << a.err;
  EXPECT_EQ(a.out, run(one).out);
  EXPECT_EQ(a.out, run(many).out);
  auto other_seed = base;
  other_seed[6] = "10";
  EXPECT_NE(a.out, run(other_seed).out);

  const CliRun f1 = run({"figure", "fig3", "--workers", "1"});
  const CliRun f2 = run({"figure", "fig3", "--workers", "3"});
  EXPECT_EQ(f1.out, f2.out);
}

TEST(cli, QecCompareSingleVector) {
  const CliRun r = run({"qec-compare", "--pauli", "0.9,0,0,0.1"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const Csv csv = parse(r.out);
  ASSERT_EQ(csv.rows.size(), 1u);
  EXPECT_GT(csv.rows[0][csv.column("qec")], csv.rows[0][csv.column("dilution")]);
  EXPECT_EQ(run({"qec-compare", "--pauli", "0.9,0.2,0,0.1"}).code, kExitValidation);
}

TEST(cli, SelftestPasses) {
  const CliRun r = run({"selftest"});
  EXPECT_EQ(r.code, kExitOk) << r.out << r.err;
  EXPECT_NE(r.out.find("module qec:"), std::string::npos);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}

TEST(cli, SelftestReportsCorruptedInvariant) {
  const CliRun r = run({"selftest", "--corrupt", "qec/P(0.1, 1)"});
  EXPECT_EQ(r.code, kExitNumerical);
  EXPECT_NE(r.out.find("FAIL qec/P(0.1, 1)"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("module qec: 2/3 passed"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("module linalg:"), std::string::npos);
}
