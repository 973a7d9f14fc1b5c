// Copyright 2026 The exo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "exo/gateset.hpp"
#include "exo/pulse.hpp"
#include "exo_cli/commands.hpp"
#include "json.hpp"

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

struct Outcome {
  int status;
  std::string out;
  std::string err;
};

Outcome exo_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int status = exo::cli::run(args, out, err);
  return {status, out.str(), err.str()};
}

// Value column of a "key   value" report line.
std::string field(const std::string& report, const std::string& key) {
  std::istringstream in(report);
  for (std::string line; std::getline(in, line);) {
    if (line.rfind(key + " ", 0) == 0) {
      const auto v = line.find_first_not_of(' ', key.size());
      return line.substr(v);
    }
  }
  return "<missing " + key + ">";
}

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("exo_cli_" + std::to_string(reinterpret_cast<std::uintptr_t>(this)) + "_" +
             ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(file(name)) << text;
    return file(name);
  }

 private:
  fs::path path_;
};

TEST(CliVerify, ExactCnotBuiltin) {
  const auto r = exo_run({"verify", "--builtin", "cnot_exact_4q"});
  EXPECT_EQ(r.status, exo::cli::kPass) << r.out << r.err;
  EXPECT_EQ(field(r.out, "gates"), "50");
  EXPECT_EQ(field(r.out, "cycles"), "27");
  EXPECT_EQ(field(r.out, "target"), "cnot");
  EXPECT_EQ(field(r.out, "result"), "PASS");
}

TEST(CliVerify, InvariantBuiltinJson) {
  const auto r = exo_run({"verify", "--builtin", "cnot34_4q", "--json"});
  ASSERT_EQ(r.status, exo::cli::kPass) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["gates"], 34);
  EXPECT_EQ(j["cycles"], 19);
  EXPECT_EQ(j["target"], "cnot-invariants");
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_LE(j["f"].get<double>(), 1e-8);
  EXPECT_LE(j["leakage"].get<double>(), 1e-6);
}

TEST(CliVerify, EveryBuiltinPassesItsDocumentedCheck) {
  for (auto id : exo::all_builtins()) {
    const std::string name(exo::to_string(id));
    for (bool polished : {false, true}) {
      std::vector<std::string> args = {"verify", "--builtin", name};
      if (polished) args.push_back("--polished");
      const auto r = exo_run(args);
      EXPECT_EQ(r.status, exo::cli::kPass) << name << (polished ? " polished\n" : "\n") << r.out << r.err;
    }
  }
}

TEST(CliVerify, ThreeQubitVariantAlias) {
  const auto t3 = exo_run({"verify", "--builtin", "cnot_exact_3q", "--variant", "table3", "--json"});
  const auto t4 = exo_run({"verify", "--builtin", "cnot_exact_3q", "--variant", "table4", "--json"});
  ASSERT_EQ(t3.status, exo::cli::kPass) << t3.err;
  ASSERT_EQ(t4.status, exo::cli::kPass) << t4.err;
  EXPECT_EQ(json::parse(t3.out)["gates"], 26);
  EXPECT_EQ(json::parse(t4.out)["gates"], 31);
}

TEST(CliVerify, EmptySequenceFails) {
  TempDir dir;
  const auto path = dir.write("empty.json", R"({"version": 1, "code": "four_qubit", "n_physical": 8, "gates": []})");
  const auto r = exo_run({"verify", path, "--json"});
  EXPECT_EQ(r.status, exo::cli::kToleranceFailure);
  const json j = json::parse(r.out);
  EXPECT_DOUBLE_EQ(j["f"].get<double>(), 3.0);
  EXPECT_DOUBLE_EQ(j["leakage"].get<double>(), 0.0);
  EXPECT_FALSE(j["pass"].get<bool>());
}

TEST(CliVerify, TightToleranceFailsNamingTheMetric) {
  const auto r = exo_run({"verify", "--builtin", "cnot34_4q", "--tolerance", "1e-9"});
  EXPECT_EQ(r.status, exo::cli::kToleranceFailure);
  EXPECT_NE(field(r.out, "result").find("leakage"), std::string::npos) << r.out;
}

TEST(CliVerify, NegativeSignBreaksPi8) {
  EXPECT_EQ(exo_run({"verify", "--builtin", "pi8_4q"}).status, exo::cli::kPass);
  EXPECT_EQ(exo_run({"verify", "--builtin", "pi8_4q", "--sign", "-1"}).status,
            exo::cli::kToleranceFailure);
  EXPECT_EQ(exo_run({"verify", "--builtin", "cnot_exact_4q", "--sign", "-1"}).status, exo::cli::kPass);
}

TEST(CliInvariants, ThirtyFourGateTable) {
  const auto r = exo_run({"invariants", "--builtin", "cnot34_4q", "--json"});
  ASSERT_EQ(r.status, exo::cli::kPass) << r.err;
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["M1"][0].get<double>(), 0.0, 1e-8);
  EXPECT_NEAR(j["M2"][0].get<double>(), 1.0, 1e-8);
}

TEST(CliInvariants, IdentityLayer) {
  TempDir dir;
  const auto path = dir.write(
      "id.json", R"({"version": 1, "code": "four_qubit", "n_physical": 8, "gates": [{"q1": 1, "q2": 2, "t": 0}]})");
  const auto r = exo_run({"invariants", path});
  ASSERT_EQ(r.status, exo::cli::kPass) << r.err;
  EXPECT_EQ(field(r.out, "M1").substr(0, 12), "1.000000e+00");
  EXPECT_EQ(field(r.out, "M2").substr(0, 12), "3.000000e+00");
}

TEST(CliSchedule, CycleCounts) {
  EXPECT_EQ(field(exo_run({"schedule", "--builtin", "cnot34_4q"}).out, "cycles"), "19");
  EXPECT_EQ(field(exo_run({"schedule", "--builtin", "cnot_exact_4q"}).out, "cycles"), "27");
  EXPECT_EQ(field(exo_run({"schedule", "--builtin", "pi8_4q"}).out, "cycles"), "1");
}

TEST(CliExport, RoundTrip) {
  TempDir dir;
  const auto path = dir.file("c34.json");
  ASSERT_EQ(exo_run({"export", "--builtin", "cnot34_4q", "--out", path}).status, exo::cli::kPass);
  const auto seq = exo::read_sequence_file(path);
  EXPECT_EQ(seq.size(), 34u);
  EXPECT_EQ(seq.gates, exo::builtin(exo::BuiltinId::Cnot34_4q).gates);
  const auto r = exo_run({"verify", path});
  EXPECT_EQ(r.status, exo::cli::kPass) << r.out;
}

TEST(CliExport, StdoutKeepsBarriers) {
  const auto r = exo_run({"export", "--builtin", "cnot26_3q"});
  ASSERT_EQ(r.status, exo::cli::kPass);
  const auto seq = exo::parse_sequence(r.out);
  EXPECT_EQ(seq.size(), 26u);
  EXPECT_EQ(seq.barriers, (std::vector<std::size_t>{3, 22}));
}

TEST(CliOptimize, NelderMeadFromCore19) {
  TempDir dir;
  auto core = exo::builtin(exo::BuiltinId::Cnot31_3q);
  core.gates = {core.gates.begin() + 6, core.gates.begin() + 25};
  core.barriers.clear();
  const auto init = dir.file("init.json");
  exo::write_sequence_file(init, core);
  const auto out = dir.file("best.json");
  const auto r = exo_run({"optimize", init, "--stages", "nm", "--init", init, "--out", out,
                          "--epsilon", "1e-10", "--json"});
  ASSERT_EQ(r.status, exo::cli::kPass) << r.out << r.err;
  const json j = json::parse(r.out);
  EXPECT_LE(j["F"].get<double>(), 1e-10);
  EXPECT_EQ(exo::read_sequence_file(out).size(), 19u);
}

TEST(CliOptimize, HoldRangeKeepsTimes) {
  TempDir dir;
  const auto src = dir.file("c26.json");
  exo::write_sequence_file(src, exo::builtin(exo::BuiltinId::Cnot26_3q));
  const auto out = dir.file("held.json");
  const auto r = exo_run({"optimize", src, "--stages", "nm", "--target", "cnot", "--hold", "0:3",
                          "--hold", "22:26", "--max-iterations", "200", "--out", out});
  EXPECT_NE(r.status, exo::cli::kInputError) << r.err;
  const auto before = exo::read_sequence_file(src), after = exo::read_sequence_file(out);
  for (std::size_t i : {0u, 1u, 2u, 22u, 23u, 24u, 25u}) EXPECT_EQ(after.gates[i].t, before.gates[i].t);
}

TEST(CliOptimize, GaIsSeeded) {
  TempDir dir;
  auto core = exo::builtin(exo::BuiltinId::Cnot31_3q);
  core.gates = {core.gates.begin() + 6, core.gates.begin() + 25};
  core.barriers.clear();
  const auto layout = dir.file("layout.json");
  exo::write_sequence_file(layout, core);
  auto go = [&](const std::string& workers) {
    return exo_run({"optimize", layout, "--stages", "ga", "--seed", "4", "--max-generations", "20",
                    "--workers", workers, "--json"});
  };
  const auto a = go("1"), b = go("4");
  EXPECT_EQ(a.status, exo::cli::kToleranceFailure);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(json::parse(a.out)["stages"][0]["generations"], 20);
}

TEST(CliSynthLocal, Identity) {
  const auto r = exo_run({"synth-local", "--target", "identity", "--seed", "1", "--json"});
  ASSERT_EQ(r.status, exo::cli::kPass) << r.err;
  const json j = json::parse(r.out);
  EXPECT_LE(j["cost"].get<double>(), 1e-10);
  EXPECT_EQ(j["times"].size(), 4u);
}

TEST(CliErrors, BadInputExitsTwo) {
  TempDir dir;
  const auto bad = dir.write("bad.json", "{ not json");
  const auto range = dir.write(
      "range.json", R"({"version": 1, "code": "four_qubit", "n_physical": 8, "gates": [{"q1": 1, "q2": 9, "t": 1}]})");
  EXPECT_EQ(exo_run({"verify", dir.file("missing.json")}).status, exo::cli::kInputError);
  EXPECT_EQ(exo_run({"verify", bad}).status, exo::cli::kInputError);
  EXPECT_EQ(exo_run({"verify", range}).status, exo::cli::kInputError);
  EXPECT_EQ(exo_run({"verify", "--builtin", "bogus"}).status, exo::cli::kInputError);
  EXPECT_EQ(exo_run({"verify", "--builtin", "cnot34_4q", "--target", "toffoli"}).status, exo::cli::kInputError);
  EXPECT_EQ(exo_run({"verify", "--builtin", "cnot34_4q", "--sign", "2"}).status, exo::cli::kInputError);
  EXPECT_EQ(exo_run({"frobnicate"}).status, exo::cli::kInputError);
  EXPECT_EQ(exo_run({}).status, exo::cli::kInputError);
}

TEST(CliErrors, HelpExitsZero) {
  const auto r = exo_run({"--help"});
  EXPECT_EQ(r.status, exo::cli::kPass);
  EXPECT_NE(r.out.find("verify"), std::string::npos);
}

}  // namespace
