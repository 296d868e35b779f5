#include "corpus.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <array>
#include <cstdio>
#include <sys/wait.h>

using namespace okh;
using namespace okh::testing;

namespace {

struct CliRun {
  int status = -1;
  std::string out;
};

CliRun okh_cli(const std::string& args) {
  const std::string cmd = std::string(OKH_CLI) + " " + args + " 2>&1";
  CliRun r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), p)) > 0;) r.out.append(buf.data(), n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(OKH_DATA_DIR) + "/" + name + ".pd"; }

}  // namespace

TEST(Cli, UnknotTable) {
  const CliRun r = okh_cli("compute " + data("unknot"));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "h q rank torsion\n0 -1 1 -\n0 1 1 -\n");
}

TEST(Cli, TrefoilCrosscheckEven) {
  const CliRun r = okh_cli("compute " + data("trefoil_right") + " --crosscheck-even --threads 2");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("mod2: MATCH"), std::string::npos) << r.out;
}

TEST(Cli, JsonRoundTrip) {
  const CliRun r = okh_cli("compute " + data("figure_eight") + " --json --action");
  ASSERT_EQ(r.status, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  const PipelineResult ref = run_diagram(load_data("figure_eight"), {});
  ASSERT_EQ(j["homology"].size(), ref.homology.groups.size());
  for (const auto& row : j["homology"]) {
    const HomologyGroup* g = ref.homology.at(row["h"], row["q"]);
    ASSERT_NE(g, nullptr);
    EXPECT_EQ(row["rank"].get<int>(), g->free_rank);
    std::vector<Integer> tors;
    for (const auto& t : row["torsion"]) tors.emplace_back(t.get<std::int64_t>());
    EXPECT_EQ(tors, g->torsion);
  }
  EXPECT_EQ(j["flavor"], "Y");
  EXPECT_TRUE(j["action"].contains("f"));
  EXPECT_TRUE(j["action"].contains("weights"));
}

TEST(Cli, MarkedTrefoilJsonHasPresentationMatrices) {
  const std::string path = ::testing::TempDir() + "marked_trefoil.pd";
  {
    std::ofstream out(path);
    out << "X[1,5,2,4]\nX[3,1,4,6]\nX[5,3,6,2]\nmark 1 1 1/2 1/2\n";
  }
  const CliRun r = okh_cli("compute " + path + " --json --action");
  ASSERT_EQ(r.status, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["diagram"]["markings"][0]["beta1"], "1/2");
  ASSERT_FALSE(j["action"]["f"].empty());
  for (const auto& b : j["action"]["f"]) {
    EXPECT_EQ(b["matrix"].size(), b["target_orders"].size());
  }
}

TEST(Cli, Deterministic) {
  const std::string args = "pretzel 3 --json --threads 3 --full-crosscheck";
  EXPECT_EQ(okh_cli(args).out, okh_cli(args).out);
}

TEST(Cli, PretzelCrosscheck) {
  const CliRun r = okh_cli("pretzel 2 --full-crosscheck");
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.out.find("torsion Z/2 at (h,q)=(0,1); in image of f: "), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("crosscheck: MATCH"), std::string::npos) << r.out;
}

TEST(Cli, CheckPassesBothFlavors) {
  for (const char* f : {"X", "Y"}) {
    EXPECT_EQ(okh_cli("check " + data("trefoil_right") + " --flavor " + f).status, 0);
  }
  EXPECT_EQ(okh_cli("check " + data("unknot")).status, 0);
}

TEST(Cli, CorruptedSignNamesFailure) {
  const CliRun r = okh_cli("check " + data("trefoil_right") + " --debug-corrupt-edge 2");
  EXPECT_EQ(r.status, 1);
  EXPECT_NE(r.out.find("check failed: d_squared"), std::string::npos) << r.out;
  const CliRun c = okh_cli("compute " + data("trefoil_right") + " --debug-corrupt-edge 2");
  EXPECT_EQ(c.status, 3);
  EXPECT_NE(c.out.find("INTERNAL"), std::string::npos);
}

TEST(Cli, BadInput) {
  const std::string path = ::testing::TempDir() + "bad.pd";
  {
    std::ofstream out(path);
    out << "X[1,2,3]\n";
  }
  const CliRun r = okh_cli("compute " + path);
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.out.find("line 1"), std::string::npos) << r.out;
  EXPECT_EQ(okh_cli("compute /nonexistent.pd").status, 2);
  EXPECT_NE(okh_cli("compute " + data("unknot") + " --flavor Z").status, 0);
}
