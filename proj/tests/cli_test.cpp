#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "commands.hpp"
#include "tedhard/io.hpp"
#include "tedhard/reduce_clique.hpp"
#include "test_support.hpp"

namespace tedhard {
namespace {

namespace fs = std::filesystem;
using namespace tedhard::cli;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("tedhard_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = (dir_ / name).string();
    std::ofstream(path, std::ios::binary) << text;
    return path;
  }
  std::string read(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

WeightedGraph random_graph(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  WeightedGraph g(n);
  std::uniform_int_distribution<long> w(lo, hi);
  for (std::size_t i = 1; i <= n; ++i) {
    for (std::size_t j = i + 1; j <= n; ++j) g.set_weight(i, j, Cost(w(rng)));
  }
  return g;
}

const char* kTriangle = "GRAPH v1\n3\n1 2 1\n1 3 2\n2 3 3\n";

TEST_F(CliTest, SolveDecreaseGadget) {
  const GadgetPair d = decrease_gadget(Cost(99), 2, 10);
  const auto file = write("d99.ted", emit_instance({d.left, d.right, d.cm, {}}));
  std::ostringstream out, err;
  EXPECT_EQ(cmd_solve({file, "dp"}, out, err), kExitOk) << err.str();
  EXPECT_EQ(first_line(out.str()), "-99");
}

TEST_F(CliTest, SolveEmptyCosts) {
  const auto file =
      write("empty.ted", "TED-INSTANCE v1\nALPHABET 2\nTREE1 (0 (1))\nTREE2 (1)\nCOSTS MATCH\n");
  for (const char* alg : {"dp", "brute"}) {
    std::ostringstream out, err;
    EXPECT_EQ(cmd_solve({file, alg}, out, err), kExitOk) << err.str();
    EXPECT_EQ(first_line(out.str()), "0");
    EXPECT_NE(out.str().find("pairs 0"), std::string::npos);
  }
}

TEST_F(CliTest, SolveStandardFormulation) {
  // relabel 0->1 costs 5, deleting and inserting costs 1 + 1
  const auto file = write("std.ted",
                          "TED-INSTANCE v1\nALPHABET 2\nTREE1 (0)\nTREE2 (1)\nCOSTS MATCH\n0 1 5\n"
                          "COSTS DELETE\n0 1\n1 1\n");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_solve({file, "dp"}, out, err), kExitOk) << err.str();
  EXPECT_EQ(first_line(out.str()), "2");
}

TEST_F(CliTest, BruteAndDpAgreeOnCorpus) {
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 8; ++rep) {
    InstanceFile inst{testing::random_tree(rng, 5, 3), testing::random_tree(rng, 5, 3),
                      testing::random_model(rng, 3, -6, 6, 0.25), {}};
    const auto file = write("c" + std::to_string(rep) + ".ted", emit_instance(inst));
    std::ostringstream a, b, err;
    ASSERT_EQ(cmd_solve({file, "brute"}, a, err), kExitOk) << err.str();
    ASSERT_EQ(cmd_solve({file, "dp"}, b, err), kExitOk) << err.str();
    EXPECT_EQ(first_line(a.str()), first_line(b.str()));
  }
}

TEST_F(CliTest, SolveCaterpillarRejectsOtherShapes) {
  const auto file = write("bad.ted",
                          "TED-INSTANCE v1\nALPHABET 1\nTREE1 (0 (0) (0) (0))\nTREE2 (0)\nCOSTS MATCH\n");
  std::ostringstream out, err;
  EXPECT_NE(cmd_solve({file, "caterpillar"}, out, err), kExitOk);
  EXPECT_FALSE(err.str().empty());
}

TEST_F(CliTest, SolveReportsParseErrors) {
  const auto file = write("broken.ted", "TED-INSTANCE v1\nALPHABET 2\nTREE1 (0\n");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_solve({file, "dp"}, out, err), kExitUsage);
  EXPECT_NE(err.str().find("line 3"), std::string::npos);
}

TEST_F(CliTest, GenApspAnnouncesSizes) {
  const auto graph = write("tri.g", kTriangle);
  GenArgs args{"apsp", graph, "auto", 3, false, path("a.ted")};
  std::ostringstream out, err;
  ASSERT_EQ(cmd_gen(args, out, err), kExitOk) << err.str();
  EXPECT_NE(out.str().find("F=14 nodes G=14 nodes"), std::string::npos) << out.str();
  const InstanceFile inst = parse_instance(read(path("a.ted")));
  EXPECT_EQ(inst.f.size(), 14u);
  EXPECT_FALSE(is_clique_key(inst.key));
}

TEST_F(CliTest, GenClique) {
  const auto graph = write("tri.g", kTriangle);
  GenArgs args{"clique", graph, "empirical", 3, false, path("c.ted")};
  std::ostringstream out, err;
  ASSERT_EQ(cmd_gen(args, out, err), kExitOk) << err.str();
  EXPECT_NE(out.str().find("alphabet="), std::string::npos);
  const InstanceFile inst = parse_instance(read(path("c.ted")));
  EXPECT_TRUE(is_clique_key(inst.key));
  EXPECT_EQ(clique_key(inst.key).N, 3u);

  args.k = 2;
  std::ostringstream out2, err2;
  EXPECT_EQ(cmd_gen(args, out2, err2), kExitUsage);
}

TEST_F(CliTest, GenIsByteDeterministic) {
  const auto graph = write("tri.g", kTriangle);
  for (const char* family : {"apsp", "clique"}) {
    const std::string m = std::string(family) == "apsp" ? "auto" : "empirical";
    std::ostringstream a, b, err;
    ASSERT_EQ(cmd_gen({family, graph, m, 3, false, ""}, a, err), kExitOk) << err.str();
    ASSERT_EQ(cmd_gen({family, graph, m, 3, false, ""}, b, err), kExitOk);
    EXPECT_EQ(a.str(), b.str());
    EXPECT_FALSE(a.str().empty());
  }
}

TEST_F(CliTest, GenRejectsIncompleteGraph) {
  const auto graph = write("g.g", "GRAPH v1\n3\n1 2 1\n");
  std::ostringstream out, err;
  EXPECT_EQ(cmd_gen({"apsp", graph, "auto", 3, false, ""}, out, err), kExitUsage);
}

TEST_F(CliTest, VerifyApspRandom) {
  std::mt19937_64 rng(8);
  const auto graph = write("r.g", emit_graph(random_graph(rng, 5, -10, 10)));
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify({"apsp", graph, "auto", 3, false}, out, err), kExitOk) << out.str();
  EXPECT_NE(out.str().find("PASS"), std::string::npos);
}

TEST_F(CliTest, VerifyApspTinyMFails) {
  const auto graph = write("tri.g", kTriangle);
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify({"apsp", graph, "1", 3, false}, out, err), kExitVerifyFail);
  EXPECT_NE(out.str().find("M too small"), std::string::npos) << out.str();
  EXPECT_NE(out.str().find("FAIL"), std::string::npos);
}

TEST_F(CliTest, VerifyCliqueTriangle) {
  const auto graph = write("tri.g", kTriangle);
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify({"clique", graph, "empirical", 3, false}, out, err), kExitOk) << err.str();
  EXPECT_NE(out.str().find("extracted 6\n"), std::string::npos);
  EXPECT_NE(out.str().find("PASS"), std::string::npos);
}

TEST_F(CliTest, VerifyCliqueTinyMFails) {
  const auto graph = write("tri.g", kTriangle);
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify({"clique", graph, "3", 3, false}, out, err), kExitVerifyFail);
  EXPECT_NE(out.str().find("FAIL"), std::string::npos);
}

TEST_F(CliTest, VerifyGuards) {
  std::mt19937_64 rng(2);
  const auto big = write("big.g", emit_graph(random_graph(rng, 9, -3, 3)));
  const auto five = write("five.g", emit_graph(random_graph(rng, 5, -3, 3)));
  std::ostringstream out, err;
  EXPECT_EQ(cmd_verify({"apsp", big, "auto", 3, false}, out, err), kExitUsage);
  EXPECT_EQ(cmd_verify({"clique", five, "auto", 3, false}, out, err), kExitUsage);
  EXPECT_EQ(cmd_verify({"clique", five, "auto", 6, false}, out, err), kExitUsage);
}

TEST_F(CliTest, BenchRowsAndSeeds) {
  BenchArgs args{"caterpillar", "8..32", "dp,caterpillar", 4};
  std::ostringstream a, b, err;
  ASSERT_EQ(cmd_bench(args, a, err), kExitOk) << err.str();
  ASSERT_EQ(cmd_bench(args, b, err), kExitOk);
  auto values = [](const std::string& csv) {
    std::vector<std::string> rows;
    std::istringstream in(csv);
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#' || line.rfind("family,", 0) == 0) continue;
      rows.push_back(line.substr(0, line.rfind(',')));
    }
    return rows;
  };
  const auto ra = values(a.str());
  EXPECT_EQ(ra.size(), 6u);
  EXPECT_EQ(ra, values(b.str()));
  EXPECT_NE(a.str().find("family,n,alg,nodes,value,wallMillis"), std::string::npos);
  EXPECT_NE(a.str().find("seed=4"), std::string::npos);
  // both algorithms see the same instance
  for (std::size_t i = 0; i + 1 < ra.size(); i += 2) {
    EXPECT_EQ(ra[i].substr(ra[i].rfind(',')), ra[i + 1].substr(ra[i + 1].rfind(',')));
  }
}

TEST(CliSizes, Parse) {
  EXPECT_EQ(parse_sizes("256..1024"), (std::vector<std::size_t>{256, 512, 1024}));
  EXPECT_EQ(parse_sizes("3,5,7"), (std::vector<std::size_t>{3, 5, 7}));
  EXPECT_EQ(parse_sizes("4"), (std::vector<std::size_t>{4}));
}

}  // namespace
}  // namespace tedhard
