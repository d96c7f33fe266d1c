#include <gtest/gtest.h>

#include "boxcube/io.hpp"
#include "support/cli_runner.hpp"

namespace boxcube {
namespace {

namespace fs = std::filesystem;
using testing::run_cli;
using testing::slurp;

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("boxcube_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string p(const std::string& name) const { return (dir_ / name).string(); }
  void write(const std::string& name, const std::string& text) const { io::write_file_atomic(dir_ / name, text); }
  testing::CliResult run(const std::string& args, const std::string& env = "") const { return run_cli(args, dir_, env); }

  fs::path dir_;
};

constexpr const char* kP3Intervals = R"({"n":3,"intervals":{"0":[0,1,1,1],"1":[1,2,2,1],"2":[3,2,3,1]}})";

TEST_F(CliTest, GenStar) {
  ASSERT_EQ(run("gen --family star --n 5 --out " + p("s.json")).exit_code, 0);
  EXPECT_EQ(slurp(p("s.json")), "{\"edges\":[[0,1],[0,2],[0,3],[0,4]],\"n\":5}\n");
}

TEST_F(CliTest, GenCycle) {
  ASSERT_EQ(run("gen --family cycle --n 4 --out " + p("c.json")).exit_code, 0);
  EXPECT_EQ(io::read_graph_file(p("c.json")), cycle(4));
  EXPECT_EQ(run("gen --family cycle --n 4 --out " + p("c.json") + " --rep-out " + p("r.json")).exit_code, 2);
}

TEST_F(CliTest, GenRandomIntervalIsDeterministic) {
  ASSERT_EQ(run("gen --family random-interval --n 16 --seed 7 --out " + p("a.json")).exit_code, 0);
  ASSERT_EQ(run("gen --family random-interval --n 16 --seed 7 --out " + p("b.json")).exit_code, 0);
  EXPECT_EQ(slurp(p("a.json")), slurp(p("b.json")));
  EXPECT_EQ(slurp(p("a.intervals.json")), slurp(p("b.intervals.json")));
  const auto rep = io::intervals_from_json(io::read_json_file(p("a.intervals.json")));
  EXPECT_EQ(intersection_graph_of_intervals(rep), io::read_graph_file(p("a.json")));
}

TEST_F(CliTest, GenErrors) {
  EXPECT_EQ(run("gen --family random-interval --n 4 --out " + p("x.json")).exit_code, 2);
  EXPECT_EQ(run("gen --family wheel --n 4").exit_code, 2);
  EXPECT_EQ(run("gen --family star --n 0").exit_code, 2);
  EXPECT_EQ(run("frobnicate").exit_code, 2);
}

TEST_F(CliTest, OrderEmitsLeftEndpointOrdering) {
  write("p3.json", kP3Intervals);
  const auto r = run("order --in " + p("p3.json"));
  ASSERT_EQ(r.exit_code, 0);
  EXPECT_EQ(r.out, "{\"n\":3,\"order\":[0,1,2]}\n");
}

TEST_F(CliTest, ConvertP3) {
  write("p3.json", kP3Intervals);
  ASSERT_EQ(run("convert --kind interval-to-cube --in " + p("p3.json") + " --out " + p("c.json")).exit_code, 0);
  EXPECT_EQ(slurp(p("c.json")), "{\"anchors\":{\"0\":[2,0],\"1\":[6,3],\"2\":[2,7]},\"dims\":2,\"n\":3,\"side\":4}\n");

  ASSERT_EQ(run("convert --kind interval-to-cube --normalize --in " + p("p3.json") + " --out " + p("n.json")).exit_code, 0);
  const auto norm = io::read_json_file(p("n.json"));
  EXPECT_EQ(norm["side"], 1);
  EXPECT_EQ(norm["anchors"]["1"], io::Json::parse("[[3,2],[3,4]]"));
}

TEST_F(CliTest, ConvertBoxMatchesIntervalForOneDimension) {
  write("p3.json", kP3Intervals);
  write("b.json", R"({"n":3,"dims":1,"boxes":{"0":[[0,1,1,1]],"1":[[1,2,2,1]],"2":[[3,2,3,1]]}})");
  ASSERT_EQ(run("convert --kind interval-to-cube --in " + p("p3.json") + " --out " + p("c1.json")).exit_code, 0);
  ASSERT_EQ(run("convert --kind box-to-cube --in " + p("b.json") + " --out " + p("c2.json")).exit_code, 0);
  EXPECT_EQ(slurp(p("c1.json")), slurp(p("c2.json")));
}

TEST_F(CliTest, ConvertCompleteGivesZeroDimensions) {
  ASSERT_EQ(run("gen --family complete --n 6 --out " + p("k.json") + " --rep-out " + p("k.int.json")).exit_code, 0);
  ASSERT_EQ(run("convert --kind interval-to-cube --in " + p("k.int.json") + " --out " + p("c.json")).exit_code, 0);
  EXPECT_EQ(io::read_json_file(p("c.json"))["dims"], 0);
}

TEST_F(CliTest, ConvertRejectsMalformedInput) {
  write("bad.json", R"({"n":1,"intervals":{"0":[3,1,1,1]}})");
  EXPECT_EQ(run("convert --kind interval-to-cube --in " + p("bad.json") + " --out " + p("c.json")).exit_code, 2);
  EXPECT_FALSE(fs::exists(p("c.json")));
  write("syntax.json", "{\"n\": 1,\n \"intervals\": }");
  EXPECT_EQ(run("convert --kind interval-to-cube --in " + p("syntax.json")).exit_code, 2);
  EXPECT_NE(slurp(dir_ / "stderr.txt").find(":2:"), std::string::npos);
}

TEST_F(CliTest, VerifyRoundTrip) {
  write("p3.json", kP3Intervals);
  write("g.json", "{\"edges\":[[0,1],[1,2]],\"n\":3}\n");
  ASSERT_EQ(run("convert --kind interval-to-cube --in " + p("p3.json") + " --out " + p("c.json")).exit_code, 0);
  const auto ok = run("verify --graph " + p("g.json") + " --cubes " + p("c.json") + " --report " + p("r.json"));
  EXPECT_EQ(ok.exit_code, 0);
  EXPECT_EQ(ok.out.rfind("match", 0), 0u) << ok.out;
  EXPECT_NE(ok.out.find("non-edge (0,2): separated by dimensions [1]"), std::string::npos) << ok.out;
  EXPECT_EQ(io::read_json_file(p("r.json"))["match"], true);

  // Normalized cube files verify too.
  ASSERT_EQ(run("convert --kind interval-to-cube --normalize --in " + p("p3.json") + " --out " + p("n.json")).exit_code, 0);
  EXPECT_EQ(run("verify --graph " + p("g.json") + " --cubes " + p("n.json")).exit_code, 0);
  EXPECT_EQ(run("verify --graph " + p("g.json") + " --intervals " + p("p3.json")).exit_code, 0);
}

TEST_F(CliTest, VerifyDetectsPerturbation) {
  write("g.json", "{\"edges\":[[0,1],[1,2]],\"n\":3}\n");
  // Vertex 1 moved by 2 * side in dimension 0.
  write("c.json", R"({"anchors":{"0":[2,0],"1":[14,3],"2":[2,7]},"dims":2,"n":3,"side":4})");
  const auto r = run("verify --graph " + p("g.json") + " --cubes " + p("c.json"));
  EXPECT_EQ(r.exit_code, 1);
  EXPECT_NE(r.out.find("missing edges: (0,1) (1,2)"), std::string::npos) << r.out;
}

TEST_F(CliTest, VerifyCompleteAgainstZeroDimensions) {
  write("k.json", "{\"edges\":[[0,1],[0,2],[1,2]],\"n\":3}\n");
  write("c.json", R"({"anchors":{"0":[],"1":[],"2":[]},"dims":0,"n":3,"side":4})");
  EXPECT_EQ(run("verify --graph " + p("k.json") + " --cubes " + p("c.json")).exit_code, 0);
}

TEST_F(CliTest, VerifyVertexCountMismatch) {
  write("g.json", "{\"edges\":[[0,1]],\"n\":2}\n");
  write("c.json", R"({"anchors":{"0":[],"1":[],"2":[]},"dims":0,"n":3,"side":4})");
  EXPECT_EQ(run("verify --graph " + p("g.json") + " --cubes " + p("c.json")).exit_code, 2);
}

TEST_F(CliTest, VerifyBoxesAndEdgeList) {
  write("c4.txt", "4\n0 1\n1 2\n2 3\n3 0\n");
  write("b.json",
        R"({"n":4,"dims":2,"boxes":{"0":[[0,1,3,1],[3,1,3,1]],"1":[[0,1,0,1],[0,1,3,1]],"2":[[0,1,3,1],[0,1,0,1]],"3":[[3,1,3,1],[0,1,3,1]]}})");
  EXPECT_EQ(run("verify --graph " + p("c4.txt") + " --boxes " + p("b.json")).exit_code, 0);
  ASSERT_EQ(run("convert --kind box-to-cube --in " + p("b.json") + " --out " + p("c.json")).exit_code, 0);
  EXPECT_EQ(run("verify --graph " + p("c4.txt") + " --cubes " + p("c.json")).exit_code, 0);
}

TEST_F(CliTest, OracleValues) {
  ASSERT_EQ(run("gen --family star --n 4 --out " + p("s.json")).exit_code, 0);
  ASSERT_EQ(run("oracle --graph " + p("s.json") + " --parameter cubicity --out " + p("o.json")).exit_code, 0);
  EXPECT_EQ(io::read_json_file(p("o.json"))["value"], 2);

  ASSERT_EQ(run("gen --family cycle --n 4 --out " + p("c.json")).exit_code, 0);
  ASSERT_EQ(run("oracle --graph " + p("c.json") + " --parameter boxicity --out " + p("b.json")).exit_code, 0);
  const auto b = io::read_json_file(p("b.json"));
  EXPECT_EQ(b["value"], 2);
  EXPECT_EQ(b["witness"].size(), 2u);

  ASSERT_EQ(run("gen --family complete --n 5 --out " + p("k.json")).exit_code, 0);
  ASSERT_EQ(run("oracle --graph " + p("k.json") + " --parameter cubicity --out " + p("k_o.json")).exit_code, 0);
  EXPECT_EQ(io::read_json_file(p("k_o.json"))["value"], 0);
}

TEST_F(CliTest, OracleLimits) {
  ASSERT_EQ(run("gen --family path --n 7 --out " + p("p.json")).exit_code, 0);
  EXPECT_EQ(run("oracle --graph " + p("p.json") + " --parameter cubicity").exit_code, 3);
  EXPECT_EQ(run("oracle --graph " + p("p.json") + " --parameter cubicity --out " + p("o.json"), "BOXCUBE_BRUTE_LIMIT=7").exit_code, 0);
  EXPECT_EQ(io::read_json_file(p("o.json"))["value"], 1);
  EXPECT_EQ(run("oracle --graph " + p("p.json") + " --parameter cubicity --limit 5", "BOXCUBE_BRUTE_LIMIT=7").exit_code, 3);
  EXPECT_EQ(run("oracle --graph " + p("p.json") + " --parameter cubicity", "BOXCUBE_BRUTE_LIMIT=abc").exit_code, 2);

  ASSERT_EQ(run("gen --family cycle --n 4 --out " + p("c.json")).exit_code, 0);
  EXPECT_EQ(run("oracle --graph " + p("c.json") + " --parameter cubicity --max-b 1 --out " + p("x.json")).exit_code, 3);
  const auto x = io::read_json_file(p("x.json"));
  EXPECT_TRUE(x["exceeded"].get<bool>());
  EXPECT_TRUE(x["value"].is_null());
  EXPECT_EQ(run("oracle --graph " + p("c.json") + " --parameter girth").exit_code, 2);
}

}  // namespace
}  // namespace boxcube
