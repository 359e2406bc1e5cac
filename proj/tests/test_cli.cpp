#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(GRALG_CLI_PATH) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return {-1, ""};
  std::string out;
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, n);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("gralg_cli_test_" + name);
}

}  // namespace

TEST(Cli, OrdersCyclicEight) {
  const auto r = run("orders --group c8 --field 2 --format json");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 4u);
  std::vector<std::string> labels;
  std::vector<std::uint64_t> orders;
  for (const auto& row : j) {
    labels.push_back(row["sigma"]);
    orders.push_back(row["order"]);
  }
  EXPECT_EQ(labels, (std::vector<std::string>{"sigma1", "sigma2", "sigma3", "sigma4"}));
  EXPECT_EQ(orders, (std::vector<std::uint64_t>{16, 32, 16, 16}));
}

TEST(Cli, OrdersEightByTwoListsEveryInvolution) {
  const auto r = run("orders --group c8xc2 --field 2 --format csv");
  ASSERT_EQ(r.code, 0) << r.out;
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1 + 12);
  EXPECT_NE(r.out.find("sigma6,"), std::string::npos);
}

TEST(Cli, EmptySelection) {
  const auto r = run("orders --group c8 --involution none --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(std::count(r.out.begin(), r.out.end(), '\n'), 1);
}

TEST(Cli, ExplicitInvolutionAndModulus) {
  const auto r = run("orders --group c8 --field 4 --modulus 0b111 --involution 'a->a^3' --format json");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 1u);
  EXPECT_EQ(j[0]["order"], 256);
  EXPECT_EQ(j[0]["sigma"], "sigma3");
}

TEST(Cli, OverBudgetRowsAreSkipped) {
  const auto r = run("orders --group c16 --field 8 --involution sigma3 --format json");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j[0]["status"], "skipped");
  EXPECT_EQ(j[0]["predicted"], 16777216);
}

TEST(Cli, ImageCountMethod) {
  const auto r = run("orders --group c8 --field 4 --method image-count --involution sigma2 --format json");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j[0]["order"], 512);
  EXPECT_EQ(j[0]["method"], "image-count");
  EXPECT_TRUE(j[0]["invariants"].is_null());
}

TEST(Cli, Predict) {
  const auto r = run("predict --group c8 --field 8");
  ASSERT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  ASSERT_EQ(j.size(), 3u);
  EXPECT_EQ(j[1]["sigma"], "sigma3");
  EXPECT_EQ(j[1]["order"], 4096);
  EXPECT_EQ(j[1]["method"], "formula");
}

TEST(Cli, VerifySuites) {
  auto r = run("verify theorem1 --n 3 --field 2");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS: invariants pairwise distinct"), std::string::npos) << r.out;
  r = run("verify lemma5 --n 3 --field 2");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("observed 128, expected 128"), std::string::npos) << r.out;
  r = run("verify example-c8xc2 --format json");
  EXPECT_EQ(r.code, 0) << r.out;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["suite"], "example-c8xc2");
  EXPECT_EQ(j["pass"], true);
  r = run("verify theorem1 --n 4 --field 8");
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("SKIPPED"), std::string::npos);
}

TEST(Cli, BadInputs) {
  EXPECT_NE(run("verify lemma9").code, 0);
  EXPECT_EQ(run("orders --group c6").code, 2);
  EXPECT_EQ(run("orders --group c8 --involution sigma9").code, 2);
  EXPECT_EQ(run("orders --field 8 --modulus 0b1001").code, 2);
  EXPECT_NE(run("").code, 0);
  EXPECT_EQ(run("report --out /nonexistent/dir/r.json --group c4 --field 2").code, 2);
}

TEST(Cli, ReportRerunIsByteIdentical) {
  const auto a = temp_path("a.json"), b = temp_path("b.json"), c = temp_path("c.csv");
  ASSERT_EQ(run("report --group c8 --group c8xc2 --field 2 --field 4 --seed 7 --out " + a.string()).code, 0);
  ASSERT_EQ(run("report --group c8 --group c8xc2 --field 2 --field 4 --seed 7 --out " + b.string()).code, 0);
  const auto ja = slurp(a);
  EXPECT_EQ(ja, slurp(b));
  const auto j = nlohmann::json::parse(ja);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["seed"], 7);
  // c8 contributes 4 involutions per field, c8xc2 twelve
  EXPECT_EQ(j["cells"].size(), 2u * 4 + 2u * 12);
  ASSERT_EQ(run("report --group c8 --group c8xc2 --field 2 --field 4 --format csv --out " + c.string()).code, 0);
  const auto csv = slurp(c);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 2 + 2 * 4 + 2 * 12);
  std::filesystem::remove(a);
  std::filesystem::remove(b);
  std::filesystem::remove(c);
}
