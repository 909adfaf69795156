#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>
#include <json.hpp>

#include "wordrep/cli.hpp"

namespace wordrep::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result wg(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& contents) {
  auto path = std::filesystem::temp_directory_path() / ("wg_cli_test_" + name);
  std::ofstream(path) << contents;
  return path.string();
}

TEST(CliTest, Graph) {
  auto r = wg({"graph", "analog"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "a n\ng l\ng n\ng o\nl n\nl o\nn o\n");
  auto j = wg({"graph", "balloon", "--json"});
  EXPECT_EQ(j.out, R"({"edges":[["a","b"],["a","n"],["b","n"]],"nodes":["a","b","l","n","o"]})"
                   "\n");
  auto t = wg({"graph", "x1 x2 x1 x2", "--tokens"});
  EXPECT_EQ(t.out, "x1 x2\n");
}

TEST(CliTest, Locality) {
  auto r = wg({"locality", "banana"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "2 (witness: n,a,b)\n");
  auto p = wg({"locality", "pepper"});
  EXPECT_EQ(p.out, "2 (witness: e,p,r)\n");
  auto j = wg({"locality", "banana", "--json"});
  auto doc = nlohmann::json::parse(j.out);
  EXPECT_EQ(doc["locality"], 2);
  EXPECT_EQ(doc["witness"], (std::vector<std::string>{"n", "a", "b"}));
}

TEST(CliTest, Check) {
  auto r = wg({"check", "pepper", "--sigma", "p,e,r", "--k", "2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("stage 1: mark 'p' -> 2 block(s): [1..1][3..4]"), std::string::npos);
  EXPECT_NE(r.out.find("max blocks: 2"), std::string::npos);
  auto bad = wg({"check", "pepper", "--sigma", "r,p,e", "--k", "2"});
  EXPECT_EQ(bad.code, kNegative);
  EXPECT_EQ(wg({"check", "pepper", "--sigma", "r,p"}).code, kUsage);
}

TEST(CliTest, UniformizeAndCliques) {
  auto u = wg({"uniformize", "abaaa", "--k", "1", "--sigma", "b,a"});
  EXPECT_EQ(u.code, kOk);
  EXPECT_NE(u.out.find("word: aab"), std::string::npos);
  auto c = wg({"cliques", "ab|cd"});
  EXPECT_EQ(c.code, kOk);
  EXPECT_NE(c.out.find("word: abcdcdab"), std::string::npos);
  EXPECT_NE(c.out.find("sigma: c,d,b,a"), std::string::npos);
}

TEST(CliTest, DecideAndThreshold) {
  const auto c4 = temp_file("c4.json", R"({"nodes":["1","2","3","4"],"edges":[["1","2"],["2","3"],["3","4"],["1","4"]]})");
  EXPECT_EQ(wg({"decide", "--graph", c4, "--class", "L", "--k", "1"}).code, kNegative);
  auto yes = wg({"decide", "--graph", c4, "--class", "L", "--k", "2", "--json"});
  EXPECT_EQ(yes.code, kOk);
  auto doc = nlohmann::json::parse(yes.out);
  EXPECT_EQ(doc["verdict"], "member");
  EXPECT_TRUE(doc.contains("witness"));
  EXPECT_EQ(wg({"decide", "--graph", c4, "--class", "L", "--k", "2", "--budget-steps", "2"}).code, kBudget);
  EXPECT_EQ(wg({"threshold", "--graph", c4}).code, kNegative);

  const auto star = temp_file("star.txt", "c a\nc b\nnode d\n");
  auto t = wg({"threshold", "--graph", star});
  EXPECT_EQ(t.code, kOk);
  EXPECT_EQ(t.out, "threshold (elimination): yes\nthreshold (obstructions): yes\n");
}

TEST(CliTest, Gen) {
  EXPECT_EQ(wg({"gen", "crown", "2"}).out, R"({"edges":[["1","4"],["2","3"]],"nodes":["1","2","3","4"]})"
                                           "\n");
  EXPECT_EQ(wg({"gen", "cliques", "ab|cd|e"}).out,
            R"({"edges":[["a","b"],["c","d"]],"nodes":["a","b","c","d","e"]})"
            "\n");
  EXPECT_EQ(wg({"gen", "fixture", "E02"}).code, kOk);
  EXPECT_EQ(wg({"gen", "fixture", "nope"}).code, kUsage);
  EXPECT_EQ(wg({"gen", "cycle", "0"}).code, kUsage);
}

TEST(CliTest, CliqueWidth) {
  auto b = wg({"cwd", "build", "banana", "--sigma", "n,a,b", "--k", "2"});
  EXPECT_EQ(b.code, kOk);
  const auto file = temp_file("banana.cwd", b.out);
  auto e = wg({"cwd", "eval", file});
  EXPECT_EQ(e.code, kOk);
  EXPECT_NE(e.out.find("a n"), std::string::npos);
  auto v = wg({"cwd", "verify", "abcdcdab"});
  EXPECT_EQ(v.code, kOk);
  EXPECT_NE(v.out.find("graph matches: yes"), std::string::npos);
  EXPECT_EQ(wg({"cwd", "eval", temp_file("bad.cwd", "(union (create 1 \"a\")")}).code, kUsage);
}

TEST(CliTest, Speed) {
  auto r = wg({"speed", "--class", "L", "--k", "1", "--n", "4"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_NE(r.out.find("|L^1_4| = 46 of 64"), std::string::npos);
  EXPECT_NE(r.out.find("B_4 = 15"), std::string::npos);
  EXPECT_EQ(wg({"speed", "--class", "L", "--k", "1", "--n", "7"}).code, kBudget);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(wg({}).code, kUsage);
  EXPECT_EQ(wg({"frobnicate"}).code, kUsage);
  EXPECT_EQ(wg({"locality"}).code, kUsage);
  EXPECT_EQ(wg({"locality", ""}).code, kUsage);
  EXPECT_EQ(wg({"decide", "--graph", "/nonexistent", "--class", "L", "--k", "1"}).code, kUsage);
  EXPECT_EQ(wg({"decide", "--graph", "x", "--class", "Q", "--k", "1"}).code, kUsage);
  EXPECT_EQ(wg({"locality", "abcdefghijklm"}).code, kBudget);
  EXPECT_EQ(wg({"--help"}).code, kOk);
}

}  // namespace
}  // namespace wordrep::cli
