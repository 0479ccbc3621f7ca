#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "longhom/cli.hpp"
#include "longhom/json_io.hpp"
#include "oracles/finite_closure.hpp"

using namespace longhom;
namespace lj = longhom::json;

namespace {

const std::string kGolden = LONGHOM_GOLDEN_DIR;

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string subset_text(oracle::Mask m, std::size_t n) {
  std::string out = "{";
  for (std::size_t i = 0; i < n; ++i)
    if ((m >> i) & 1U) out += (out.size() > 1 ? "," : "") + std::to_string(i);
  return out + "}";
}

}  // namespace

TEST(CliGolden, EveryCaseMatchesByteForByte) {
  const auto cases = lj::load_file(kGolden + "/cases.json");
  ASSERT_GT(cases.size(), 20u);
  for (const auto& c : cases) {
    const std::string name = c["name"].get<std::string>();
    std::vector<std::string> args;
    for (const auto& a : c["args"]) {
      std::string s = a.get<std::string>();
      if (!s.empty() && s[0] == '@') s = kGolden + "/" + s.substr(1);
      args.push_back(std::move(s));
    }
    const Outcome first = run(args);
    EXPECT_EQ(first.code, c["exit"].get<int>()) << name << ": " << first.err;
    EXPECT_EQ(first.out, slurp(kGolden + "/" + name + ".out")) << name;
    if (first.code >= kExitParse) EXPECT_FALSE(first.err.empty()) << name;
    const Outcome second = run(args);
    EXPECT_EQ(second.out, first.out) << name;
    EXPECT_EQ(second.code, first.code) << name;
  }
}

TEST(Cli, ClassCountsMatchTheClosureOracle) {
  for (std::size_t n = 2; n <= 7; ++n)
    for (std::uint32_t code = 0; code < (1U << n); ++code) {
      const std::string dirs = oracle::dirs_of(code, n);
      const Outcome r = run({"classes", "-s", dirs});
      ASSERT_EQ(r.code, kExitYes) << dirs;
      const auto j = lj::parse(r.out);
      EXPECT_EQ(j["count"].get<std::size_t>(), oracle::adapted_masks(dirs).size()) << dirs;
      EXPECT_TRUE(j["complete"].get<bool>());
      EXPECT_EQ(j["classes"].size(), j["count"].get<std::size_t>());
    }
}

TEST(Cli, CheckExitCodesMatchTheClosureOracle) {
  for (const std::string dirs : {"uud", "udud", "uddu", "ududd"}) {
    const std::size_t n = dirs.size();
    for (oracle::Mask m = 0; m < (1U << n); ++m) {
      const Outcome r = run({"check", "-s", dirs, "--subset", subset_text(m, n)});
      const bool adapted = oracle::upward_closed(oracle::closure(dirs), m);
      EXPECT_EQ(r.code, adapted ? kExitYes : kExitNo) << dirs << " " << subset_text(m, n);
      EXPECT_EQ(lj::parse(r.out)["witness"].is_null(), adapted);
    }
  }
}

TEST(Cli, HelpAndUsage) {
  EXPECT_EQ(run({"--help"}).code, kExitYes);
  EXPECT_EQ(run({"classes", "-s", "uud", "--bogus"}).code, kExitParse);
  EXPECT_EQ(run({"check", "-s", "uud"}).code, kExitParse);
  EXPECT_EQ(run({"check", "-s", "uud", "--subset", "{1"}).code, kExitParse);
  EXPECT_EQ(run({"classes", "--alpha", "w+", "--up", "[0,w)"}).code, kExitParse);
  EXPECT_EQ(run({"check", "-s", "uud", "--subset", "{5}"}).code, kExitBound);
  EXPECT_EQ(run({"classes", "-s", std::string(30, 'u')}).code, kExitBound);
}
