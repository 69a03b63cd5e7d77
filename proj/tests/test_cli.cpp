#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <sstream>
#include <vector>

#include "skewmorph/cli.hpp"

using namespace skewmorph::cli;
namespace fs = std::filesystem;

namespace {

struct Result {
  int status;
  std::string out;
  std::string err;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "skewmorph");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int status = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> result;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) result.push_back(line);
  return result;
}

const std::string cache = (fs::temp_directory_path() / ("skewmorph-cli-" + std::to_string(::getpid()))).string();

}  // namespace

TEST_CASE("skew-enum") {
  const auto r = invoke({"skew-enum", "--n", "8", "--format", "text", "--cache-dir", cache});
  CHECK(r.status == kExitOk);
  const auto out = lines(r.out);
  REQUIRE(out.size() == 6);
  CHECK(out[1] == "(0)(1 3 5 7)(2)(4)(6)  [1][3 3 3 3][1][1][1]  order 4");
  CHECK(out[4] == "(0)(1 7 5 3)(2)(4)(6)  [1][3 3 3 3][1][1][1]  order 4");

  const auto json = invoke({"skew-enum", "--n", "8", "--no-cache"});
  CHECK(lines(json.out)[1] == R"({"n":8,"perm":[0,3,2,5,4,7,6,1],"order":4,"pi":[1,3,1,3,1,3,1,3]})");

  const auto oracle = invoke({"skew-enum", "--n", "7", "--oracle", "--format", "csv", "--no-cache"});
  CHECK(oracle.status == kExitOk);
  CHECK(oracle.err.find("agree with brute force") != std::string::npos);
  CHECK(lines(oracle.out)[0] == "n,perm,order,pi,automorphism");
}

TEST_CASE("recip-enum") {
  const auto r = invoke({"recip-enum", "--m", "9", "--n", "27", "--format", "json", "--cache-dir", cache});
  CHECK(r.status == kExitOk);
  const auto out = lines(r.out);
  REQUIRE(out.size() == 27);
  int type_i = 0, type_ii = 0;
  for (const auto& line : out) {
    type_i += line.find(R"("type":"I")") != std::string::npos;
    type_ii += line.find(R"("type":"II")") != std::string::npos;
  }
  CHECK(type_i == 15);
  CHECK(type_ii == 12);
  // second run is served from the cache and is byte-identical
  CHECK(invoke({"recip-enum", "--m", "9", "--n", "27", "--format", "json", "--cache-dir", cache}).out == r.out);
  CHECK(invoke({"recip-enum", "--m", "9", "--n", "27", "--format", "json", "--no-cache"}).out == r.out);
  const auto text = lines(invoke({"recip-enum", "--m", "9", "--n", "27", "--format", "text", "--no-cache"}).out);
  CHECK(text.back() == "total 27  I 15  II 12  other 0");
}

TEST_CASE("triple-build") {
  const auto r = invoke({"triple-build", "--m", "9", "--n", "3", "--index", "1", "--no-cache"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find(R"("abelian":false)") != std::string::npos);
  const auto cayley = invoke({"triple-build", "--m", "2", "--n", "3", "--index", "1", "--cayley", "--no-cache"});
  CHECK(lines(cayley.out).size() == 7);
  const auto rot = invoke({"triple-build", "--m", "2", "--n", "3", "--rotation-system", "--no-cache"});
  CHECK(rot.out == "B0: 0 3\nB1: 1 4\nB2: 2 5\nW0: 0 1 2\nW1: 3 4 5\n");
  CHECK(invoke({"triple-build", "--m", "2", "--n", "3", "--index", "2", "--no-cache"}).status == kExitUsage);
  CHECK(invoke({"triple-build", "--m", "20", "--n", "20", "--cayley", "--no-cache"}).status == kExitUsage);
}

TEST_CASE("dessin-classify and singular-scan") {
  const auto d = invoke({"dessin-classify", "--m", "8", "--n", "8", "--no-cache"});
  CHECK(d.status == kExitOk);
  CHECK(d.out.find(R"("symmetric":6)") != std::string::npos);
  const auto s = invoke({"singular-scan", "--max", "12", "--format", "csv", "--no-cache"});
  CHECK(s.status == kExitOk);
  const auto grid = lines(s.out);
  REQUIRE(grid.size() == 13);
  CHECK(grid[3].rfind("3,S,2,S,2,S,", 0) == 0);  // (3, 5) singular
  CHECK(grid[9].rfind("9,S,2,3,2,S,12,3,2,9,", 0) == 0);
}

TEST_CASE("verify-all") {
  const auto r = invoke({"verify-all", "--max", "5", "--format", "csv"});
  CHECK(r.status == kExitOk);
  for (const auto& line : lines(r.out)) {
    if (line != "suite,checks,passed") CHECK(line.substr(line.size() - 3) == "yes");
  }
}

TEST_CASE("exit codes") {
  CHECK(invoke({}).status == kExitUsage);
  CHECK(invoke({"skew-enum"}).status == kExitUsage);
  CHECK(invoke({"skew-enum", "--n", "8", "--format", "xml"}).status == kExitUsage);
  CHECK(invoke({"skew-enum", "--n", "10", "--oracle"}).status == kExitUsage);
  CHECK(invoke({"skew-enum", "--n", "65"}).status == kExitUsage);
  CHECK(invoke({"singular-scan", "--max", "0"}).status == kExitUsage);
  CHECK(invoke({"bogus"}).status == kExitUsage);
  CHECK(invoke({"--help"}).status == kExitOk);
  CHECK(invoke({"skew-enum", "--n", "8", "--cache-dir", "/proc/forbidden"}).status == kExitIo);

  RunConfig config;
  config.command = Command::skew_enum;
  config.n = 4;
  config.jobs = 0;
  CHECK_THROWS_AS(validate(config), UsageError);
  fs::remove_all(cache);
}
