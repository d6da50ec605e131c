#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "gccaut/cli.hpp"
#include "gccaut/export.hpp"

using namespace gccaut;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

bool has(const std::string& text, const std::string& needle) { return text.find(needle) != std::string::npos; }

std::size_t count_lines(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) n += has(line, needle);
  return n;
}

std::filesystem::path temp_file(const char* name) { return std::filesystem::temp_directory_path() / name; }

}  // namespace

TEST_CASE("build") {
  const auto dot = run({"build", "--type", "A2", "--m", "1", "--format", "dot"});
  CHECK(dot.code == kExitOk);
  CHECK(has(dot.out, "graph"));
  CHECK(count_lines(dot.out, " -- ") == 5);

  const auto join = run({"build", "--type", "A1xA1", "--m", "1"});
  REQUIRE(join.code == kExitOk);
  const auto j = json::parse(join.out);
  CHECK(j["vertices"].size() == 4);
  CHECK(j["edges"].size() == 4);

  CHECK(run({"build", "--type", "Z9"}).code == kExitUsage);
  CHECK(run({"build", "--type", "A2", "--m", "0"}).code == kExitUsage);
  CHECK(run({"build", "--type", "A2", "--m", "1", "--frobnicate"}).code == kExitUsage);
  CHECK(run({"build", "--type", "A2", "--m", "1", "--format", "svg"}).code == kExitUsage);
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("facets") {
  const auto a2 = run({"facets", "--type", "A2", "--m", "2"});
  CHECK(a2.code == kExitOk);
  CHECK(has(a2.out, "count         12"));
  CHECK(has(a2.out, "check         ok"));
  CHECK(has(run({"facets", "--type", "A1", "--m", "3"}).out, "count         4"));
  CHECK(has(run({"facets", "--type", "A3", "--m", "1"}).out, "count         14"));
}

TEST_CASE("maps") {
  const auto b2 = run({"maps", "--type", "B2", "--m", "1"});
  CHECK(b2.code == kExitOk);
  CHECK(has(b2.out, "C       identity"));
  CHECK(!has(b2.out, "FAIL"));
  const auto a2 = run({"maps", "--type", "A2", "--m", "1", "--swap-bipartition"});
  CHECK(a2.code == kExitOk);
  CHECK(count_lines(a2.out, " ok") >= 10);
  CHECK(has(a2.out, "S∘S = Id"));
  CHECK(run({"maps", "--type", "A1xA2", "--m", "1"}).code == kExitRefused);
}

TEST_CASE("verify") {
  const auto d4 = run({"verify", "--type", "D4", "--m", "1"});
  CHECK(d4.code == kExitOk);
  CHECK(has(d4.out, "aut_order   48"));

  const auto a1 = run({"verify", "--type", "A1", "--m", "1"});
  CHECK(a1.code == kExitRefused);
  CHECK(has(a1.err, "rank ≥ 2 required"));

  const auto i25 = run({"verify", "--type", "I2(5)", "--m", "1", "--format", "json"});
  CHECK(i25.code == kExitOk);
  CHECK(json::parse(i25.out)["aut_order"] == 14);

  CHECK(run({"verify", "--type", "E7", "--m", "2", "--budget", "0ms"}).code == kExitBuild);
  CHECK(run({"verify", "--type", "A2", "--m", "1", "--budget", "soon"}).code == kExitUsage);
}

TEST_CASE("sweep") {
  const auto all = run({"sweep"});
  CHECK(all.code == kExitOk);
  CHECK(count_lines(all.out, " pass") == 28);
  CHECK(count_lines(all.out, "FAIL") == 0);

  const auto big = run({"sweep", "--types", "A2,E8", "--ms", "1,3", "--budget", "1ms"});
  CHECK(big.code == kExitOk);
  CHECK(has(big.out, "skipped(budget)"));

  const auto refused = run({"sweep", "--types", "A1,A1xA1,A2", "--ms", "1"});
  CHECK(has(refused.out, "refused(rank)"));
  CHECK(has(refused.out, "refused(reducible)"));

  CHECK(run({"sweep", "--types", ""}).code == kExitUsage);
  CHECK(run({"sweep", "--ms", ""}).code == kExitUsage);
  CHECK(run({"sweep", "--ms", "1,x"}).code == kExitUsage);
}

TEST_CASE("output is independent of the thread count") {
  const std::vector<std::string> base{"sweep", "--types", "A3,D4,H3,I2(7)", "--ms", "1,2"};
  auto with = [&](const char* t) {
    auto args = base;
    args.insert(args.end(), {"--threads", t});
    return run(args).out;
  };
  const auto one = with("1");
  CHECK(one == with("4"));
  CHECK(one == with("0"));

  ::setenv("GCC_AUT_THREADS", "3", 1);
  CHECK(run(base).out == one);
  ::setenv("GCC_AUT_THREADS", "zero", 1);  // malformed values fall back to one thread
  CHECK(run(base).out == one);
  ::unsetenv("GCC_AUT_THREADS");

  const std::vector<std::string> facets{"facets", "--type", "D4", "--m", "2", "--format", "json"};
  auto facets_with = [&](const char* t) {
    auto args = facets;
    args.insert(args.end(), {"--threads", t});
    return run(args).out;
  };
  CHECK(facets_with("1") == facets_with("4"));
  CHECK(facets_with("1") == facets_with("0"));

  CHECK(run({"build", "--type", "E6", "--m", "1", "--threads", "1"}).out ==
        run({"build", "--type", "E6", "--m", "1", "--threads", "8"}).out);
}

TEST_CASE("exported graphs round-trip through recover") {
  const auto path = temp_file("gccaut_cli_roundtrip.json");
  for (const auto& [type, m] : std::vector<std::pair<std::string, std::string>>{
           {"A3", "2"}, {"B3", "1"}, {"I2(7)", "2"}, {"A1xA2", "1"}}) {
    CAPTURE(type);
    REQUIRE(run({"build", "--type", type, "--m", m, "--out", path.string()}).code == kExitOk);
    const auto rec = run({"recover", "--in", path.string(), "--format", "json"});
    REQUIRE(rec.code == kExitOk);
    const auto j = json::parse(rec.out);
    CHECK(j["type"] == type);
    CHECK(j["m"] == std::stoi(m));
  }
  std::filesystem::remove(path);
  CHECK(run({"recover", "--in", temp_file("gccaut_missing.json").string()}).code == kExitUsage);
  CHECK(run({"build", "--type", "A2", "--m", "1", "--out", "/nonexistent/dir/x.json"}).code == kExitUsage);
}

TEST_CASE("budget strings") {
  CHECK(parse_budget("1s") == std::chrono::milliseconds(1000));
  CHECK(parse_budget("500ms") == std::chrono::milliseconds(500));
  CHECK(parse_budget("2m") == std::chrono::milliseconds(120000));
  CHECK(!parse_budget("").has_value());
  CHECK(!parse_budget("ms").has_value());
  CHECK(!parse_budget("-1s").has_value());
  CHECK(!parse_budget("3h").has_value());
}
