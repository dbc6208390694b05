#include <doctest.h>

#include <filesystem>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = polylab::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("generate petersen to stdout") {
  const auto r = run({"generate", "petersen"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("10 3\n", 0) == 0);
}

TEST_CASE("polygraph and analyze round trip through files") {
  const auto dir = std::filesystem::temp_directory_path();
  const auto base = (dir / "polylab_cli_base.edges").string();
  const auto prefix = (dir / "polylab_cli_poly").string();
  REQUIRE(run({"generate", "petersen", "--out", base}).code == 0);
  const auto p = run({"polygraph", base, "--S", "1,1,0", "--out", prefix});
  REQUIRE(p.code == 0);
  const auto j = nlohmann::json::parse(p.out);
  CHECK(j["vertices"] == 1000);
  CHECK(j["degree"] == 27);
  CHECK(j["measured_b"] == 6);
  CHECK(std::filesystem::exists(prefix + ".json"));
  const auto a = run({"analyze", prefix + ".edges", "--require-ab", "--no-spectrum"});
  CHECK(a.code == 0);
  CHECK(nlohmann::json::parse(a.out)["b"] == 6);
  for (const auto& f : {base, prefix + ".edges", prefix + ".json"}) std::filesystem::remove(f);
}

TEST_CASE("bounds subcommands") {
  const auto r = run({"bounds", "abtb", "5", "2"});
  CHECK(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["abtb"].get<double>() == doctest::Approx(4.82842712));
  const auto t = run({"bounds", "table", "--format", "csv"});
  CHECK(t.code == 0);
  CHECK(t.out.find("0.062") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"generate", "nonsense"}).code == 2);
  CHECK(run({"bounds", "abtb", "3", "3"}).code == 2);
  CHECK(run({"generate", "random-regular", "--n", "10", "--d", "3", "--girth", "9", "--seed", "1", "--max-tries", "2"})
            .code == 3);
  CHECK(run({"polygraph", "/nonexistent/file.edges", "--S", "1,1,0"}).code == 2);
}
