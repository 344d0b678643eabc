#include <doctest.h>

#include <filesystem>
#include <json.hpp>
#include <sstream>

#include "commands.hpp"

using namespace siegel::cli;
using json = nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
  json report() const { return json::parse(out); }
};

Result run_args(std::vector<std::string> args) {
  args.insert(args.begin(), "siegel");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("catalog chars") {
  const auto r = run_args({"catalog", "chars"});
  REQUIRE(r.code == kExitPass);
  const auto j = r.report();
  CHECK(j["schema"] == 1);
  CHECK(j["result"]["even"].size() == 10);
  CHECK(j["result"]["odd"].size() == 6);
  CHECK(j["result"]["symplectic_permutations"] == 720);
}

TEST_CASE("catalog dtable and riemann") {
  const auto d = run_args({"catalog", "dtable"});
  CHECK(d.code == kExitPass);
  CHECK(d.report()["result"]["entries"].size() == 15);
  const auto r = run_args({"catalog", "riemann", "--points", "3"});
  CHECK(r.code == kExitPass);
  CHECK(r.report()["result"]["entries"].size() == 20);
}

TEST_CASE("catalog relations in a prime field") {
  const auto r = run_args({"catalog", "reld", "--coeff-mode", "p1", "--points", "2"});
  REQUIRE(r.code == kExitPass);
  const auto j = r.report();
  CHECK(j["result"]["count"] == 20);
  CHECK(j["result"]["entries"][0]["status"] == "verified");
}

TEST_CASE("bad arguments exit with 2") {
  CHECK(run_args({"catalog", "nothing"}).code == kExitError);
  CHECK(run_args({"verify"}).code == kExitError);
  CHECK(run_args({"verify", "numeric", "--coeff-mode", "z"}).code == kExitError);
  CHECK(run_args({"verify", "numeric", "--points", "0"}).code == kExitError);
}

TEST_CASE("derivation errors exit with 2") {
  // radius too small for the requested precision
  const auto r = run_args({"verify", "numeric", "--radius", "1", "--eps", "1e-15"});
  CHECK(r.code == kExitError);
  CHECK(r.report().contains("error"));
}

TEST_CASE("identical manifests give identical reports") {
  const auto a = run_args({"verify", "wieber", "--seed", "3", "--points", "4"});
  const auto b = run_args({"verify", "wieber", "--seed", "3", "--points", "4"});
  CHECK(a.code == kExitPass);
  CHECK(a.out == b.out);
}

TEST_CASE("warm and cold cache agree") {
  const auto dir = (std::filesystem::temp_directory_path() / "siegel-cli-cache-test").string();
  std::filesystem::remove_all(dir);
  const auto cold = run_args({"verify", "allrel", "--coeff-mode", "p2", "--cache-dir", dir});
  const auto warm = run_args({"verify", "allrel", "--coeff-mode", "p2", "--cache-dir", dir});
  CHECK(cold.code == kExitPass);
  CHECK(cold.out == warm.out);
  CHECK(!std::filesystem::is_empty(dir));
  std::filesystem::remove_all(dir);
}

TEST_CASE("report written to a file") {
  const auto path = (std::filesystem::temp_directory_path() / "siegel-cli-report.json").string();
  const auto r = run_args({"catalog", "chars", "--out", path});
  CHECK(r.code == kExitPass);
  CHECK(r.out.empty());
  CHECK(std::filesystem::file_size(path) > 0);
  std::filesystem::remove(path);
}
