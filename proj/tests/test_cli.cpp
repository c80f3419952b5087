#include "hydra/cli.hpp"

#include <doctest.h>
#include <nlohmann/json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace hydra;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result hydra_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "hydra");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  int code = cli_main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_spec(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("hydra_test_" + name + ".spec");
  std::ofstream(path) << text;
  return path.string();
}

std::string replace_all(std::string s, const std::string& from, const std::string& to) {
  for (auto pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size())) s.replace(pos, from.size(), to);
  return s;
}

}  // namespace

TEST_CASE("command names round-trip") {
  for (const char* name : {"funs", "auts", "u25", "lift-check", "bounds", "report", "genesis", "verify-all"}) {
    auto c = parse_command(name);
    REQUIRE(c.has_value());
    CHECK(command_name(*c) == name);
  }
  CHECK_FALSE(parse_command("prove").has_value());
}

TEST_CASE("funs lists the H3 fundamental table") {
  auto r = hydra_cli({"funs", "H3", "--format", "json"});
  CHECK(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["command"] == "funs");
  CHECK(doc["verdict"] == "PASS");
  REQUIRE(doc["reports"].size() == 1);
  const auto& rep = doc["reports"][0];
  CHECK(rep["field"] == "H3");
  CHECK(rep["table"].size() == 26);
  CHECK(rep["counts"]["fundamentals"] == 26);
  CHECK(rep["counts"]["automorphisms"].is_null());
  CHECK(r.err.find("[hydra]") != std::string::npos);
}

TEST_CASE("JSON output round-trips byte for byte") {
  for (const char* cmd : {"funs", "auts", "u25", "bounds", "lift-check"}) {
    CAPTURE(cmd);
    auto r = hydra_cli({cmd, "H3", "--format", "json"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out).dump(2) + "\n" == r.out);
  }
  auto g = hydra_cli({"genesis", "--format", "json"});
  CHECK(g.code == 0);
  CHECK(json::parse(g.out).dump(2) + "\n" == g.out);
}

TEST_CASE("usage errors exit with code 2") {
  auto h6 = hydra_cli({"auts", "H6"});
  CHECK(h6.code == 2);
  CHECK(h6.err.find("H6") != std::string::npos);
  CHECK(hydra_cli({"prove", "H3"}).code == 2);
  CHECK(hydra_cli({}).code == 2);
  CHECK(hydra_cli({"funs", "H3", "--format", "xml"}).code == 2);
  CHECK(hydra_cli({"funs", "H3", "--workers", "0"}).code == 2);
  CHECK(hydra_cli({"funs", "H3", "--spec", "/nonexistent/h3.spec"}).code == 2);
  CHECK(hydra_cli({"funs", "H3", "--spec", temp_spec("broken", "name H3\ncolour blue\n")}).code == 2);
  CHECK(hydra_cli({"--help"}).code == 0);
}

TEST_CASE("environment variables fill unset flags") {
  setenv("HYDRA_FORMAT", "json", 1);
  setenv("HYDRA_FIELD", "H2", 1);
  auto r = hydra_cli({"auts"});
  unsetenv("HYDRA_FORMAT");
  unsetenv("HYDRA_FIELD");
  CHECK(r.code == 0);
  auto doc = json::parse(r.out);
  REQUIRE(doc["reports"].size() == 1);
  CHECK(doc["reports"][0]["field"] == "H2");
  CHECK(doc["reports"][0]["counts"]["automorphisms"] == 2);
}

TEST_CASE("a spec file can add a field") {
  std::string text = replace_all(builtin_spec_text("H3"), "name H3", "name Hydra3copy");
  auto r = hydra_cli({"report", "Hydra3copy", "--format", "json", "--spec", temp_spec("copy", text)});
  CHECK(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["reports"][0]["field"] == "Hydra3copy");
  CHECK(doc["reports"][0]["counts"]["u25_pairs"] == 120);
}

TEST_CASE("a spec file with a wrong generator fails verification") {
  std::string text = replace_all(builtin_spec_text("H3"), "alpha^2-alpha+1", "alpha^2+alpha+1");
  auto r = hydra_cli({"funs", "H3", "--spec", temp_spec("wrong", text)});
  CHECK(r.code == 1);
  CHECK(r.out.find("FAIL") != std::string::npos);
}

TEST_CASE("the prime override is reported") {
  auto r = hydra_cli({"funs", "H3", "--format", "json", "--prime-start", "2000000"});
  CHECK(r.code == 0);
  auto doc = json::parse(r.out);
  bool found = false;
  for (const auto& s : doc["reports"][0]["stages"]) {
    if (s["name"] == "sieve") {
      found = true;
      CHECK(s["pass"] == true);
    }
  }
  CHECK(found);
}

TEST_CASE("verify-all passes every field and genesis") {
  auto r = hydra_cli({"verify-all", "--format", "json", "--workers", "2"});
  CHECK(r.code == 0);
  auto doc = json::parse(r.out);
  CHECK(doc["verdict"] == "PASS");
  REQUIRE(doc["reports"].size() == 4);
  const std::vector<std::string> fields = {"H2", "H3", "H4", "H5"};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(doc["reports"][i]["field"] == fields[i]);
    CHECK(doc["reports"][i]["verdict"] == "PASS");
    CHECK(doc["reports"][i]["violations"].empty());
  }
  CHECK(doc["genesis"]["verdict"] == "PASS");
  CHECK(doc["scope"].get<std::string>().find("out of scope") != std::string::npos);

  auto text = hydra_cli({"verify-all"});
  CHECK(text.code == 0);
  CHECK(text.out.find("overall: PASS") != std::string::npos);
}
