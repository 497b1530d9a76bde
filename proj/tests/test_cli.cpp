#include "doctest.h"

#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "hearts/cli/commands.hpp"
#include "hearts/error.hpp"

using namespace hearts;
using namespace hearts::cli;
using nlohmann::json;

namespace {

std::string fixture(const std::string& name) { return std::string(HEARTS_FIXTURE_DIR) + "/" + name + ".workspace"; }

struct Run {
  int code;
  std::string out, err;
};

Run invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "hearts");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& stem, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / (stem + "-" + std::to_string(::getpid()) + ".workspace");
  std::ofstream(path) << text;
  return path.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

}  // namespace

TEST_CASE("json reports are byte identical across runs") {
  const std::vector<std::string> args = {"verify-halfexact", "--workspace", fixture("ex62"), "--pair", "pair1",
                                         "--random", "12", "--seed", "7", "--json"};
  Run a = invoke(args), b = invoke(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  json j = json::parse(a.out);
  CHECK(j["schema_version"] == "1");
  CHECK(j["command"]["name"] == "verify-halfexact");
  CHECK(j["seed"] == 7);
  CHECK(j["summary"]["fail"] == 0);
  CHECK(j["records"].is_array());
}

TEST_CASE("different seeds sample different conflations") {
  auto run = [](const char* seed) {
    return json::parse(invoke({"verify-halfexact", "--workspace", fixture("ex62"), "--pair", "pair1", "--random", "6",
                               "--seed", seed, "--json"})
                           .out)["records"];
  };
  CHECK(run("3") != run("4"));
}

TEST_CASE("exit codes separate pass, failure, usage and inconclusive") {
  CHECK(invoke({"check-algebra", "--workspace", fixture("a2")}).code == 0);
  CHECK(invoke({"enumerate-pairs", "--workspace", fixture("a2"), "--limit", "1"}).code == 3);
  CHECK(invoke({"heart", "--workspace", fixture("a2"), "--pair", "missing"}).code == 2);
  CHECK(invoke({"not-a-command", "--workspace", fixture("a2")}).code == 2);
  CHECK(invoke({"heart"}).code == 2);
  CHECK(invoke({"heart", "--workspace", "/nonexistent/x.workspace", "--pair", "p"}).code == 2);

  // a wrong expectation turns into a failed record
  json j = json::parse(slurp(fixture("a2")));
  j["expected"]["hearts"]["pair1"] = json::array({"S1"});
  Run r = invoke({"heart", "--workspace", write_temp("wrong-heart", j.dump()), "--pair", "pair1", "--json"});
  CHECK(r.code == 1);
  CHECK(json::parse(r.out)["summary"]["fail"].get<int>() >= 1);
}

TEST_CASE("help goes to stdout with exit zero") {
  Run r = invoke({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("--workspace") != std::string::npos);
}

TEST_CASE("workspaces survive a json round trip") {
  for (const char* name : {"a2", "ex61", "ex62"}) {
    CAPTURE(name);
    Workspace w = Workspace::load(fixture(name));
    json once = w.to_json();
    Workspace back = Workspace::from_json(once);
    CHECK(back.to_json() == once);
    CHECK(back.catalog_names() == w.catalog_names());
    for (const auto& m : w.modules()) CHECK(back.module(m.name) == m.module);
  }
}

TEST_CASE("malformed entries are reported with their line") {
  std::string text = slurp(fixture("a2"));
  const std::string good = R"({"name": "S2", "dims": [0, 1]})";
  REQUIRE(text.find(good) != std::string::npos);
  std::size_t line = 1;
  for (std::size_t i = 0; i < text.find(good); ++i) line += text[i] == '\n';
  text.replace(text.find(good), good.size(), R"({"name": "S2", "dims": [0, 1, 4]})");
  std::string path = write_temp("bad-dims", text);
  try {
    Workspace::load(path);
    FAIL("load accepted a bad dimension vector");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Workspace);
    std::string what = e.what();
    CHECK(what.find(path + ":" + std::to_string(line) + ":") != std::string::npos);
    CHECK(what.find("S2") != std::string::npos);
  }
  Run r = invoke({"check-algebra", "--workspace", path});
  CHECK(r.code == 2);
  CHECK(r.err.find(":" + std::to_string(line) + ":") != std::string::npos);
}

TEST_CASE("workspace validation rejects inconsistent input") {
  json base = json::parse(slurp(fixture("a2")));
  auto rejects = [](const json& j) {
    try {
      Workspace::from_json(j);
    } catch (const Error& e) {
      return e.kind() == ErrorKind::Workspace;
    }
    return false;
  };
  json dup = base;
  dup["pairs"].push_back(dup["pairs"][0]);
  CHECK(rejects(dup));
  json unknown = base;
  unknown["subcategories"][0]["generators"].push_back("Q7");
  CHECK(rejects(unknown));
  json arrow = base;
  arrow["modules"][0]["arrows"]["z"] = json::array({json::array({1})});
  CHECK(rejects(arrow));
  json relation = base;
  relation["modules"][0]["arrows"]["a"] = json::array({json::array({1, 0})});
  CHECK(rejects(relation));
}

TEST_CASE("command arguments are validated") {
  Workspace w = Workspace::load(fixture("ex61"));
  Options o;
  o.command = "heart";
  CHECK_THROWS_AS(run(o, w), Error);
  o.command = "compare";
  o.from = "pair1";
  CHECK_THROWS_AS(run(o, w), Error);
  o.to = "pair2";
  Report r = run(o, w);
  CHECK(r.count(Status::Fail) == 0);
}

TEST_CASE("text and json reports carry the same verdicts") {
  Workspace w = Workspace::load(fixture("ex62"));
  Options o;
  o.command = "membership";
  o.pair = "pair2";
  o.object = "3/5";
  Report r = run(o, w);
  json j = r.to_json();
  REQUIRE(j["records"].size() == r.records().size());
  std::string text = r.to_text();
  for (const auto& rec : r.records()) {
    std::string tag = to_string(rec.status);
    for (auto& c : tag) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    CHECK(text.find(tag + " " + rec.name) != std::string::npos);
  }
  CHECK(j["summary"]["pass"] == r.count(Status::Pass));
}

TEST_CASE("certification can be emitted with check-algebra") {
  Run r = invoke({"check-algebra", "--workspace", fixture("a2"), "--emit-certification", "--json"});
  CHECK(r.code == 0);
  json j = json::parse(r.out);
  json table = certification_table(Workspace::load(fixture("a2")));
  CHECK(j["data"]["certification"] == table);
}
