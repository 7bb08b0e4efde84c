#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "turaev/fixtures.hpp"
#include "turaev/parallel.hpp"
#include "turaev/report.hpp"

using namespace turaev;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(TURAEV_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  const int st = pclose(p);
  r.status = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::string fixture(const std::string& name) { return std::string(TURAEV_DATA_DIR) + "/fixtures/" + name + ".pd"; }

report::Json first_json(const std::string& out) { return report::Json::parse(out.substr(0, out.find('\n'))); }

fs::path temp_dir(const std::string& name) {
  auto p = fs::temp_directory_path() / ("turaev_test_" + name);
  fs::remove_all(p);
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST_CASE("info reports genus and adequacy") {
  auto r = run("info " + fixture("TREFOIL"));
  CHECK(r.status == 0);
  auto j = first_json(r.out);
  CHECK(j["genus"] == 0);
  CHECK(j["adequacy"] == "adequate");
  r = run("info " + fixture("PSEUDOTREF"));
  j = first_json(r.out);
  CHECK(j["genus"] == 1);
  CHECK(j["adequacy"] == "inadequate-diagram");
  CHECK(j["s_a"] == 2);
  CHECK(j["s_b"] == 1);
}

TEST_CASE("malformed input exits 2") {
  const auto dir = temp_dir("bad");
  std::ofstream(dir / "bad.pd") << "X[1,2,3\n";
  auto r = run("info " + (dir / "bad.pd").string());
  CHECK(r.status == 2);
  CHECK(first_json(r.out).contains("error"));
  CHECK(run("reduce " + (dir / "bad.pd").string()).status == 2);
  CHECK(run("info /nonexistent/file.pd").status == 2);
  CHECK(run("frobnicate").status == 2);
  CHECK(run("info --format dot " + fixture("TREFOIL")).status == 2);
  // Good files still report when a bad one is present.
  r = run("info " + fixture("TREFOIL") + " " + (dir / "bad.pd").string());
  CHECK(r.status == 2);
  CHECK(first_json(r.out)["genus"] == 0);
}

TEST_CASE("classify") {
  auto r = run("classify " + fixture("PSEUDOTREF") + " " + fixture("GEN2-A") + " " + fixture("CONNSUM"));
  CHECK(r.status == 0);
  std::istringstream lines(r.out);
  std::string line;
  std::vector<report::Json> js;
  while (std::getline(lines, line)) js.push_back(report::Json::parse(line));
  REQUIRE(js.size() == 3);
  CHECK(js[0]["cycle"]["summary"] == "cycle of 2 tangles");
  CHECK(js[0]["almost_alternating"]["status"] == "ok");
  CHECK(js[1]["descriptor"]["case"].is_number());
  CHECK(js[1]["descriptor"]["vertex_valence"] == report::Json::array({4}));
  CHECK(js[2]["refused"] == "composite");
}

TEST_CASE("classify graph output") {
  auto dot = run("classify --format dot " + fixture("CYCLE4"));
  CHECK(dot.status == 0);
  CHECK(dot.out.rfind("graph decomposition {", 0) == 0);
  CHECK(std::count(dot.out.begin(), dot.out.end(), '\n') == 2 + 4 + 8 + 1);
  auto collapsed = run("classify --format dot --collapse " + fixture("GEN2-A"));
  CHECK(collapsed.out.find("ribbon 1") != std::string::npos);
  auto svg = run("classify --format svg " + fixture("CYCLE4"));
  CHECK(svg.out.rfind("<svg", 0) == 0);
  CHECK(std::count(svg.out.begin(), svg.out.end(), '\n') == 1 + 8 + 8 + 1);
  auto text = run("classify --format text " + fixture("GEN2-B"));
  CHECK(text.out.find("descriptor.case: 8") != std::string::npos);
}

TEST_CASE("reduce") {
  auto r = run("reduce " + fixture("GEN2-A"));
  CHECK(r.status == 0);
  CHECK(first_json(r.out)["cutting_steps"] == 2);
  r = run("reduce " + fixture("TREFOIL"));
  CHECK(r.status == 0);
  CHECK(first_json(r.out)["steps"].empty());
  const auto dir = temp_dir("ladders");
  r = run("reduce --out " + dir.string() + " " + fixture("GEN2-A"));
  CHECK(fs::exists(dir / "GEN2-A.ladder.json"));
}

TEST_CASE("check") {
  auto r = run("check " + fixture("TORUSGRID"));
  CHECK(r.status == 0);
  auto j = first_json(r.out);
  CHECK(j["verdict"] == "obstructed");
  CHECK(j["complexity"]["value"].get<int>() > 2);
  j = first_json(run("check --turaev " + fixture("PSEUDOTREF")).out);
  CHECK(j["complexity"]["value"] == 2);
  j = first_json(run("check " + fixture("TREFOIL")).out);
  CHECK(j["verdict"] == "not-applicable");
  j = first_json(run("check " + fixture("PSEUDOTREF")).out);
  CHECK(j.contains("refused"));
}

TEST_CASE("corpus") {
  auto r = run("corpus --max-crossings 3");
  CHECK(r.status == 0);
  const std::string tref = to_pd_string(canonical_code(fixtures::trefoil()));
  CHECK(r.out.find("\"pd\":\"" + tref + "\"") != std::string::npos);
  CHECK(run("corpus --max-crossings 0").out.empty());
  const auto a = run("corpus --max-crossings 4 --random 50 --seed 7 --jobs 3");
  const auto b = run("corpus --max-crossings 4 --random 50 --seed 7 --jobs 1");
  CHECK(a.out == b.out);
  CHECK(a.out != run("corpus --max-crossings 4 --random 50 --seed 8").out);
  const auto dir = temp_dir("corpus");
  run("corpus --max-crossings 2 --out " + dir.string());
  CHECK(fs::exists(dir / "manifest.jsonl"));
  CHECK(fs::exists(dir / "000000.pd"));
}

TEST_CASE("reports are deterministic across job counts") {
  const std::string files = fixture("PSEUDOTREF") + " " + fixture("AA6") + " " + fixture("GEN2-A") + " " + fixture("GEN2-B") +
                            " " + fixture("CYCLE4");
  CHECK(run("classify --jobs 4 " + files).out == run("classify --jobs 1 " + files).out);
  CHECK(run("reduce --jobs 3 " + files).out == run("reduce " + files).out);
}

TEST_CASE("parallel_map keeps input order and rethrows") {
  const auto out = parallel_map<int>(100, 4, [](int i) { return i * i; });
  for (int i = 0; i < 100; ++i) CHECK(out[i] == i * i);
  CHECK(parallel_map<int>(0, 4, [](int i) { return i; }).empty());
  CHECK_THROWS_AS(parallel_map<int>(10, 2,
                                    [](int i) {
                                      if (i == 5) throw DiagramError(DiagramError::Kind::precondition, "boom");
                                      return i;
                                    }),
                  DiagramError);
}

TEST_CASE("text rendering flattens paths") {
  report::Json j;
  j["a"] = 1;
  j["b"]["c"] = "x";
  j["d"] = report::Json::array({report::Json{{"e", 2}}});
  CHECK(report::text(j) == "a: 1\nb.c: x\nd[0].e: 2\n");
}
