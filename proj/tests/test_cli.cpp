#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include <json.hpp>

#include "qvcount/cli.hpp"

using Json = nlohmann::ordered_json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = qvc::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

Json report(const std::vector<std::string>& args) {
  auto r = run(args);
  REQUIRE(r.code == 0);
  return Json::parse(r.out);
}

bool has_float(const std::string& s) { return std::regex_search(s, std::regex(R"(\d\.\d|[eE][+-]\d)")); }

std::filesystem::path temp_file(const std::string& name, const std::string& text) {
  auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_CASE("documented examples") {
  auto c = report({"count", "--quiver", "a2", "--v", "1,1", "--w", "1,1", "--lambda", "1/2,1/2"});
  CHECK(c["result"]["count"] == 1);
  CHECK(c["result"]["status"] == "proven-finite-type");
  CHECK(c["status"] == "proven-finite-type");
  CHECK(c["command"] == "count");
  CHECK(c["inputs"]["lambda"] == "1/2,1/2");
  CHECK(c.contains("version"));

  auto f = report({"flat", "--quiver", "vertex", "--v", "2", "--w", "1"});
  CHECK(f["result"]["flat"] == false);
  CHECK(f["result"]["witness"]["roots"].size() == 2);

  auto h = run({"--help"});
  CHECK(h.code == 0);
  CHECK(h.out.find("Usage") != std::string::npos);
  CHECK(run({"count", "--help"}).code == 0);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"nonsense"}).code == 2);
  CHECK(run({"count", "--quiver", "a2", "--v", "1,x", "--w", "1,1", "--lambda", "0,0"}).code == 2);
  CHECK(run({"count", "--quiver", "a2", "--v", "1", "--w", "1,1", "--lambda", "0,0"}).code == 2);
  CHECK(run({"count", "--quiver", "a2", "--v", "1,1", "--w", "1,1", "--lambda", "0.5,0"}).code == 2);
  CHECK(run({"count", "--quiver", "nope", "--v", "1", "--w", "1", "--lambda", "0"}).code == 2);
  CHECK(run({"mullineux", "--partition", "1,1", "--e", "2"}).code == 2);
  CHECK(run({"singular", "--v", "1", "--w", "2", "--lambda", "0"}).code == 2);

  auto big = run({"flat", "--quiver", "vertex", "--v", "40", "--w", "1"});
  CHECK(big.code == 3);
  CHECK(Json::parse(big.out)["error"] == "resource");

  auto file = temp_file("qvcount_two_loops.txt", "vertices: 1\narrows: [[0,0],[0,0]]\n");
  auto un = run({"walls", "--kind", "singular", "--quiver", file.string(), "--v", "1", "--w", "1"});
  CHECK(un.code == 4);
  auto j = Json::parse(un.out);
  CHECK(j["error"] == "unsupported");
  CHECK(j["reason"].is_string());
}

TEST_CASE("count reports not-computable without failing") {
  auto file = temp_file("qvcount_kron3.json", R"({"vertices": 2, "arrows": [[0,1],[0,1],[0,1]]})");
  auto r = report({"count", "--quiver", file.string(), "--v", "1,1", "--w", "1,0", "--lambda", "0,0"});
  CHECK(r["result"]["count"].is_null());
  CHECK(r["status"] == "not-computable");
}

TEST_CASE("every command emits a status and no floats") {
  std::vector<std::vector<std::string>> cmds = {
      {"count", "--quiver", "cyclic:2", "--v", "1,1", "--w", "1,0", "--lambda", "1/3,1/3"},
      {"count", "--quiver", "jordan", "--v", "3", "--w", "1", "--lambda", "2/3"},
      {"mult", "--quiver", "a2", "--v", "1,1", "--w", "1,1"},
      {"walls", "--quiver", "a2", "--v", "1,1", "--w", "1,1", "--chambers"},
      {"walls", "--quiver", "cyclic:2", "--kind", "quantum", "--v", "2,2", "--lambda", "1/4,1/4"},
      {"walls", "--quiver", "jordan", "--kind", "singular", "--v", "3", "--w", "2"},
      {"walls", "--quiver", "vertex", "--kind", "translation", "--v", "1", "--w", "2", "--alpha", "1", "--chi", "3"},
      {"slice", "--quiver", "cyclic:2", "--v", "2,2", "--w", "1,0", "--v0", "0,0", "--summand", "1,1:2", "--lambda",
       "1/3,1/3"},
      {"flat", "--quiver", "cyclic:3", "--v", "2,2,2", "--w", "1,0,0"},
      {"wallcross", "--partition", "4,2,1", "--m", "2"},
      {"mullineux", "--partition", "4,2,1", "--e", "3"},
      {"fock-filtration", "--m", "2", "--r", "1", "--n", "4"},
      {"singular", "--v", "1", "--w", "3", "--lambda", "-2"},
      {"perverse", "--n", "7", "--m", "3"},
  };
  for (const auto& args : cmds) {
    for (const char* fmt : {"json", "csv"}) {
      auto full = args;
      full.push_back("--format");
      full.push_back(fmt);
      auto r = run(full);
      CAPTURE(args[0]);
      REQUIRE(r.code == 0);
      if (std::string(fmt) == "json") {
        auto j = Json::parse(r.out);
        auto body = j;
        body.erase("version");
        CHECK_FALSE(has_float(body.dump()));
        CHECK(j["status"].is_string());
        CHECK(j["inputs"].is_object());
        CHECK(j["version"].is_string());
      } else {
        CHECK_FALSE(has_float(r.out));
        CHECK(r.out.substr(0, r.out.find('\n')).find("status") != std::string::npos);
      }
    }
  }
}

TEST_CASE("reports replay to identical results") {
  std::vector<std::vector<std::string>> cmds = {
      {"count", "--quiver", "a3", "--v", "1,1,1", "--w", "1,0,1", "--lambda", "1/2,0,1/2"},
      {"slice", "--quiver", "vertex", "--v", "2", "--w", "2", "--v0", "0", "--summand", "1:2"},
      {"walls", "--quiver", "a2", "--v", "1,1", "--w", "1,1", "--chambers"},
      {"sweep", "--quiver", "a1", "--w", "2", "--grid-v", "0;1;2", "--grid-lambda", "0;1/2"},
  };
  int k = 0;
  for (const auto& args : cmds) {
    auto first = run(args);
    REQUIRE(first.code == 0);
    auto file = temp_file("qvcount_report_" + std::to_string(k++) + ".json", first.out);
    auto again = run({"replay", "--report", file.string()});
    REQUIRE(again.code == 0);
    auto a = Json::parse(first.out), b = Json::parse(again.out);
    CHECK(a["result"].dump() == b["result"].dump());
    CHECK(a["inputs"].dump() == b["inputs"].dump());
    CHECK(a["status"] == b["status"]);
  }
  auto bad = temp_file("qvcount_bad_report.json", "{not json");
  CHECK(run({"replay", "--report", bad.string()}).code == 2);
}

TEST_CASE("sweeps") {
  auto t = report({"sweep", "--quiver", "a1", "--w", "2", "--grid-v", "0;1;2", "--grid-lambda",
                   "-3;-2;-1;0;1;2;3;1/2"});
  const auto& rows = t["result"]["rows"];
  REQUIRE(rows.size() == 24);
  for (const auto& row : rows) {
    const auto v = row["v"][0].get<int>();
    const bool integral = row["lambda"][0].get<std::string>().find('/') == std::string::npos;
    if (v != 1) CHECK(row["count"] == 1);
    else CHECK(row["count"] == (integral ? 1 : 0));
  }

  auto empty = run({"sweep", "--quiver", "a1", "--w", "2", "--grid-v", "", "--lambda", "0"});
  CHECK(empty.code == 0);
  CHECK(Json::parse(empty.out)["result"]["rows"].empty());

  // the Jordan quiver: a count of 1 exactly when the denominator is n; integral points only at v = 0
  std::string grid;
  for (int m = 1; m <= 5; ++m)
    for (int r = -6; r <= 6; ++r) {
      if (std::gcd(r, m) != 1) continue;
      grid += (grid.empty() ? "" : ";") + std::to_string(r) + "/" + std::to_string(m);
    }
  auto j = report({"sweep", "--quiver", "jordan", "--w", "1", "--grid-v", "1;2;3;4", "--grid-lambda", grid});
  for (const auto& row : j["result"]["rows"]) {
    const int n = row["v"][0].get<int>();
    const auto text = row["lambda"][0].get<std::string>();
    const auto slash = text.find('/');
    const int den = slash == std::string::npos ? 1 : std::stoi(text.substr(slash + 1));
    const bool want = den == 1 ? n == 0 : den == n;
    CHECK(row["count"] == (want ? 1 : 0));
  }

  // ordering is fixed by the grid whatever the thread count
  std::vector<std::string> base = {"sweep", "--quiver", "a2", "--w", "1,1", "--grid-v", "0,0;1,0;1,1;2,1;1,2;2,2",
                                   "--grid-lambda", "0,0;1/2,1/2;1/3,2/3"};
  auto one = base, many = base;
  one.insert(one.end(), {"--threads", "1"});
  many.insert(many.end(), {"--threads", "6"});
  CHECK(report(one)["result"].dump() == report(many)["result"].dump());

  auto csv = run({"sweep", "--quiver", "a1", "--w", "1", "--grid-v", "0;1", "--lambda", "0", "--format", "csv"});
  CHECK(csv.out.substr(0, csv.out.find('\n')) == "v,lambda,count,status,branch");
}

TEST_CASE("the installed binary behaves like the library entry point") {
  const char* bin = std::getenv("QVCOUNT_BIN");
  if (!bin) {
    MESSAGE("QVCOUNT_BIN not set; skipping");
    return;
  }
  auto cmd = std::string(bin) + " count --quiver a2 --v 1,1 --w 1,1 --lambda 1/2,1/2";
  std::array<char, 4096> buf{};
  std::string out;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  while (fgets(buf.data(), buf.size(), pipe)) out += buf.data();
  int status = pclose(pipe);
  CHECK(status == 0);
  CHECK(Json::parse(out)["result"]["count"] == 1);
  CHECK(std::system((std::string(bin) + " --help > /dev/null").c_str()) == 0);
  int rc = std::system((std::string(bin) + " flat --quiver vertex --v 40 --w 1 > /dev/null 2>&1").c_str());
  CHECK(WEXITSTATUS(rc) == 3);
}
