#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>

#include <json.hpp>

#include "h8/h8.h"

#ifndef H8_CLI_PATH
#define H8_CLI_PATH "h8cli"
#endif
#ifndef H8_ASSETS_DIR
#define H8_ASSETS_DIR "assets"
#endif

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = "") {
  std::string cmd = env + (env.empty() ? "" : " ") + "'" + std::string(H8_CLI_PATH) + "' " + args + " 2>/dev/null";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p);
  char buf[4096];
  size_t n;
  while ((n = fread(buf, 1, sizeof buf, p)) > 0) r.out.append(buf, n);
  int st = pclose(p);
  r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
  return r;
}

std::vector<std::string> asset_body(const std::string& file) {
  std::ifstream in(std::string(H8_ASSETS_DIR) + "/" + file);
  std::vector<std::string> lines;
  std::string l;
  while (std::getline(in, l))
    if (!l.empty() && l[0] != '#') lines.push_back(l);
  return lines;
}

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream in(s);
  std::string l;
  while (std::getline(in, l)) v.push_back(l);
  return v;
}

fs::path copy_assets() {
  fs::path dir = fs::temp_directory_path() / ("h8_assets_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  fs::create_directories(dir);
  for (auto& e : fs::directory_iterator(H8_ASSETS_DIR)) fs::copy_file(e.path(), dir / e.path().filename());
  return dir;
}

}  // namespace

TEST_CASE("verify reports and exit codes") {
  auto r = run("verify runge --seed 1");
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["schema"] == "h8-report/1");
  CHECK(j["passed"] == true);
  CHECK(j["config"]["seed"] == 1);
  for (auto& c : j["modules"][0]["checks"]) {
    CHECK(c.contains("provenance"));
    CHECK(c["seed"] == 1);
    CHECK_FALSE(c.contains("seconds"));
  }
  // a module containing a failing paper claim exits 1 and says which
  auto cs = run("verify charspace");
  CHECK(cs.code == 1);
  auto jc = json::parse(cs.out);
  int fails = 0;
  for (auto& c : jc["modules"][0]["checks"]) fails += c["status"] == "fail";
  CHECK(fails == jc["summary"]["fail"].get<int>());
  CHECK(fails >= 1);
}

TEST_CASE("reports are byte-identical across runs") {
  auto a = run("verify charspace --seed 1"), b = run("verify charspace --seed 1");
  CHECK(a.out == b.out);
  auto c = run("verify runge --seed 1"), d = run("verify runge --seed 1");
  CHECK(c.out == d.out);
}

TEST_CASE("timings only when asked") {
  auto r = run("--timings verify exactalg");
  auto j = json::parse(r.out);
  CHECK(j["modules"][0]["checks"][0].contains("seconds"));
}

TEST_CASE("usage errors exit 2") {
  CHECK(run("verify nosuchmodule").code == 2);
  CHECK(run("table nosuchtable").code == 2);
  CHECK(run("--prime 15 verify exactalg").code == 2);
  CHECK(run("--prime 47 verify exactalg").code == 2);
  CHECK(run("").code == 2);
  CHECK(run("hilbert --ring Z --max 3").code == 2);
  CHECK(run("--format yaml verify exactalg").code == 2);
}

TEST_CASE("environment mirrors flags") {
  auto r = run("verify exactalg", "H8_SEED=7");
  CHECK(json::parse(r.out)["config"]["seed"] == 7);
  // the flag wins over the environment
  auto f = run("--seed 3 verify exactalg", "H8_SEED=7");
  CHECK(json::parse(f.out)["config"]["seed"] == 3);
  auto t = run("verify exactalg", "H8_FORMAT=text");
  CHECK(t.out.find("PASS  exactalg.") != std::string::npos);
}

TEST_CASE("mutated golden table gives exit 1 with the row") {
  fs::path dir = copy_assets();
  auto lines = asset_body("thomae_table.txt");
  {
    std::ofstream out(dir / "thomae_table.txt");
    out << "# mutated\n";
    for (auto l : lines) {
      if (l.rfind("000010 -", 0) == 0) l[7] = '+';
      out << l << "\n";
    }
  }
  auto r = run("--assets '" + dir.string() + "' verify thomae");
  CHECK(r.code == 1);
  auto j = json::parse(r.out);
  bool found = false;
  for (auto& c : j["modules"][0]["checks"])
    if (c["name"] == "table rows") {
      CHECK(c["status"] == "fail");
      found = c["note"].get<std::string>().find("000010") != std::string::npos;
    }
  CHECK(found);
  fs::remove_all(dir);
}

TEST_CASE("tables regenerate the assets") {
  auto t = run("table thomae --format txt");
  CHECK(t.code == 0);
  CHECK(lines_of(t.out) == asset_body("thomae_table.txt"));
  auto md = run("table thomae");
  CHECK(lines_of(md.out).size() == 2 + 36);

  // subspace rows are listed in lexicographic order; compare as sets of digit lists
  auto s = run("table subspaces --format txt");
  std::set<std::string> got, want;
  for (auto& l : lines_of(s.out)) got.insert(l.substr(l.find(':') + 2));
  for (auto& l : asset_body("theta_subspaces.txt")) want.insert(l.substr(l.find(':') + 2));
  CHECK(got.size() == 15);
  CHECK(got == want);

  auto sx = run("table sextuplets --format json");
  CHECK(json::parse(sx.out).size() == 56);
  auto csv = run("table sextuplets --format csv");
  CHECK(lines_of(csv.out).size() == 57);
}

TEST_CASE("base locus table") {
  auto r = run("table baselocus --format json");
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  REQUIRE(j.size() == 56);
  std::set<std::string> ideals;
  for (auto& row : j) ideals.insert(row["ideal"].get<std::string>());
  CHECK(ideals.size() == 56);
}

TEST_CASE("hilbert and dims") {
  auto c = run("hilbert --ring config --max 4 --format json");
  CHECK(c.code == 0);
  auto j = json::parse(c.out);
  CHECK(j["rows"][4]["rank"] == 1085);
  CHECK(j["rows"][4]["howe"] == 1085);
  auto a = run("hilbert --ring A --max 9 --format csv");
  CHECK(a.code == 0);
  CHECK(lines_of(a.out).back() == "9,7534");
  auto b = run("hilbert --ring B --max 6 --format json");
  CHECK(b.code == 0);
  CHECK(json::parse(b.out)["rows"][6]["rank"] == 546);
  auto d = run("dims --ring B --weights 2,4");
  CHECK(d.code == 0);
  CHECK(json::parse(d.out)["rows"][1]["rank"] == 105);
}

TEST_CASE("fit schottky") {
  auto r = run("fit schottky --points 3 --radius 8");
  CHECK(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["constant"].get<double>() == doctest::Approx(8.0).epsilon(1e-9));
  CHECK(j["ratios"].size() == 3);
}

TEST_CASE("C API") {
  h8_context* ctx = h8_create();
  REQUIRE(ctx);
  CHECK(h8_set_prime(ctx, 15) == H8_ERR_ARGUMENT);
  CHECK(std::string(h8_last_error(ctx)).size() > 0);
  CHECK(h8_set_prime(ctx, 1000003) == H8_OK);
  CHECK(std::string(h8_last_error(ctx)).empty());
  CHECK(h8_set_trials(ctx, 0) == H8_ERR_ARGUMENT);
  char* out = nullptr;
  int passed = 0;
  CHECK(h8_verify(ctx, "exactalg", "json", &out, &passed) == H8_OK);
  REQUIRE(out);
  CHECK(passed == 1);
  CHECK(json::parse(out)["config"]["prime"] == 1000003);
  h8_free(out);
  CHECK(h8_verify(ctx, "bogus", "json", &out, &passed) == H8_ERR_ARGUMENT);
  CHECK(h8_verify(ctx, nullptr, "json", &out, &passed) == H8_ERR_ARGUMENT);
  CHECK(h8_set_assets(ctx, "/nonexistent") == H8_OK);
  CHECK(h8_verify(ctx, "runge", "json", &out, &passed) == H8_ERR_IO);
  int degrees[] = {2};
  CHECK(h8_set_assets(ctx, nullptr) == H8_OK);
  int agree = 0;
  CHECK(h8_dims(ctx, "B", degrees, 1, &out, &agree) == H8_OK);
  CHECK(agree == 1);
  h8_free(out);
  CHECK(std::string(h8_modules()).find("baselocus") != std::string::npos);
  h8_destroy(ctx);
  CHECK(h8_set_seed(nullptr, 1) == H8_ERR_ARGUMENT);
}
