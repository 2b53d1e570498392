// One line per acceptance criterion, computed from the module suites with pinned settings.
#include <CLI11.hpp>

#include <algorithm>
#include <cstdio>
#include <map>
#include <string>
#include <vector>

#include "h8/report.hpp"
#include "h8/suites.hpp"

using namespace h8;

namespace {

struct Criterion {
  int id;
  std::string module;
  std::vector<std::string> checks;  // all must pass
  double limit;                     // seconds, summed over the listed checks
  std::string summary;
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> c = {
      {1, "specht", {"koike generators vanish"}, 5, "Koike generators under Specht substitution"},
      {2,
       "specht",
       {"graded dimension n=1", "graded dimension n=2", "graded dimension n=3", "graded dimension n=4",
        "graded dimension n=5", "graded dimension n=6 (formulas)", "formulas agree for n<=10"},
       60,
       "configuration ring Hilbert function"},
      {3,
       "charspace",
       {"even characteristics", "odd characteristics", "maximal singular subspaces", "orbit split", "stars",
        "zero-sum odd triplets", "sextuplets", "example sextuplet present", "even-sum odd pairs",
        "pairwise-even odd triples", "four triples per star", "odds orthogonal to each nonzero even",
        "three-star partitions per even", "evens at odd distance"},
       5,
       "characteristic combinatorics"},
      {4,
       "charspace",
       {"mumford properties", "m({1,8})", "m(empty)", "orthogonal images distinct", "orthogonal images preserve q",
        "homomorphism on random pairs"},
       30,
       "Mumford properties and the orthogonal representation"},
      {5, "thomae", {"table rows", "support law", "sum of all D is zero"}, 30, "Thomae table"},
      {6,
       "thomae",
       {"printed cubic factorization equals D", "cubic representative for every nonzero even m"},
       60,
       "cubic factorization and Y-cubic representatives"},
      {7,
       "thetaring",
       {"rank of D(Theta_i)", "kernel is (1,...,1)", "graded dimension weight 4", "graded dimension weight 6",
        "graded dimension weight 8"},
       600,
       "Theta ring dimensions"},
      {8,
       "thetaring",
       {"cubic relation vanishes", "coset quartic identities hold", "squared quartic configurations",
        "schottky image with constant 8", "constant removed has a witness"},
       300,
       "relations"},
      {9,
       "baselocus",
       {"orbit size", "printed spaces lie in the orbit", "printed cusp lies on the variety",
        "printed cusp lies on the 8 printed spaces", "cusp orbit", "8 spaces through each cusp",
        "5 cusps on each space", "vanishing sets have size 6", "each vanishing set determines one triplet",
        "triplet correspondence is bijective"},
       120,
       "base locus and cusps"},
      {10,
       "runge",
       {"order of N3'", "-E in N3'", "iE not in N3'", "index of N3' in N3", "P invariant under generators",
        "Q invariant under generators"},
       120,
       "Runge groups"},
      {11,
       "runge",
       {"odd thetas vanish", "exactly one duplication sign matches", "schottky ratio is constant",
        "schottky ratio equals 8"},
       60,
       "numerical suite"},
      {12,
       "thetaring",
       {"series ring A", "series ring B", "series even part of ring B", "even part of ring B equals the weight series"},
       1,
       "series bookkeeping"},
  };
  return c;
}

// Discrepancies that must surface as INFO and never as failures.
const std::vector<std::pair<std::string, std::string>> kInfoEntries = {
    {"thetaring", "coset quartic count"},
    {"thetaring", "new weight-8 relations"},
};
const std::vector<std::string> kOutOfScope = {"normal", "resolution", "analytic", "cohen-macaulay", "smooth"};

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  return s;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"acceptance"};
  bool report_only = false;
  u64 seed = 1;
  app.add_flag("--report-only", report_only, "always exit 0");
  app.add_option("--seed", seed, "base seed");
  CLI11_PARSE(app, argc, argv);

  RunConfig cfg;
  cfg.seed = seed;
  cfg.trials = 100;
  cfg.radius = 12;
  cfg.tol = 1e-8;
  cfg.timings = true;

  // weight 8 needs the deep rank run; the n=5 configuration rank stays off (formulas only)
  std::map<std::string, ModuleReport> reports;
  for (const auto& m : module_names()) {
    RunConfig c = cfg;
    c.deep = m == "thetaring";
    std::fprintf(stderr, "running %s\n", m.c_str());
    reports[m] = run_suite(m, c);
  }

  int passed = 0;
  for (const auto& cr : criteria()) {
    const ModuleReport& r = reports.at(cr.module);
    bool ok = true;
    double secs = 0;
    std::string bad;
    for (const auto& name : cr.checks) {
      const Check* c = r.find(name);
      if (!c) {
        ok = false;
        bad += " missing:" + name;
        continue;
      }
      secs += c->seconds;
      if (c->status != Status::Pass) {
        ok = false;
        bad += " " + to_string(c->status) + ":" + name + " expected=" + c->expected.dump() +
               " actual=" + c->actual.dump();
      }
    }
    bool in_time = secs <= cr.limit;
    if (!in_time) bad += " over time limit";
    ok = ok && in_time;
    passed += ok;
    std::printf("criterion %d: %s  %s  (%.2fs, limit %.0fs)%s\n", cr.id, ok ? "PASS" : "FAIL", cr.summary.c_str(),
                secs, cr.limit, bad.c_str());
  }

  {
    bool ok = true;
    std::string bad;
    for (const auto& [m, name] : kInfoEntries) {
      const Check* c = reports.at(m).find(name);
      if (!c || c->status != Status::Info) {
        ok = false;
        bad += " not info:" + name;
      }
    }
    for (const auto& [m, r] : reports)
      for (const auto& c : r.checks)
        for (const auto& w : kOutOfScope)
          if (lower(c.name).find(w) != std::string::npos) {
            ok = false;
            bad += " out of scope:" + m + "." + c.name;
          }
    passed += ok;
    std::printf("criterion 13: %s  out-of-scope declarations and documented discrepancies%s\n", ok ? "PASS" : "FAIL",
                bad.c_str());
  }

  std::printf("acceptance: %d/13 passed\n", passed);
  return report_only || passed == 13 ? 0 : 1;
}
