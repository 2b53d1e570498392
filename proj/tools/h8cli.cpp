#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "h8/h8.h"

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct Options {
  uint64_t prime = 0;
  uint64_t seed = 1;
  int trials = 0;
  std::string format;
  bool deep = false;
  bool timings = false;
  std::string assets;
};

using Context = std::unique_ptr<h8_context, decltype(&h8_destroy)>;

int report_error(const h8_context* ctx, h8_status st) {
  std::cerr << "h8cli: " << h8_last_error(ctx) << "\n";
  (void)st;
  return kUsage;
}

int emit(const h8_context* ctx, h8_status st, char* out, int ok) {
  if (st != H8_OK) return report_error(ctx, st);
  std::fputs(out, stdout);
  h8_free(out);
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Verification suites for theta characteristics, Thomae images and their rings", "h8cli"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(h8_version()));

  Options o;
  app.add_option("--prime", o.prime, "prime modulus for modular computations")->envname("H8_PRIME");
  app.add_option("--seed", o.seed, "RNG seed")->envname("H8_SEED");
  app.add_option("--trials", o.trials, "identity-testing evaluations")->envname("H8_TRIALS");
  app.add_option("--format", o.format, "output format (json|text for verify, md|csv|json|txt for tables)")
      ->envname("H8_FORMAT");
  app.add_flag("--deep", o.deep, "include the long rank certifications")->envname("H8_DEEP");
  app.add_flag("--timings", o.timings, "report per-check runtimes")->envname("H8_TIMINGS");
  app.add_option("--assets", o.assets, "directory of golden assets")->envname("H8_ASSETS");

  std::string target;
  auto* verify = app.add_subcommand("verify", "run verification suites");
  verify->add_option("target", target, std::string("all or one of: ") + h8_modules())->required();

  std::string table_name;
  auto* table = app.add_subcommand("table", "regenerate a table");
  table->add_option("name", table_name, "thomae | subspaces | baselocus | sextuplets")->required();

  std::string ring = "config";
  int max = 6;
  auto* hilbert = app.add_subcommand("hilbert", "graded dimensions against the closed forms");
  hilbert->add_option("--ring", ring, "config | B | A")->capture_default_str();
  hilbert->add_option("--max", max, "largest degree")->capture_default_str();

  std::string dims_ring = "B";
  std::vector<int> weights{2, 4, 6};
  auto* dims = app.add_subcommand("dims", "rank-certified graded dimensions");
  dims->add_option("--ring", dims_ring, "config | B")->capture_default_str();
  dims->add_option("--weights", weights, "degrees (config) or even weights (B)")->delimiter(',');

  int points = 5, radius = 12;
  auto* fit = app.add_subcommand("fit", "numerical fits");
  fit->require_subcommand(1);
  fit->fallthrough();
  auto* schottky = fit->add_subcommand("schottky", "fit the Schottky constant at random period matrices");
  schottky->add_option("--points", points)->capture_default_str();
  schottky->add_option("--radius", radius)->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  Context ctx(h8_create(), &h8_destroy);
  if (!ctx) {
    std::cerr << "h8cli: out of memory\n";
    return kUsage;
  }
  h8_context* c = ctx.get();
  h8_status st = H8_OK;
  if (o.prime && (st = h8_set_prime(c, o.prime)) != H8_OK) return report_error(c, st);
  if ((st = h8_set_seed(c, o.seed)) != H8_OK) return report_error(c, st);
  if (o.trials && (st = h8_set_trials(c, o.trials)) != H8_OK) return report_error(c, st);
  h8_set_deep(c, o.deep);
  h8_set_timings(c, o.timings);
  if (!o.assets.empty()) h8_set_assets(c, o.assets.c_str());

  char* out = nullptr;
  int ok = 0;
  if (*verify) {
    st = h8_verify(c, target.c_str(), o.format.empty() ? "json" : o.format.c_str(), &out, &ok);
    return emit(c, st, out, ok);
  }
  if (*table) {
    st = h8_table(c, table_name.c_str(), o.format.empty() ? "md" : o.format.c_str(), &out);
    return emit(c, st, out, 1);
  }
  if (*hilbert) {
    st = h8_hilbert(c, ring.c_str(), max, o.format.empty() ? "md" : o.format.c_str(), &out, &ok);
    return emit(c, st, out, ok);
  }
  if (*dims) {
    st = h8_dims(c, dims_ring.c_str(), weights.data(), weights.size(), &out, &ok);
    return emit(c, st, out, ok);
  }
  if (*schottky) {
    st = h8_fit_schottky(c, points, radius, &out);
    return emit(c, st, out, 1);
  }
  return kUsage;
}
