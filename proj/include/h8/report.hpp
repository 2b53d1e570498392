#pragma once

#include <chrono>
#include <string>
#include <vector>

#include <json.hpp>

#include "h8/exactalg.hpp"

namespace h8 {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "h8-report/1";

struct RunConfig {
  u64 prime = kDefaultPrime;
  u64 seed = 1;
  int trials = 20;      // PIT evaluations per identity; relation checks use at least 100
  int radius = 12;      // lattice truncation for theta sums
  double tol = 1e-8;    // numeric agreement
  bool deep = false;    // weight-8 and n=5 rank certifications
  bool timings = false;
  std::string assets;   // empty: the directory compiled in
};

std::string asset_path(const RunConfig& cfg, const std::string& file);

enum class Status { Pass, Fail, Info };
std::string to_string(Status s);

struct Check {
  std::string name;
  Status status = Status::Pass;
  json expected;
  json actual;
  std::string provenance;  // "paper", "derived" or "none"
  std::string note;
  double seconds = 0;
};

struct ModuleReport {
  std::string module;
  std::vector<Check> checks;
  bool passed() const;
  const Check* find(const std::string& name) const;
};

struct Report {
  RunConfig cfg;
  std::vector<ModuleReport> modules;
  bool passed() const;
  json to_json() const;
  std::string to_text() const;
};

// Collects checks for one module, timing each from the previous one.
class Recorder {
 public:
  explicit Recorder(std::string module);
  void expect(const std::string& name, bool ok, json expected, json actual, const std::string& provenance,
              std::string note = {});
  // Compares equal values; the expected side is what gets published.
  template <class T>
  void equal(const std::string& name, const T& expected, const T& actual, const std::string& provenance,
             std::string note = {}) {
    expect(name, expected == actual, json(expected), json(actual), provenance, std::move(note));
  }
  void info(const std::string& name, json expected, json actual, const std::string& provenance, std::string note);
  ModuleReport finish();

 private:
  ModuleReport r_;
  std::chrono::steady_clock::time_point last_;
  void push(Check c);
};

}  // namespace h8
