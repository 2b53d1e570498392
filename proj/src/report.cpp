#include "h8/report.hpp"

#include <sstream>

#ifndef H8_ASSETS_DIR
#define H8_ASSETS_DIR "assets"
#endif

namespace h8 {

std::string asset_path(const RunConfig& cfg, const std::string& file) {
  std::string dir = cfg.assets.empty() ? std::string(H8_ASSETS_DIR) : cfg.assets;
  return dir + "/" + file;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Info: return "info";
  }
  return "?";
}

bool ModuleReport::passed() const {
  for (auto& c : checks)
    if (c.status == Status::Fail) return false;
  return true;
}

const Check* ModuleReport::find(const std::string& name) const {
  for (auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

bool Report::passed() const {
  for (auto& m : modules)
    if (!m.passed()) return false;
  return true;
}

json Report::to_json() const {
  json j;
  j["schema"] = kSchema;
  j["config"] = {{"prime", cfg.prime}, {"seed", cfg.seed}, {"trials", cfg.trials},
                 {"radius", cfg.radius}, {"tol", cfg.tol},   {"deep", cfg.deep}};
  int counts[3] = {0, 0, 0};
  json mods = json::array();
  for (auto& m : modules) {
    json checks = json::array();
    for (auto& c : m.checks) {
      ++counts[int(c.status)];
      json e = {{"name", c.name},         {"status", to_string(c.status)}, {"expected", c.expected},
                {"actual", c.actual},     {"provenance", c.provenance},    {"seed", cfg.seed}};
      if (!c.note.empty()) e["note"] = c.note;
      if (cfg.timings) e["seconds"] = c.seconds;
      checks.push_back(std::move(e));
    }
    mods.push_back({{"module", m.module}, {"passed", m.passed()}, {"checks", std::move(checks)}});
  }
  j["modules"] = std::move(mods);
  j["summary"] = {{"pass", counts[0]}, {"fail", counts[1]}, {"info", counts[2]}};
  j["passed"] = passed();
  return j;
}

std::string Report::to_text() const {
  std::ostringstream out;
  int counts[3] = {0, 0, 0};
  for (auto& m : modules)
    for (auto& c : m.checks) {
      ++counts[int(c.status)];
      std::string tag = c.status == Status::Pass ? "PASS" : c.status == Status::Fail ? "FAIL" : "INFO";
      out << tag << "  " << m.module << "." << c.name << "  expected=" << c.expected.dump()
          << " actual=" << c.actual.dump() << " [" << c.provenance << "]";
      if (cfg.timings) out << " " << c.seconds << "s";
      if (!c.note.empty()) out << "\n      " << c.note;
      out << "\n";
    }
  out << counts[0] << " passed, " << counts[1] << " failed, " << counts[2] << " info (seed " << cfg.seed
      << ", prime " << cfg.prime << ")\n";
  return out.str();
}

Recorder::Recorder(std::string module) : last_(std::chrono::steady_clock::now()) { r_.module = std::move(module); }

void Recorder::push(Check c) {
  auto now = std::chrono::steady_clock::now();
  c.seconds = std::chrono::duration<double>(now - last_).count();
  last_ = now;
  r_.checks.push_back(std::move(c));
}

void Recorder::expect(const std::string& name, bool ok, json expected, json actual, const std::string& provenance,
                      std::string note) {
  push({name, ok ? Status::Pass : Status::Fail, std::move(expected), std::move(actual), provenance, std::move(note)});
}

void Recorder::info(const std::string& name, json expected, json actual, const std::string& provenance,
                    std::string note) {
  push({name, Status::Info, std::move(expected), std::move(actual), provenance, std::move(note)});
}

ModuleReport Recorder::finish() { return std::move(r_); }

}  // namespace h8
