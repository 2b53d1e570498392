#include "h8/h8.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>
#include <string>

#include "h8/suites.hpp"

struct h8_context {
  h8::RunConfig cfg;
  std::string error;
};

namespace {

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

template <class F>
h8_status guarded(h8_context* ctx, F&& f) {
  if (!ctx) return H8_ERR_ARGUMENT;
  ctx->error.clear();
  try {
    f();
    return H8_OK;
  } catch (const std::invalid_argument& e) {
    ctx->error = e.what();
    return H8_ERR_ARGUMENT;
  } catch (const std::out_of_range& e) {
    ctx->error = e.what();
    return H8_ERR_ARGUMENT;
  } catch (const std::runtime_error& e) {
    ctx->error = e.what();
    return std::string(e.what()).rfind("cannot open", 0) == 0 ? H8_ERR_IO : H8_ERR_INTERNAL;
  } catch (const std::exception& e) {
    ctx->error = e.what();
    return H8_ERR_INTERNAL;
  } catch (...) {
    ctx->error = "unknown error";
    return H8_ERR_INTERNAL;
  }
}

std::string need(const char* s, const char* what) {
  if (!s) throw std::invalid_argument(std::string(what) + " is required");
  return s;
}

}  // namespace

extern "C" {

const char* h8_version(void) { return "1.0.0"; }

const char* h8_modules(void) {
  static const std::string names = [] {
    std::string s;
    for (auto& m : h8::module_names()) s += (s.empty() ? "" : ",") + m;
    return s;
  }();
  return names.c_str();
}

h8_context* h8_create(void) { return new (std::nothrow) h8_context(); }
void h8_destroy(h8_context* ctx) { delete ctx; }
const char* h8_last_error(const h8_context* ctx) { return ctx ? ctx->error.c_str() : "null context"; }
void h8_free(char* s) { std::free(s); }

h8_status h8_set_prime(h8_context* ctx, uint64_t prime) {
  return guarded(ctx, [&] {
    h8::RunConfig c = ctx->cfg;
    c.prime = prime;
    h8::validate(c);
    ctx->cfg = c;
  });
}

h8_status h8_set_seed(h8_context* ctx, uint64_t seed) {
  return guarded(ctx, [&] { ctx->cfg.seed = seed; });
}

h8_status h8_set_trials(h8_context* ctx, int trials) {
  return guarded(ctx, [&] {
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    ctx->cfg.trials = trials;
  });
}

h8_status h8_set_radius(h8_context* ctx, int radius) {
  return guarded(ctx, [&] {
    if (radius < 2 || radius > 64) throw std::invalid_argument("radius must lie in 2..64");
    ctx->cfg.radius = radius;
  });
}

h8_status h8_set_tolerance(h8_context* ctx, double tol) {
  return guarded(ctx, [&] {
    if (!(tol > 0)) throw std::invalid_argument("tolerance must be positive");
    ctx->cfg.tol = tol;
  });
}

h8_status h8_set_deep(h8_context* ctx, int deep) {
  return guarded(ctx, [&] { ctx->cfg.deep = deep != 0; });
}

h8_status h8_set_timings(h8_context* ctx, int timings) {
  return guarded(ctx, [&] { ctx->cfg.timings = timings != 0; });
}

h8_status h8_set_assets(h8_context* ctx, const char* dir) {
  return guarded(ctx, [&] { ctx->cfg.assets = dir ? dir : ""; });
}

h8_status h8_verify(h8_context* ctx, const char* target, const char* format, char** out, int* passed) {
  return guarded(ctx, [&] {
    std::string fmt = format ? format : "json";
    if (fmt != "json" && fmt != "text") throw std::invalid_argument("verify format must be json or text");
    if (!out) throw std::invalid_argument("out is required");
    auto rep = h8::verify(need(target, "target"), ctx->cfg);
    *out = dup(fmt == "json" ? rep.to_json().dump(1) + "\n" : rep.to_text());
    if (passed) *passed = rep.passed();
  });
}

h8_status h8_table(h8_context* ctx, const char* name, const char* format, char** out) {
  return guarded(ctx, [&] {
    if (!out) throw std::invalid_argument("out is required");
    *out = dup(h8::render_table(need(name, "table name"), format ? format : "md", ctx->cfg));
  });
}

h8_status h8_hilbert(h8_context* ctx, const char* ring, int max, const char* format, char** out, int* agree) {
  return guarded(ctx, [&] {
    if (!out) throw std::invalid_argument("out is required");
    std::string fmt = format ? format : "md";
    if (fmt != "md" && fmt != "csv" && fmt != "json") throw std::invalid_argument("hilbert format must be md, csv or json");
    bool ok = false;
    auto h = h8::hilbert(need(ring, "ring"), max, ctx->cfg, &ok);
    *out = dup(h8::render_hilbert(h, fmt));
    if (agree) *agree = ok;
  });
}

h8_status h8_dims(h8_context* ctx, const char* ring, const int* degrees, size_t count, char** out, int* agree) {
  return guarded(ctx, [&] {
    if (!out) throw std::invalid_argument("out is required");
    if (!degrees || !count) throw std::invalid_argument("at least one degree is required");
    bool ok = false;
    auto j = h8::dims(need(ring, "ring"), std::vector<int>(degrees, degrees + count), ctx->cfg, &ok);
    *out = dup(j.dump(1) + "\n");
    if (agree) *agree = ok;
  });
}

h8_status h8_fit_schottky(h8_context* ctx, int points, int radius, char** out) {
  return guarded(ctx, [&] {
    if (!out) throw std::invalid_argument("out is required");
    *out = dup(h8::fit_schottky(points, radius, ctx->cfg).dump(1) + "\n");
  });
}

}  // extern "C"
