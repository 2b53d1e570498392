#ifndef H8_H
#define H8_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define H8_API __declspec(dllexport)
#else
#define H8_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct h8_context h8_context;

typedef enum {
  H8_OK = 0,
  H8_ERR_ARGUMENT = 1,  /* bad configuration, unknown module, table, ring or format */
  H8_ERR_IO = 2,        /* an asset could not be read */
  H8_ERR_INTERNAL = 3
} h8_status;

H8_API const char* h8_version(void);

H8_API h8_context* h8_create(void);
H8_API void h8_destroy(h8_context* ctx);
/* Message for the last failing call on this context; empty when none. */
H8_API const char* h8_last_error(const h8_context* ctx);
/* Releases strings returned through `out` parameters. */
H8_API void h8_free(char* s);

H8_API h8_status h8_set_prime(h8_context* ctx, uint64_t prime);
H8_API h8_status h8_set_seed(h8_context* ctx, uint64_t seed);
H8_API h8_status h8_set_trials(h8_context* ctx, int trials);
H8_API h8_status h8_set_radius(h8_context* ctx, int radius);
H8_API h8_status h8_set_tolerance(h8_context* ctx, double tol);
H8_API h8_status h8_set_deep(h8_context* ctx, int deep);
H8_API h8_status h8_set_timings(h8_context* ctx, int timings);
/* NULL or "" restores the compiled-in assets directory. */
H8_API h8_status h8_set_assets(h8_context* ctx, const char* dir);

/* target: "all" or a module name; format: "json" or "text". *passed is 1 iff no check failed. */
H8_API h8_status h8_verify(h8_context* ctx, const char* target, const char* format, char** out, int* passed);
/* name: thomae | subspaces | baselocus | sextuplets; format: md | csv | json | txt. */
H8_API h8_status h8_table(h8_context* ctx, const char* name, const char* format, char** out);
/* ring: config | B | A; format: md | csv | json. *agree is 1 iff all available columns agree. */
H8_API h8_status h8_hilbert(h8_context* ctx, const char* ring, int max, const char* format, char** out, int* agree);
/* ring: config | B; JSON output. */
H8_API h8_status h8_dims(h8_context* ctx, const char* ring, const int* degrees, size_t count, char** out,
                         int* agree);
/* JSON output with the fitted constant. */
H8_API h8_status h8_fit_schottky(h8_context* ctx, int points, int radius, char** out);

/* Comma-separated module names accepted by h8_verify, besides "all". */
H8_API const char* h8_modules(void);

#ifdef __cplusplus
}
#endif

#endif
