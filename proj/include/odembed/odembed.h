#ifndef ODEMBED_ODEMBED_H
#define ODEMBED_ODEMBED_H

/* C interface to the odembed library. Every function returns an odem_status;
 * on failure odem_last_error() describes the problem for the calling thread.
 * Strings and byte buffers handed out by the library are released with
 * odem_free. */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(ODEM_BUILDING)
#    define ODEM_API __declspec(dllexport)
#  else
#    define ODEM_API __declspec(dllimport)
#  endif
#else
#  define ODEM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum odem_status {
  ODEM_OK = 0,
  ODEM_INVALID_ARGUMENT = 1,
  ODEM_PROPERTY_VIOLATION = 2,
  ODEM_INFEASIBLE = 3,
  ODEM_NOT_FOUND = 4,
  ODEM_INTERNAL_ERROR = 5
} odem_status;

typedef enum odem_format { ODEM_FORMAT_TEXT = 0, ODEM_FORMAT_PGM = 1 } odem_format;

typedef struct odem_profile odem_profile;
typedef struct odem_linear odem_linear;
typedef struct odem_diagram odem_diagram;
typedef struct odem_glider odem_glider;
typedef struct odem_embedding odem_embedding;

ODEM_API const char* odem_last_error(void);
ODEM_API const char* odem_status_name(odem_status status);
ODEM_API void odem_free(void* buffer);

/* Profiles: "prefix|cycle" such as "5|6" or "|2,3,4", or "primes". */
ODEM_API odem_status odem_profile_parse(const char* text, odem_profile** out);
ODEM_API void odem_profile_destroy(odem_profile* profile);
ODEM_API odem_status odem_profile_terms(const odem_profile* profile, size_t count,
                                        uint64_t* out_terms);
ODEM_API odem_status odem_profile_finitary(const odem_profile* profile, int* out_finitary);
ODEM_API odem_status odem_canonical_form(const odem_profile* profile, uint64_t* out_m,
                                         uint64_t* out_n);
ODEM_API odem_status odem_odometer_report(const odem_profile* profile, size_t depth,
                                          char** out_text);
/* Adds k to a comma-separated digit list over the first depth terms. */
ODEM_API odem_status odem_odometer_plus(const odem_profile* profile, size_t depth,
                                        const char* point, uint64_t k, char** out_point);
ODEM_API odem_status odem_odometer_diagram(const odem_profile* profile, size_t depth,
                                           size_t steps, odem_diagram** out);

/* Linear CA configurations from a seed spec: "x-bar", "periodic:<m>" or
 * "left|core|transient|period" (base-36 digits, core at cell 0). */
ODEM_API odem_status odem_linear_create(uint32_t modulus, const char* seed_spec,
                                        odem_linear** out);
ODEM_API void odem_linear_destroy(odem_linear* config);
ODEM_API odem_status odem_linear_step(odem_linear* config, uint64_t steps);
/* Cells lo..hi of the configuration, hi - lo + 1 entries. */
ODEM_API odem_status odem_linear_cells(const odem_linear* config, int64_t lo, int64_t hi,
                                       uint32_t* out_cells);
ODEM_API odem_status odem_linear_right_period(const odem_linear* config, size_t* out_period);
ODEM_API odem_status odem_linear_spacetime(const odem_linear* config, int64_t lo, int64_t hi,
                                           size_t steps, odem_diagram** out);

ODEM_API void odem_diagram_destroy(odem_diagram* diagram);
ODEM_API odem_status odem_diagram_bounds(const odem_diagram* diagram, int64_t* out_lo,
                                         int64_t* out_hi, size_t* out_steps);
ODEM_API odem_status odem_diagram_at(const odem_diagram* diagram, int64_t cell, size_t time,
                                     uint32_t* out_value);
/* ODEM_NOT_FOUND when the window is too short to confirm a period. */
ODEM_API odem_status odem_diagram_column_period(const odem_diagram* diagram, int64_t cell,
                                                size_t* out_transient, size_t* out_period);
/* Text output is NUL-terminated; PGM output is binary, so use out_size. */
ODEM_API odem_status odem_diagram_render(const odem_diagram* diagram, odem_format format,
                                         char** out_bytes, size_t* out_size);
ODEM_API odem_status odem_diagram_periods(const odem_diagram* diagram, char** out_text);

/* Gliders seeded from the first gaps terms of a profile. */
ODEM_API odem_status odem_glider_seed(const odem_profile* profile, size_t gaps,
                                      odem_glider** out);
ODEM_API void odem_glider_destroy(odem_glider* glider);
ODEM_API odem_status odem_glider_step(odem_glider* glider, uint64_t steps);
ODEM_API odem_status odem_glider_spacetime(const odem_glider* glider, size_t steps,
                                           odem_diagram** out);
/* Inverse-limit coordinates read off the gap phases, comma-separated. */
ODEM_API odem_status odem_glider_decode(const odem_glider* glider, char** out_point);

ODEM_API odem_status odem_embed(const odem_profile* profile, size_t depth,
                                odem_embedding** out);
ODEM_API void odem_embedding_destroy(odem_embedding* embedding);
ODEM_API odem_status odem_embedding_describe(const odem_embedding* embedding, char** out_text);
ODEM_API odem_status odem_embedding_order(const odem_embedding* embedding, uint64_t* out_order);
ODEM_API odem_status odem_embedding_window(const odem_embedding* embedding, int64_t* out_lo,
                                           int64_t* out_hi);
/* point: comma-separated digits of the canonical odometer. out_cells holds
 * one entry per window cell. */
ODEM_API odem_status odem_embedding_encode(const odem_embedding* embedding, const char* point,
                                           uint32_t* out_cells, size_t capacity);
ODEM_API odem_status odem_embedding_decode(const odem_embedding* embedding, int64_t lo,
                                           const uint32_t* cells, size_t count,
                                           char** out_point);
ODEM_API odem_status odem_embedding_roundtrip(const odem_embedding* embedding, uint64_t bound,
                                              size_t* out_ok, size_t* out_fail,
                                              char** out_report);

/* ODEM_NOT_FOUND when no witness exists up to depth; out_text is set either
 * way. */
ODEM_API odem_status odem_witness(const odem_profile* profile, uint32_t modulus, size_t depth,
                                  uint64_t* out_prime, size_t* out_k, char** out_text);

#ifdef __cplusplus
}
#endif

#endif
