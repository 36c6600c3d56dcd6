#ifndef SCARF_SCARF_H
#define SCARF_SCARF_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(SCARF_BUILDING_LIBRARY)
#define SCARF_API __attribute__((visibility("default")))
#else
#define SCARF_API
#endif

typedef enum scarf_status {
  SCARF_OK = 0,
  SCARF_ERR_PARSE = 1,
  SCARF_ERR_INCOMPATIBLE_RINGS = 2,
  SCARF_ERR_INVALID_ARGUMENT = 3,
  SCARF_ERR_NOT_FOUND = 4,
  SCARF_ERR_LIMIT_EXCEEDED = 5,
  SCARF_ERR_INTERNAL = 6
} scarf_status;

typedef enum scarf_format { SCARF_FORMAT_TEXT = 0, SCARF_FORMAT_JSON = 1, SCARF_FORMAT_DOT = 2 } scarf_format;

typedef enum scarf_verdict {
  SCARF_VERDICT_YES = 0,
  SCARF_VERDICT_NO = 1,
  SCARF_VERDICT_FIELD_DEPENDENT = 2
} scarf_verdict;

typedef struct scarf_ideal scarf_ideal;
typedef struct scarf_graph scarf_graph;
typedef struct scarf_complex scarf_complex;
typedef struct scarf_report scarf_report;

/* Message of the last failing call on this thread; "" when none. */
SCARF_API const char* scarf_last_error(void);
/* Frees strings returned through char** out-parameters. */
SCARF_API void scarf_string_free(char* s);

SCARF_API size_t scarf_default_lattice_cap(void);
SCARF_API uint64_t scarf_default_seed(void);

/* Ideals. */
SCARF_API scarf_status scarf_ideal_parse(const char* text, scarf_ideal** out);
SCARF_API scarf_status scarf_ideal_from_graph(const scarf_graph* graph, scarf_ideal** out);
SCARF_API scarf_status scarf_ideal_power(const scarf_ideal* ideal, unsigned t, scarf_ideal** out);
SCARF_API size_t scarf_ideal_generator_count(const scarf_ideal* ideal);
SCARF_API scarf_status scarf_ideal_render(const scarf_ideal* ideal, char** out);
SCARF_API void scarf_ideal_free(scarf_ideal* ideal);

/* Graphs. */
SCARF_API scarf_status scarf_graph_parse(const char* text, scarf_graph** out);
SCARF_API int scarf_graph_is_connected(const scarf_graph* graph);
SCARF_API void scarf_graph_free(scarf_graph* graph);
/* Calls visit once per labeled graph on n vertices (1 <= n <= 6) with a
   text (edge list) or JSON line. */
SCARF_API scarf_status scarf_graph_enumerate(unsigned n, scarf_format format,
                                             void (*visit)(const char* line, void* user), void* user);

/* Complexes. */
SCARF_API scarf_status scarf_complex_scarf(const scarf_ideal* ideal, scarf_complex** out);
SCARF_API scarf_status scarf_complex_taylor(const scarf_ideal* ideal, scarf_complex** out);
SCARF_API scarf_status scarf_complex_forest(const scarf_graph* forest, scarf_complex** out);
/* kind: "triangle", "path3", "claw" or "square". */
SCARF_API scarf_status scarf_complex_power_form(const char* kind, unsigned t, scarf_complex** out);
SCARF_API scarf_status scarf_complex_parse_json(const char* text, scarf_complex** out);
SCARF_API scarf_status scarf_complex_render(const scarf_complex* complex, scarf_format format, char** out);
/* characteristic: 0 or a prime. Text or JSON. */
SCARF_API scarf_status scarf_complex_homology(const scarf_complex* complex, unsigned characteristic,
                                              scarf_format format, char** out);
SCARF_API void scarf_complex_free(scarf_complex* complex);

/* Taylor labels grouped by multiplicity. Text or JSON. */
SCARF_API scarf_status scarf_taylor_groups_render(const scarf_ideal* ideal, scarf_format format, char** out);

/* Scarf test. lattice_cap 0 selects the default. */
SCARF_API scarf_status scarf_is_scarf(const scarf_ideal* ideal, size_t lattice_cap, scarf_report** out);
SCARF_API scarf_verdict scarf_report_verdict(const scarf_report* report);
/* Text or JSON; DOT renders the Scarf complex. */
SCARF_API scarf_status scarf_report_render(const scarf_report* report, scarf_format format, char** out);
SCARF_API void scarf_report_free(scarf_report* report);

/* Verification suites. budget_seconds <= 0 is unlimited. */
SCARF_API size_t scarf_suite_count(void);
SCARF_API const char* scarf_suite_name(size_t index);
SCARF_API scarf_status scarf_verify(const char* suite, double budget_seconds, uint64_t seed, scarf_format format,
                                    char** out, int* all_passed);

#ifdef __cplusplus
}
#endif

#endif
