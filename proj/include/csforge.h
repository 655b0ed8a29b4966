/* csforge — exact Chern-Simons potentials of Pontryagin densities.
 *
 * C API: opaque handles plus status codes. Strings returned through char**
 * out-parameters are heap-allocated; release them with csf_string_free.
 * Handles are released with csf_potential_free. All functions are
 * thread-compatible: distinct handles may be used from distinct threads,
 * a single handle must not be shared without external locking.
 */
#ifndef CSFORGE_H
#define CSFORGE_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum csf_status {
    CSF_OK = 0,
    CSF_ERROR_INVALID_ARGUMENT = 1, /* bad dimension, null pointer, bad index */
    CSF_ERROR_PARSE = 2,            /* malformed potential document */
    CSF_ERROR_COMPUTE = 3,          /* internal failure during assembly */
} csf_status;

typedef enum csf_format {
    CSF_FORMAT_TEXT = 0,
    CSF_FORMAT_LATEX = 1,
    CSF_FORMAT_JSON = 2,
} csf_format;

typedef enum csf_table {
    CSF_TABLE_COEFFS = 0,   /* cyclic-class size multisets per dimension */
    CSF_TABLE_MCOUNTS = 1,  /* per-partition equation counts */
    CSF_TABLE_EQCOUNTS = 2, /* independent equation totals per dimension */
} csf_table;

/* A computed or loaded potential document. */
typedef struct csf_potential csf_potential;

const char* csf_version(void);
const char* csf_status_message(csf_status status);

/* Compute the potential for an even dimension >= 4 (capped at 62).
 * jobs <= 0 selects hardware parallelism. */
csf_status csf_compute(int dimension, int jobs, csf_potential** out);

/* Load a document from schemaVersion-1 JSON. On parse failure returns
 * CSF_ERROR_PARSE and, when error_message is non-null, stores a
 * description (free with csf_string_free). */
csf_status csf_potential_parse_json(const char* json, csf_potential** out,
                                    char** error_message);

void csf_potential_free(csf_potential* p);

int csf_potential_dimension(const csf_potential* p);
size_t csf_potential_term_count(const csf_potential* p);

/* Borrowed pointers into the handle, valid until the handle is freed. */
csf_status csf_potential_term(const csf_potential* p, size_t index,
                              const char** coeff, const char** word);

/* Render in the given format. JSON includes a "verified" field reflecting
 * the most recent csf_potential_verify on this handle. */
csf_status csf_potential_render(const csf_potential* p, csf_format format, char** out);

/* Check d(potential) == expansion; *passed is 1 or 0. The result is
 * recorded on the handle for subsequent JSON rendering. */
csf_status csf_potential_verify(csf_potential* p, int* passed);

/* Plain-text residual d(potential) − expansion of the last failed verify;
 * empty string when the check passed or was never run. */
csf_status csf_potential_residual(const csf_potential* p, char** out);

/* Render one of the reference tables covering dimensions 4..dim_max
 * (eqcounts starts at 14). */
csf_status csf_render_table(csf_table table, int dim_max, char** out);

/* The built-in dimension-8 worked-example replay. */
csf_status csf_render_fixture(char** out);

void csf_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* CSFORGE_H */
