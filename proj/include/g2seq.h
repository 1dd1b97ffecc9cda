/* C interface to the octant/quadrant sequence library.
 *
 * All functions return a status code: G2SEQ_OK on success,
 * G2SEQ_VERIFY_FAILED when a verification scope ran but found failures, and
 * G2SEQ_USAGE_ERROR for unknown models/methods/scopes or malformed input.
 * On error, g2seq_last_error() returns a thread-local message.
 *
 * Sequences are opaque handles holding exact big-integer terms; strings
 * returned through out-parameters must be released with g2seq_string_free().
 */
#ifndef G2SEQ_H
#define G2SEQ_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

enum {
    G2SEQ_OK = 0,
    G2SEQ_VERIFY_FAILED = 1,
    G2SEQ_USAGE_ERROR = 2,
};

typedef struct g2seq_sequence g2seq_sequence;

/* Message for the most recent failure on this thread ("" if none). */
const char* g2seq_last_error(void);

/* Generates n+1 terms of a model by the given method.
 * Models:  t3, e3, a108304, quad0, quad1, quad2, quad3.
 * Methods: walk, ct, rec, closed (availability depends on the model);
 *          NULL selects the model's default. */
int g2seq_generate(const char* model, long n, const char* method,
                   g2seq_sequence** out);

/* k-fold binomial transform (negative k inverts). */
int g2seq_transform(const g2seq_sequence* s, long k, g2seq_sequence** out);

/* OEIS b-file text <-> sequence. */
int g2seq_parse_bfile(const char* text, g2seq_sequence** out);
int g2seq_render_bfile(const g2seq_sequence* s, char** out);

/* Number of terms, and one term as a decimal string. */
size_t g2seq_length(const g2seq_sequence* s);
int g2seq_term(const g2seq_sequence* s, size_t index, char** out);

/* Runs a verification scope (all, thm1, thm2, factorization, closed,
 * quadrant) and returns the JSON report. *all_pass is set to 1/0. The return
 * value is G2SEQ_OK even when checks fail; G2SEQ_USAGE_ERROR only for an
 * unknown scope. */
int g2seq_verify(const char* scope, char** json_report, int* all_pass);

void g2seq_sequence_free(g2seq_sequence* s);
void g2seq_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* G2SEQ_H */
