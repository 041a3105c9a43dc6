#ifndef NILSPLIT_H
#define NILSPLIT_H

/* C interface to the amalgam splitting-report library.
 *
 * All functions return a status code; NILSPLIT_OK means the out-parameters
 * were filled.  On any error, nilsplit_last_error() returns a thread-local
 * message describing what went wrong.  Strings returned through char** are
 * malloc'd and must be released with nilsplit_string_free().
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum nilsplit_status {
  NILSPLIT_OK = 0,
  NILSPLIT_ERR_INVALID_ARGUMENT = 1,
  NILSPLIT_ERR_PARSE = 2,
  NILSPLIT_ERR_NOT_A_GROUP = 3,
  NILSPLIT_ERR_NOT_A_PERMUTATION = 4,
  NILSPLIT_ERR_NOT_A_SUBGROUP = 5,
  NILSPLIT_ERR_NOT_INJECTIVE = 6,
  NILSPLIT_ERR_NOT_HOMOMORPHISM = 7,
  NILSPLIT_ERR_DEGENERATE_AMALGAM = 8,
  NILSPLIT_ERR_ORDER_CAP_EXCEEDED = 9,
  NILSPLIT_ERR_INVALID_LETTER = 10,
  NILSPLIT_ERR_ELLIPTIC_ELEMENT = 11,
  NILSPLIT_ERR_BOUND_TOO_SMALL = 12,
  NILSPLIT_ERR_INCONSISTENT_STABILIZER = 13,
  NILSPLIT_ERR_INTERNAL = 14
} nilsplit_status;

/* Opaque handle for a validated amalgam G1 *_H G2. */
typedef struct nilsplit_amalgam nilsplit_amalgam;

/* Build a handle from spec JSON (text or file).  order_cap bounds the group
 * orders accepted from the spec; pass 0 for the built-in default (512). */
nilsplit_status nilsplit_amalgam_from_json(const char* json_text, int order_cap,
                                           nilsplit_amalgam** out);
nilsplit_status nilsplit_amalgam_from_file(const char* path, int order_cap,
                                           nilsplit_amalgam** out);
void nilsplit_amalgam_free(nilsplit_amalgam* amalgam);

/* Shape summary; with echo nonzero, the canonical spec JSON instead. */
nilsplit_status nilsplit_validate(const nilsplit_amalgam* amalgam, int echo,
                                  char** out_text);

/* Normal form and tree action of one word ("g1:<k> g2:<k> h:<k>" letters). */
nilsplit_status nilsplit_classify_word(const nilsplit_amalgam* amalgam, const char* word,
                                       char** out_text);

/* Conjugacy classes of hyperbolic elements up to the syllable bound. */
nilsplit_status nilsplit_enumerate(const nilsplit_amalgam* amalgam, int max_syllables,
                                   char** out_text);

/* Adapted-family verification over the enumerated classes. */
nilsplit_status nilsplit_adapted(const nilsplit_amalgam* amalgam, int max_syllables,
                                 int conj_bound, char** out_text);

/* Splitting-formula report; text, or JSON when as_json is nonzero. */
nilsplit_status nilsplit_report(const nilsplit_amalgam* amalgam, int max_syllables,
                                int as_json, char** out_text);

/* Largest pointwise path stabilizer among length-k paths near the base edge. */
nilsplit_status nilsplit_acylindrical(const nilsplit_amalgam* amalgam, int k, int radius,
                                      char** out_text);

void nilsplit_string_free(char* text);

/* Message for the most recent failure on this thread; never NULL. */
const char* nilsplit_last_error(void);

#ifdef __cplusplus
}
#endif

#endif /* NILSPLIT_H */
