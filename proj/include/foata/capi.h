/* C interface to the permutation engine: opaque handles, status codes,
 * JSON strings for structured results.  Strings returned through char**
 * are heap-allocated and must be released with foata_string_free. */

#ifndef FOATA_CAPI_H
#define FOATA_CAPI_H

#ifdef __cplusplus
extern "C" {
#endif

typedef struct foata_perm foata_perm;

typedef enum foata_status {
    FOATA_OK = 0,
    FOATA_ERR_NULL_ARGUMENT = 1,
    FOATA_ERR_PARSE = 2,
    FOATA_ERR_DOMAIN = 3,
    FOATA_ERR_INTERNAL = 4
} foata_status;

const char* foata_status_message(foata_status status);

/* Detail message for the last failing call on this thread. */
const char* foata_last_error(void);

/* ---- lifecycle ---- */

foata_status foata_perm_parse(const char* text, foata_perm** out);
foata_status foata_perm_from_images(const int* images, int degree, foata_perm** out);
foata_status foata_perm_identity(int degree, foata_perm** out);
foata_status foata_perm_clone(const foata_perm* p, foata_perm** out);
void foata_perm_free(foata_perm* p);

/* ---- inspection ---- */

int foata_perm_degree(const foata_perm* p); /* -1 on null */
foata_status foata_perm_images(const foata_perm* p, int* buffer, int buffer_len);
foata_status foata_perm_format(const foata_perm* p, int bracketed, char** out_text);
int foata_perm_is_even(const foata_perm* p); /* 1 even, 0 odd, -1 on null */
long long foata_perm_inversions(const foata_perm* p); /* -1 on null */
int foata_perm_equal(const foata_perm* a, const foata_perm* b); /* -1 on null */

/* ---- group operations ---- */

foata_status foata_perm_compose(const foata_perm* a, const foata_perm* b, foata_perm** out);
foata_status foata_perm_inverse(const foata_perm* p, foata_perm** out);
foata_status foata_perm_reverse(const foata_perm* p, foata_perm** out);
foata_status foata_perm_complement(const foata_perm* p, foata_perm** out);

/* Generator word like "s1 s2 s1" or "a2 a1^-1"; "e" is the empty word. */
foata_status foata_word_to_perm(const char* word, int degree, foata_perm** out);

/* ---- Foata transformation and variants ---- */

foata_status foata_phi(const foata_perm* p, foata_perm** out);
foata_status foata_phi_inverse(const foata_perm* p, foata_perm** out);
foata_status foata_rtl_phi(const foata_perm* p, foata_perm** out);
foata_status foata_rtl_phi_inverse(const foata_perm* p, foata_perm** out);

/* Tableau of intermediate rows; rtl selects the right-to-left variant. */
foata_status foata_phi_trace_json(const foata_perm* p, int rtl, char** out_json);

/* ---- covering maps and extended bijections ---- */

foata_status foata_cover_f(const foata_perm* v, foata_perm** out);
foata_status foata_cover_f_q(int q, const foata_perm* w, foata_perm** out);
foata_status foata_psi(const foata_perm* v, foata_perm** out);
foata_status foata_psi_inverse(const foata_perm* p, foata_perm** out);
foata_status foata_psi_q(int q, const foata_perm* v, foata_perm** out);
foata_status foata_psi_q_inverse(int q, const foata_perm* p, foata_perm** out);
foata_status foata_psi_trace_json(const foata_perm* v, char** out_json);
foata_status foata_psi_q_trace_json(int q, const foata_perm* v, char** out_json);

/* ---- canonical presentations and statistics ---- */

/* flavor 's' or 'a' */
foata_status foata_canonical_json(const foata_perm* p, char flavor, char** out_json);
foata_status foata_canonical_text(const foata_perm* p, char flavor, char** out_text);

/* flavor 's', 'a' or 'q' (q used only for flavor 'q') */
foata_status foata_stats_json(const foata_perm* p, char flavor, int q, char** out_json);

/* ---- dashed patterns ---- */

/* out_avoids: 1/0.  out_witness_json (optional) receives the occurrence
 * {"pattern": ..., "positions": [...]} when the permutation contains a
 * member of Pat(q), else JSON null. */
foata_status foata_avoids_pat_q(int q, const foata_perm* p, int* out_avoids,
                                char** out_witness_json);
foata_status foata_enumerate_avoiders_json(int q, int degree, char** out_json);

/* ---- verification harness ---- */

/* request: {"theorem": "a-eq"|"psi"|"psi-q"|"qst1"|"qst2"|"foata"|
 *           "lemmas"|"macmahon", "n": int, "q": int?, "d1": [int]?,
 *           "d2": [int]?, "slow": bool?}
 * response: {"status": "pass"|"fail", "reports": [...]} */
foata_status foata_verify_json(const char* request_json, char** out_json);

/* request: {"group": "s"|"a", "stat": "ell"|"maj"|"rmaj"|"del"|"des",
 *           "n": int, "filter": str?}
 * response: {..., "population": int, "coeffs": {...}} */
foata_status foata_table_json(const char* request_json, char** out_json);

void foata_string_free(char* text);

#ifdef __cplusplus
}
#endif

#endif /* FOATA_CAPI_H */
