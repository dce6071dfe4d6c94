#ifndef AHG_H
#define AHG_H

/*
 * C API of the algebraic-hypergraph classifier. The library decides, with
 * replayable certificates, the depth and kappa-avoidability classification of
 * the zero hypergraphs of multivariate polynomials over Q.
 *
 * All structured data crosses this boundary as JSON text in the formats
 * documented in the README. Returned strings are owned by the caller and
 * released with ahg_string_free. Handles are opaque and released with their
 * _free function. Functions return AHG_OK on success; on failure,
 * ahg_last_error() describes the problem for the calling thread.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ahg_status {
  AHG_OK = 0,
  AHG_ERROR = 1,         /* usage, parse, or I/O error */
  AHG_INCONCLUSIVE = 2,  /* search ended without a decision */
  AHG_VERIFY_FAILED = 3, /* certificate or witness rejected */
  AHG_BUDGET = 4,        /* configured budget exceeded */
  AHG_UNSUPPORTED = 5    /* input outside a backend's supported fragment */
} ahg_status;

typedef struct ahg_poly ahg_poly;
typedef struct ahg_template ahg_template;
typedef struct ahg_report ahg_report;

typedef struct ahg_budget {
  int grid_max;
  long long edge_cap;
  long long branch_cap;
  int affine_height;
  int curve_degree;
  int curve_height;
  int rational_height;
  long long rational_nodes;
  int catalog_slice;
  int time_budget_seconds;
} ahg_budget;

void ahg_budget_defaults(ahg_budget* budget);

const char* ahg_version(void);
const char* ahg_last_error(void);
void ahg_string_free(char* s);

/* ---- polynomials ---- */
ahg_status ahg_poly_parse(const char* json, ahg_poly** out);
void ahg_poly_free(ahg_poly* p);
ahg_status ahg_poly_json(const ahg_poly* p, char** out_json);

/* ---- templates ---- */
ahg_status ahg_template_parse(const char* json, ahg_template** out);
void ahg_template_free(ahg_template* t);
ahg_status ahg_template_canonical_json(const ahg_template* t, char** out_json);
/* minimum distinguisher size plus its witness coordinate set */
ahg_status ahg_template_distinguisher(const ahg_template* t, int* e_out, char** witness_json);
ahg_status ahg_template_collapse(const ahg_template* t, const int* pi, int pi_len,
                                 ahg_template** out);
/* JSON array of canonical representatives, one per isomorphism class */
ahg_status ahg_enumerate_templates(int k, int d, char** out_json);
ahg_status ahg_template_hypergraph(const ahg_template* t, const int* sizes, int nsizes,
                                   long long edge_cap, char** out_json);

/* ---- classification ---- */
/* params_json: JSON array of rationals, or NULL for none.
 * oracle_cmd: external solver command, or NULL. */
ahg_status ahg_classify(const ahg_poly* p, const char* params_json, const ahg_budget* budget,
                        const char* oracle_cmd, ahg_report** out);
ahg_status ahg_report_parse(const char* json, ahg_report** out);
void ahg_report_free(ahg_report* r);
ahg_status ahg_report_json(const ahg_report* r, char** out_json);
/* depth interval as text ("2" or "inf"); decided flag */
ahg_status ahg_report_depth(const ahg_report* r, char** lo, char** hi, int* decided);
/* kappa like "aleph:0", continuum like "aleph:1"; appends the entry to the
 * report and returns {"verdict":...,"detail":...} */
ahg_status ahg_report_avoid(ahg_report* r, const char* kappa, const char* continuum,
                            int allow_invalid_setting, char** verdict_json);
/* least infinite chromatic bound: {"lo":...,"hi":...,"single":...} */
ahg_status ahg_report_chi(const ahg_report* r, const char* continuum, int allow_invalid_setting,
                          char** chi_json);

/* ---- verification ---- */
/* Replays any witness/certificate/report JSON. AHG_OK when it verifies,
 * AHG_VERIFY_FAILED when it replays to a rejection. */
ahg_status ahg_verify(const char* json, const char* oracle_cmd);

#ifdef __cplusplus
}
#endif

#endif /* AHG_H */
