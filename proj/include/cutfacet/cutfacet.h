/* C interface to the cutfacet library. All functions return a cf_status;
 * on failure cf_last_error() describes the problem (per thread). Objects
 * returned through out-parameters are owned by the caller. */
#ifndef CUTFACET_H
#define CUTFACET_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define CF_API __declspec(dllexport)
#else
#define CF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum cf_status {
    CF_OK = 0,
    CF_E_INVALID_ARGUMENT = 1,
    CF_E_MATCHING_VIOLATION,
    CF_E_EDGE_COUNT_MISMATCH,
    CF_E_MISSING_CROSS_EDGE,
    CF_E_DUPLICATE_CROSS_EDGE,
    CF_E_INTRA_COMPONENT_EDGE,
    CF_E_NOT_A_CYCLE,
    CF_E_CYCLE_NODE_TOO_HIGH,
    CF_E_NOT_ON_CYCLE,
    CF_E_AMBIENT_MISMATCH,
    CF_E_UNSUPPORTED_COEFFICIENT,
    CF_E_NOT_VALID,
    CF_E_TOO_LARGE,
    CF_E_NOT_BIJECTION,
    CF_E_SAME_NODE,
    CF_E_NOT_AN_EDGE,
    CF_E_NOT_COMMON_NEIGHBOR,
    CF_E_RHS_NOT_ZERO,
    CF_E_MALFORMED_WITNESS,
    CF_E_SUM_NOT_ONE,
    CF_E_BAD_PARAMETERS,
    CF_E_CONDITION_NOT_MET,
    CF_E_NO_DEGENERATE_NODE,
    CF_E_MALFORMED_FAMILY,
    CF_E_PARSE_ERROR,
    CF_E_INTERNAL = 100
} cf_status;

typedef struct cf_inequality cf_inequality;
typedef struct cf_instance cf_instance;
typedef struct cf_survey cf_survey;

CF_API const char* cf_last_error(void);
CF_API const char* cf_status_name(cf_status status);
CF_API void cf_string_free(char* s);

/* Enumeration settings. threads 0 = hardware concurrency. */
typedef struct cf_options {
    int threads;
    int max_nodes;
} cf_options;

CF_API cf_options cf_default_options(void);

/* Inequalities */
CF_API cf_status cf_inequality_parse(const char* text, cf_inequality** out);
CF_API cf_status cf_inequality_read(const char* path, cf_inequality** out);
CF_API cf_status cf_inequality_serialize(const cf_inequality* ineq, char** out);
CF_API cf_status cf_inequality_write(const cf_inequality* ineq, const char* path);
CF_API int cf_inequality_node_count(const cf_inequality* ineq);
CF_API int cf_inequality_is_correlation(const cf_inequality* ineq);
CF_API int cf_inequality_equal(const cf_inequality* a, const cf_inequality* b);
CF_API void cf_inequality_free(cf_inequality* ineq);

/* (G, H) instances with an optional 4-cycle */
CF_API cf_status cf_instance_parse(const char* text, cf_instance** out);
CF_API cf_status cf_instance_read(const char* path, cf_instance** out);
CF_API cf_status cf_instance_serialize(const cf_instance* inst, char** out);
CF_API cf_status cf_instance_set_cycle(cf_instance* inst, const int nodes[4]);
CF_API int cf_instance_has_cycle(const cf_instance* inst);
CF_API void cf_instance_free(cf_instance* inst);

/* Generators. Families: triangle (n,u,v,w), hypermetric (b), pure-gonal
 * (n,s), hyp-thm3 (n), gr7, gr8, igh (instance), igh-prime (instance with
 * cycle), imm22 (m), imm22-cut (m). Unused fields are ignored. */
typedef struct cf_gen_params {
    int n;
    int m;
    int s;
    int u;
    int v;
    int w;
    const int64_t* b;
    size_t b_len;
    const cf_instance* instance;
} cf_gen_params;

CF_API cf_status cf_generate(const char* family, const cf_gen_params* params, cf_inequality** out);

/* Transforms */
CF_API cf_status cf_switch(const cf_inequality* ineq, const int* members, size_t count, cf_inequality** out);
CF_API cf_status cf_permute(const cf_inequality* ineq, const int* images, size_t count, cf_inequality** out);
CF_API cf_status cf_collapse(const cf_inequality* ineq, int u, int v, cf_inequality** out);
/* Uses the inequality's own graph; hypothesis_holds may be NULL. */
CF_API cf_status cf_trielim(const cf_inequality* ineq, int u, int u_prime, const int* common, size_t count,
                            cf_inequality** out, int* hypothesis_holds);
/* scale may be NULL. */
CF_API cf_status cf_covariance(const cf_inequality* ineq, cf_inequality** out, int64_t* scale);

/* Brute-force verification */
typedef struct cf_report {
    int valid;
    int has_violating_cut;
    /* bit x-1 set for node x of the violating cut */
    uint64_t violating_cut;
    int cut_node_count;
    size_t ambient_dim;
    size_t root_count;
    size_t affine_rank;
    int is_facet;
    int64_t scale;
} cf_report;

CF_API cf_status cf_verify(const cf_inequality* ineq, const cf_options* options, cf_report* out);

/* Theorem checks: facet1, facet2, prop1-roots, prop9-roots, lift-witness,
 * decompose. */
typedef struct cf_check_result {
    int applicable;
    int agree;
    int converse_candidate;
    int asserts_equivalence;
    char predicted[64];
    char observed[64];
} cf_check_result;

CF_API cf_status cf_check(const char* theorem, const cf_instance* inst, const cf_options* options,
                          cf_check_result* out);

typedef struct cf_survey_cell {
    int k;
    int t;
    size_t instances;
    size_t checks;
    size_t skipped;
    size_t agree;
    size_t disagree;
    size_t converse_candidates;
} cf_survey_cell;

CF_API cf_status cf_survey_run(const char* theorem, int k, int t_min, int t_max, int max_n,
                               const cf_options* options, cf_survey** out);
CF_API int cf_survey_asserts_equivalence(const cf_survey* survey);
CF_API size_t cf_survey_cell_count(const cf_survey* survey);
CF_API cf_status cf_survey_cell_at(const cf_survey* survey, size_t index, cf_survey_cell* out);
/* "instance: predicted vs observed" lines, sorted by instance. The
 * returned pointer lives as long as the survey. */
CF_API size_t cf_survey_disagreement_count(const cf_survey* survey);
CF_API const char* cf_survey_disagreement(const cf_survey* survey, size_t index);
CF_API size_t cf_survey_converse_count(const cf_survey* survey);
CF_API const char* cf_survey_converse(const cf_survey* survey, size_t index);
CF_API void cf_survey_free(cf_survey* survey);

#ifdef __cplusplus
}
#endif

#endif
