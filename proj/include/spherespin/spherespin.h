/* spherespin: invariant spinor geometry on the homogeneous spheres.
 *
 * C interface to the verification library. All functions are thread-safe
 * except that each ssp_report handle must be used from one thread at a time.
 */
#ifndef SPHERESPIN_H
#define SPHERESPIN_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SSP_API __declspec(dllexport)
#else
#define SSP_API __attribute__((visibility("default")))
#endif

typedef enum {
  SSP_OK = 0,            /* all checks passed */
  SSP_CHECKS_FAILED = 1, /* report produced, at least one check failed */
  SSP_CONFIG_ERROR = 2,  /* bad configuration; no report */
  SSP_RUNTIME_ERROR = 3  /* internal numerical failure; no report */
} ssp_status;

/* Opaque verification report. */
typedef struct ssp_report ssp_report;

/* Run the verification pipeline described by a JSON configuration:
 *
 *   {
 *     "case":   "all" | "round" | "so" | "u" | "su" | "sp" | "spsp1"
 *             | "spu1" | "g2" | "spin7" | "spin9",
 *     "n":      2,                      // family index where applicable
 *     "params": {"a": 1.0, "b": 0.5},   // metric parameters (default if absent)
 *     "tol":    1e-9,
 *     "seed":   1                       // random parameter samples
 *   }
 *
 * Returns NULL on configuration or runtime errors; consult ssp_last_error
 * and ssp_last_status. The caller owns the report and must free it.
 */
SSP_API ssp_report* ssp_verify(const char* config_json);

/* Recompute a catalogue table: "table2", "s7forms", "s15forms",
 * "s15squaring" or "spnU1forms". config_json may be NULL or carry
 * "tol"/"seed". */
SSP_API ssp_report* ssp_table(const char* which, const char* config_json);

/* 1 when every check in the report passed. */
SSP_API int ssp_report_passed(const ssp_report* rep);
/* SSP_OK or SSP_CHECKS_FAILED. */
SSP_API ssp_status ssp_report_status(const ssp_report* rep);
/* Serializations; the returned strings are owned by the report and live
 * until ssp_report_free. */
SSP_API const char* ssp_report_json(ssp_report* rep);
SSP_API const char* ssp_report_markdown(ssp_report* rep);
SSP_API void ssp_report_free(ssp_report* rep);

/* Description of the most recent failure in the calling thread. */
SSP_API const char* ssp_last_error(void);
SSP_API ssp_status ssp_last_status(void);

SSP_API const char* ssp_version(void);

#ifdef __cplusplus
}
#endif

#endif /* SPHERESPIN_H */
