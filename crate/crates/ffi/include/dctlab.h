#ifndef DCTLAB_H
#define DCTLAB_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum DctlabStatus {
  DCTLAB_STATUS_OK = 0,
  DCTLAB_STATUS_NULL_POINTER = 1,
  DCTLAB_STATUS_INVALID_ARGUMENT = 2,
  DCTLAB_STATUS_UNKNOWN_TRANSFORM = 3,
  DCTLAB_STATUS_UNSUPPORTED = 4,
  DCTLAB_STATUS_IO = 5,
  DCTLAB_STATUS_FORMAT = 6,
  DCTLAB_STATUS_VERIFICATION = 7,
  DCTLAB_STATUS_BUFFER_TOO_SMALL = 8,
  DCTLAB_STATUS_PANIC = 9,
} DctlabStatus;

/**
 * A catalog of approximation records.
 */
typedef struct DctlabCatalog DctlabCatalog;

/**
 * A configured block codec.
 */
typedef struct DctlabCodec DctlabCodec;

/**
 * A fast-algorithm schedule for one transform.
 */
typedef struct DctlabPlan DctlabPlan;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * NUL-terminated library version. Static storage; do not free.
 */
const char *dctlab_version(void);

/**
 * Writes the calling thread's last error message into `buf` (truncated to
 * `len` bytes including the NUL) and returns the full length needed.
 *
 * # Safety
 * `buf` must be null or valid for `len` bytes.
 */
size_t dctlab_last_error_message(char *buf, size_t len);

/**
 * Runs the full search over all integer functions.
 *
 * # Safety
 * `out` must be valid for writing one pointer.
 */
enum DctlabStatus dctlab_catalog_build(struct DctlabCatalog **out);

/**
 * Loads and verifies a catalog JSON file.
 *
 * # Safety
 * `path` must be a NUL-terminated string; `out` valid for one pointer.
 */
enum DctlabStatus dctlab_catalog_load(const char *path, struct DctlabCatalog **out);

/**
 * Writes the catalog as JSON (atomically).
 *
 * # Safety
 * `cat` must come from this library; `path` NUL-terminated.
 */
enum DctlabStatus dctlab_catalog_save(const struct DctlabCatalog *cat, const char *path);

/**
 * # Safety
 * `cat` must be null or come from this library, and not be used afterwards.
 */
void dctlab_catalog_free(struct DctlabCatalog *cat);

/**
 * Number of records; 0 for a null handle.
 *
 * # Safety
 * `cat` must be null or come from this library.
 */
size_t dctlab_catalog_len(const struct DctlabCatalog *cat);

/**
 * Copies the name of record `index` into `buf`; `*needed` receives the
 * length including the NUL.
 *
 * # Safety
 * `cat` from this library; `buf` null or valid for `len` bytes; `needed` null or valid.
 */
enum DctlabStatus dctlab_catalog_record_name(const struct DctlabCatalog *cat,
                                             size_t index,
                                             char *buf,
                                             size_t len,
                                             size_t *needed);

/**
 * Writes the integer matrix of `name` (row-major, 64 values) and its
 * classification code (0 orthogonal, 1 near-orthogonal, 2 degenerate, 3 rejected).
 *
 * # Safety
 * `cat` from this library; `name` NUL-terminated; `matrix` valid for 64
 * values; `classification` null or valid.
 */
enum DctlabStatus dctlab_catalog_matrix(const struct DctlabCatalog *cat,
                                        const char *name,
                                        int64_t *matrix,
                                        int32_t *classification);

/**
 * Deviation from diagonality of `T·Tᵀ` for `name`.
 *
 * # Safety
 * `cat` from this library; `name` NUL-terminated; `delta` valid.
 */
enum DctlabStatus dctlab_catalog_delta(const struct DctlabCatalog *cat,
                                       const char *name,
                                       double *delta);

/**
 * Builds the multiplierless schedule for a catalog transform.
 *
 * # Safety
 * `cat` from this library; `name` NUL-terminated; `out` valid.
 */
enum DctlabStatus dctlab_plan_new(const struct DctlabCatalog *cat,
                                  const char *name,
                                  struct DctlabPlan **out);

/**
 * `output = T·input` for 8 integers.
 *
 * # Safety
 * `plan` from this library; `input` and `output` valid for 8 values.
 */
enum DctlabStatus dctlab_plan_apply(const struct DctlabPlan *plan,
                                    const int64_t *input,
                                    int64_t *output);

/**
 * # Safety
 * `plan` from this library; each output pointer null or valid.
 */
enum DctlabStatus dctlab_plan_counts(const struct DctlabPlan *plan,
                                     uint32_t *multiplications,
                                     uint32_t *additions,
                                     uint32_t *shifts);

/**
 * # Safety
 * `plan` must be null or come from this library, and not be used afterwards.
 */
void dctlab_plan_free(struct DctlabPlan *plan);

/**
 * Creates a codec for `name` (a catalog name, an alias or `DCT`).
 *
 * # Safety
 * `cat` from this library; `name` NUL-terminated; `out` valid.
 */
enum DctlabStatus dctlab_codec_new(const struct DctlabCatalog *cat,
                                   const char *name,
                                   bool scale_before_retention,
                                   struct DctlabCodec **out);

/**
 * Compresses a row-major 8-bit image keeping `r` zigzag coefficients per
 * block and writes the reconstruction to `output`.
 *
 * # Safety
 * `codec` from this library; `input` and `output` valid for `width*height` bytes.
 */
enum DctlabStatus dctlab_codec_compress(const struct DctlabCodec *codec,
                                        size_t width,
                                        size_t height,
                                        const uint8_t *input,
                                        size_t r,
                                        uint8_t *output);

/**
 * # Safety
 * `codec` must be null or come from this library, and not be used afterwards.
 */
void dctlab_codec_free(struct DctlabCodec *codec);

/**
 * PSNR in dB of two equally sized images; `+inf` when identical.
 *
 * # Safety
 * `a`, `b` valid for `width*height` bytes; `out` valid.
 */
enum DctlabStatus dctlab_psnr(size_t width,
                              size_t height,
                              const uint8_t *a,
                              const uint8_t *b,
                              double *out);

/**
 * Mean SSIM (11×11 Gaussian window, σ = 1.5).
 *
 * # Safety
 * `a`, `b` valid for `width*height` bytes; `out` valid.
 */
enum DctlabStatus dctlab_ssim(size_t width,
                              size_t height,
                              const uint8_t *a,
                              const uint8_t *b,
                              double *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* DCTLAB_H */
