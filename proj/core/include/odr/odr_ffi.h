// Copyright 2026 The odr Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface for loading centroid model packages and classifying images.
 *
 * Ownership: the caller owns every buffer passed in or out; the library owns
 * only the state behind a handle. No function throws or aborts; every failure
 * is reported as an OdrStatus and the message is kept per thread for
 * odr_last_error(). */
#ifndef ODR_FFI_H_
#define ODR_FFI_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define ODR_FFI_API __declspec(dllexport)
#else
#define ODR_FFI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef int32_t OdrStatus;

#define ODR_OK ((OdrStatus)0)
#define ODR_NOT_FOUND ((OdrStatus)1)
#define ODR_BAD_PACKAGE ((OdrStatus)2)
#define ODR_BAD_INPUT ((OdrStatus)3)
#define ODR_BAD_HANDLE ((OdrStatus)4)
#define ODR_CAPACITY ((OdrStatus)5)
#define ODR_INTERNAL ((OdrStatus)6)

/* Opaque model handle. 0 is never valid; freed values are never reissued. */
typedef uint64_t OdrHandle;

/* Pixel layout codes. */
#define ODR_LAYOUT_CHW 0u
#define ODR_LAYOUT_HWC 1u
/* Channel order codes. */
#define ODR_ORDER_RGB 0u
#define ODR_ORDER_BGR 1u
/* Sample type codes: U8 is one byte per sample, F32 is a host-endian float in
 * [0, 1]. */
#define ODR_DTYPE_U8 0u
#define ODR_DTYPE_F32 1u

#define ODR_DESCRIPTION_CAPACITY 64

typedef struct OdrImageDesc {
  const uint8_t* data;
  uint64_t length_bytes;
  uint32_t width;
  uint32_t height;
  uint32_t channels; /* 1 or 3 */
  uint32_t layout;
  uint32_t channel_order;
  uint32_t dtype;
} OdrImageDesc;

typedef struct OdrCategoryOut {
  uint32_t index;
  double confidence;
  char description[ODR_DESCRIPTION_CAPACITY]; /* truncated, NUL-terminated */
} OdrCategoryOut;

/* Loads a centroid model package directory. On success writes a new handle to
 * *out_handle; on failure leaves it untouched. */
ODR_FFI_API OdrStatus odr_load_centroid(const char* path_utf8, OdrHandle* out_handle);

ODR_FFI_API OdrStatus odr_infer_centroid(OdrHandle handle, const OdrImageDesc* image,
                                         OdrCategoryOut* out_category);

/* Releases a handle. A second free of the same handle returns ODR_BAD_HANDLE. */
ODR_FFI_API OdrStatus odr_free(OdrHandle handle);

/* Copies the calling thread's most recent error message into buffer,
 * truncated to capacity - 1 bytes and NUL-terminated. */
ODR_FFI_API OdrStatus odr_last_error(char* buffer, size_t capacity);

static inline const char* odr_status_name(OdrStatus status) {
  switch (status) {
    case ODR_OK: return "OK";
    case ODR_NOT_FOUND: return "NOT_FOUND";
    case ODR_BAD_PACKAGE: return "BAD_PACKAGE";
    case ODR_BAD_INPUT: return "BAD_INPUT";
    case ODR_BAD_HANDLE: return "BAD_HANDLE";
    case ODR_CAPACITY: return "CAPACITY";
    case ODR_INTERNAL: return "INTERNAL";
    default: return "UNKNOWN";
  }
}

#ifdef __cplusplus
}
#endif

#endif /* ODR_FFI_H_ */
