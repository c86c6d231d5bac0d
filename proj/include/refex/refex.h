/* Copyright 2026 The refex Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/* C interface to the refex referring-expression engine.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Functions return REFEX_OK on success; on failure they return an error
 * status and leave a human-readable message retrievable per thread via
 * refex_last_error(). Reports are handed back as JSON text: call
 * refex_report_json() to borrow the string (owned by the report handle).
 */

#ifndef REFEX_REFEX_H_
#define REFEX_REFEX_H_

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct refex_kb refex_kb;
typedef struct refex_genre refex_genre;
typedef struct refex_report refex_report;

typedef enum refex_status {
  REFEX_OK = 0,
  REFEX_ERR_PARSE = 1,
  REFEX_ERR_DUPLICATE_ENTITY = 2,
  REFEX_ERR_DUPLICATE_ATTRIBUTE = 3,
  REFEX_ERR_UNKNOWN_ENTITY = 4,
  REFEX_ERR_REFERENT_NOT_IN_CONTEXT = 5,
  REFEX_ERR_NO_DISTINGUISHING_DESCRIPTION = 6,
  REFEX_ERR_INSTANCE_TOO_LARGE = 7,
  REFEX_ERR_QUALITY_VIOLATION = 8,
  REFEX_ERR_NOT_DISTINGUISHING = 9,
  REFEX_ERR_VERIFICATION_FAILURE = 10,
  REFEX_ERR_IO = 11,
  REFEX_ERR_INVALID_ARGUMENT = 12
} refex_status;

typedef enum refex_strategy {
  REFEX_STRATEGY_FULL_BREVITY = 0,
  REFEX_STRATEGY_GREEDY = 1,
  REFEX_STRATEGY_INCREMENTAL = 2
} refex_strategy;

/* Library version as "major.minor.patch". Static storage; do not free. */
const char* refex_version(void);

/* Message for the most recent failure on the calling thread, or "" if the
 * last call succeeded. Valid until the next API call on this thread. */
const char* refex_last_error(void);

/* Stable identifier for a status value, e.g. "NoDistinguishingDescription".
 * Unknown values map to "Unknown". */
const char* refex_status_name(refex_status status);

/* ---- Knowledge bases ---------------------------------------------------- */

refex_status refex_kb_parse(const char* json_text, refex_kb** out_kb);
refex_status refex_kb_load_file(const char* path, refex_kb** out_kb);
size_t refex_kb_entity_count(const refex_kb* kb);
void refex_kb_free(refex_kb* kb);

/* ---- Genre profiles ------------------------------------------------------ */

refex_status refex_genre_parse(const char* json_text, refex_genre** out_genre);
refex_status refex_genre_load_file(const char* path, refex_genre** out_genre);
/* Built-in profiles: "casual", "inventory". */
refex_status refex_genre_builtin(const char* name, refex_genre** out_genre);
/* Borrowed pointer, valid for the lifetime of the handle. */
const char* refex_genre_name(const refex_genre* genre);
void refex_genre_free(refex_genre* genre);

/* ---- Generation ----------------------------------------------------------
 *
 * context_ids/context_count select the distractor set (the referent must be
 * among them); pass count 0 with a NULL pointer to use every entity in the
 * knowledge base. genre may be NULL for the built-in "casual" profile; it is
 * only consulted by the incremental strategy. convey items are "attr=value"
 * strings added as communicative goals alongside identification.
 *
 * On success *out_report holds a plan report (description, trace, goal
 * outcomes, attributions, implicature warnings, hearer verification) as
 * JSON. On failure *out_report is NULL.
 */
refex_status refex_generate(const refex_kb* kb, const char* referent,
                            const char* const* context_ids,
                            size_t context_count, refex_strategy strategy,
                            const refex_genre* genre,
                            const char* const* convey_items,
                            size_t convey_count, int always_include_type,
                            refex_report** out_report);

/* ---- Interpretation -------------------------------------------------------
 *
 * description is a comma-separated "attr=value" list. referent may be NULL
 * for resolution only; when given, per-descriptor purposes are classified
 * against it. A NOT_DISTINGUISHING status still produces a report (the
 * resolution outcome and candidate set are in the JSON).
 */
refex_status refex_interpret(const refex_kb* kb, const char* description,
                             const char* const* context_ids,
                             size_t context_count, const char* referent,
                             refex_report** out_report);

/* ---- Strategy comparison --------------------------------------------------
 *
 * oracle_guard of 0 means the default cap (20 properties). with_timings
 * non-zero includes wall_time_us fields in the JSON; otherwise the report
 * is byte-for-byte reproducible for identical inputs.
 */
refex_status refex_compare(const refex_kb* kb, const char* referent,
                           const char* const* context_ids,
                           size_t context_count, const refex_genre* genre,
                           size_t oracle_guard, int with_timings,
                           refex_report** out_report);

/* ---- Reports -------------------------------------------------------------- */

/* Borrowed pointer to the report's JSON text (UTF-8, NUL-terminated),
 * valid until refex_report_free(). */
const char* refex_report_json(const refex_report* report);
void refex_report_free(refex_report* report);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* REFEX_REFEX_H_ */
