/** Copyright 2026 The connview Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * 	http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef CONNVIEW_CSV_H_
#define CONNVIEW_CSV_H_

#include <string>
#include <string_view>
#include <vector>

namespace connview {

using CsvRow = std::vector<std::string>;

/// RFC-4180 reader: comma separated, double-quote quoting with "" escapes,
/// quoted fields may span lines. CRLF and LF line ends are accepted, a UTF-8
/// byte order mark is skipped and blank lines are ignored. Throws DataError
/// on an unterminated quote or stray characters after a closing quote.
std::vector<CsvRow> parse_csv(std::string_view text);

/// Quotes a field when it contains a comma, quote or line break.
std::string csv_escape(std::string_view field);

}  // namespace connview

#endif  // CONNVIEW_CSV_H_
