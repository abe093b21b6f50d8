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

#ifndef CONNVIEW_ERROR_H_
#define CONNVIEW_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace connview {

/// Base class of every error raised by the library. The subclasses map onto
/// the CLI exit codes and HTTP statuses of the service layer.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Input data that cannot form a valid graph (duplicate ids, dangling
/// endpoints, attribute kind conflicts, malformed files).
class DataError : public Error {
 public:
  using Error::Error;
};

/// Syntax error in the query DSL or a metric expression.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line, std::size_t column)
      : Error(message + " at line " + std::to_string(line) + ", column " +
              std::to_string(column)),
        detail_(message),
        line_(line),
        column_(column) {}

  const std::string& detail() const { return detail_; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::string detail_;
  std::size_t line_;
  std::size_t column_;
};

/// Well-formed request that does not make sense for the graph: unknown
/// attribute, comparator incompatible with the attribute kind, aggregation by
/// a non-categorical attribute.
class SemanticError : public Error {
 public:
  using Error::Error;
};

/// Reference to a node, cell, query or session that does not exist.
class NotFoundError : public Error {
 public:
  using Error::Error;
};

/// Path enumeration produced more paths than the configured cap. No partial
/// result is kept.
class ResultCapExceeded : public Error {
 public:
  ResultCapExceeded(std::size_t cap, std::size_t reached)
      : Error("result cap of " + std::to_string(cap) +
              " paths exceeded (reached " + std::to_string(reached) + ")"),
        cap_(cap),
        reached_(reached) {}

  std::size_t cap() const { return cap_; }
  std::size_t reached() const { return reached_; }

 private:
  std::size_t cap_;
  std::size_t reached_;
};

class Cancelled : public Error {
 public:
  Cancelled() : Error("query cancelled") {}
};

}  // namespace connview

#endif  // CONNVIEW_ERROR_H_
