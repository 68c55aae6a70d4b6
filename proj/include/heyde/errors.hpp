/*
 * Copyright 2026 The heyde toolkit authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace heyde {

/// Base class for all toolkit errors. The CLI maps subclasses to exit codes:
/// ParseError/ValidationError/DomainError/IoError -> 2, CapacityError -> 3.
class Error : public std::runtime_error {
  public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed scenario text. Carries the 1-based line/column of the offending
/// token.
class ParseError : public Error {
  public:
    ParseError(const std::string& msg, int line_, int col_)
        : Error(msg + " (line " + std::to_string(line_) + ", column " +
                std::to_string(col_) + ")"),
          line(line_), col(col_) {}
    int line;
    int col;
};

/// Structurally well-formed input that violates a contract: dangling
/// reference, incompatible moduli, constraint violation, unknown key.
class ValidationError : public Error {
  public:
    explicit ValidationError(const std::string& msg) : Error(msg) {}
};

/// Exhaustive enumeration would exceed the configured bound, or integer
/// arithmetic would overflow.
class CapacityError : public Error {
  public:
    explicit CapacityError(const std::string& msg) : Error(msg) {}
};

/// Input outside an operation's mathematical domain (non-automorphism where
/// one is required, parameter constraint violation, vanishing denominator).
class DomainError : public Error {
  public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

class IoError : public Error {
  public:
    explicit IoError(const std::string& msg) : Error(msg) {}
};

} // namespace heyde
