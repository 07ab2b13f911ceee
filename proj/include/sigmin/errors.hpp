/*
 * Copyright 2026 The sigmin authors
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

#ifndef SIGMIN_ERRORS_HPP
#define SIGMIN_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace sigmin {

/// Bad flag combinations or arguments that never reached the algorithms.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string &msg) : std::runtime_error(msg) {}
};

/// Malformed input data (unparseable AUT text, bad partition files, ...).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string &msg) : std::runtime_error(msg) {}
};

/// A documented precondition of an operation does not hold.
struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string &msg) : std::runtime_error(msg) {}
};

/// File system level failures.
struct IoError : std::runtime_error {
    explicit IoError(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace sigmin

#endif
