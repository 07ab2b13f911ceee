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

#ifndef SIGMIN_AUT_HPP
#define SIGMIN_AUT_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "sigmin/lts.hpp"

namespace sigmin {

/// Parses an Aldebaran (.aut) document:
///
///   des (I, M, N)
///   (src,"label",dst)     x M
///
/// Labels may be quoted or bare; the bare labels `tau` and `i`, and the
/// quoted label "tau", denote the invisible action and are normalized to
/// "tau". Throws ParseError on any malformed input.
Lts parse_aut(std::string_view text);

/// Renders an Lts as AUT text. Transitions are emitted in ascending
/// (src, label, dst) order with quoted labels, so output is byte
/// deterministic and re-parses to an equal Lts.
std::string write_aut(const Lts &lts);

/// File wrappers. Throw IoError when the file cannot be read or written.
Lts read_aut_file(const std::filesystem::path &path);
void write_aut_file(const Lts &lts, const std::filesystem::path &path);

} // namespace sigmin

#endif
