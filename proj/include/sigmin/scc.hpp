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

#ifndef SIGMIN_SCC_HPP
#define SIGMIN_SCC_HPP

#include <utility>
#include <vector>

#include "sigmin/lts.hpp"

namespace sigmin {

/// Maps original states to states of the tau-collapsed LTS. Two states map
/// to the same output state iff they are mutually reachable over tau
/// transitions.
struct SccMap {
    std::vector<StateId> representative; // original state -> output state
    StateId component_count = 0;
};

/// Collapses every tau-strongly-connected component into a single state.
/// Tau transitions internal to a component disappear; everything else is
/// kept (deduplicated) between component representatives. Components are
/// numbered 0..C-1 in ascending order of their smallest member, so the
/// result is deterministic. The output is tau-cycle-free.
std::pair<Lts, SccMap> eliminate_tau_sccs(const Lts &lts);

} // namespace sigmin

#endif
