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

#ifndef SIGMIN_QUOTIENT_HPP
#define SIGMIN_QUOTIENT_HPP

#include "sigmin/lts.hpp"
#include "sigmin/partition.hpp"

namespace sigmin {

enum class QuotientSemantics {
    /// Keep tau self-loops on a block when some member has a tau step that
    /// stays inside the block.
    Strong,
    /// Drop block-internal tau steps: against a stable branching partition
    /// they are silent.
    Branching,
};

/// Builds the quotient LTS: one state per block of `p` (numbered in order of
/// first occurrence), a transition (B, a, C) for every underlying transition
/// between the blocks, subject to the tau self-loop rule above. The initial
/// state is the block of lts.initial().
Lts quotient(const Lts &lts, const Partition &p, QuotientSemantics semantics);

} // namespace sigmin

#endif
