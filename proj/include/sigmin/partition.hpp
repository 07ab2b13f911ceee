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

#ifndef SIGMIN_PARTITION_HPP
#define SIGMIN_PARTITION_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "sigmin/lts.hpp"

namespace sigmin {

using BlockId = std::uint64_t;

/// A partition of the states 0..N-1, represented as a block id per state.
/// Block ids are arbitrary; two partitions are compared by the equivalence
/// relation they induce (relation_equal), never by raw ids.
class Partition {
public:
    explicit Partition(std::vector<BlockId> block_of);

    /// All states in one block.
    static Partition trivial(StateId n);
    /// Every state its own block.
    static Partition discrete(StateId n);

    StateId num_states() const { return static_cast<StateId>(block_of_.size()); }
    BlockId block_of(StateId s) const { return block_of_[s]; }
    std::uint64_t block_count() const { return block_count_; }
    std::span<const BlockId> blocks() const { return block_of_; }

    bool same_block(StateId s, StateId t) const { return block_of_[s] == block_of_[t]; }

    /// Renumbers blocks 0..k-1 in order of first occurrence. Relation-equal
    /// partitions canonicalize to identical arrays.
    Partition canonicalized() const;

    /// True if every block of *this is contained in a block of `coarser`.
    bool refines(const Partition &coarser) const;

private:
    std::vector<BlockId> block_of_;
    std::uint64_t block_count_ = 0;
};

/// Equality of the induced equivalence relations (ids compared up to renaming).
bool relation_equal(const Partition &a, const Partition &b);

/// First pair of states (s < t) equated by exactly one of the two partitions,
/// or {N, N} when relation-equal.
std::pair<StateId, StateId> first_distinguishing_pair(const Partition &a, const Partition &b);

} // namespace sigmin

#endif
