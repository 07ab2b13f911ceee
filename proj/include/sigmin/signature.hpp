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

#ifndef SIGMIN_SIGNATURE_HPP
#define SIGMIN_SIGNATURE_HPP

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "sigmin/lts.hpp"
#include "sigmin/partition.hpp"

namespace sigmin {

struct SigEntry {
    ActionId action;
    BlockId block;

    friend auto operator<=>(const SigEntry &, const SigEntry &) = default;
};

/// A finite set of (action, block) pairs in canonical sorted order.
class Signature {
public:
    Signature() = default;

    /// Sorts and deduplicates.
    static Signature from_unsorted(std::vector<SigEntry> entries);

    std::span<const SigEntry> entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }

    bool contains(SigEntry e) const;

    /// this subseteq (other u {extra}), by a linear merge over the sorted
    /// entry lists.
    bool subset_of_plus(const Signature &other, SigEntry extra) const;

    friend bool operator==(const Signature &, const Signature &) = default;

    /// Feeds the canonical little-endian byte encoding of the entries into
    /// an FNV-1a accumulator (used for hashing and for owner selection).
    std::uint64_t fnv1a(std::uint64_t seed) const;

private:
    std::vector<SigEntry> entries_;
};

/// 64-bit FNV-1a over little-endian encoded words, plus a final mixer.
/// Fixed functions so that hash-derived decisions (owner maps) are
/// reproducible across platforms and runs.
inline constexpr std::uint64_t kFnvOffset = 0xcbf29ce484222325ULL;

std::uint64_t fnv1a_u64(std::uint64_t h, std::uint64_t v);
std::uint64_t mix64(std::uint64_t x); // splitmix64 finalizer

/// Assigns fresh integer ids to (old block id, signature) pairs, realizing
/// one refinement round's renumbering. Ids are offset + stride * k for the
/// k-th distinct pair inserted, so several instances can hand out disjoint
/// id ranges (stride = worker count, offset = worker rank). Cleared between
/// rounds.
class IndexedSet {
public:
    explicit IndexedSet(std::uint64_t stride = 1, std::uint64_t offset = 0)
        : stride_(stride), offset_(offset) {}

    /// Id for the pair, allocating a fresh one on first sight.
    BlockId put(BlockId old_id, const Signature &sig);

    /// Number of distinct pairs inserted since the last clear().
    std::uint64_t size() const { return table_.size(); }

    void clear() { table_.clear(); }

private:
    struct Key {
        BlockId old_id;
        Signature sig;
        friend bool operator==(const Key &, const Key &) = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key &k) const {
            return static_cast<std::size_t>(mix64(k.sig.fnv1a(fnv1a_u64(kFnvOffset, k.old_id))));
        }
    };

    std::unordered_map<Key, BlockId, KeyHash> table_;
    std::uint64_t stride_;
    std::uint64_t offset_;
};

} // namespace sigmin

#endif
