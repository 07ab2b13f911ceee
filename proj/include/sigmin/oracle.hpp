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

#ifndef SIGMIN_ORACLE_HPP
#define SIGMIN_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "sigmin/lts.hpp"
#include "sigmin/partition.hpp"

namespace sigmin {

/// Symmetric boolean relation over state pairs.
class StateRelation {
public:
    StateRelation(StateId n, bool initially_related);

    StateId num_states() const { return n_; }
    bool related(StateId s, StateId t) const { return bits_[idx(s, t)]; }
    void set(StateId s, StateId t, bool v) { bits_[idx(s, t)] = bits_[idx(t, s)] = v; }

    bool is_equivalence() const;
    /// Requires an equivalence; block of s = smallest t with related(s, t).
    Partition to_partition() const;

private:
    std::size_t idx(StateId s, StateId t) const {
        return static_cast<std::size_t>(s) * n_ + t;
    }
    StateId n_;
    std::vector<bool> bits_;
};

/// Ground truth by greatest-fixpoint pair deletion straight from the
/// relational definitions. Deliberately naive (O(N^2 M) per pass) and kept
/// independent of the refinement code it validates.
inline constexpr StateId kDefaultOracleLimit = 2000;

Partition coarsest_strong_bisimulation(const Lts &lts, StateId limit = kDefaultOracleLimit);
Partition coarsest_branching_bisimulation(const Lts &lts, StateId limit = kDefaultOracleLimit);

struct BisimViolation {
    StateId s;
    StateId t;
    std::uint32_t transition; // index into lts.transitions(), a move of s
};

/// First triple (s, t, s -a-> s') violating the strong transfer condition,
/// scanning states and stored transitions in order. nullopt = R is a strong
/// bisimulation. R must be symmetric.
std::optional<BisimViolation> find_strong_violation(const Lts &lts, const StateRelation &r);

/// Same for the branching transfer condition: a move of s must be matched
/// either as a silent tau step (s' R t) or by t ->tau*-> t' -a-> t'' with
/// s R t' and s' R t''.
std::optional<BisimViolation> find_branching_violation(const Lts &lts, const StateRelation &r);

bool is_strong_bisimulation(const Lts &lts, const StateRelation &r);
bool is_branching_bisimulation(const Lts &lts, const StateRelation &r);

/// Debug helper: s has no tau step to a branching-bisimilar state, judged
/// against a precomputed coarsest branching partition.
bool is_canonical(const Lts &lts, const Partition &branching, StateId s);

} // namespace sigmin

#endif
