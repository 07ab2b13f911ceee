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

#ifndef SIGMIN_ACTION_PARTITION_HPP
#define SIGMIN_ACTION_PARTITION_HPP

#include <optional>
#include <string>
#include <vector>

#include "sigmin/lts.hpp"

namespace sigmin {

enum class ActionClass { Question, Greater };

/// A split of an LTS's action alphabet into the set evaluated against the
/// previous partition (A_?) and the set evaluated against the partition
/// under construction (A_>). Inductive refinement additionally requires the
/// A_>-labeled transition relation to be acyclic (check_wellfounded).
class ActionPartition {
public:
    /// A_> given by label; everything else in the alphabet goes to A_?.
    /// Unknown labels are rejected.
    static ActionPartition from_greater_labels(const Lts &lts,
                                               const std::vector<std::string> &greater);

    /// A_> = {tau} (empty when the alphabet has no tau), the usual choice
    /// for branching reduction of a tau-cycle-free LTS.
    static ActionPartition branching_default(const Lts &lts);

    ActionClass classify(ActionId a) const;
    bool is_greater(ActionId a) const;

    /// True when the alphabet's tau action (if any) is in A_>.
    bool tau_in_greater() const { return tau_in_greater_; }

    std::size_t alphabet_size() const { return greater_.size(); }
    std::vector<std::string> greater_labels(const Lts &lts) const;

private:
    explicit ActionPartition(std::vector<bool> greater, bool tau_in_greater)
        : greater_(std::move(greater)), tau_in_greater_(tau_in_greater) {}

    std::vector<bool> greater_; // indexed by ActionId
    bool tau_in_greater_;
};

/// A cycle through A_>-labeled transitions; states.front() == states.back()
/// and consecutive entries are connected by an A_> transition.
struct CycleWitness {
    std::vector<StateId> states;
};

/// nullopt when the A_>-labeled subgraph is acyclic, otherwise a witness
/// cycle. Iterative DFS; safe on very long chains.
std::optional<CycleWitness> check_wellfounded(const Lts &lts, const ActionPartition &ap);

/// A permutation of the states such that whenever s -a-> t with a in A_>,
/// t precedes s. Ties are broken by ascending state index. Throws
/// PreconditionError when the A_> subgraph has a cycle.
std::vector<StateId> reverse_topological_order(const Lts &lts, const ActionPartition &ap);

} // namespace sigmin

#endif
