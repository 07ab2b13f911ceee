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

#ifndef SIGMIN_REFINE_HPP
#define SIGMIN_REFINE_HPP

#include <cstdint>
#include <vector>

#include "sigmin/action_partition.hpp"
#include "sigmin/lts.hpp"
#include "sigmin/partition.hpp"
#include "sigmin/signature.hpp"

namespace sigmin {

enum class ClassicVariant { StrongClassic, BranchingClassic };

/// Counters for one refinement run. A "pass" is one full signature
/// computation over all states; the loop stops at the first pass that does
/// not change the block count (which, by refinement monotonicity, means the
/// partition is stable). `iterations` counts the passes that did change it,
/// so the final confirming pass is in `passes` but not in `iterations`.
struct RefineStats {
    std::uint64_t iterations = 0;
    std::uint64_t passes = 0;
    std::uint64_t final_block_count = 0;
    std::vector<std::uint64_t> blocks_per_pass;
};

struct RefineResult {
    Partition partition;
    RefineStats stats;
};

/// sig_s: the (action, block of target) pairs over the outgoing transitions.
Signature signature_strong_classic(const Lts &lts, const Partition &p, StateId s);

/// sig_b for every state: pairs (a, p(t)) reachable through a chain of
/// silent tau steps (staying in the block of the origin) followed by one
/// transition that is visible or block-changing. Computed as a least
/// fixpoint over the silent tau edges, so tau cycles are fine.
std::vector<Signature> branching_classic_signatures(const Lts &lts, const Partition &p);

/// Single-state convenience wrapper around the batch computation.
Signature signature_branching_classic(const Lts &lts, const Partition &p, StateId s);

/// One refinement pass: next(s) = fresh id for (cur(s), sig(cur, s)).
/// Exposed for tests and stability checks.
struct PassResult {
    std::vector<Signature> signatures; // per state, the signature used
    Partition next;
};
PassResult refine_pass_classic(const Lts &lts, ClassicVariant variant, const Partition &cur);
PassResult refine_pass_inductive_strong(const Lts &lts, const ActionPartition &ap,
                                        const Partition &cur);
PassResult refine_pass_inductive_branching(const Lts &lts, const ActionPartition &ap,
                                           const Partition &cur);

/// Refine to stability with classic (previous-round-only) signatures.
/// `initial` defaults to the trivial one-block partition.
RefineResult refine(const Lts &lts, ClassicVariant variant, const Partition *initial = nullptr);

/// Inductive strong refinement: A_> successors contribute their id in the
/// partition under construction. States are processed in
/// reverse_topological_order, so those ids are always available.
/// Requires check_wellfounded(lts, ap) == ok.
RefineResult refine_inductive_strong(const Lts &lts, const ActionPartition &ap,
                                     const Partition *initial = nullptr);

/// Inductive branching refinement: per state the pre-signature is computed
/// first; a tau successor in the same old block whose signature absorbs it
/// donates its signature, otherwise the pre-signature stands. Requires tau
/// in A_> and an A_>-acyclic LTS (run eliminate_tau_sccs first if needed).
RefineResult refine_inductive_branching(const Lts &lts, const ActionPartition &ap,
                                        const Partition *initial = nullptr);

} // namespace sigmin

#endif
