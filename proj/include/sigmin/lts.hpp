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

#ifndef SIGMIN_LTS_HPP
#define SIGMIN_LTS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace sigmin {

using StateId = std::uint32_t;
using ActionId = std::uint32_t;

/// Canonical spelling of the invisible action.
inline constexpr std::string_view kTauLabel = "tau";

/// Interned action labels. An action is invisible iff its label is "tau".
class Alphabet {
public:
    /// Returns the id of `name`, interning it on first use.
    ActionId intern(std::string_view name);
    std::optional<ActionId> find(std::string_view name) const;

    const std::string &name(ActionId a) const { return names_.at(a); }
    std::size_t size() const { return names_.size(); }

    std::optional<ActionId> tau() const { return tau_; }
    bool is_tau(ActionId a) const { return tau_ && *tau_ == a; }

private:
    std::vector<std::string> names_;
    std::unordered_map<std::string, ActionId> index_;
    std::optional<ActionId> tau_;
};

struct Transition {
    StateId src;
    ActionId action;
    StateId dst;

    friend auto operator<=>(const Transition &, const Transition &) = default;
};

/// A labeled transition system: states 0..N-1, a set of labeled transitions
/// and an initial state. Immutable after construction; transitions are
/// deduplicated and stored sorted by (src, action, dst), with successor and
/// predecessor adjacency indexed per state.
class Lts {
public:
    /// Validates state bounds and action names, rejects N = 0, deduplicates.
    Lts(StateId state_count, StateId initial, Alphabet alphabet,
        std::vector<Transition> transitions);

    StateId num_states() const { return state_count_; }
    StateId initial() const { return initial_; }
    const Alphabet &alphabet() const { return alphabet_; }

    std::span<const Transition> transitions() const { return transitions_; }
    std::size_t num_transitions() const { return transitions_.size(); }
    const Transition &transition(std::uint32_t e) const { return transitions_[e]; }

    /// Indices into transitions() of the edges leaving s. Because the
    /// transition list is sorted by source, this is a contiguous range.
    std::span<const std::uint32_t> succ(StateId s) const {
        return {succ_index_.data() + succ_offset_[s],
                succ_offset_[s + 1] - succ_offset_[s]};
    }

    /// Indices into transitions() of the edges entering s.
    std::span<const std::uint32_t> pred(StateId s) const {
        return {pred_index_.data() + pred_offset_[s],
                pred_offset_[s + 1] - pred_offset_[s]};
    }

    bool is_tau(ActionId a) const { return alphabet_.is_tau(a); }
    std::optional<ActionId> tau() const { return alphabet_.tau(); }

private:
    StateId state_count_;
    StateId initial_;
    Alphabet alphabet_;
    std::vector<Transition> transitions_;
    std::vector<std::uint32_t> succ_offset_, succ_index_;
    std::vector<std::uint32_t> pred_offset_, pred_index_;
};

} // namespace sigmin

#endif
