#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "syncx/dfa.hpp"

namespace syncx {

/// A shortest reset word by forward BFS over images of Q, or nullopt.
/// Ties go to the smaller letter at each step.
std::optional<Word> shortest_reset_word(const Dfa& dfa);

/**
 * Inverse-BFS layer families.
 *
 * layers[0] holds the singletons {q} with at least two incoming edges under
 * one letter. layers[i] holds the non-visited members of
 * {S·a^{-1} : S ∈ layers[i-1], a ∈ Σ}; a candidate is visited when it is a
 * singleton, lies inside a member of an earlier layer, or lies strictly
 * inside another candidate of the same step. found_at is the first i with
 * Q ∈ layers[i], which equals the reset length.
 *
 * For n = 1 the trace is layers = {{Q}}, found_at = 0.
 */
struct LayerTrace {
    std::vector<std::vector<StateSet>> layers;
    std::optional<std::size_t> found_at;
    bool truncated = false;
};

/// n^3/6 + n
std::size_t default_layer_limit(std::size_t n);

/// Stops at the first layer containing Q, at an empty layer, or after `limit` steps.
LayerTrace inverse_layers(const Dfa& dfa, std::size_t limit);
LayerTrace inverse_layers(const Dfa& dfa);

/// Reset length computed by forward BFS and by inverse layers.
/// Throws ConsistencyFault if they disagree; nullopt when not synchronizing.
std::optional<std::size_t> reset_length(const Dfa& dfa);

/// The single state of Q·w, or nullopt if |Q·w| > 1.
std::optional<State> check_sync_word(const Dfa& dfa, const Word& w);

}  // namespace syncx
