#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "syncx/dfa.hpp"

namespace syncx {

/// Full-profile computations refuse automata above this many states.
inline constexpr std::size_t kDefaultProfileBound = 20;

/**
 * Shortest w with |S·w^{-1}| > |S|, or nullopt if S cannot be extended.
 *
 * BFS over the whole preimage-reachable subset space from S. Intermediate
 * sets are not pruned by size: shortest extending paths can pass through
 * sets smaller than S.
 *
 * Throws PreconditionError when S is empty or S = Q.
 */
std::optional<Word> shortest_extending_word(const Dfa& dfa, StateSet s);

struct ExtensionReport {
    /// Maximum shortest-extending length over all non-empty proper subsets;
    /// nullopt when some subset cannot be extended at all.
    std::optional<std::size_t> max_length;
    /// A subset attaining max_length, or an unextendable subset.
    StateSet witness_set;
    /// Shortest extending word of witness_set (empty if unextendable).
    Word witness_word;
    /// Entry j-1 is the maximum over subsets of cardinality j, for j = 1..n-1.
    std::vector<std::optional<std::size_t>> per_cardinality_max;
};

/// Exact extension profile over all 2^n - 2 subsets.
/// Throws CapacityError above `bound` states, PreconditionError for n < 2.
ExtensionReport extension_profile(const Dfa& dfa, std::size_t bound = kDefaultProfileBound);

/// Every Q·w, in BFS order starting with Q.
std::vector<StateSet> reachable_images(const Dfa& dfa);

struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool operator==(const Rational&) const = default;
};

struct ImageExtensionReport {
    std::size_t reachable_image_count = 0;
    /// Reachable proper image needing the longest u.
    StateSet worst_s;
    std::size_t worst_length = 0;
    /// worst_length / n, reduced.
    Rational constant_witness;
    /// u for worst_s, the preimage worst_s·u^{-1}, and the larger reachable
    /// image found inside it.
    Word worst_word;
    StateSet worst_preimage;
    StateSet worst_target;
    /// Whether worst_preimage is itself a reachable image.
    bool preimage_is_image = false;
};

/// Shortest u such that S·u^{-1} contains a reachable image larger than S.
/// S need not be reachable itself. nullopt if no such u exists.
/// Throws PreconditionError when S is empty or S = Q.
std::optional<Word> shortest_image_extending_word(const Dfa& dfa, StateSet s);

/**
 * For every reachable image S ⊊ Q, the least |u| such that S·u^{-1}
 * contains a reachable image T with |T| > |S|; reports the maximum.
 *
 * Throws PreconditionError for a non-synchronizing automaton, CapacityError
 * above `bound` states, ConsistencyFault if some S has no such u.
 */
ImageExtensionReport image_extension_bound(const Dfa& dfa, std::size_t bound = kDefaultProfileBound);

/// Shortest w with q ∉ Q·w, or nullopt if q lies in every image.
std::optional<Word> shortest_avoiding_word(const Dfa& dfa, State q);

/// Synchronizing, and removing any single letter breaks synchronization.
/// Throws PreconditionError if dfa is not synchronizing.
bool is_irreducibly_synchronizing(const Dfa& dfa);

}  // namespace syncx
