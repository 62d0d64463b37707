#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "syncx/state_set.hpp"
#include "syncx/word.hpp"

namespace syncx {

/**
 * Complete deterministic automaton over n states and k letters.
 *
 * Immutable after construction. Per-letter inverse rows are built once so
 * that a preimage is a union of cached sets.
 */
class Dfa {
public:
    /// `delta` is letter-major with 0-based targets: delta[a * n + q] = q·a.
    /// Throws ConstructionError on a bad size or target.
    Dfa(std::size_t n, std::size_t k, std::vector<State> delta);

    std::size_t n() const { return n_; }
    std::size_t k() const { return k_; }
    StateSet states() const { return StateSet::full(n_); }

    State next(State q, Letter a) const { return delta_[a * n_ + q]; }
    /// All q with q·a = p.
    StateSet inverse(Letter a, State p) const { return inverse_[a * n_ + p]; }

    bool is_permutation(Letter a) const;

    /// Transition row of one letter, 0-based targets.
    std::vector<State> row(Letter a) const;

    bool operator==(const Dfa& other) const { return n_ == other.n_ && k_ == other.k_ && delta_ == other.delta_; }

private:
    std::size_t n_;
    std::size_t k_;
    std::vector<State> delta_;
    std::vector<StateSet> inverse_;
};

/// Build from k rows of n 1-based targets (table[letter][state]).
Dfa make_dfa(std::size_t n, std::size_t k, const std::vector<std::vector<int>>& table);

StateSet image(const Dfa& dfa, StateSet s, Letter a);
/// S·w, letters applied left to right.
StateSet image(const Dfa& dfa, StateSet s, const Word& w);

/// {q : q·a ∈ S}
StateSet preimage(const Dfa& dfa, StateSet s, Letter a);
/// {q : q·w ∈ S}
StateSet preimage_word(const Dfa& dfa, StateSet s, const Word& w);

/// |Q·w|
std::size_t rank(const Dfa& dfa, const Word& w);

/// Shortest w with |S·w| < |S|, or nullopt if S is incompressible.
/// Throws PreconditionError when |S| < 2.
std::optional<Word> compressing_word(const Dfa& dfa, StateSet s);
bool is_compressible(const Dfa& dfa, StateSet s);

/// Component id per state (Tarjan); ids are in reverse topological order.
std::vector<std::size_t> strongly_connected_components(const Dfa& dfa);
bool is_strongly_connected(const Dfa& dfa);

/// Pair-graph test: every pair of states can be merged.
bool is_synchronizing(const Dfa& dfa);

/// Drop one letter; the remaining letters keep their order.
/// Throws PreconditionError when k == 1.
Dfa remove_letter(const Dfa& dfa, Letter a);

}  // namespace syncx
