#pragma once

// Subset-keyed storage shared by the BFS routines. Dense for small n,
// hashed above that.

#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "syncx/dfa.hpp"
#include "syncx/state_set.hpp"

namespace syncx::detail {

inline constexpr std::size_t kDenseLimit = 20;

template <typename V>
class MaskMap {
public:
    explicit MaskMap(std::size_t n) : dense_(n <= kDenseLimit) {
        if (dense_) {
            values_.resize(std::size_t{1} << n);
            present_.assign(std::size_t{1} << n, 0);
        }
    }

    const V* find(StateSet s) const {
        if (dense_) return present_[s.mask()] ? &values_[s.mask()] : nullptr;
        auto it = hashed_.find(s.mask());
        return it == hashed_.end() ? nullptr : &it->second;
    }

    /// False if the key was already present.
    bool insert(StateSet s, V value) {
        if (dense_) {
            if (present_[s.mask()]) return false;
            present_[s.mask()] = 1;
            values_[s.mask()] = std::move(value);
            return true;
        }
        return hashed_.emplace(s.mask(), std::move(value)).second;
    }

private:
    bool dense_;
    std::vector<V> values_;
    std::vector<std::uint8_t> present_;
    std::unordered_map<StateSet::Mask, V> hashed_;
};

/// BFS back-link: the set was reached from `from` by `letter`.
struct Link {
    StateSet from;
    Letter letter = 0;
    bool root = false;
};

/// Letters from the root to `target`, in the order the edges were taken.
template <typename Map>
std::vector<Letter> trace_path(const Map& links, StateSet target) {
    std::vector<Letter> path;
    for (const Link* link = links.find(target); link && !link->root; link = links.find(link->from)) {
        path.push_back(link->letter);
    }
    return {path.rbegin(), path.rend()};
}

/**
 * preimage(S, a) for every mask S over n states, k·2^n entries.
 * Built incrementally from the lowest set bit.
 */
class PreimageTable {
public:
    explicit PreimageTable(const Dfa& dfa) : n_(dfa.n()), k_(dfa.k()) {
        const std::size_t size = std::size_t{1} << n_;
        table_.resize(k_ * size);
        for (Letter a = 0; a < k_; ++a) {
            StateSet::Mask* row = &table_[a * size];
            row[0] = 0;
            for (std::size_t mask = 1; mask < size; ++mask) {
                const std::size_t low = mask & (~mask + 1);
                const auto state = static_cast<State>(std::countr_zero(mask));
                row[mask] = row[mask ^ low] | dfa.inverse(a, state).mask();
            }
        }
    }

    StateSet operator()(StateSet s, Letter a) const {
        return StateSet(table_[a * (std::size_t{1} << n_) + s.mask()]);
    }

private:
    std::size_t n_;
    std::size_t k_;
    std::vector<StateSet::Mask> table_;
};

}  // namespace syncx::detail
