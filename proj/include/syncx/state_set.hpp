#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <iterator>
#include <string>
#include <vector>

namespace syncx {

/// Internal state index. State q_i of the text is index i-1.
using State = unsigned;

/// Width of the subset mask; automata with more states are rejected.
inline constexpr std::size_t kMaxStates = 32;

/**
 * A subset of {q_1, ..., q_n} stored as a bit mask. Bit i holds state
 * index i (that is, q_{i+1}). The set does not know n; callers keep
 * masks within the automaton they belong to.
 */
class StateSet {
public:
    using Mask = std::uint32_t;

    class iterator {
    public:
        using iterator_category = std::forward_iterator_tag;
        using value_type = State;
        using difference_type = std::ptrdiff_t;
        using pointer = void;
        using reference = State;

        constexpr iterator() = default;
        constexpr explicit iterator(Mask rest) : rest_(rest) {}

        constexpr State operator*() const { return static_cast<State>(std::countr_zero(rest_)); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            iterator old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const = default;

    private:
        Mask rest_ = 0;
    };

    constexpr StateSet() = default;
    constexpr explicit StateSet(Mask mask) : mask_(mask) {}

    /// 0-based indices.
    constexpr StateSet(std::initializer_list<State> states) {
        for (State s : states) insert(s);
    }

    static constexpr StateSet full(std::size_t n) {
        return StateSet(n >= 32 ? ~Mask{0} : ((Mask{1} << n) - 1));
    }
    static constexpr StateSet singleton(State s) { return StateSet(Mask{1} << s); }

    /// Build from 1-based labels, i.e. from_labels({1, 5}) = {q_1, q_5}.
    static StateSet from_labels(std::initializer_list<int> labels);
    static StateSet from_labels(const std::vector<int>& labels);
    /// Contiguous label range {q_first, ..., q_last}; empty when first > last.
    static StateSet label_range(int first, int last);

    constexpr Mask mask() const { return mask_; }
    constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(mask_)); }
    constexpr bool empty() const { return mask_ == 0; }
    constexpr bool contains(State s) const { return (mask_ >> s) & 1U; }

    constexpr void insert(State s) { mask_ |= Mask{1} << s; }
    constexpr void erase(State s) { mask_ &= ~(Mask{1} << s); }

    constexpr bool is_subset_of(StateSet other) const { return (mask_ & ~other.mask_) == 0; }
    constexpr bool is_proper_subset_of(StateSet other) const {
        return is_subset_of(other) && mask_ != other.mask_;
    }

    /// Only meaningful when size() == 1.
    constexpr State front() const { return static_cast<State>(std::countr_zero(mask_)); }

    constexpr iterator begin() const { return iterator(mask_); }
    constexpr iterator end() const { return iterator(0); }

    constexpr StateSet operator|(StateSet o) const { return StateSet(mask_ | o.mask_); }
    constexpr StateSet operator&(StateSet o) const { return StateSet(mask_ & o.mask_); }
    constexpr StateSet operator-(StateSet o) const { return StateSet(mask_ & ~o.mask_); }
    constexpr StateSet& operator|=(StateSet o) {
        mask_ |= o.mask_;
        return *this;
    }

    constexpr bool operator==(const StateSet&) const = default;
    constexpr auto operator<=>(const StateSet&) const = default;

    /// 1-based labels in increasing order.
    std::vector<int> labels() const;
    /// "{q1,q5}"
    std::string to_string() const;

private:
    Mask mask_ = 0;
};

}  // namespace syncx

template <>
struct std::hash<syncx::StateSet> {
    std::size_t operator()(syncx::StateSet s) const noexcept { return std::hash<std::uint32_t>{}(s.mask()); }
};
