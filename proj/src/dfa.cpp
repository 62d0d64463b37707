#include "syncx/dfa.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "mask_map.hpp"
#include "syncx/errors.hpp"

namespace syncx {

Dfa::Dfa(std::size_t n, std::size_t k, std::vector<State> delta)
    : n_(n), k_(k), delta_(std::move(delta)) {
    if (n_ < 1) throw ConstructionError("automaton needs at least one state");
    if (n_ > kMaxStates) {
        throw ConstructionError("automaton has " + std::to_string(n_) + " states; at most " +
                                std::to_string(kMaxStates) + " are supported");
    }
    if (k_ < 1) throw ConstructionError("alphabet must not be empty");
    if (k_ > kMaxLetters) {
        throw ConstructionError("alphabet has " + std::to_string(k_) + " letters; at most " +
                                std::to_string(kMaxLetters) + " are supported");
    }
    if (delta_.size() != n_ * k_) throw ConstructionError("transition table has the wrong size");

    inverse_.assign(n_ * k_, StateSet{});
    for (Letter a = 0; a < k_; ++a) {
        for (State q = 0; q < n_; ++q) {
            const State p = delta_[a * n_ + q];
            if (p >= n_) {
                throw ConstructionError("letter " + std::string(1, kDefaultAlphabet[a]) + ", state q" +
                                        std::to_string(q + 1) + ": target out of range");
            }
            inverse_[a * n_ + p].insert(q);
        }
    }
}

bool Dfa::is_permutation(Letter a) const {
    for (State p = 0; p < n_; ++p) {
        if (inverse(a, p).size() != 1) return false;
    }
    return true;
}

std::vector<State> Dfa::row(Letter a) const {
    return {delta_.begin() + static_cast<std::ptrdiff_t>(a * n_),
            delta_.begin() + static_cast<std::ptrdiff_t>((a + 1) * n_)};
}

Dfa make_dfa(std::size_t n, std::size_t k, const std::vector<std::vector<int>>& table) {
    if (table.size() != k) {
        throw ConstructionError("expected " + std::to_string(k) + " letter rows, got " +
                                std::to_string(table.size()));
    }
    std::vector<State> delta;
    delta.reserve(n * k);
    for (std::size_t a = 0; a < k; ++a) {
        const std::string letter = a < kMaxLetters ? std::string(1, kDefaultAlphabet[a]) : std::to_string(a);
        if (table[a].size() != n) {
            throw ConstructionError("letter " + letter + ": expected " + std::to_string(n) + " targets, got " +
                                    std::to_string(table[a].size()));
        }
        for (std::size_t q = 0; q < n; ++q) {
            const int target = table[a][q];
            if (target < 1 || static_cast<std::size_t>(target) > n) {
                throw ConstructionError("letter " + letter + ", state q" + std::to_string(q + 1) +
                                        ": target " + std::to_string(target) + " not in [1.." +
                                        std::to_string(n) + "]");
            }
            delta.push_back(static_cast<State>(target - 1));
        }
    }
    return Dfa(n, k, std::move(delta));
}

StateSet image(const Dfa& dfa, StateSet s, Letter a) {
    StateSet out;
    for (State q : s) out.insert(dfa.next(q, a));
    return out;
}

StateSet image(const Dfa& dfa, StateSet s, const Word& w) {
    for (Letter a : w) s = image(dfa, s, a);
    return s;
}

StateSet preimage(const Dfa& dfa, StateSet s, Letter a) {
    StateSet out;
    for (State p : s) out |= dfa.inverse(a, p);
    return out;
}

StateSet preimage_word(const Dfa& dfa, StateSet s, const Word& w) {
    for (auto it = w.rbegin(); it != w.rend(); ++it) s = preimage(dfa, s, *it);
    return s;
}

std::size_t rank(const Dfa& dfa, const Word& w) { return image(dfa, dfa.states(), w).size(); }

std::optional<Word> compressing_word(const Dfa& dfa, StateSet s) {
    if (s.size() < 2) throw PreconditionError("compressibility needs a subset of at least two states");
    detail::MaskMap<detail::Link> links(dfa.n());
    links.insert(s, {s, 0, true});
    std::deque<StateSet> queue{s};
    while (!queue.empty()) {
        const StateSet current = queue.front();
        queue.pop_front();
        for (Letter a = 0; a < dfa.k(); ++a) {
            const StateSet next = image(dfa, current, a);
            if (!links.insert(next, {current, a, false})) continue;
            if (next.size() < s.size()) return Word(detail::trace_path(links, next));
            queue.push_back(next);
        }
    }
    return std::nullopt;
}

bool is_compressible(const Dfa& dfa, StateSet s) { return compressing_word(dfa, s).has_value(); }

std::vector<std::size_t> strongly_connected_components(const Dfa& dfa) {
    // Iterative Tarjan.
    constexpr std::size_t kUnset = static_cast<std::size_t>(-1);
    const std::size_t n = dfa.n();
    std::vector<std::size_t> index(n, kUnset), low(n, 0), component(n, kUnset);
    std::vector<bool> on_stack(n, false);
    std::vector<State> stack;
    std::size_t counter = 0;
    std::size_t components = 0;

    struct Frame {
        State state;
        Letter next_letter;
    };
    for (State root = 0; root < n; ++root) {
        if (index[root] != kUnset) continue;
        std::vector<Frame> call{{root, 0}};
        index[root] = low[root] = counter++;
        stack.push_back(root);
        on_stack[root] = true;
        while (!call.empty()) {
            Frame& frame = call.back();
            const State v = frame.state;
            if (frame.next_letter < dfa.k()) {
                const State w = dfa.next(v, frame.next_letter++);
                if (index[w] == kUnset) {
                    index[w] = low[w] = counter++;
                    stack.push_back(w);
                    on_stack[w] = true;
                    call.push_back({w, 0});
                } else if (on_stack[w]) {
                    low[v] = std::min(low[v], index[w]);
                }
                continue;
            }
            if (low[v] == index[v]) {
                State w;
                do {
                    w = stack.back();
                    stack.pop_back();
                    on_stack[w] = false;
                    component[w] = components;
                } while (w != v);
                ++components;
            }
            call.pop_back();
            if (!call.empty()) {
                const State parent = call.back().state;
                low[parent] = std::min(low[parent], low[v]);
            }
        }
    }
    return component;
}

bool is_strongly_connected(const Dfa& dfa) {
    const auto component = strongly_connected_components(dfa);
    return std::all_of(component.begin(), component.end(), [&](std::size_t c) { return c == component[0]; });
}

bool is_synchronizing(const Dfa& dfa) {
    const std::size_t n = dfa.n();
    if (n == 1) return true;
    // Pair {p,q}, p<q, at index p*n+q. Backward BFS from pairs that one letter merges.
    std::vector<std::uint8_t> mergeable(n * n, 0);
    std::deque<std::pair<State, State>> queue;
    auto mark = [&](State p, State q) {
        if (p > q) std::swap(p, q);
        if (mergeable[p * n + q]) return;
        mergeable[p * n + q] = 1;
        queue.emplace_back(p, q);
    };
    for (Letter a = 0; a < dfa.k(); ++a) {
        for (State target = 0; target < n; ++target) {
            const StateSet sources = dfa.inverse(a, target);
            for (State p : sources) {
                for (State q : sources) {
                    if (p < q) mark(p, q);
                }
            }
        }
    }
    while (!queue.empty()) {
        const auto [p, q] = queue.front();
        queue.pop_front();
        for (Letter a = 0; a < dfa.k(); ++a) {
            for (State pp : dfa.inverse(a, p)) {
                for (State qq : dfa.inverse(a, q)) {
                    if (pp != qq) mark(pp, qq);
                }
            }
        }
    }
    for (State p = 0; p < n; ++p) {
        for (State q = p + 1; q < n; ++q) {
            if (!mergeable[p * n + q]) return false;
        }
    }
    return true;
}

Dfa remove_letter(const Dfa& dfa, Letter a) {
    if (dfa.k() == 1) throw PreconditionError("cannot remove the only letter");
    if (a >= dfa.k()) throw PreconditionError("letter index out of range");
    std::vector<State> delta;
    delta.reserve(dfa.n() * (dfa.k() - 1));
    for (Letter b = 0; b < dfa.k(); ++b) {
        if (b == a) continue;
        const auto row = dfa.row(b);
        delta.insert(delta.end(), row.begin(), row.end());
    }
    return Dfa(dfa.n(), dfa.k() - 1, std::move(delta));
}

}  // namespace syncx
