#include "syncx/reset.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "mask_map.hpp"
#include "syncx/errors.hpp"

namespace syncx {

std::optional<Word> shortest_reset_word(const Dfa& dfa) {
    const StateSet all = dfa.states();
    if (all.size() == 1) return Word{};
    detail::MaskMap<detail::Link> links(dfa.n());
    links.insert(all, {all, 0, true});
    std::deque<StateSet> queue{all};
    while (!queue.empty()) {
        const StateSet current = queue.front();
        queue.pop_front();
        for (Letter a = 0; a < dfa.k(); ++a) {
            const StateSet next = image(dfa, current, a);
            if (!links.insert(next, {current, a, false})) continue;
            if (next.size() == 1) return Word(detail::trace_path(links, next));
            queue.push_back(next);
        }
    }
    return std::nullopt;
}

std::size_t default_layer_limit(std::size_t n) { return n * n * n / 6 + n; }

namespace {

bool inside_any(StateSet s, const std::vector<StateSet>& family) {
    return std::any_of(family.begin(), family.end(), [s](StateSet t) { return s.is_subset_of(t); });
}

// Keeps `maximal` an antichain of the maximal sets added so far.
void add_maximal(std::vector<StateSet>& maximal, StateSet s) {
    if (inside_any(s, maximal)) return;
    std::erase_if(maximal, [s](StateSet t) { return t.is_subset_of(s); });
    maximal.push_back(s);
}

}  // namespace

LayerTrace inverse_layers(const Dfa& dfa, std::size_t limit) {
    LayerTrace trace;
    const StateSet all = dfa.states();
    if (dfa.n() == 1) {
        trace.layers.push_back({all});
        trace.found_at = 0;
        return trace;
    }

    std::vector<StateSet> first;
    for (State q = 0; q < dfa.n(); ++q) {
        for (Letter a = 0; a < dfa.k(); ++a) {
            if (dfa.inverse(a, q).size() >= 2) {
                first.push_back(StateSet::singleton(q));
                break;
            }
        }
    }
    trace.layers.push_back(first);
    // Maximal members of all layers so far; S ⊆ some L_j member iff S ⊆ one of these.
    std::vector<StateSet> history;
    for (StateSet s : first) add_maximal(history, s);

    for (std::size_t i = 1; i <= limit; ++i) {
        const auto& previous = trace.layers.back();
        if (previous.empty()) return trace;

        std::vector<StateSet> candidates;
        candidates.reserve(previous.size() * dfa.k());
        for (StateSet s : previous) {
            for (Letter a = 0; a < dfa.k(); ++a) candidates.push_back(preimage(dfa, s, a));
        }
        std::sort(candidates.begin(), candidates.end());
        candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

        std::vector<StateSet> layer;
        for (StateSet s : candidates) {
            if (s.size() <= 1) continue;
            if (inside_any(s, history)) continue;
            const bool dominated = std::any_of(candidates.begin(), candidates.end(),
                                               [s](StateSet t) { return s.is_proper_subset_of(t); });
            if (!dominated) layer.push_back(s);
        }
        for (StateSet s : layer) add_maximal(history, s);
        const bool found = std::find(layer.begin(), layer.end(), all) != layer.end();
        trace.layers.push_back(std::move(layer));
        if (found) {
            trace.found_at = i;
            return trace;
        }
    }
    trace.truncated = !trace.layers.back().empty();
    return trace;
}

LayerTrace inverse_layers(const Dfa& dfa) { return inverse_layers(dfa, default_layer_limit(dfa.n())); }

std::optional<std::size_t> reset_length(const Dfa& dfa) {
    const auto word = shortest_reset_word(dfa);
    const auto trace = inverse_layers(dfa);
    const std::optional<std::size_t> forward = word ? std::optional(word->size()) : std::nullopt;
    if (forward != trace.found_at) {
        auto show = [](std::optional<std::size_t> v) { return v ? std::to_string(*v) : std::string("none"); };
        throw ConsistencyFault("reset length mismatch: forward BFS " + show(forward) + ", inverse layers " +
                               show(trace.found_at));
    }
    return forward;
}

std::optional<State> check_sync_word(const Dfa& dfa, const Word& w) {
    const StateSet result = image(dfa, dfa.states(), w);
    if (result.size() != 1) return std::nullopt;
    return result.front();
}

}  // namespace syncx
