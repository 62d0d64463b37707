#include "syncx/extension.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "mask_map.hpp"
#include "syncx/errors.hpp"

namespace syncx {
namespace {

void require_proper_nonempty(const Dfa& dfa, StateSet s) {
    if (s.empty()) throw PreconditionError("subset must be non-empty");
    if (!s.is_subset_of(dfa.states())) throw PreconditionError("subset has states outside the automaton");
    if (s == dfa.states()) throw PreconditionError("subset must be a proper subset of Q");
}

void require_bound(const Dfa& dfa, std::size_t bound, const char* what) {
    if (dfa.n() > bound) {
        throw CapacityError(std::string(what) + ": " + std::to_string(dfa.n()) + " states exceeds the bound of " +
                            std::to_string(bound) + "; query single subsets instead");
    }
}

/**
 * Repeated preimage BFS over one automaton with dense scratch storage.
 * An epoch counter invalidates the previous search instead of clearing.
 */
class PreimageSearch {
public:
    explicit PreimageSearch(const Dfa& dfa)
        : dfa_(dfa),
          table_(dfa),
          epoch_(std::size_t{1} << dfa.n(), 0),
          dist_(std::size_t{1} << dfa.n(), 0),
          parent_(std::size_t{1} << dfa.n(), 0),
          letter_(std::size_t{1} << dfa.n(), 0) {}

    /// BFS from `source`; returns the first visited set (source excluded)
    /// for which goal(set) holds, in BFS order with letters ascending.
    template <typename Goal>
    std::optional<StateSet> run(StateSet source, Goal&& goal) {
        if (++current_ == 0) {
            std::fill(epoch_.begin(), epoch_.end(), 0);
            current_ = 1;
        }
        queue_.clear();
        visit(source, source, 0, 0);
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            const StateSet x(queue_[head]);
            const auto d = dist_[x.mask()];
            for (Letter a = 0; a < dfa_.k(); ++a) {
                const StateSet y = table_(x, a);
                if (epoch_[y.mask()] == current_) continue;
                visit(y, x, a, d + 1);
                if (goal(y)) return y;
            }
        }
        return std::nullopt;
    }

    std::size_t distance(StateSet s) const { return dist_[s.mask()]; }

    /// Word w with source·w^{-1} = s for the last run.
    Word word_to(StateSet s) const {
        std::vector<Letter> letters;
        for (std::size_t d = dist_[s.mask()]; d > 0; --d) {
            letters.push_back(letter_[s.mask()]);
            s = StateSet(parent_[s.mask()]);
        }
        // The last preimage step is the first letter of the word.
        return Word(std::move(letters));
    }

private:
    void visit(StateSet s, StateSet from, Letter a, std::uint32_t d) {
        epoch_[s.mask()] = current_;
        dist_[s.mask()] = d;
        parent_[s.mask()] = from.mask();
        letter_[s.mask()] = static_cast<std::uint8_t>(a);
        queue_.push_back(s.mask());
    }

    const Dfa& dfa_;
    detail::PreimageTable table_;
    std::uint32_t current_ = 0;
    std::vector<std::uint32_t> epoch_;
    std::vector<std::uint32_t> dist_;
    std::vector<StateSet::Mask> parent_;
    std::vector<std::uint8_t> letter_;
    std::vector<StateSet::Mask> queue_;
};

}  // namespace

std::optional<Word> shortest_extending_word(const Dfa& dfa, StateSet s) {
    require_proper_nonempty(dfa, s);
    detail::MaskMap<detail::Link> links(dfa.n());
    links.insert(s, {s, 0, true});
    std::deque<StateSet> queue{s};
    while (!queue.empty()) {
        const StateSet current = queue.front();
        queue.pop_front();
        for (Letter a = 0; a < dfa.k(); ++a) {
            const StateSet next = preimage(dfa, current, a);
            if (!links.insert(next, {current, a, false})) continue;
            if (next.size() > s.size()) {
                auto steps = detail::trace_path(links, next);
                std::reverse(steps.begin(), steps.end());
                return Word(std::move(steps));
            }
            queue.push_back(next);
        }
    }
    return std::nullopt;
}

ExtensionReport extension_profile(const Dfa& dfa, std::size_t bound) {
    require_bound(dfa, bound, "extension profile");
    if (dfa.n() < 2) throw PreconditionError("extension profile needs at least two states");

    const std::size_t n = dfa.n();
    PreimageSearch search(dfa);
    ExtensionReport report;
    report.per_cardinality_max.assign(n - 1, std::size_t{0});
    bool finite = true;
    std::size_t best = 0;
    StateSet best_set;

    const StateSet::Mask full = dfa.states().mask();
    for (StateSet::Mask mask = 1; mask < full; ++mask) {
        const StateSet s(mask);
        const std::size_t size = s.size();
        const auto hit = search.run(s, [size](StateSet y) { return y.size() > size; });
        auto& slot = report.per_cardinality_max[size - 1];
        if (!hit) {
            slot.reset();
            if (finite) {
                finite = false;
                best_set = s;
            }
            continue;
        }
        const std::size_t length = search.distance(*hit);
        if (slot && length > *slot) slot = length;
        if (finite && length > best) {
            best = length;
            best_set = s;
        }
    }

    report.witness_set = best_set;
    if (finite) {
        report.max_length = best;
        report.witness_word = shortest_extending_word(dfa, best_set).value();
        if (report.witness_word.size() != best) {
            throw ConsistencyFault("profile witness length differs from the profile maximum");
        }
    }
    return report;
}

std::vector<StateSet> reachable_images(const Dfa& dfa) {
    detail::MaskMap<char> seen(dfa.n());
    std::vector<StateSet> out{dfa.states()};
    seen.insert(dfa.states(), 1);
    for (std::size_t head = 0; head < out.size(); ++head) {
        const StateSet current = out[head];
        for (Letter a = 0; a < dfa.k(); ++a) {
            const StateSet next = image(dfa, current, a);
            if (seen.insert(next, 1)) out.push_back(next);
        }
    }
    return out;
}

std::optional<Word> shortest_image_extending_word(const Dfa& dfa, StateSet s) {
    require_proper_nonempty(dfa, s);
    std::vector<StateSet> larger;
    for (StateSet t : reachable_images(dfa)) {
        if (t.size() > s.size()) larger.push_back(t);
    }
    std::sort(larger.begin(), larger.end(), [](StateSet x, StateSet y) { return x.size() > y.size(); });

    detail::MaskMap<detail::Link> links(dfa.n());
    links.insert(s, {s, 0, true});
    std::deque<StateSet> queue{s};
    while (!queue.empty()) {
        const StateSet current = queue.front();
        queue.pop_front();
        for (Letter a = 0; a < dfa.k(); ++a) {
            const StateSet next = preimage(dfa, current, a);
            if (!links.insert(next, {current, a, false})) continue;
            const bool hit = std::any_of(larger.begin(), larger.end(), [next](StateSet t) {
                return t.size() <= next.size() && t.is_subset_of(next);
            });
            if (hit) {
                auto steps = detail::trace_path(links, next);
                std::reverse(steps.begin(), steps.end());
                return Word(std::move(steps));
            }
            queue.push_back(next);
        }
    }
    return std::nullopt;
}

ImageExtensionReport image_extension_bound(const Dfa& dfa, std::size_t bound) {
    require_bound(dfa, bound, "image extension bound");
    if (!is_synchronizing(dfa)) throw PreconditionError("image extension bound needs a synchronizing automaton");

    const std::size_t n = dfa.n();
    const auto images = reachable_images(dfa);
    std::vector<std::vector<StateSet>> by_size(n + 1);
    for (StateSet s : images) by_size[s.size()].push_back(s);

    ImageExtensionReport report;
    report.reachable_image_count = images.size();
    PreimageSearch search(dfa);
    bool any = false;

    for (StateSet s : images) {
        if (s == dfa.states()) continue;
        StateSet target;
        auto contains_larger_image = [&](StateSet p) {
            for (std::size_t size = p.size(); size > s.size(); --size) {
                for (StateSet t : by_size[size]) {
                    if (t.is_subset_of(p)) {
                        target = t;
                        return true;
                    }
                }
            }
            return false;
        };
        const auto hit = search.run(s, contains_larger_image);
        if (!hit) {
            throw ConsistencyFault("reachable image " + s.to_string() + " never reaches a larger image");
        }
        const std::size_t length = search.distance(*hit);
        if (!any || length > report.worst_length) {
            any = true;
            report.worst_s = s;
            report.worst_length = length;
            report.worst_word = search.word_to(*hit);
            report.worst_preimage = *hit;
            report.worst_target = target;
        }
    }

    if (any) {
        const auto len = static_cast<std::int64_t>(report.worst_length);
        const auto den = static_cast<std::int64_t>(n);
        const auto g = std::gcd(len, den);
        report.constant_witness = {len / g, den / g};
        report.preimage_is_image =
            std::find(images.begin(), images.end(), report.worst_preimage) != images.end();
    }
    return report;
}

std::optional<Word> shortest_avoiding_word(const Dfa& dfa, State q) {
    if (q >= dfa.n()) throw PreconditionError("state out of range");
    const StateSet all = dfa.states();
    detail::MaskMap<detail::Link> links(dfa.n());
    links.insert(all, {all, 0, true});
    std::deque<StateSet> queue{all};
    while (!queue.empty()) {
        const StateSet current = queue.front();
        queue.pop_front();
        for (Letter a = 0; a < dfa.k(); ++a) {
            const StateSet next = image(dfa, current, a);
            if (!links.insert(next, {current, a, false})) continue;
            if (!next.contains(q)) return Word(detail::trace_path(links, next));
            queue.push_back(next);
        }
    }
    return std::nullopt;
}

bool is_irreducibly_synchronizing(const Dfa& dfa) {
    if (!is_synchronizing(dfa)) throw PreconditionError("automaton is not synchronizing");
    // With one letter, removing it leaves only the empty word.
    if (dfa.k() == 1) return dfa.n() > 1;
    for (Letter a = 0; a < dfa.k(); ++a) {
        if (is_synchronizing(remove_letter(dfa, a))) return false;
    }
    return true;
}

}  // namespace syncx
