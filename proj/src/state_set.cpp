#include "syncx/state_set.hpp"

#include "syncx/errors.hpp"

namespace syncx {

StateSet StateSet::from_labels(std::initializer_list<int> labels) {
    return from_labels(std::vector<int>(labels));
}

StateSet StateSet::from_labels(const std::vector<int>& labels) {
    StateSet s;
    for (int label : labels) {
        if (label < 1 || static_cast<std::size_t>(label) > kMaxStates) {
            throw ConstructionError("state label out of range: " + std::to_string(label));
        }
        s.insert(static_cast<State>(label - 1));
    }
    return s;
}

StateSet StateSet::label_range(int first, int last) {
    StateSet s;
    for (int label = first; label <= last; ++label) s |= from_labels({label});
    return s;
}

std::vector<int> StateSet::labels() const {
    std::vector<int> out;
    out.reserve(size());
    for (State s : *this) out.push_back(static_cast<int>(s) + 1);
    return out;
}

std::string StateSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (State s : *this) {
        if (!first) out += ',';
        first = false;
        out += 'q';
        out += std::to_string(s + 1);
    }
    out += '}';
    return out;
}

}  // namespace syncx
