#include "syncx/word.hpp"

#include "syncx/errors.hpp"

namespace syncx {

Word Word::parse(std::string_view text, std::string_view alphabet) {
    std::vector<Letter> letters;
    letters.reserve(text.size());
    for (char c : text) {
        const auto pos = alphabet.find(c);
        if (pos == std::string_view::npos) {
            throw ConstructionError(std::string("unknown letter '") + c + "'");
        }
        letters.push_back(static_cast<Letter>(pos));
    }
    return Word(std::move(letters));
}

Word Word::repeat(Letter letter, std::size_t count) {
    return Word(std::vector<Letter>(count, letter));
}

Word& Word::operator+=(const Word& other) {
    letters_.insert(letters_.end(), other.letters_.begin(), other.letters_.end());
    return *this;
}

Word Word::power(std::size_t count) const {
    Word out;
    out.letters_.reserve(letters_.size() * count);
    for (std::size_t i = 0; i < count; ++i) out += *this;
    return out;
}

std::string Word::str(std::string_view alphabet) const {
    std::string out;
    out.reserve(letters_.size());
    for (Letter a : letters_) {
        out += a < alphabet.size() ? alphabet[a] : '?';
    }
    return out;
}

}  // namespace syncx
