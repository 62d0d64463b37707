#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace syncx {

/// Letter index; letter 0 is displayed as 'a', 1 as 'b', and so on.
using Letter = unsigned;

/// Default display names for letters.
inline constexpr std::string_view kDefaultAlphabet = "abcdefghijklmnopqrstuvwxyz";

/// Largest supported alphabet, so every letter has a default one-character name.
inline constexpr std::size_t kMaxLetters = kDefaultAlphabet.size();

/**
 * A finite word over letter indices. The first letter acts first:
 * Q·(uv) = (Q·u)·v, and preimages fold from the last letter.
 */
class Word {
public:
    Word() = default;
    explicit Word(std::vector<Letter> letters) : letters_(std::move(letters)) {}

    /// Parse a letter string such as "bab" against an alphabet of names.
    /// Throws ConstructionError on an unknown character.
    static Word parse(std::string_view text, std::string_view alphabet = kDefaultAlphabet);
    /// letter repeated `count` times
    static Word repeat(Letter letter, std::size_t count);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    Letter operator[](std::size_t i) const { return letters_[i]; }
    const std::vector<Letter>& letters() const { return letters_; }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }
    auto rbegin() const { return letters_.rbegin(); }
    auto rend() const { return letters_.rend(); }

    void push_back(Letter a) { letters_.push_back(a); }
    Word& operator+=(const Word& other);
    friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

    /// `count` concatenated copies.
    Word power(std::size_t count) const;

    std::string str(std::string_view alphabet = kDefaultAlphabet) const;

    bool operator==(const Word&) const = default;

private:
    std::vector<Letter> letters_;
};

}  // namespace syncx
