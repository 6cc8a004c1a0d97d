#ifndef RIAUT_WORD_HPP_
#define RIAUT_WORD_HPP_

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "error.hpp"

namespace riaut {

  //! Letters are 1-based: the alphabet a_1 < ... < a_k is {1, ..., k}.
  using letter_type = std::uint32_t;

  //! The ordered alphabet {a_1 < ... < a_k}, k >= 2.
  class Alphabet {
   public:
    explicit Alphabet(std::size_t k) : _k(k) {
      if (k < 2) {
        raise(ErrorCode::BadAlphabet, "k must be at least 2, found "
                                          + std::to_string(k));
      }
    }

    std::size_t size() const noexcept {
      return _k;
    }

    letter_type first() const noexcept {
      return 1;
    }

    letter_type last() const noexcept {
      return static_cast<letter_type>(_k);
    }

    bool contains(letter_type a) const noexcept {
      return a >= 1 && a <= _k;
    }

    bool operator==(Alphabet const&) const = default;

   private:
    std::size_t _k;
  };

  inline void check_same(Alphabet const& x, Alphabet const& y) {
    if (x != y) {
      raise(ErrorCode::AlphabetMismatch,
            "k = " + std::to_string(x.size()) + " vs k = "
                + std::to_string(y.size()));
    }
  }

  //! An element of the free monoid A*.
  //!
  //! The comparison operators implement the dictionary order: a prefix comes
  //! before its extensions, and otherwise the first differing letter decides.
  //! This is exactly lexicographic comparison of the letter sequences.
  class Word {
   public:
    Word() = default;

    explicit Word(std::u32string letters) : _letters(std::move(letters)) {}

    Word(std::initializer_list<letter_type> letters) {
      _letters.reserve(letters.size());
      for (auto a : letters) {
        _letters.push_back(static_cast<char32_t>(a));
      }
    }

    std::size_t size() const noexcept {
      return _letters.size();
    }

    bool empty() const noexcept {
      return _letters.empty();
    }

    letter_type operator[](std::size_t i) const noexcept {
      return static_cast<letter_type>(_letters[i]);
    }

    letter_type back() const noexcept {
      return static_cast<letter_type>(_letters.back());
    }

    //! The prefix of length n.
    Word prefix(std::size_t n) const {
      return Word(_letters.substr(0, n));
    }

    //! The suffix obtained by deleting the first n letters.
    Word drop(std::size_t n) const {
      return Word(_letters.substr(n));
    }

    //! Drop the last letter; the empty word is its own parent.
    Word parent() const {
      return empty() ? Word() : prefix(size() - 1);
    }

    Word child(letter_type a) const {
      Word result = *this;
      result._letters.push_back(static_cast<char32_t>(a));
      return result;
    }

    Word& operator+=(Word const& other) {
      _letters += other._letters;
      return *this;
    }

    friend Word operator+(Word x, Word const& y) {
      x += y;
      return x;
    }

    std::u32string const& letters() const noexcept {
      return _letters;
    }

    auto operator<=>(Word const&) const = default;
    bool operator==(Word const&) const  = default;

   private:
    std::u32string _letters;
  };

  //! x is a prefix of y.
  inline bool is_prefix(Word const& x, Word const& y) noexcept {
    return x.size() <= y.size()
           && y.letters().compare(0, x.size(), x.letters()) == 0;
  }

  inline bool is_strict_prefix(Word const& x, Word const& y) noexcept {
    return x.size() < y.size() && is_prefix(x, y);
  }

  inline bool prefix_comparable(Word const& x, Word const& y) noexcept {
    return x.size() <= y.size() ? is_prefix(x, y) : is_prefix(y, x);
  }

  inline std::strong_ordering dict_compare(Word const& u, Word const& v) noexcept {
    return u <=> v;
  }

  //! Length of the longest common prefix.
  inline std::size_t common_prefix_length(Word const& u, Word const& v) noexcept {
    std::size_t n = std::min(u.size(), v.size());
    std::size_t i = 0;
    while (i < n && u[i] == v[i]) {
      ++i;
    }
    return i;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Text form
  ////////////////////////////////////////////////////////////////////////////

  //! Letter a_i is rendered as the i-th lowercase latin letter; the empty
  //! word is rendered as `^`. Rendering needs k <= 26.
  inline std::string to_string(Word const& w) {
    if (w.empty()) {
      return "^";
    }
    std::string out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i) {
      out.push_back(static_cast<char>('a' + w[i] - 1));
    }
    return out;
  }

  inline Word parse_word(std::string_view text, Alphabet const& alphabet) {
    if (text == "^") {
      return Word();
    }
    if (text.empty()) {
      raise(ErrorCode::ParseError, "empty word text, use ^ for the empty word");
    }
    std::u32string letters;
    letters.reserve(text.size());
    for (char c : text) {
      if (c < 'a' || c > 'z'
          || !alphabet.contains(static_cast<letter_type>(c - 'a' + 1))) {
        raise(ErrorCode::ParseError,
              std::string("letter '") + c + "' is not among the first "
                  + std::to_string(alphabet.size()) + " letters");
      }
      letters.push_back(static_cast<char32_t>(c - 'a' + 1));
    }
    return Word(std::move(letters));
  }

  ////////////////////////////////////////////////////////////////////////////
  // Enumeration
  ////////////////////////////////////////////////////////////////////////////

  //! All words of length exactly n, in dictionary order.
  inline std::vector<Word> words_of_length(Alphabet const& alphabet,
                                           std::size_t      n) {
    std::vector<Word> out{Word()};
    for (std::size_t len = 0; len < n; ++len) {
      std::vector<Word> next;
      next.reserve(out.size() * alphabet.size());
      for (auto const& w : out) {
        for (letter_type a = 1; a <= alphabet.last(); ++a) {
          next.push_back(w.child(a));
        }
      }
      out = std::move(next);
    }
    return out;
  }

  //! All words of length at most n, shortest first.
  inline std::vector<Word> words_up_to(Alphabet const& alphabet, std::size_t n) {
    std::vector<Word> out;
    for (std::size_t len = 0; len <= n; ++len) {
      auto level = words_of_length(alphabet, len);
      out.insert(out.end(), level.begin(), level.end());
    }
    return out;
  }

}  // namespace riaut

template <>
struct std::hash<riaut::Word> {
  std::size_t operator()(riaut::Word const& w) const noexcept {
    return std::hash<std::u32string>{}(w.letters());
  }
};

#endif  // RIAUT_WORD_HPP_
