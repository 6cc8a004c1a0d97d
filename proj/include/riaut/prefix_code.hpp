#ifndef RIAUT_PREFIX_CODE_HPP_
#define RIAUT_PREFIX_CODE_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "word.hpp"

namespace riaut {

  namespace detail {
    struct unchecked_t {
      explicit unchecked_t() = default;
    };
    inline constexpr unchecked_t unchecked{};
  }  // namespace detail

  //! A finite maximal prefix code over an ordered alphabet.
  //!
  //! The words are stored in dictionary order; two codes are equal iff they
  //! are equal as sets. A code with i inner vertices has 1 + (k - 1) i
  //! elements.
  class MaximalPrefixCode {
   public:
    using const_iterator = std::vector<Word>::const_iterator;

    //! Validate an arbitrary collection of words. Duplicates are ignored.
    static MaximalPrefixCode validate(Alphabet const& alphabet,
                                      std::vector<Word> words) {
      std::sort(words.begin(), words.end());
      words.erase(std::unique(words.begin(), words.end()), words.end());
      if (words.empty()) {
        raise(ErrorCode::NotMaximal, "the empty set is not a maximal code");
      }
      for (auto const& w : words) {
        for (std::size_t i = 0; i < w.size(); ++i) {
          if (!alphabet.contains(w[i])) {
            raise(ErrorCode::ParseError, "letter index out of range");
          }
        }
      }
      // If x is a prefix of a later word then it is a prefix of its
      // immediate successor in dictionary order.
      for (std::size_t i = 1; i < words.size(); ++i) {
        if (is_prefix(words[i - 1], words[i])) {
          raise(ErrorCode::NotAPrefixCode,
                to_string(words[i - 1]) + " is a prefix of "
                    + to_string(words[i]));
        }
      }
      // For a prefix code |P| <= 1 + (k - 1) |spref(P)| with equality iff
      // every inner vertex has all k children.
      std::size_t vertices = 1;
      for (std::size_t i = 0; i < words.size(); ++i) {
        std::size_t lcp
            = i == 0 ? 0 : common_prefix_length(words[i - 1], words[i]);
        vertices += words[i].size() - lcp;
      }
      std::size_t inner = vertices - words.size();
      if (words.size() != 1 + (alphabet.size() - 1) * inner) {
        raise(ErrorCode::NotMaximal, "some inner vertex lacks a child");
      }
      return MaximalPrefixCode(detail::unchecked, alphabet, std::move(words));
    }

    //! Words must already be sorted and form a maximal prefix code.
    MaximalPrefixCode(detail::unchecked_t, Alphabet alphabet,
                      std::vector<Word> words)
        : _alphabet(alphabet), _words(std::move(words)) {}

    //! The code {ε} generating A* itself.
    static MaximalPrefixCode trivial(Alphabet const& alphabet) {
      return MaximalPrefixCode(detail::unchecked, alphabet, {Word()});
    }

    //! The code A = {a_1, ..., a_k}.
    static MaximalPrefixCode letters(Alphabet const& alphabet) {
      return trivial(alphabet).expand(0);
    }

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }

    std::vector<Word> const& words() const noexcept {
      return _words;
    }

    std::size_t size() const noexcept {
      return _words.size();
    }

    //! Number of inner vertices of the prefix tree.
    std::size_t inner_count() const noexcept {
      return (_words.size() - 1) / (_alphabet.size() - 1);
    }

    Word const& operator[](std::size_t i) const noexcept {
      return _words[i];
    }

    const_iterator begin() const noexcept {
      return _words.begin();
    }

    const_iterator end() const noexcept {
      return _words.end();
    }

    bool contains(Word const& w) const {
      return std::binary_search(_words.begin(), _words.end(), w);
    }

    std::optional<std::size_t> index_of(Word const& w) const {
      auto it = std::lower_bound(_words.begin(), _words.end(), w);
      if (it != _words.end() && *it == w) {
        return static_cast<std::size_t>(it - _words.begin());
      }
      return std::nullopt;
    }

    //! Index of the (unique) element that is a prefix of w, if any.
    std::optional<std::size_t> prefix_of(Word const& w) const {
      auto it = std::upper_bound(_words.begin(), _words.end(), w);
      if (it == _words.begin()) {
        return std::nullopt;
      }
      --it;
      if (is_prefix(*it, w)) {
        return static_cast<std::size_t>(it - _words.begin());
      }
      return std::nullopt;
    }

    //! Index range [first, last) of the elements that have y as a prefix.
    std::pair<std::size_t, std::size_t> extensions_of(Word const& y) const {
      auto first = std::lower_bound(_words.begin(), _words.end(), y);
      auto last  = first;
      while (last != _words.end() && is_prefix(y, *last)) {
        ++last;
      }
      return {static_cast<std::size_t>(first - _words.begin()),
              static_cast<std::size_t>(last - _words.begin())};
    }

    //! w ∈ PA*.
    bool generates(Word const& w) const {
      return prefix_of(w).has_value();
    }

    //! Replace the i-th word x by x a_1, ..., x a_k.
    MaximalPrefixCode expand(std::size_t i) const {
      std::vector<Word> out;
      out.reserve(_words.size() + _alphabet.size() - 1);
      out.insert(out.end(), _words.begin(), _words.begin() + i);
      for (letter_type a = 1; a <= _alphabet.last(); ++a) {
        out.push_back(_words[i].child(a));
      }
      out.insert(out.end(), _words.begin() + i + 1, _words.end());
      return MaximalPrefixCode(detail::unchecked, _alphabet, std::move(out));
    }

    bool operator==(MaximalPrefixCode const& that) const {
      return _alphabet == that._alphabet && _words == that._words;
    }

    bool operator<(MaximalPrefixCode const& that) const {
      if (_words.size() != that._words.size()) {
        return _words.size() < that._words.size();
      }
      return _words < that._words;
    }

   private:
    Alphabet          _alphabet;
    std::vector<Word> _words;
  };

  ////////////////////////////////////////////////////////////////////////////
  // Prefix tree statistics
  ////////////////////////////////////////////////////////////////////////////

  struct PrefixTreeStats {
    std::vector<Word> inner_vertices;  // spref(P), dictionary order
    std::vector<Word> inner_leaves;    // leaves of the inner tree
    std::size_t       leaf_count   = 0;
    std::size_t       inner_count  = 0;
    std::size_t       vertex_count = 0;
  };

  //! x is an inner vertex of P whose children all lie in P.
  inline bool is_inner_leaf(MaximalPrefixCode const& P, Word const& x) {
    for (letter_type a = 1; a <= P.alphabet().last(); ++a) {
      if (!P.contains(x.child(a))) {
        return false;
      }
    }
    return true;
  }

  inline PrefixTreeStats stats(MaximalPrefixCode const& P) {
    std::set<Word> inner;
    for (auto const& w : P) {
      for (std::size_t n = 0; n < w.size(); ++n) {
        inner.insert(w.prefix(n));
      }
    }
    PrefixTreeStats out;
    out.inner_vertices.assign(inner.begin(), inner.end());
    for (auto const& v : out.inner_vertices) {
      if (is_inner_leaf(P, v)) {
        out.inner_leaves.push_back(v);
      }
    }
    out.leaf_count   = P.size();
    out.inner_count  = inner.size();
    out.vertex_count = out.leaf_count + out.inner_count;
    return out;
  }

  //! The inner leaves of P in dictionary order.
  inline std::vector<Word> inner_leaves(MaximalPrefixCode const& P) {
    // An inner leaf x has x a_1, ..., x a_k consecutive in P.
    std::vector<Word> out;
    auto const        k = P.alphabet().size();
    for (std::size_t i = 0; i + k <= P.size(); ++i) {
      Word const& w = P[i];
      if (w.empty() || w.back() != 1) {
        continue;
      }
      Word x  = w.parent();
      bool ok = true;
      for (std::size_t j = 1; j < k && ok; ++j) {
        ok = P[i + j] == x.child(static_cast<letter_type>(j + 1));
      }
      if (ok) {
        out.push_back(std::move(x));
      }
    }
    return out;
  }

  //! Number of elements of P strictly to the left of the inner vertex x.
  inline std::size_t leaves_left_of(MaximalPrefixCode const& P, Word const& x) {
    return P.extensions_of(x).first;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Construction from trees
  ////////////////////////////////////////////////////////////////////////////

  //! The maximal prefix code whose inner vertices are exactly the given
  //! (prefix-closed) set.
  inline MaximalPrefixCode code_from_inner_vertices(Alphabet const& alphabet,
                                                    std::set<Word> const& inner) {
    if (inner.empty()) {
      return MaximalPrefixCode::trivial(alphabet);
    }
    std::vector<Word> out;
    for (auto const& v : inner) {
      for (letter_type a = 1; a <= alphabet.last(); ++a) {
        Word c = v.child(a);
        if (!inner.count(c)) {
          out.push_back(std::move(c));
        }
      }
    }
    return MaximalPrefixCode::validate(alphabet, std::move(out));
  }

  //! The code whose inner tree is the path pref(path).
  inline MaximalPrefixCode path_code(Alphabet const& alphabet, Word const& path) {
    std::set<Word> inner;
    for (std::size_t n = 0; n <= path.size(); ++n) {
      inner.insert(path.prefix(n));
    }
    return code_from_inner_vertices(alphabet, inner);
  }

  //! A code of size n whose sorted elements at positions [p1, p1 + k) and
  //! [p2, p2 + k) are the children of two inner leaves.
  //!
  //! Requires p1 + k <= p2, p2 + k <= n and at least three inner vertices.
  //! Built by expanding two leaves of a code with n - 2(k - 1) elements.
  inline MaximalPrefixCode code_with_inner_leaves_at(Alphabet const& alphabet,
                                                     std::size_t     n,
                                                     std::size_t     p1,
                                                     std::size_t     p2) {
    auto const k = alphabet.size();
    if ((n - 1) % (k - 1) != 0 || (n - 1) / (k - 1) < 3) {
      raise(ErrorCode::BadCardinality, "need a code with at least 3 inner "
                                       "vertices, found size "
                                           + std::to_string(n));
    }
    if (p1 + k > p2 || p2 + k > n) {
      raise(ErrorCode::SizeMismatch, "overlapping or out of range blocks");
    }
    std::size_t const inner = (n - 1) / (k - 1) - 2;
    Word              path;
    for (std::size_t i = 1; i < inner; ++i) {
      path = path.child(1);
    }
    auto              base = path_code(alphabet, path);
    std::size_t const e1 = p1, e2 = p2 - (k - 1);
    std::vector<Word> out;
    out.reserve(n);
    for (std::size_t i = 0; i < base.size(); ++i) {
      if (i == e1 || i == e2) {
        for (letter_type a = 1; a <= alphabet.last(); ++a) {
          out.push_back(base[i].child(a));
        }
      } else {
        out.push_back(base[i]);
      }
    }
    return MaximalPrefixCode(detail::unchecked, alphabet, std::move(out));
  }

  ////////////////////////////////////////////////////////////////////////////
  // Counting and enumeration
  ////////////////////////////////////////////////////////////////////////////

  //! Size of a maximal prefix code with i inner vertices.
  constexpr std::size_t code_size(std::size_t k, std::size_t i) noexcept {
    return 1 + (k - 1) * i;
  }

  //! Number of maximal prefix codes with i inner vertices, i.e. the number of
  //! complete k-ary trees with i inner vertices (Fuss-Catalan). Saturates at
  //! the maximum of std::uint64_t.
  inline std::uint64_t code_count(std::size_t k, std::size_t i) {
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    auto           add = [](std::uint64_t x, std::uint64_t y) {
      return x > max - y ? max : x + y;
    };
    auto mul = [](std::uint64_t x, std::uint64_t y) {
      return (y != 0 && x > max / y) ? max : x * y;
    };
    // count[m] = number of trees with m inner vertices
    std::vector<std::uint64_t> count{1};
    for (std::size_t m = 1; m <= i; ++m) {
      // k-fold convolution of count over total m - 1
      std::vector<std::uint64_t> conv(m, 0);
      conv[0] = 1;
      for (std::size_t c = 0; c < k; ++c) {
        std::vector<std::uint64_t> next(m, 0);
        for (std::size_t x = 0; x < m; ++x) {
          if (conv[x] == 0) {
            continue;
          }
          for (std::size_t y = 0; x + y < m; ++y) {
            next[x + y] = add(next[x + y], mul(conv[x], count[y]));
          }
        }
        conv = std::move(next);
      }
      count.push_back(conv[m - 1]);
    }
    return count[i];
  }

  namespace detail {
    // Codes with i inner vertices, relative to the root, as sorted word lists.
    using code_list = std::vector<std::vector<Word>>;

    inline code_list const& codes_with_inner(std::size_t              k,
                                             std::size_t              i,
                                             std::map<std::size_t, code_list>& memo) {
      if (auto it = memo.find(i); it != memo.end()) {
        return it->second;
      }
      code_list out;
      if (i == 0) {
        out.push_back({Word()});
        return memo.emplace(i, std::move(out)).first->second;
      }
      // Distribute the remaining i - 1 inner vertices over the k children,
      // putting as many as possible into the leftmost child first.
      std::vector<std::size_t> parts(k, 0);
      auto emit = [&]() {
        code_list partial{{}};
        for (std::size_t c = 0; c < k; ++c) {
          auto const& sub    = codes_with_inner(k, parts[c], memo);
          auto const  letter = Word{static_cast<letter_type>(c + 1)};
          code_list   next;
          next.reserve(partial.size() * sub.size());
          for (auto const& prefix : partial) {
            for (auto const& s : sub) {
              auto words = prefix;
              for (auto const& w : s) {
                words.push_back(letter + w);
              }
              next.push_back(std::move(words));
            }
          }
          partial = std::move(next);
        }
        for (auto& words : partial) {
          out.push_back(std::move(words));
        }
      };
      auto compose = [&](auto&& self, std::size_t c, std::size_t rest) -> void {
        if (c + 1 == k) {
          parts[c] = rest;
          emit();
          return;
        }
        for (std::size_t x = rest + 1; x-- > 0;) {
          parts[c] = x;
          self(self, c + 1, rest - x);
        }
      };
      compose(compose, 0, i - 1);
      return memo.emplace(i, std::move(out)).first->second;
    }
  }  // namespace detail

  //! All maximal prefix codes with i inner vertices, in a fixed order.
  inline std::vector<MaximalPrefixCode>
  enumerate_codes_with_inner(Alphabet const& alphabet, std::size_t i) {
    std::map<std::size_t, detail::code_list> memo;
    auto const& lists = detail::codes_with_inner(alphabet.size(), i, memo);
    std::vector<MaximalPrefixCode> out;
    out.reserve(lists.size());
    for (auto const& words : lists) {
      out.emplace_back(detail::unchecked, alphabet, words);
    }
    return out;
  }

  //! All maximal prefix codes with exactly n elements.
  inline std::vector<MaximalPrefixCode> enumerate_codes(Alphabet const& alphabet,
                                                        std::size_t     n) {
    auto const k = alphabet.size();
    if (n == 0 || (n - 1) % (k - 1) != 0) {
      raise(ErrorCode::BadCardinality,
            std::to_string(n) + " is not of the form 1 + (k - 1) i");
    }
    return enumerate_codes_with_inner(alphabet, (n - 1) / (k - 1));
  }

  ////////////////////////////////////////////////////////////////////////////
  // Ideals
  ////////////////////////////////////////////////////////////////////////////

  //! The code generating PA* ∩ QA*.
  inline MaximalPrefixCode intersect(MaximalPrefixCode const& P,
                                     MaximalPrefixCode const& Q) {
    check_same(P.alphabet(), Q.alphabet());
    std::vector<Word> out;
    out.reserve(std::max(P.size(), Q.size()));
    for (auto const& p : P) {
      if (Q.prefix_of(p)) {
        out.push_back(p);
      } else {
        auto [first, last] = Q.extensions_of(p);
        out.insert(out.end(), Q.begin() + first, Q.begin() + last);
      }
    }
    return MaximalPrefixCode(detail::unchecked, P.alphabet(), std::move(out));
  }

  //! QA* ⊆ PA*, i.e. every element of Q has a prefix in P.
  inline bool is_subideal(MaximalPrefixCode const& Q, MaximalPrefixCode const& P) {
    check_same(P.alphabet(), Q.alphabet());
    return std::all_of(
        Q.begin(), Q.end(), [&P](Word const& q) { return P.generates(q); });
  }

  ////////////////////////////////////////////////////////////////////////////
  // Moving inner leaves
  ////////////////////////////////////////////////////////////////////////////

  struct InnerLeafPair {
    MaximalPrefixCode code;
    Word              kept;   // inner leaf with the same left/right counts
    Word              extra;  // an additional inner leaf
  };

  namespace detail {
    // First position at which w has a letter different from `avoid`.
    inline std::optional<std::size_t> first_letter_not(Word const& w,
                                                       letter_type avoid) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] != avoid) {
          return i;
        }
      }
      return std::nullopt;
    }

    inline std::optional<std::size_t> first_letter(Word const& w,
                                                   letter_type a) {
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == a) {
          return i;
        }
      }
      return std::nullopt;
    }

    inline Word erase_at(Word const& w, std::size_t i) {
      return w.prefix(i) + w.drop(i + 1);
    }

    inline Word replace_at(Word const& w, std::size_t i, letter_type a) {
      return w.prefix(i).child(a) + w.drop(i + 1);
    }
  }  // namespace detail

  //! Given an inner leaf z of P, find a code Q with |Q| = |P| that has an
  //! inner leaf with the same number of leaves to its left and right as z has
  //! in P, and a second inner leaf.
  //!
  //! If P already has two inner leaves, P is returned. Otherwise the inner
  //! tree of P is the path z and one edge of z is removed and a new inner
  //! vertex added:
  //!   1. delete the first a_1 of z; add a right sibling at the first letter
  //!      of the new path that is not a_k;
  //!   2. mirror image of 1 with a_k and left siblings;
  //!   3. z = a_j z_1 ... z_{j-1} w without a_1, a_k: drop a_j, raise
  //!      z_1, ..., z_{j-1} by one, and add a_k (or, if the new path starts
  //!      with a_k, a right sibling as in case 1).
  //! Throws TooSmall for paths shorter than 3 or when no case applies.
  inline InnerLeafPair two_inner_leaves(MaximalPrefixCode const& P,
                                        Word const&              z) {
    auto const& A = P.alphabet();
    if (!is_inner_leaf(P, z)) {
      raise(ErrorCode::NotInnerLeaf, to_string(z));
    }
    auto leaves = inner_leaves(P);
    if (leaves.size() >= 2) {
      Word other = leaves[0] == z ? leaves[1] : leaves[0];
      return {P, z, std::move(other)};
    }
    if (z.size() < 3) {
      raise(ErrorCode::TooSmall,
            "single inner leaf at depth " + std::to_string(z.size()));
    }
    letter_type const  first = A.first(), last = A.last();
    std::optional<Word> Z, extra;

    if (auto p = detail::first_letter(z, first)) {
      Word cand = detail::erase_at(z, *p);
      if (auto q = detail::first_letter_not(cand, last)) {
        Z     = cand;
        extra = cand.prefix(*q).child(cand[*q] + 1);
      }
    }
    if (!Z) {
      if (auto p = detail::first_letter(z, last)) {
        Word cand = detail::erase_at(z, *p);
        if (auto q = detail::first_letter_not(cand, first)) {
          Z     = cand;
          extra = cand.prefix(*q).child(cand[*q] - 1);
        }
      }
    }
    if (!Z && !detail::first_letter(z, first) && !detail::first_letter(z, last)) {
      letter_type const j = z[0];
      if (z.size() >= j) {
        Word cand = z.drop(1);
        for (std::size_t t = 0; t + 1 < j; ++t) {
          cand = detail::replace_at(cand, t, cand[t] + 1);
        }
        if (cand[0] != last) {
          Z     = cand;
          extra = Word{last};
        } else if (auto q = detail::first_letter_not(cand, last)) {
          Z     = cand;
          extra = cand.prefix(*q).child(cand[*q] + 1);
        }
      }
    }
    if (!Z) {
      raise(ErrorCode::TooSmall, "no construction applies to path "
                                     + to_string(z));
    }
    std::set<Word> inner;
    for (std::size_t n = 0; n <= Z->size(); ++n) {
      inner.insert(Z->prefix(n));
    }
    for (std::size_t n = 0; n <= extra->size(); ++n) {
      inner.insert(extra->prefix(n));
    }
    return {code_from_inner_vertices(A, inner), std::move(*Z), std::move(*extra)};
  }

  ////////////////////////////////////////////////////////////////////////////
  // Text form
  ////////////////////////////////////////////////////////////////////////////

  inline std::string to_string(MaximalPrefixCode const& P) {
    std::string out = "{";
    for (std::size_t i = 0; i < P.size(); ++i) {
      if (i != 0) {
        out += ",";
      }
      out += to_string(P[i]);
    }
    return out + "}";
  }

  namespace detail {
    inline std::string_view trim(std::string_view s) {
      while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) {
        s.remove_prefix(1);
      }
      while (!s.empty()
             && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r'
                 || s.back() == '\n')) {
        s.remove_suffix(1);
      }
      return s;
    }

    inline std::vector<std::string_view> split(std::string_view s, char sep) {
      std::vector<std::string_view> out;
      std::size_t                   start = 0;
      for (std::size_t i = 0; i <= s.size(); ++i) {
        if (i == s.size() || s[i] == sep) {
          out.push_back(trim(s.substr(start, i - start)));
          start = i + 1;
        }
      }
      return out;
    }

    inline std::string_view unwrap(std::string_view s, char open, char close) {
      s = trim(s);
      if (s.size() < 2 || s.front() != open || s.back() != close) {
        raise(ErrorCode::ParseError, "expected " + std::string(1, open) + "..."
                                         + std::string(1, close) + ", found "
                                         + std::string(s));
      }
      return trim(s.substr(1, s.size() - 2));
    }
  }  // namespace detail

  //! Parse `{w1,w2,...}`; the order of the words is irrelevant.
  inline MaximalPrefixCode parse_code(std::string_view text,
                                      Alphabet const&  alphabet) {
    auto              body = detail::unwrap(text, '{', '}');
    std::vector<Word> words;
    if (!body.empty()) {
      for (auto item : detail::split(body, ',')) {
        words.push_back(parse_word(item, alphabet));
      }
    }
    return MaximalPrefixCode::validate(alphabet, std::move(words));
  }

}  // namespace riaut

#endif  // RIAUT_PREFIX_CODE_HPP_
