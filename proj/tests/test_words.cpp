#include "support/catch.hpp"

#include <compare>

#include "riaut/word.hpp"

using namespace riaut;

namespace {
  Word w(char const* text, std::size_t k = 2) {
    return parse_word(text, Alphabet(k));
  }
}  // namespace

TEST_CASE("alphabet needs two letters", "[words]") {
  REQUIRE_THROWS_AS(Alphabet(1), Error);
  REQUIRE(Alphabet(3).last() == 3);
}

TEST_CASE("prefix relations", "[words]") {
  CHECK(is_prefix(w("^"), w("ab")));
  CHECK(is_prefix(w("a"), w("ab")));
  CHECK_FALSE(is_prefix(w("ab"), w("a")));

  CHECK(prefix_comparable(w("a"), w("ab")));
  CHECK_FALSE(prefix_comparable(w("aa"), w("ab")));
  CHECK(prefix_comparable(w("abba"), w("abba")));
}

TEST_CASE("dictionary order", "[words]") {
  CHECK(dict_compare(w("a"), w("aa")) == std::strong_ordering::less);
  CHECK(dict_compare(w("aa"), w("ab")) == std::strong_ordering::less);
  CHECK(dict_compare(w("aa"), w("b")) == std::strong_ordering::less);
  CHECK(dict_compare(w("b"), w("b")) == std::strong_ordering::equal);
}

TEST_CASE("dictionary order is a total order extending the prefix order", "[words]") {
  for (std::size_t k : {2, 3}) {
    auto all = words_up_to(Alphabet(k), 4);
    for (auto const& x : all) {
      for (auto const& y : all) {
        auto xy = dict_compare(x, y);
        auto yx = dict_compare(y, x);
        // antisymmetry and totality
        REQUIRE((xy == std::strong_ordering::equal) == (x == y));
        REQUIRE((xy == std::strong_ordering::less) == (yx == std::strong_ordering::greater));
        if (is_prefix(x, y)) {
          REQUIRE(xy != std::strong_ordering::greater);
        }
        // otherwise the first difference decides
        if (!prefix_comparable(x, y)) {
          auto i = common_prefix_length(x, y);
          REQUIRE((xy == std::strong_ordering::less) == (x[i] < y[i]));
        }
      }
    }
    // transitivity on a sample of triples
    for (std::size_t i = 0; i < all.size(); i += 3) {
      for (std::size_t j = 0; j < all.size(); j += 5) {
        for (std::size_t m = 0; m < all.size(); m += 7) {
          if (all[i] < all[j] && all[j] < all[m]) {
            REQUIRE(all[i] < all[m]);
          }
        }
      }
    }
  }
}

TEST_CASE("word text form", "[words]") {
  Alphabet A(3);
  CHECK(to_string(Word()) == "^");
  CHECK(to_string(parse_word("cab", A)) == "cab");
  CHECK(parse_word("cab", A) == Word{3, 1, 2});
  REQUIRE_THROWS_AS(parse_word("abd", A), Error);
  REQUIRE_THROWS_AS(parse_word("", A), Error);
  try {
    parse_word("x", A);
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::ParseError);
  }
}

TEST_CASE("word enumeration", "[words]") {
  Alphabet A(2);
  CHECK(words_of_length(A, 3).size() == 8);
  CHECK(words_up_to(A, 3).size() == 15);
  auto level = words_of_length(A, 2);
  CHECK(std::is_sorted(level.begin(), level.end()));
}
