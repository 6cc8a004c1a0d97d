#include "support/catch.hpp"
#include "support/oracles.hpp"

#include <random>
#include <set>

#include "riaut/prefix_code.hpp"

using namespace riaut;

namespace {
  Alphabet const A2(2), A3(3);

  MaximalPrefixCode code(char const* text, Alphabet const& A = A2) {
    return parse_code(text, A);
  }

  ErrorCode code_error(char const* text) {
    try {
      code(text);
    } catch (Error const& e) {
      return e.code();
    }
    FAIL("no error");
    return ErrorCode::ParseError;
  }

  // Number of elements of Q strictly to the left of x and strictly to the
  // right of its children, by direct comparison.
  std::pair<std::size_t, std::size_t> sides(MaximalPrefixCode const& Q, Word const& x) {
    std::size_t left = 0, right = 0;
    for (auto const& q : Q) {
      if (is_prefix(x, q)) {
        continue;
      }
      (q < x ? left : right) += 1;
    }
    return {left, right};
  }
}  // namespace

TEST_CASE("validation", "[prefix_codes]") {
  auto P = code("{ba,a,bb}");
  CHECK(to_string(P) == "{a,ba,bb}");
  CHECK(P.inner_count() == 2);
  CHECK(code_error("{a,aa}") == ErrorCode::NotAPrefixCode);
  CHECK(code_error("{aa,b}") == ErrorCode::NotMaximal);
  CHECK(code_error("{}") == ErrorCode::NotMaximal);
  CHECK(code_error("{a,b") == ErrorCode::ParseError);
  CHECK(code("{b,a,a}") == code("{a,b}"));
  CHECK(code("{^}").size() == 1);
}

TEST_CASE("tree statistics", "[prefix_codes]") {
  auto s = stats(code("{a,b}"));
  CHECK(s.inner_count == 1);
  CHECK(s.inner_leaves == std::vector<Word>{Word()});

  s = stats(code("{aa,ab,b}"));
  CHECK(s.inner_count == 2);
  CHECK(s.inner_leaves == std::vector<Word>{Word{1}});

  s = stats(code("{aa,ab,ba,bb}"));
  CHECK(s.inner_count == 3);
  CHECK(s.inner_leaves == std::vector<Word>{Word{1}, Word{2}});

  for (std::size_t k : {2, 3}) {
    Alphabet A(k);
    for (std::size_t i = 0; i <= 5; ++i) {
      for (auto const& P : enumerate_codes_with_inner(A, i)) {
        auto t = stats(P);
        REQUIRE(t.inner_count == i);
        REQUIRE(t.leaf_count == 1 + (k - 1) * i);
        REQUIRE(t.vertex_count == 1 + k * i);
        REQUIRE(inner_leaves(P) == t.inner_leaves);
      }
    }
  }
}

TEST_CASE("enumeration matches an independent construction", "[prefix_codes]") {
  auto two = enumerate_codes(A2, 3);
  REQUIRE(two.size() == 2);
  CHECK(two[0] == code("{aa,ab,b}"));
  CHECK(two[1] == code("{a,ba,bb}"));
  CHECK(enumerate_codes(A2, 2).size() == 1);
  CHECK(enumerate_codes(A2, 4).size() == 5);
  REQUIRE_THROWS_AS(enumerate_codes(A3, 4), Error);

  for (std::size_t k : {2, 3}) {
    Alphabet A(k);
    for (std::size_t i = 0; i <= 5; ++i) {
      auto                        codes = enumerate_codes_with_inner(A, i);
      std::set<std::vector<Word>> mine;
      for (auto const& P : codes) {
        mine.insert(P.words());
      }
      REQUIRE(mine.size() == codes.size());
      REQUIRE(mine == oracle::codes_by_expansion(k, i));
      REQUIRE(code_count(k, i) == codes.size());
    }
  }
  // Catalan and Fuss-Catalan values
  CHECK(code_count(2, 10) == 16796);
  CHECK(code_count(3, 4) == 55);
}

TEST_CASE("intersection of ideals", "[prefix_codes]") {
  auto P = code("{a,ba,bb}");
  auto Q = code("{aa,ab,b}");
  CHECK(intersect(P, P) == P);
  CHECK(intersect(code("{a,b}"), Q) == Q);
  CHECK(intersect(P, Q) == code("{aa,ab,ba,bb}"));

  auto all4  = enumerate_codes(A2, 4);
  auto words = words_up_to(A2, 6);
  for (auto const& X : all4) {
    for (auto const& Y : enumerate_codes(A2, 3)) {
      auto Z = intersect(X, Y);
      REQUIRE(Z == intersect(Y, X));
      REQUIRE(Z.inner_count() <= X.inner_count() + Y.inner_count());
      for (auto const& w : words) {
        bool both = oracle::in_ideal(X.words(), w) && oracle::in_ideal(Y.words(), w);
        REQUIRE(oracle::in_ideal(Z.words(), w) == both);
      }
      for (auto const& W : all4) {
        REQUIRE(intersect(intersect(X, Y), W) == intersect(X, intersect(Y, W)));
      }
    }
  }
}

TEST_CASE("containment of ideals forces size", "[prefix_codes]") {
  std::vector<MaximalPrefixCode> all;
  for (std::size_t i = 0; i <= 4; ++i) {
    auto level = enumerate_codes_with_inner(A2, i);
    all.insert(all.end(), level.begin(), level.end());
  }
  auto words = words_up_to(A2, 6);
  for (auto const& P : all) {
    for (auto const& Q : all) {
      bool sub = is_subideal(Q, P);
      bool brute = std::all_of(words.begin(), words.end(), [&](Word const& w) {
        return !oracle::in_ideal(Q.words(), w) || oracle::in_ideal(P.words(), w);
      });
      REQUIRE(sub == brute);
      if (sub) {
        REQUIRE(Q.size() >= P.size());
      }
    }
  }
}

TEST_CASE("two inner leaves: fixed examples", "[prefix_codes]") {
  auto P = code("{aa,ab,ba,bb}");
  auto r = two_inner_leaves(P, Word{1});
  CHECK(r.code == P);

  auto path = code("{aaaa,aaab,aab,ab,b}");
  r         = two_inner_leaves(path, Word{1, 1, 1});
  CHECK(r.code == code("{aaa,aab,ab,ba,bb}"));
  CHECK(r.kept == Word{1, 1});
  CHECK(r.extra == Word{2});

  try {
    two_inner_leaves(code("{aaa,aab,ab,b}"), Word{1, 1});
    FAIL("expected TooSmall");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::TooSmall);
  }
  try {
    two_inner_leaves(path, Word{1});
    FAIL("expected NotInnerLeaf");
  } catch (Error const& e) {
    CHECK(e.code() == ErrorCode::NotInnerLeaf);
  }
}

TEST_CASE("two inner leaves: every path of length 3 to 6", "[prefix_codes]") {
  for (std::size_t k : {2, 3}) {
    Alphabet A(k);
    for (std::size_t len = 3; len <= 6; ++len) {
      for (auto const& z : words_of_length(A, len)) {
        auto P      = path_code(A, z);
        auto before = sides(P, z);
        auto r      = two_inner_leaves(P, z);
        REQUIRE(r.code.size() == P.size());
        REQUIRE(is_inner_leaf(r.code, r.kept));
        REQUIRE(is_inner_leaf(r.code, r.extra));
        REQUIRE(r.kept != r.extra);
        REQUIRE(sides(r.code, r.kept) == before);
      }
    }
  }
}

TEST_CASE("codes with inner leaves at given positions", "[prefix_codes]") {
  for (std::size_t k : {2, 3}) {
    Alphabet A(k);
    for (std::size_t i = 3; i <= 6; ++i) {
      auto n = code_size(k, i);
      for (std::size_t p1 = 0; p1 + 2 * k <= n; ++p1) {
        for (std::size_t p2 = p1 + k; p2 + k <= n; ++p2) {
          auto Q = code_with_inner_leaves_at(A, n, p1, p2);
          REQUIRE(Q.size() == n);
          std::set<std::size_t> starts;
          for (auto const& x : inner_leaves(Q)) {
            starts.insert(leaves_left_of(Q, x));
          }
          REQUIRE(starts.count(p1));
          REQUIRE(starts.count(p2));
        }
      }
    }
  }
}

TEST_CASE("code text round trip", "[prefix_codes]") {
  std::mt19937_64 rng(61);
  for (std::size_t k : {2, 3, 5}) {
    Alphabet A(k);
    for (int n = 0; n < 100; ++n) {
      auto P = oracle::random_code(A, n % 8, rng);
      REQUIRE(parse_code(to_string(P), A) == P);
    }
  }
}
