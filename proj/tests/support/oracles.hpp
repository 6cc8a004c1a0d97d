// Independent reference implementations used by the tests. Everything here
// works directly from definitions (pointwise action, ideal membership,
// exhaustive search) and avoids the library algorithms it is used to check.

#ifndef RIAUT_TESTS_SUPPORT_ORACLES_HPP_
#define RIAUT_TESTS_SUPPORT_ORACLES_HPP_

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "riaut/riaut.hpp"

namespace oracle {

  using riaut::Alphabet;
  using riaut::letter_type;
  using riaut::MaximalPrefixCode;
  using riaut::RiAutElem;
  using riaut::Word;

  using Table = std::vector<std::pair<Word, Word>>;

  // Linear scan, no binary search.
  inline std::optional<Word> act(Table const& t, Word const& w) {
    for (auto const& [x, y] : t) {
      if (riaut::is_prefix(x, w)) {
        return y + w.drop(x.size());
      }
    }
    return std::nullopt;
  }

  inline std::optional<Word> act(RiAutElem const& phi, Word const& w) {
    return act(phi.pairs(), w);
  }

  inline bool in_ideal(std::vector<Word> const& P, Word const& w) {
    return std::any_of(P.begin(), P.end(), [&w](Word const& p) { return riaut::is_prefix(p, w); });
  }

  // (ψ ∘ φ)(w) computed pointwise agrees with `composite` on all words up to
  // `len`.
  inline bool composition_agrees(RiAutElem const& composite, RiAutElem const& psi,
                                 RiAutElem const& phi, std::size_t len) {
    for (auto const& w : riaut::words_up_to(phi.alphabet(), len)) {
      std::optional<Word> expected;
      if (auto y = act(phi, w)) {
        expected = act(psi, *y);
      }
      if (act(composite, w) != expected) {
        return false;
      }
    }
    return true;
  }

  // Two elements act identically on every word up to `len`.
  inline bool same_action(RiAutElem const& x, RiAutElem const& y, std::size_t len) {
    for (auto const& w : riaut::words_up_to(x.alphabet(), len)) {
      if (act(x, w) != act(y, w)) {
        return false;
      }
    }
    return true;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Maximal extension by exhaustive collapse search
  ////////////////////////////////////////////////////////////////////////////

  // Every table obtained from t by collapsing one full block.
  inline std::vector<Table> collapse_moves(Table const& t, std::size_t k) {
    std::map<Word, Word> m(t.begin(), t.end());
    std::set<Word>       parents;
    for (auto const& [x, y] : t) {
      if (!x.empty()) {
        parents.insert(x.parent());
      }
    }
    std::vector<Table> out;
    for (auto const& x : parents) {
      std::optional<Word> y;
      bool                ok = true;
      for (letter_type a = 1; a <= k && ok; ++a) {
        auto it = m.find(x.child(a));
        if (it == m.end() || it->second.empty() || it->second.back() != a) {
          ok = false;
          break;
        }
        if (!y) {
          y = it->second.parent();
        } else if (*y != it->second.parent()) {
          ok = false;
        }
      }
      if (!ok) {
        continue;
      }
      Table next;
      for (auto const& [u, v] : t) {
        if (u.empty() || u.parent() != x) {
          next.emplace_back(u, v);
        }
      }
      next.emplace_back(x, *y);
      std::sort(next.begin(), next.end());
      out.push_back(std::move(next));
    }
    return out;
  }

  // All terminal tables reachable by collapsing blocks in every possible
  // order.
  inline std::set<Table> collapse_fixed_points(Table const& start, std::size_t k) {
    std::set<Table>    seen{start}, terminal;
    std::vector<Table> stack{start};
    while (!stack.empty()) {
      auto t = stack.back();
      stack.pop_back();
      auto moves = collapse_moves(t, k);
      if (moves.empty()) {
        terminal.insert(t);
      }
      for (auto& m : moves) {
        if (seen.insert(m).second) {
          stack.push_back(std::move(m));
        }
      }
    }
    return terminal;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Enumeration from scratch
  ////////////////////////////////////////////////////////////////////////////

  // All complete k-ary trees with exactly i inner vertices, as leaf sets,
  // obtained by repeatedly expanding leaves of smaller trees.
  inline std::set<std::vector<Word>> codes_by_expansion(std::size_t k, std::size_t i) {
    std::set<std::vector<Word>> level{{Word()}};
    for (std::size_t step = 0; step < i; ++step) {
      std::set<std::vector<Word>> next;
      for (auto const& code : level) {
        for (std::size_t j = 0; j < code.size(); ++j) {
          std::vector<Word> c;
          for (std::size_t t = 0; t < code.size(); ++t) {
            if (t == j) {
              for (letter_type a = 1; a <= k; ++a) {
                c.push_back(code[t].child(a));
              }
            } else {
              c.push_back(code[t]);
            }
          }
          std::sort(c.begin(), c.end());
          next.insert(std::move(c));
        }
      }
      level = std::move(next);
    }
    return level;
  }

  inline std::uint64_t factorial(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t m = 2; m <= n; ++m) {
      f *= m;
    }
    return f;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Random elements
  ////////////////////////////////////////////////////////////////////////////

  inline MaximalPrefixCode random_code(Alphabet const& A, std::size_t inner,
                                       std::mt19937_64& rng) {
    auto P = MaximalPrefixCode::trivial(A);
    for (std::size_t s = 0; s < inner; ++s) {
      std::uniform_int_distribution<std::size_t> pick(0, P.size() - 1);
      P = P.expand(pick(rng));
    }
    return P;
  }

  inline RiAutElem random_element(Alphabet const& A, std::size_t inner,
                                  std::mt19937_64& rng, bool dict = false) {
    auto P   = random_code(A, inner, rng);
    auto Q   = random_code(A, inner, rng);
    auto img = Q.words();
    if (!dict) {
      std::shuffle(img.begin(), img.end(), rng);
    }
    Table t;
    for (std::size_t i = 0; i < P.size(); ++i) {
      t.emplace_back(P[i], img[i]);
    }
    return RiAutElem::from_pairs(A, t);
  }

  // A random element whose table has at most `max_size` entries.
  inline RiAutElem random_element_up_to(Alphabet const& A, std::size_t max_size,
                                        std::mt19937_64& rng, bool dict = false) {
    std::size_t const max_inner = (max_size - 1) / (A.size() - 1);
    std::uniform_int_distribution<std::size_t> pick(0, max_inner);
    return random_element(A, pick(rng), rng, dict);
  }

  ////////////////////////////////////////////////////////////////////////////
  // Suffix expansion fibers by brute force
  ////////////////////////////////////////////////////////////////////////////

  // Every maximally extended element with at most `inner` inner vertices,
  // found by filtering the whole enumeration through the collapse search.
  inline std::vector<riaut::GElem> max_extended_up_to(Alphabet const& A, std::size_t inner) {
    std::vector<riaut::GElem> out;
    for (auto const& x : riaut::enumerate_up_to(A, inner, false)) {
      if (collapse_moves(x.pairs(), A.size()).empty()) {
        out.emplace_back(riaut::detail::unchecked, x);
      }
    }
    return out;
  }

  // The ρ-fiber of φ: every candidate h is tested for Dom(φ) ⊆ Dom(h) through
  // word membership, and every subset is checked the same way.
  inline std::set<riaut::ExpansionElem> brute_fiber(RiAutElem const& phi) {
    using riaut::GElem;
    auto const& A     = phi.alphabet();
    auto const  depth = phi.domain_code().inner_count();
    auto const  words = riaut::words_up_to(A, depth + 2);
    auto const  gphi  = riaut::max_extend(phi);
    auto const  one   = GElem::identity(A);
    std::vector<GElem> cands;
    for (auto const& h : max_extended_up_to(A, depth)) {
      if (h == gphi || h == one) {
        continue;
      }
      bool contains = std::all_of(words.begin(), words.end(), [&](Word const& w) {
        return !in_ideal(phi.domain_code().words(), w)
               || in_ideal(h.rep().domain_code().words(), w);
      });
      if (contains) {
        cands.push_back(h);
      }
    }
    std::set<riaut::ExpansionElem> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << cands.size()); ++mask) {
      std::vector<GElem> S{gphi, one};
      for (std::size_t j = 0; j < cands.size(); ++j) {
        if (mask >> j & 1) {
          S.push_back(cands[j]);
        }
      }
      bool exact = std::all_of(words.begin(), words.end(), [&](Word const& w) {
        bool all = std::all_of(S.begin(), S.end(), [&](GElem const& h) {
          return in_ideal(h.rep().domain_code().words(), w);
        });
        return all == in_ideal(phi.domain_code().words(), w);
      });
      if (exact) {
        out.emplace(gphi, S);
      }
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Partial homomorphisms
  ////////////////////////////////////////////////////////////////////////////

  inline Word random_word(Alphabet const& A, std::size_t max_len, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> len(0, max_len);
    std::uniform_int_distribution<letter_type> letter(1, A.last());
    Word                                       w;
    for (auto n = len(rng); n > 0; --n) {
      w = w.child(letter(rng));
    }
    return w;
  }

  // Domain: a random subset of a random maximal prefix code. Images: random
  // words of length at most 3.
  inline riaut::RiHomElem random_hom(Alphabet const& A, std::mt19937_64& rng) {
    auto  P = random_code(A, std::uniform_int_distribution<std::size_t>(0, 4)(rng), rng);
    Table t;
    for (auto const& x : P) {
      if (rng() % 4 != 0) {
        t.emplace_back(x, random_word(A, 3, rng));
      }
    }
    return riaut::RiHomElem::from_pairs(A, t);
  }

  // φ(C) is a prefix code for every prefix code C ⊆ Dom(φ) with |C| <= 4,
  // where C ranges over words of length <= `len` in the domain ideal.
  inline bool maps_small_codes_to_codes(riaut::RiHomElem const& phi, std::size_t len = 4) {
    std::vector<Word> dom, img;
    for (auto const& w : riaut::words_up_to(phi.alphabet(), len)) {
      if (auto y = act(phi.pairs(), w)) {
        dom.push_back(w);
        img.push_back(*y);
      }
    }
    std::vector<std::size_t> C;
    auto rec = [&](auto&& self, std::size_t from) -> bool {
      if (C.size() == 4) {
        return true;
      }
      for (std::size_t i = from; i < dom.size(); ++i) {
        bool code = true, image = true;
        for (auto j : C) {
          code  = code && !riaut::prefix_comparable(dom[j], dom[i]);
          image = image && !riaut::prefix_comparable(img[j], img[i]);
        }
        if (!code) {
          continue;
        }
        if (!image) {
          return false;
        }
        C.push_back(i);
        bool good = self(self, i + 1);
        C.pop_back();
        if (!good) {
          return false;
        }
      }
      return true;
    };
    return rec(rec, 0);
  }

  // No two distinct words of length <= `len` have the same image.
  inline bool injective_on_words(riaut::RiHomElem const& phi, std::size_t len) {
    std::map<Word, Word> seen;
    for (auto const& w : riaut::words_up_to(phi.alphabet(), len)) {
      if (auto y = act(phi.pairs(), w)) {
        if (!seen.emplace(*y, w).second) {
          return false;
        }
      }
    }
    return true;
  }

}  // namespace oracle

#endif  // RIAUT_TESTS_SUPPORT_ORACLES_HPP_
