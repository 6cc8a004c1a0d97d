#ifndef RIAUT_GENERATION_HPP_
#define RIAUT_GENERATION_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <utility>
#include <vector>

#include "element.hpp"
#include "error.hpp"
#include "green.hpp"
#include "prefix_code.hpp"

namespace riaut {

  enum class Mode { general, dict };

  //! Largest inner vertex count of a generator domain code.
  constexpr std::size_t generator_bound(std::size_t k, Mode mode) noexcept {
    return mode == Mode::general ? 3 : k + 1;
  }

  inline bool within_bound(RiAutElem const& phi, Mode mode) {
    return phi.domain_code().inner_count()
           <= generator_bound(phi.alphabet().size(), mode);
  }

  struct GeneratingSet {
    std::vector<RiAutElem> elements;
    Mode                   mode;
    std::size_t            bound;
  };

  inline std::uint64_t standard_generator_count(std::size_t k, Mode mode) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i <= generator_bound(k, mode); ++i) {
      total += j_class_size(k, i, mode == Mode::dict);
    }
    return total;
  }

  //! General mode: every element with at most 3 inner vertices in its domain
  //! code. Dictionary mode: every order preserving element with at most
  //! k + 1.
  inline GeneratingSet standard_generators(Alphabet const& alphabet,
                                           Mode            mode,
                                           std::size_t cap = default_enumeration_cap) {
    auto const bound = generator_bound(alphabet.size(), mode);
    return {enumerate_up_to(alphabet, bound, mode == Mode::dict, cap), mode, bound};
  }

  namespace detail {
    // An intermediate code together with the position of every column in it.
    struct Row {
      MaximalPrefixCode        code;
      std::vector<std::size_t> pos;
    };

    using Block = std::vector<std::size_t>;  // columns, in child order

    inline bool disjoint(Block const& x, Block const& y) {
      return std::none_of(x.begin(), x.end(), [&y](std::size_t c) {
        return std::find(y.begin(), y.end(), c) != y.end();
      });
    }

    // A row in which the columns of b1 and of b2 sit, in order, below two
    // distinct inner leaves.
    inline Row general_row(Alphabet const& A, std::size_t n, Block const& b1,
                           Block const& b2) {
      auto const  k = A.size();
      Row         row{code_with_inner_leaves_at(A, n, 0, k),
              std::vector<std::size_t>(n, n)};
      std::size_t next = 0;
      for (auto c : b1) {
        row.pos[c] = next++;
      }
      for (auto c : b2) {
        row.pos[c] = next++;
      }
      for (std::size_t c = 0; c < n; ++c) {
        if (row.pos[c] == n) {
          row.pos[c] = next++;
        }
      }
      return row;
    }

    inline Row dict_row(Alphabet const& A, std::size_t n, Block const& b1,
                        Block const& b2) {
      auto p1 = std::min(b1.front(), b2.front());
      auto p2 = std::max(b1.front(), b2.front());
      Row  row{code_with_inner_leaves_at(A, n, p1, p2), std::vector<std::size_t>(n)};
      for (std::size_t c = 0; c < n; ++c) {
        row.pos[c] = c;
      }
      return row;
    }

    inline Block window(std::size_t start, std::size_t k) {
      Block b(k);
      for (std::size_t j = 0; j < k; ++j) {
        b[j] = start + j;
      }
      return b;
    }

    // Shortest sequence of windows from `from` to `to` in which consecutive
    // windows are disjoint.
    inline std::vector<Block> window_chain(std::size_t n, std::size_t k,
                                           std::size_t from, std::size_t to) {
      std::size_t const count = n - k + 1;
      if (from == to) {
        // A single merge would only give an extension of φ, so detour.
        for (std::size_t t = 0; t < count; ++t) {
          if (t + k <= from || from + k <= t) {
            return {window(from, k), window(t, k), window(from, k)};
          }
        }
      }
      std::vector<std::size_t> prev(count, count);
      std::deque<std::size_t>  queue{from};
      prev[from] = from;
      while (!queue.empty() && prev[to] == count) {
        auto s = queue.front();
        queue.pop_front();
        for (std::size_t t = 0; t < count; ++t) {
          if (prev[t] == count && (t + k <= s || s + k <= t)) {
            prev[t] = s;
            queue.push_back(t);
          }
        }
      }
      std::vector<Block> out;
      for (std::size_t s = to;; s = prev[s]) {
        out.push_back(window(s, k));
        if (s == from) {
          break;
        }
      }
      std::reverse(out.begin(), out.end());
      return out;
    }

    // The table from row r0 to row r1 with the columns of `block` merged.
    inline RiAutElem merged_factor(Alphabet const& A, Row const& r0, Row const& r1,
                                   Block const& block) {
      std::vector<std::pair<Word, Word>> pairs;
      auto const                         n = r0.pos.size();
      for (std::size_t c = 0; c < n; ++c) {
        if (std::find(block.begin(), block.end(), c) == block.end()) {
          pairs.emplace_back(r0.code[r0.pos[c]], r1.code[r1.pos[c]]);
        }
      }
      pairs.emplace_back(r0.code[r0.pos[block.front()]].parent(),
                         r1.code[r1.pos[block.front()]].parent());
      return RiAutElem::from_pairs(A, std::move(pairs));
    }

    inline void factor_into(RiAutElem const& phi, Mode mode,
                            std::vector<RiAutElem>& out) {
      if (within_bound(phi, mode)) {
        out.push_back(phi);
        return;
      }
      auto const& A = phi.alphabet();
      auto const  k = A.size();
      auto const  n = phi.size();
      auto const& D = phi.domain_code();
      auto const& I = phi.image_code();

      Row top{D, std::vector<std::size_t>(n)};
      Row bottom{I, std::vector<std::size_t>(n)};
      std::vector<std::size_t> column_at_image(n);
      for (std::size_t c = 0; c < n; ++c) {
        top.pos[c]    = c;
        bottom.pos[c] = *I.index_of(phi.image(c));
        column_at_image[bottom.pos[c]] = c;
      }

      Word const  u  = inner_leaves(D).front();
      Word const  v  = inner_leaves(I).front();
      std::size_t pu = leaves_left_of(D, u);
      std::size_t pv = leaves_left_of(I, v);
      Block       U  = window(pu, k);
      Block       V(k);
      for (std::size_t j = 0; j < k; ++j) {
        V[j] = column_at_image[pv + j];
      }

      std::vector<Block> chain;
      if (mode == Mode::dict) {
        chain = window_chain(n, k, pu, pv);
      } else if (disjoint(U, V)) {
        chain = {U, V};
      } else {
        Block W;
        for (std::size_t c = 0; c < n && W.size() < k; ++c) {
          if (std::find(U.begin(), U.end(), c) == U.end()
              && std::find(V.begin(), V.end(), c) == V.end()) {
            W.push_back(c);
          }
        }
        chain = {U, W, V};
      }

      std::vector<Row> rows{top};
      for (std::size_t j = 1; j < chain.size(); ++j) {
        rows.push_back(mode == Mode::dict ? dict_row(A, n, chain[j - 1], chain[j])
                                          : general_row(A, n, chain[j - 1], chain[j]));
      }
      rows.push_back(bottom);

      for (std::size_t j = 0; j < chain.size(); ++j) {
        factor_into(merged_factor(A, rows[j], rows[j + 1], chain[j]), mode, out);
      }
    }
  }  // namespace detail

  //! Write φ as f_m ∘ ... ∘ f_1 with every f_j within the generator bound.
  //! The returned list is [f_1, ..., f_m], in order of application.
  inline std::vector<RiAutElem> factor(RiAutElem const& phi, Mode mode) {
    if (mode == Mode::dict && !is_dict_preserving(phi)) {
      raise(ErrorCode::NotDictPreserving, to_string(phi));
    }
    std::vector<RiAutElem> out;
    detail::factor_into(phi, mode, out);
    return out;
  }

  //! Composition of a list given in order of application.
  inline RiAutElem compose_all(std::vector<RiAutElem> const& factors,
                               Alphabet const&               alphabet) {
    RiAutElem out = RiAutElem::identity(alphabet);
    for (auto const& f : factors) {
      out = compose(f, out);
    }
    return out;
  }

  //! A maximally extended element with domain code exactly P.
  //!
  //! For i >= 2 inner vertices P is paired in order with the code whose inner
  //! tree is the path a_1^{i-2} a_2, or with the path a_1^{i-1} when the
  //! second to (k+1)-th leaves of P are siblings. For i = 1 there is no order
  //! preserving choice, and in general mode a cyclic shift of the letters is
  //! used.
  inline GElem max_extended_with_domain(MaximalPrefixCode const& P, Mode mode) {
    auto const& A = P.alphabet();
    auto const  i = P.inner_count();
    if (i == 0) {
      return GElem::identity(A);
    }
    if (i == 1) {
      if (mode == Mode::dict) {
        raise(ErrorCode::DegenerateLevel,
              "no maximally extended order preserving element has domain code "
                  + to_string(P));
      }
      std::vector<Word> img;
      for (letter_type a = 1; a <= A.last(); ++a) {
        img.push_back(Word{a == A.last() ? A.first() : a + 1});
      }
      return GElem(detail::unchecked, RiAutElem(detail::unchecked, P, std::move(img)));
    }
    bool cherry_at_1 = false;
    for (auto const& x : inner_leaves(P)) {
      cherry_at_1 = cherry_at_1 || leaves_left_of(P, x) == 1;
    }
    Word path;
    for (std::size_t j = 0; j + 2 < i; ++j) {
      path = path.child(1);
    }
    path = path.child(cherry_at_1 ? 1 : 2);
    return GElem(detail::unchecked, canonical_bijection(P, path_code(A, path)));
  }

}  // namespace riaut

#endif  // RIAUT_GENERATION_HPP_
