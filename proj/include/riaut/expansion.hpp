#ifndef RIAUT_EXPANSION_HPP_
#define RIAUT_EXPANSION_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "element.hpp"
#include "error.hpp"
#include "generation.hpp"
#include "green.hpp"
#include "prefix_code.hpp"

namespace riaut {

  ////////////////////////////////////////////////////////////////////////////
  // Suffix expansion
  ////////////////////////////////////////////////////////////////////////////

  //! An element (g, S) of the suffix expansion of G_{k,1}; S always contains
  //! g and the identity.
  class ExpansionElem {
   public:
    ExpansionElem(GElem g, std::vector<GElem> S) : _g(std::move(g)), _S(std::move(S)) {
      std::sort(_S.begin(), _S.end());
      _S.erase(std::unique(_S.begin(), _S.end()), _S.end());
      if (!contains(_g) || !contains(GElem::identity(_g.alphabet()))) {
        raise(ErrorCode::ParseError, "the set must contain g and 1");
      }
    }

    static ExpansionElem identity(Alphabet const& alphabet) {
      auto one = GElem::identity(alphabet);
      return ExpansionElem(one, {one});
    }

    GElem const& g() const noexcept {
      return _g;
    }

    std::vector<GElem> const& S() const noexcept {
      return _S;
    }

    bool contains(GElem const& h) const {
      return std::binary_search(_S.begin(), _S.end(), h);
    }

    bool operator==(ExpansionElem const& that) const {
      return _g == that._g && _S == that._S;
    }

    bool operator<(ExpansionElem const& that) const {
      if (!(_g == that._g)) {
        return _g < that._g;
      }
      return std::lexicographical_compare(_S.begin(), _S.end(), that._S.begin(),
                                          that._S.end());
    }

   private:
    GElem              _g;
    std::vector<GElem> _S;
  };

  //! (y, T)(x, S) = (yx, Tx ∪ S).
  inline ExpansionElem exp_multiply(ExpansionElem const& y, ExpansionElem const& x) {
    std::vector<GElem> S = x.S();
    S.reserve(S.size() + y.S().size());
    for (auto const& t : y.S()) {
      S.push_back(g_multiply(t, x.g()));
    }
    return ExpansionElem(g_multiply(y.g(), x.g()), std::move(S));
  }

  //! γ -> (γ, {γ, 1}).
  inline ExpansionElem generator_embed(GElem const& gamma) {
    return ExpansionElem(gamma, {gamma, GElem::identity(gamma.alphabet())});
  }

  //! Product of a word written x_m ... x_1, i.e. word[0] = x_m.
  inline ExpansionElem exp_evaluate(std::vector<ExpansionElem> const& word,
                                    Alphabet const&                   alphabet) {
    auto out = ExpansionElem::identity(alphabet);
    for (auto const& x : word) {
      out = exp_multiply(out, x);
    }
    return out;
  }

  //! The code generating ∩_{h ∈ S} Dom(h).
  inline MaximalPrefixCode common_domain(std::vector<GElem> const& S) {
    auto out = S.front().rep().domain_code();
    for (std::size_t i = 1; i < S.size(); ++i) {
      out = intersect(out, S[i].rep().domain_code());
    }
    return out;
  }

  //! x.g restricted to ∩_{h ∈ x.S} Dom(h).
  inline RiAutElem rho(ExpansionElem const& x) {
    return compose(x.g().rep(), idempotent_on(common_domain(x.S())));
  }

  ////////////////////////////////////////////////////////////////////////////
  // Semidirect product with the essential right ideals
  ////////////////////////////////////////////////////////////////////////////

  struct SemidirectElem {
    GElem             g;
    MaximalPrefixCode P;

    bool operator==(SemidirectElem const&) const = default;
  };

  //! The code generating g^{-1}(PA* ∩ Im g).
  inline MaximalPrefixCode preimage_code(GElem const& g, MaximalPrefixCode const& P) {
    return compose(idempotent_on(P), g.rep()).domain_code();
  }

  inline SemidirectElem semidirect_multiply(SemidirectElem const& y,
                                            SemidirectElem const& x) {
    return {g_multiply(y.g, x.g), intersect(preimage_code(x.g, y.P), x.P)};
  }

  inline SemidirectElem embed_e(RiAutElem const& phi) {
    return {max_extend(phi), phi.domain_code()};
  }

  //! g restricted to PA*.
  inline RiAutElem retract_e_prime(SemidirectElem const& x) {
    return compose(x.g.rep(), idempotent_on(x.P));
  }

  ////////////////////////////////////////////////////////////////////////////
  // Lifting and fibers
  ////////////////////////////////////////////////////////////////////////////

  //! A word x_3 x_2 x_1 over embedded generators whose value maps to δ under
  //! ρ: (g, {g,1}) (γ^{-1}, {γ^{-1},1}) (γ, {γ,1}) where g = max(δ) and γ ∈ Γ
  //! has the same domain code as δ. The identity lifts to the empty word.
  inline std::vector<ExpansionElem> lift(RiAutElem const&          delta,
                                         std::vector<GElem> const& Gamma) {
    if (delta == RiAutElem::identity(delta.alphabet())) {
      return {};
    }
    auto it = std::find_if(Gamma.begin(), Gamma.end(), [&delta](GElem const& h) {
      return h.rep().domain_code() == delta.domain_code();
    });
    if (it == Gamma.end()) {
      raise(ErrorCode::NoMatchingGenerator,
            "no generator has domain code " + to_string(delta.domain_code()));
    }
    return {generator_embed(max_extend(delta)), generator_embed(g_inverse(*it)),
            generator_embed(*it)};
  }

  //! Γ = {max(δ) : δ ∈ Δ} together with one maximally extended element with
  //! domain code P for every domain code P of Δ, so that lift succeeds for
  //! every δ ∈ Δ. Codes with one inner vertex use the general construction.
  inline std::vector<GElem> lifting_set(std::vector<RiAutElem> const& Delta, Mode mode) {
    std::vector<GElem>          out;
    std::set<MaximalPrefixCode> seen;
    for (auto const& d : Delta) {
      out.push_back(max_extend(d));
    }
    for (auto const& d : Delta) {
      auto const& P = d.domain_code();
      if (seen.insert(P).second) {
        out.push_back(max_extended_with_domain(P, P.inner_count() == 1 ? Mode::general : mode));
      }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  //! Every maximal prefix code C with PA* ⊆ CA*.
  inline std::vector<MaximalPrefixCode> coarsenings(MaximalPrefixCode const& P) {
    auto const&                    A = P.alphabet();
    std::vector<MaximalPrefixCode> out;
    for (std::size_t i = 0; i <= P.inner_count(); ++i) {
      for (auto& C : enumerate_codes_with_inner(A, i)) {
        if (is_subideal(P, C)) {
          out.push_back(std::move(C));
        }
      }
    }
    return out;
  }

  //! Maximal number of optional members of S that rho_fiber will range over.
  inline constexpr std::size_t fiber_candidate_cap = 24;

  //! All (g, S) with ρ(g, S) = φ in the full expansion, where every member of
  //! S is maximally extended and defined on Dom(φ).
  inline std::vector<ExpansionElem> rho_fiber(RiAutElem const& phi, Mode mode,
                                              std::size_t cap = default_enumeration_cap) {
    if (mode == Mode::dict && !is_dict_preserving(phi)) {
      raise(ErrorCode::NotDictPreserving, to_string(phi));
    }
    auto const& A   = phi.alphabet();
    auto const  g   = max_extend(phi);
    auto const  one = GElem::identity(A);
    auto const& D   = phi.domain_code();

    std::vector<GElem> optional;
    for (auto const& C : coarsenings(D)) {
      for (auto const& Q : enumerate_codes(A, C.size())) {
        std::vector<Word> img = Q.words();
        do {
          RiAutElem h(detail::unchecked, C, img, Q);
          if (is_max_extended(h)) {
            GElem gh(detail::unchecked, std::move(h));
            if (!(gh == g) && !(gh == one)) {
              optional.push_back(std::move(gh));
            }
          }
        } while (mode == Mode::general && std::next_permutation(img.begin(), img.end()));
      }
    }
    std::sort(optional.begin(), optional.end());
    if (optional.size() > fiber_candidate_cap) {
      raise(ErrorCode::TooLarge, std::to_string(optional.size())
                                     + " candidate set members");
    }

    std::vector<ExpansionElem> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << optional.size()); ++mask) {
      auto               code = g.rep().domain_code();
      std::vector<GElem> S{g, one};
      for (std::size_t j = 0; j < optional.size(); ++j) {
        if (mask >> j & 1) {
          code = intersect(code, optional[j].rep().domain_code());
          S.push_back(optional[j]);
        }
      }
      if (code == D) {
        out.emplace_back(g, std::move(S));
        if (out.size() > cap) {
          raise(ErrorCode::TooLarge, "fiber exceeds the cap");
        }
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  struct SearchResult {
    bool                     found = false;
    std::vector<std::size_t> word;   // indices into Γ, written x_m ... x_1
    std::size_t              depth = 0;
  };

  //! Breadth-first search for a product of at most `max_depth` embedded
  //! generators equal to `target`.
  inline SearchResult find_in_expansion(ExpansionElem const&      target,
                                        std::vector<GElem> const& Gamma,
                                        std::size_t               max_depth,
                                        std::size_t cap = default_enumeration_cap) {
    auto const& A = target.g().alphabet();
    std::vector<ExpansionElem> gens;
    for (auto const& h : Gamma) {
      gens.push_back(generator_embed(h));
    }
    struct Node {
      ExpansionElem            value;
      std::vector<std::size_t> word;
    };
    std::set<ExpansionElem> seen{ExpansionElem::identity(A)};
    std::vector<Node>       frontier{{ExpansionElem::identity(A), {}}};
    for (std::size_t depth = 0;; ++depth) {
      for (auto const& node : frontier) {
        if (node.value == target) {
          return {true, node.word, depth};
        }
      }
      if (depth == max_depth) {
        return {false, {}, depth};
      }
      std::vector<Node> next;
      for (auto const& node : frontier) {
        for (std::size_t j = 0; j < gens.size(); ++j) {
          auto value = exp_multiply(gens[j], node.value);
          if (seen.insert(value).second) {
            auto word = node.word;
            word.insert(word.begin(), j);
            next.push_back({std::move(value), std::move(word)});
          }
        }
      }
      if (seen.size() > cap) {
        raise(ErrorCode::TooLarge, "search space exceeds the cap");
      }
      frontier = std::move(next);
    }
  }

  ////////////////////////////////////////////////////////////////////////////
  // Text form
  ////////////////////////////////////////////////////////////////////////////

  inline std::string to_string(ExpansionElem const& x) {
    std::string out = "(" + to_string(x.g()) + " ; {";
    for (std::size_t i = 0; i < x.S().size(); ++i) {
      if (i != 0) {
        out += ",";
      }
      out += to_string(x.S()[i]);
    }
    return out + "})";
  }

  inline std::string to_string(SemidirectElem const& x) {
    return "(" + to_string(x.g) + " ; " + to_string(x.P) + ")";
  }

  namespace detail {
    inline std::pair<std::string_view, std::string_view>
    split_pair(std::string_view text) {
      auto body = unwrap(text, '(', ')');
      auto semi = body.find(';');
      if (semi == std::string_view::npos) {
        raise(ErrorCode::ParseError, "expected (TABLE ; ...)");
      }
      return {trim(body.substr(0, semi)), trim(body.substr(semi + 1))};
    }

    // Split a bracketed list of tables at top-level commas.
    inline std::vector<std::string_view> split_tables(std::string_view body) {
      std::vector<std::string_view> out;
      int                           depth = 0;
      std::size_t                   start = 0;
      for (std::size_t i = 0; i <= body.size(); ++i) {
        if (i == body.size() || (body[i] == ',' && depth == 0)) {
          auto item = trim(body.substr(start, i - start));
          if (!item.empty()) {
            out.push_back(item);
          }
          start = i + 1;
        } else if (body[i] == '[') {
          ++depth;
        } else if (body[i] == ']') {
          --depth;
        }
      }
      return out;
    }
  }  // namespace detail

  //! Parse `(TABLE ; {TABLE,...})`. Tables are maximally extended on input.
  inline ExpansionElem parse_expansion(std::string_view text, Alphabet const& alphabet) {
    auto [head, tail] = detail::split_pair(text);
    GElem              g(parse_table(head, alphabet));
    std::vector<GElem> S;
    for (auto item : detail::split_tables(detail::unwrap(tail, '{', '}'))) {
      S.emplace_back(parse_table(item, alphabet));
    }
    return ExpansionElem(std::move(g), std::move(S));
  }

  //! Parse `(TABLE ; {w,...})`.
  inline SemidirectElem parse_semidirect(std::string_view text, Alphabet const& alphabet) {
    auto [head, tail] = detail::split_pair(text);
    return {GElem(parse_table(head, alphabet)), parse_code(tail, alphabet)};
  }

}  // namespace riaut

#endif  // RIAUT_EXPANSION_HPP_
