#ifndef RIAUT_DECISION_HPP_
#define RIAUT_DECISION_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "element.hpp"
#include "error.hpp"
#include "expansion.hpp"
#include "green.hpp"

namespace riaut {

  ////////////////////////////////////////////////////////////////////////////
  // Words over a generating set
  ////////////////////////////////////////////////////////////////////////////

  struct GenLetter {
    std::size_t index   = 0;  // 0-based
    bool        inverse = false;

    bool operator==(GenLetter const&) const = default;
  };

  //! A word x_m ... x_1 stored as written: letters[0] = x_m is applied last.
  using GenWord = std::vector<GenLetter>;

  //! Parse "1,2',3": 1-based indices, a trailing ' for the inverse. The empty
  //! word is "" or "^".
  inline GenWord parse_gen_word(std::string_view text) {
    text = detail::trim(text);
    GenWord out;
    if (text.empty() || text == "^") {
      return out;
    }
    for (auto item : detail::split(text, ',')) {
      GenLetter x;
      if (!item.empty() && item.back() == '\'') {
        x.inverse = true;
        item.remove_suffix(1);
      }
      if (item.empty()
          || !std::all_of(item.begin(), item.end(), [](char c) { return c >= '0' && c <= '9'; })) {
        raise(ErrorCode::ParseError, "bad generator index '" + std::string(item) + "'");
      }
      auto n = std::stoull(std::string(item));
      if (n == 0) {
        raise(ErrorCode::IndexOutOfRange, "generator indices start at 1");
      }
      x.index = n - 1;
      out.push_back(x);
    }
    return out;
  }

  inline std::string to_string(GenWord const& w) {
    if (w.empty()) {
      return "^";
    }
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
      if (i != 0) {
        out += ",";
      }
      out += std::to_string(w[i].index + 1);
      if (w[i].inverse) {
        out += "'";
      }
    }
    return out;
  }

  namespace detail {
    template <typename T>
    T const& letter_value(std::vector<T> const& gens, GenLetter const& x) {
      if (x.index >= gens.size()) {
        raise(ErrorCode::IndexOutOfRange, "generator " + std::to_string(x.index + 1)
                                              + " of " + std::to_string(gens.size()));
      }
      return gens[x.index];
    }
  }  // namespace detail

  //! The composite x_m ∘ ... ∘ x_1 in riAut(k); the empty word is [^->^].
  inline RiAutElem eval_word(GenWord const& w, std::vector<RiAutElem> const& Delta,
                             Alphabet const& alphabet) {
    auto out = RiAutElem::identity(alphabet);
    for (auto const& x : w) {
      auto const& d = detail::letter_value(Delta, x);
      out           = compose(out, x.inverse ? inverse(d) : d);
    }
    return out;
  }

  //! The product x_m ... x_1 in G_{k,1}.
  inline GElem eval_group(GenWord const& w, std::vector<GElem> const& Gamma,
                          Alphabet const& alphabet) {
    auto out = GElem::identity(alphabet);
    for (auto const& x : w) {
      auto const& g = detail::letter_value(Gamma, x);
      out           = g_multiply(out, x.inverse ? g_inverse(g) : g);
    }
    return out;
  }

  inline bool wp_riaut(GenWord const& u, GenWord const& v,
                       std::vector<RiAutElem> const& Delta, Alphabet const& alphabet) {
    return eval_word(u, Delta, alphabet) == eval_word(v, Delta, alphabet);
  }

  //! The word problem of riAut_dict(k); every generator must preserve the
  //! dictionary order.
  inline bool wp_dict(GenWord const& u, GenWord const& v,
                      std::vector<RiAutElem> const& Delta, Alphabet const& alphabet) {
    for (auto const& d : Delta) {
      if (!is_dict_preserving(d)) {
        raise(ErrorCode::NotDictPreserving, to_string(d));
      }
    }
    return wp_riaut(u, v, Delta, alphabet);
  }

  inline bool wp_group(GenWord const& u, GenWord const& v,
                       std::vector<GElem> const& Gamma, Alphabet const& alphabet) {
    return eval_group(u, Gamma, alphabet) == eval_group(v, Gamma, alphabet);
  }

  //! {values of U} = {values of V} in G_{k,1}, decided by checking that
  //! every u equals some v and every v equals some u.
  inline bool set_wp(std::vector<GenWord> const& U, std::vector<GenWord> const& V,
                     std::vector<GElem> const& Gamma, Alphabet const& alphabet) {
    std::vector<GElem> u, v;
    for (auto const& w : U) {
      u.push_back(eval_group(w, Gamma, alphabet));
    }
    for (auto const& w : V) {
      v.push_back(eval_group(w, Gamma, alphabet));
    }
    auto covered = [](std::vector<GElem> const& x, std::vector<GElem> const& y) {
      return std::all_of(x.begin(), x.end(), [&y](GElem const& a) {
        return std::any_of(y.begin(), y.end(), [&a](GElem const& b) { return a == b; });
      });
    };
    return covered(u, v) && covered(v, u);
  }

  //! The value of x_m ... x_1 and its suffix products {1, x_1, x_2 x_1, ...}.
  inline std::pair<GElem, std::vector<GElem>>
  suffix_products(GenWord const& w, std::vector<GElem> const& Gamma,
                  Alphabet const& alphabet) {
    auto               acc = GElem::identity(alphabet);
    std::vector<GElem> out{acc};
    for (auto it = w.rbegin(); it != w.rend(); ++it) {
      auto const& g = detail::letter_value(Gamma, *it);
      acc           = g_multiply(it->inverse ? g_inverse(g) : g, acc);
      out.push_back(acc);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return {acc, out};
  }

  //! The word problem of the suffix expansion generated by the (γ, {γ, 1}).
  inline bool wp_expansion(GenWord const& u, GenWord const& v,
                           std::vector<GElem> const& Gamma, Alphabet const& alphabet) {
    auto [gu, su] = suffix_products(u, Gamma, alphabet);
    auto [gv, sv] = suffix_products(v, Gamma, alphabet);
    return gu == gv && su == sv;
  }

  ////////////////////////////////////////////////////////////////////////////
  // Finite quotients
  ////////////////////////////////////////////////////////////////////////////

  //! Default bound on the number of nonzero elements of a Rees quotient.
  inline constexpr std::size_t default_rees_cap = 1000;

  //! All elements J-above level i, plus a zero, with composition truncated to
  //! zero below level i.
  class ReesQuotient {
   public:
    ReesQuotient(Alphabet const& alphabet, std::size_t level,
                 std::size_t cap = default_rees_cap)
        : _alphabet(alphabet),
          _level(level),
          _elements(enumerate_up_to(alphabet, level, false, cap)) {
      for (std::size_t i = 0; i < _elements.size(); ++i) {
        _index.emplace(_elements[i], i);
      }
      std::size_t const n = size();
      _table.assign(n * n, zero());
      for (std::size_t x = 0; x < _elements.size(); ++x) {
        for (std::size_t y = 0; y < _elements.size(); ++y) {
          _table[x * n + y] = project(compose(_elements[x], _elements[y]));
        }
      }
    }

    //! Number of elements including the zero.
    std::size_t size() const noexcept {
      return _elements.size() + 1;
    }

    std::size_t level() const noexcept {
      return _level;
    }

    std::size_t zero() const noexcept {
      return _elements.size();
    }

    std::vector<RiAutElem> const& elements() const noexcept {
      return _elements;
    }

    //! The quotient map: x itself if it lies at or above the level, else 0.
    std::size_t project(RiAutElem const& x) const {
      if (x.domain_code().inner_count() > _level) {
        return zero();
      }
      return _index.at(x);
    }

    std::size_t multiply(std::size_t x, std::size_t y) const {
      return _table[x * size() + y];
    }

    //! "0" or the table text form.
    std::string name(std::size_t x) const {
      return x == zero() ? std::string("0") : to_string(_elements[x]);
    }

    bool is_associative() const {
      std::size_t const n = size();
      for (std::size_t x = 0; x < n; ++x) {
        for (std::size_t y = 0; y < n; ++y) {
          auto xy = multiply(x, y);
          for (std::size_t z = 0; z < n; ++z) {
            if (multiply(xy, z) != multiply(x, multiply(y, z))) {
              return false;
            }
          }
        }
      }
      return true;
    }

    //! project(x ∘ y) = project(x) project(y).
    bool is_homomorphic_on(RiAutElem const& x, RiAutElem const& y) const {
      return project(compose(x, y)) == multiply(project(x), project(y));
    }

   private:
    Alphabet                                 _alphabet;
    std::size_t                              _level;
    std::vector<RiAutElem>                   _elements;
    std::unordered_map<RiAutElem, std::size_t> _index;
    std::vector<std::size_t>                 _table;
  };

  struct Separation {
    std::size_t level;
    bool        distinct;
  };

  //! The smallest level whose Rees quotient keeps φ and ψ apart.
  inline Separation separate(RiAutElem const& phi, RiAutElem const& psi) {
    check_same(phi.alphabet(), psi.alphabet());
    if (phi == psi) {
      raise(ErrorCode::EqualInputs, to_string(phi));
    }
    auto level = std::max(phi.domain_code().inner_count(), psi.domain_code().inner_count());
    auto image = [level](RiAutElem const& x) -> RiAutElem const* {
      return x.domain_code().inner_count() <= level ? &x : nullptr;
    };
    auto x = image(phi), y = image(psi);
    return {level, x == nullptr || y == nullptr ? x != y : !(*x == *y)};
  }

  struct EtaClass {
    bool      group_part;
    RiAutElem value;

    bool operator==(EtaClass const&) const = default;
  };

  //! η_i: the identity below level i and η from level i on.
  inline EtaClass eta_i_class(RiAutElem const& phi, std::size_t i) {
    if (phi.domain_code().inner_count() < i) {
      return {false, phi};
    }
    return {true, max_extend(phi).rep()};
  }

  inline std::string to_string(EtaClass const& c) {
    return (c.group_part ? "GROUP-PART " : "MONOID-PART ") + to_string(c.value);
  }

}  // namespace riaut

#endif  // RIAUT_DECISION_HPP_
