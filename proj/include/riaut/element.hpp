#ifndef RIAUT_ELEMENT_HPP_
#define RIAUT_ELEMENT_HPP_

#include <algorithm>
#include <cstddef>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "error.hpp"
#include "prefix_code.hpp"
#include "word.hpp"

namespace riaut {

  //! An element of riAut(k): a bijection between two finite maximal prefix
  //! codes, acting on the left by φ(x s) = φ(x) s.
  //!
  //! The table itself is the element, so [a->a,b->b] and [^->^] are different
  //! elements (they only agree after maximal extension).
  class RiAutElem {
   public:
    using pair_type = std::pair<Word, Word>;

    //! Validate a table given as (domain, image) pairs in any order.
    static RiAutElem from_pairs(Alphabet const& alphabet,
                                std::vector<pair_type> pairs) {
      std::sort(pairs.begin(), pairs.end());
      pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
      for (std::size_t i = 1; i < pairs.size(); ++i) {
        if (pairs[i - 1].first == pairs[i].first) {
          raise(ErrorCode::NotABijection,
                to_string(pairs[i].first) + " has two images");
        }
      }
      std::vector<Word> dom, img;
      dom.reserve(pairs.size());
      img.reserve(pairs.size());
      for (auto& [x, y] : pairs) {
        dom.push_back(x);
        img.push_back(y);
      }
      auto D      = MaximalPrefixCode::validate(alphabet, dom);
      auto sorted = img;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        raise(ErrorCode::NotABijection, "two entries share an image");
      }
      auto I = MaximalPrefixCode::validate(alphabet, std::move(sorted));
      return RiAutElem(detail::unchecked, std::move(D), std::move(img), std::move(I));
    }

    //! img[i] is the image of dom[i]; the images must form a maximal prefix
    //! code.
    RiAutElem(detail::unchecked_t, MaximalPrefixCode dom, std::vector<Word> img)
        : _dom(std::move(dom)),
          _img(std::move(img)),
          _imc(detail::unchecked, _dom.alphabet(), sorted_copy(_img)) {}

    RiAutElem(detail::unchecked_t,
              MaximalPrefixCode dom,
              std::vector<Word> img,
              MaximalPrefixCode imc)
        : _dom(std::move(dom)), _img(std::move(img)), _imc(std::move(imc)) {}

    //! The identity [^->^] of riAut(k).
    static RiAutElem identity(Alphabet const& alphabet) {
      return RiAutElem(detail::unchecked, MaximalPrefixCode::trivial(alphabet),
                       {Word()});
    }

    Alphabet const& alphabet() const noexcept {
      return _dom.alphabet();
    }

    MaximalPrefixCode const& domain_code() const noexcept {
      return _dom;
    }

    MaximalPrefixCode const& image_code() const noexcept {
      return _imc;
    }

    //! Images aligned with domain_code().
    std::vector<Word> const& images() const noexcept {
      return _img;
    }

    std::size_t size() const noexcept {
      return _img.size();
    }

    Word const& domain(std::size_t i) const noexcept {
      return _dom[i];
    }

    Word const& image(std::size_t i) const noexcept {
      return _img[i];
    }

    std::vector<pair_type> pairs() const {
      std::vector<pair_type> out;
      out.reserve(size());
      for (std::size_t i = 0; i < size(); ++i) {
        out.emplace_back(_dom[i], _img[i]);
      }
      return out;
    }

    //! φ(w), or nothing if w ∉ domC(φ) A*.
    std::optional<Word> apply(Word const& w) const {
      auto i = _dom.prefix_of(w);
      if (!i) {
        return std::nullopt;
      }
      return _img[*i] + w.drop(_dom[*i].size());
    }

    bool operator==(RiAutElem const& that) const {
      return _dom == that._dom && _img == that._img;
    }

    //! Table size first, then the sequence of pairs lexicographically.
    bool operator<(RiAutElem const& that) const {
      if (size() != that.size()) {
        return size() < that.size();
      }
      for (std::size_t i = 0; i < size(); ++i) {
        if (_dom[i] != that._dom[i]) {
          return _dom[i] < that._dom[i];
        }
        if (_img[i] != that._img[i]) {
          return _img[i] < that._img[i];
        }
      }
      return false;
    }

   private:
    static std::vector<Word> sorted_copy(std::vector<Word> v) {
      std::sort(v.begin(), v.end());
      return v;
    }

    MaximalPrefixCode _dom;
    std::vector<Word> _img;
    MaximalPrefixCode _imc;
  };

  ////////////////////////////////////////////////////////////////////////////
  // Monoid operations
  ////////////////////////////////////////////////////////////////////////////

  //! ψ ∘ φ, i.e. first φ then ψ.
  inline RiAutElem compose(RiAutElem const& psi, RiAutElem const& phi) {
    check_same(psi.alphabet(), phi.alphabet());
    auto const&       D = psi.domain_code();
    std::vector<Word> dom, img;
    dom.reserve(std::max(psi.size(), phi.size()));
    img.reserve(dom.capacity());
    for (std::size_t i = 0; i < phi.size(); ++i) {
      Word const& x = phi.domain(i);
      Word const& y = phi.image(i);
      if (auto q = D.prefix_of(y)) {
        dom.push_back(x);
        img.push_back(psi.image(*q) + y.drop(D[*q].size()));
      } else {
        auto [first, last] = D.extensions_of(y);
        for (auto j = first; j < last; ++j) {
          dom.push_back(x + D[j].drop(y.size()));
          img.push_back(psi.image(j));
        }
      }
    }
    return RiAutElem(detail::unchecked,
                     MaximalPrefixCode(detail::unchecked, phi.alphabet(), std::move(dom)),
                     std::move(img));
  }

  inline RiAutElem inverse(RiAutElem const& phi) {
    std::vector<std::size_t> order(phi.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&phi](auto i, auto j) {
      return phi.image(i) < phi.image(j);
    });
    std::vector<Word> img;
    img.reserve(phi.size());
    for (auto i : order) {
      img.push_back(phi.domain(i));
    }
    return RiAutElem(detail::unchecked, phi.image_code(), std::move(img),
                     phi.domain_code());
  }

  //! The partial identity id_{PA*}.
  inline RiAutElem idempotent_on(MaximalPrefixCode const& P) {
    return RiAutElem(detail::unchecked, P, P.words(), P);
  }

  inline bool is_idempotent(RiAutElem const& phi) {
    return phi.images() == phi.domain_code().words();
  }

  //! Replace the entry (x, y) by (x a_1, y a_1), ..., (x a_k, y a_k).
  inline RiAutElem restrict_step(RiAutElem const& phi, Word const& x) {
    auto i = phi.domain_code().index_of(x);
    if (!i) {
      raise(ErrorCode::NotInDomainCode, to_string(x));
    }
    std::vector<Word> img;
    img.reserve(phi.size() + phi.alphabet().size() - 1);
    img.insert(img.end(), phi.images().begin(), phi.images().begin() + *i);
    for (letter_type a = 1; a <= phi.alphabet().last(); ++a) {
      img.push_back(phi.image(*i).child(a));
    }
    img.insert(img.end(), phi.images().begin() + *i + 1, phi.images().end());
    return RiAutElem(detail::unchecked, phi.domain_code().expand(*i), std::move(img));
  }

  //! φ is dictionary order preserving.
  inline bool is_dict_preserving(RiAutElem const& phi) {
    return std::is_sorted(phi.images().begin(), phi.images().end());
  }

  //! φ is a restriction of ψ.
  inline bool natural_leq(RiAutElem const& phi, RiAutElem const& psi) {
    check_same(phi.alphabet(), psi.alphabet());
    for (std::size_t i = 0; i < phi.size(); ++i) {
      auto y = psi.apply(phi.domain(i));
      if (!y || *y != phi.image(i)) {
        return false;
      }
    }
    return true;
  }

  //! The dictionary order preserving bijection P -> Q.
  inline RiAutElem canonical_bijection(MaximalPrefixCode const& P,
                                       MaximalPrefixCode const& Q) {
    check_same(P.alphabet(), Q.alphabet());
    if (P.size() != Q.size()) {
      raise(ErrorCode::SizeMismatch, std::to_string(P.size()) + " vs "
                                         + std::to_string(Q.size()));
    }
    return RiAutElem(detail::unchecked, P, Q.words(), Q);
  }

  ////////////////////////////////////////////////////////////////////////////
  // Maximal extension and G_{k,1}
  ////////////////////////////////////////////////////////////////////////////

  namespace detail {
    // The k pairs ending at index `end` of `dom`/`img` form a full block.
    inline bool is_block(std::vector<Word> const& dom,
                         std::vector<Word> const& img,
                         std::size_t              k) {
      if (dom.size() < k) {
        return false;
      }
      std::size_t const base = dom.size() - k;
      Word const&       x0   = dom[base];
      Word const&       y0   = img[base];
      if (x0.empty() || y0.empty() || x0.back() != 1 || y0.back() != 1) {
        return false;
      }
      for (std::size_t j = 1; j < k; ++j) {
        Word const& x = dom[base + j];
        Word const& y = img[base + j];
        if (x.size() != x0.size() || y.size() != y0.size() || x.back() != j + 1
            || y.back() != j + 1
            || x.letters().compare(0, x.size() - 1, x0.letters(), 0, x0.size() - 1)
                   != 0
            || y.letters().compare(0, y.size() - 1, y0.letters(), 0, y0.size() - 1)
                   != 0) {
          return false;
        }
      }
      return true;
    }
  }  // namespace detail

  class GElem;

  //! The unique maximal essential extension of φ.
  inline RiAutElem max_extend_table(RiAutElem const& phi) {
    auto const        k = phi.alphabet().size();
    std::vector<Word> dom, img;
    dom.reserve(phi.size());
    img.reserve(phi.size());
    bool collapsed = false;
    for (std::size_t i = 0; i < phi.size(); ++i) {
      dom.push_back(phi.domain(i));
      img.push_back(phi.image(i));
      while (detail::is_block(dom, img, k)) {
        Word x = dom[dom.size() - k].parent();
        Word y = img[img.size() - k].parent();
        dom.resize(dom.size() - k);
        img.resize(img.size() - k);
        dom.push_back(std::move(x));
        img.push_back(std::move(y));
        collapsed = true;
      }
    }
    if (!collapsed) {
      return phi;
    }
    return RiAutElem(detail::unchecked,
                     MaximalPrefixCode(detail::unchecked, phi.alphabet(), std::move(dom)),
                     std::move(img));
  }

  inline bool is_max_extended(RiAutElem const& phi) {
    return max_extend_table(phi) == phi;
  }

  //! An element of G_{k,1}, held as its maximally extended table.
  class GElem {
   public:
    explicit GElem(RiAutElem const& phi) : _rep(max_extend_table(phi)) {}

    GElem(detail::unchecked_t, RiAutElem rep) : _rep(std::move(rep)) {}

    static GElem identity(Alphabet const& alphabet) {
      return GElem(detail::unchecked, RiAutElem::identity(alphabet));
    }

    RiAutElem const& rep() const noexcept {
      return _rep;
    }

    Alphabet const& alphabet() const noexcept {
      return _rep.alphabet();
    }

    bool is_identity() const {
      return _rep.size() == 1 && _rep.domain(0).empty();
    }

    bool operator==(GElem const& that) const {
      return _rep == that._rep;
    }

    bool operator<(GElem const& that) const {
      return _rep < that._rep;
    }

   private:
    RiAutElem _rep;
  };

  //! η: riAut(k) -> G_{k,1}.
  inline GElem max_extend(RiAutElem const& phi) {
    return GElem(phi);
  }

  inline GElem g_multiply(GElem const& g2, GElem const& g1) {
    return GElem(compose(g2.rep(), g1.rep()));
  }

  inline GElem g_inverse(GElem const& g) {
    return GElem(detail::unchecked, inverse(g.rep()));
  }

  ////////////////////////////////////////////////////////////////////////////
  // Text form
  ////////////////////////////////////////////////////////////////////////////

  inline std::string to_string(RiAutElem const& phi) {
    std::string out = "[";
    for (std::size_t i = 0; i < phi.size(); ++i) {
      if (i != 0) {
        out += ",";
      }
      out += to_string(phi.domain(i));
      out += "->";
      out += to_string(phi.image(i));
    }
    return out + "]";
  }

  inline std::string to_string(GElem const& g) {
    return to_string(g.rep());
  }

  namespace detail {
    inline std::vector<std::pair<Word, Word>> parse_pairs(std::string_view text,
                                                          Alphabet const& alphabet) {
      auto                               body = unwrap(text, '[', ']');
      std::vector<std::pair<Word, Word>> pairs;
      if (body.empty()) {
        return pairs;
      }
      for (auto item : split(body, ',')) {
        auto arrow = item.find("->");
        if (arrow == std::string_view::npos) {
          raise(ErrorCode::ParseError, "expected x->y, found " + std::string(item));
        }
        pairs.emplace_back(parse_word(trim(item.substr(0, arrow)), alphabet),
                           parse_word(trim(item.substr(arrow + 2)), alphabet));
      }
      return pairs;
    }
  }  // namespace detail

  //! Parse `[x1->y1,x2->y2,...]`; entries may appear in any order.
  inline RiAutElem parse_table(std::string_view text, Alphabet const& alphabet) {
    return RiAutElem::from_pairs(alphabet, detail::parse_pairs(text, alphabet));
  }

}  // namespace riaut

template <>
struct std::hash<riaut::RiAutElem> {
  std::size_t operator()(riaut::RiAutElem const& phi) const noexcept {
    std::size_t h = phi.size();
    for (std::size_t i = 0; i < phi.size(); ++i) {
      h = h * 1000003u ^ std::hash<riaut::Word>{}(phi.domain(i));
      h = h * 1000003u ^ std::hash<riaut::Word>{}(phi.image(i));
    }
    return h;
  }
};

template <>
struct std::hash<riaut::GElem> {
  std::size_t operator()(riaut::GElem const& g) const noexcept {
    return std::hash<riaut::RiAutElem>{}(g.rep());
  }
};

#endif  // RIAUT_ELEMENT_HPP_
