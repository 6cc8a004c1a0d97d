#ifndef RIAUT_RIHOM_HPP_
#define RIAUT_RIHOM_HPP_

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "element.hpp"
#include "error.hpp"
#include "word.hpp"

namespace riaut {

  //! A right-ideal homomorphism given on a finite prefix code, which need not
  //! be maximal and may be empty. Images are arbitrary words.
  class RiHomElem {
   public:
    using pair_type = std::pair<Word, Word>;

    static RiHomElem from_pairs(Alphabet const& alphabet, std::vector<pair_type> pairs) {
      std::sort(pairs.begin(), pairs.end());
      pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
      for (std::size_t i = 1; i < pairs.size(); ++i) {
        if (pairs[i - 1].first == pairs[i].first) {
          raise(ErrorCode::NotABijection, to_string(pairs[i].first) + " has two images");
        }
        if (is_prefix(pairs[i - 1].first, pairs[i].first)) {
          raise(ErrorCode::NotAPrefixCode, to_string(pairs[i - 1].first)
                                               + " is a prefix of "
                                               + to_string(pairs[i].first));
        }
      }
      for (auto const& [x, y] : pairs) {
        for (auto const* w : {&x, &y}) {
          for (std::size_t i = 0; i < w->size(); ++i) {
            if (!alphabet.contains((*w)[i])) {
              raise(ErrorCode::ParseError, "letter index out of range");
            }
          }
        }
      }
      return RiHomElem(detail::unchecked, alphabet, std::move(pairs));
    }

    //! Pairs sorted by domain, domain a prefix code.
    RiHomElem(detail::unchecked_t, Alphabet alphabet, std::vector<pair_type> pairs)
        : _alphabet(alphabet), _pairs(std::move(pairs)) {}

    static RiHomElem from(RiAutElem const& phi) {
      return RiHomElem(detail::unchecked, phi.alphabet(), phi.pairs());
    }

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }

    std::vector<pair_type> const& pairs() const noexcept {
      return _pairs;
    }

    std::size_t size() const noexcept {
      return _pairs.size();
    }

    bool empty() const noexcept {
      return _pairs.empty();
    }

    //! Index of the domain element that is a prefix of w.
    std::optional<std::size_t> prefix_of(Word const& w) const {
      auto it = std::upper_bound(_pairs.begin(), _pairs.end(), w,
                                 [](Word const& x, pair_type const& p) { return x < p.first; });
      if (it == _pairs.begin()) {
        return std::nullopt;
      }
      --it;
      if (is_prefix(it->first, w)) {
        return static_cast<std::size_t>(it - _pairs.begin());
      }
      return std::nullopt;
    }

    std::optional<Word> apply(Word const& w) const {
      auto i = prefix_of(w);
      if (!i) {
        return std::nullopt;
      }
      return _pairs[*i].second + w.drop(_pairs[*i].first.size());
    }

    bool operator==(RiHomElem const& that) const {
      return _alphabet == that._alphabet && _pairs == that._pairs;
    }

   private:
    Alphabet               _alphabet;
    std::vector<pair_type> _pairs;
  };

  //! ψ ∘ φ on the code generating Dom(φ) ∩ φ^{-1}(Dom(ψ)).
  inline RiHomElem hom_compose(RiHomElem const& psi, RiHomElem const& phi) {
    check_same(psi.alphabet(), phi.alphabet());
    auto const&                       P = psi.pairs();
    std::vector<RiHomElem::pair_type> out;
    for (auto const& [x, y] : phi.pairs()) {
      if (auto q = psi.prefix_of(y)) {
        out.emplace_back(x, P[*q].second + y.drop(P[*q].first.size()));
        continue;
      }
      auto first = std::lower_bound(P.begin(), P.end(), y,
                                    [](auto const& p, Word const& w) { return p.first < w; });
      for (auto it = first; it != P.end() && is_prefix(y, it->first); ++it) {
        out.emplace_back(x + it->first.drop(y.size()), it->second);
      }
    }
    return RiHomElem(detail::unchecked, phi.alphabet(), std::move(out));
  }

  //! The prefix code generating Im(φ).
  inline std::vector<Word> image_code(RiHomElem const& phi) {
    std::vector<Word> img;
    for (auto const& p : phi.pairs()) {
      img.push_back(p.second);
    }
    std::sort(img.begin(), img.end());
    std::vector<Word> out;
    for (auto& w : img) {
      if (out.empty() || !is_prefix(out.back(), w)) {
        out.push_back(std::move(w));
      }
    }
    return out;
  }

  //! The images of the domain code are pairwise prefix-incomparable; two
  //! equal images count as comparable.
  inline bool is_pc_preserving(RiHomElem const& phi) {
    std::vector<Word> img;
    for (auto const& p : phi.pairs()) {
      img.push_back(p.second);
    }
    std::sort(img.begin(), img.end());
    for (std::size_t i = 1; i < img.size(); ++i) {
      if (is_prefix(img[i - 1], img[i])) {
        return false;
      }
    }
    return true;
  }

  //! A prefix-code preserving restriction of φ.
  //!
  //! Every entry (x, w) is replaced by the (x u, w u) with |w u| = ℓ, the
  //! longest image length. Entries whose image already occurred for a
  //! smaller domain word are dropped. The images lie in A^ℓ but need not
  //! exhaust it.
  inline RiHomElem restrict_to_pc(RiHomElem const& phi) {
    std::size_t ell = 0;
    for (auto const& p : phi.pairs()) {
      ell = std::max(ell, p.second.size());
    }
    std::vector<RiHomElem::pair_type> expanded;
    for (auto const& [x, w] : phi.pairs()) {
      for (auto const& u : words_of_length(phi.alphabet(), ell - w.size())) {
        expanded.emplace_back(x + u, w + u);
      }
    }
    std::vector<Word>                 seen;
    std::vector<RiHomElem::pair_type> out;
    std::vector<std::size_t>          order(expanded.size());
    for (std::size_t i = 0; i < order.size(); ++i) {
      order[i] = i;
    }
    // For each image keep the entry with the smallest domain word.
    std::stable_sort(order.begin(), order.end(), [&expanded](auto i, auto j) {
      return expanded[i].second < expanded[j].second;
    });
    std::vector<bool> keep(expanded.size(), false);
    for (std::size_t j = 0; j < order.size(); ++j) {
      if (j == 0 || expanded[order[j]].second != expanded[order[j - 1]].second) {
        keep[order[j]] = true;
      }
    }
    for (std::size_t i = 0; i < expanded.size(); ++i) {
      if (keep[i]) {
        out.push_back(std::move(expanded[i]));
      }
    }
    return RiHomElem(detail::unchecked, phi.alphabet(), std::move(out));
  }

  //! An injective right-ideal homomorphism; its images form a prefix code.
  class RiIsoElem {
   public:
    explicit RiIsoElem(RiHomElem phi) : _phi(std::move(phi)) {
      if (!is_pc_preserving(_phi)) {
        raise(ErrorCode::NotInjective, "two images are prefix-comparable");
      }
    }

    RiHomElem const& hom() const noexcept {
      return _phi;
    }

    bool operator==(RiIsoElem const&) const = default;

   private:
    RiHomElem _phi;
  };

  inline RiIsoElem iso_compose(RiIsoElem const& psi, RiIsoElem const& phi) {
    return RiIsoElem(hom_compose(psi.hom(), phi.hom()));
  }

  ////////////////////////////////////////////////////////////////////////////
  // Text form
  ////////////////////////////////////////////////////////////////////////////

  inline std::string to_string(RiHomElem const& phi) {
    std::string out = "[";
    for (std::size_t i = 0; i < phi.size(); ++i) {
      if (i != 0) {
        out += ",";
      }
      out += to_string(phi.pairs()[i].first) + "->" + to_string(phi.pairs()[i].second);
    }
    return out + "]";
  }

  inline std::string to_string(std::vector<Word> const& code) {
    std::string out = "{";
    for (std::size_t i = 0; i < code.size(); ++i) {
      if (i != 0) {
        out += ",";
      }
      out += to_string(code[i]);
    }
    return out + "}";
  }

  //! Parse a table; `[]` is the empty map.
  inline RiHomElem parse_hom(std::string_view text, Alphabet const& alphabet) {
    return RiHomElem::from_pairs(alphabet, detail::parse_pairs(text, alphabet));
  }

}  // namespace riaut

#endif  // RIAUT_RIHOM_HPP_
