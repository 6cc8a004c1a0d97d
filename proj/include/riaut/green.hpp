#ifndef RIAUT_GREEN_HPP_
#define RIAUT_GREEN_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <utility>
#include <vector>

#include "element.hpp"
#include "error.hpp"
#include "prefix_code.hpp"

namespace riaut {

  //! Default bound on the number of elements any enumeration may produce.
  inline constexpr std::size_t default_enumeration_cap = 25000;

  //! φ2 ≤_J φ1.
  inline bool j_leq(RiAutElem const& phi2, RiAutElem const& phi1) {
    check_same(phi2.alphabet(), phi1.alphabet());
    return phi2.size() >= phi1.size();
  }

  //! Im(φ2) ⊆ Im(φ1).
  inline bool r_leq(RiAutElem const& phi2, RiAutElem const& phi1) {
    return is_subideal(phi2.image_code(), phi1.image_code());
  }

  //! Dom(φ2) ⊆ Dom(φ1).
  inline bool l_leq(RiAutElem const& phi2, RiAutElem const& phi1) {
    return is_subideal(phi2.domain_code(), phi1.domain_code());
  }

  struct JFactorization {
    RiAutElem beta;
    RiAutElem alpha;
  };

  //! β, α with β ∘ φ1 ∘ α = φ2.
  //!
  //! φ1 is restricted at its first domain entry until it has as many entries
  //! as φ2; α is then the canonical bijection onto the restricted domain code.
  inline JFactorization j_factor(RiAutElem const& phi2, RiAutElem const& phi1) {
    check_same(phi2.alphabet(), phi1.alphabet());
    if (phi2.size() < phi1.size()) {
      raise(ErrorCode::SizeOrderViolated,
            std::to_string(phi2.size()) + " < " + std::to_string(phi1.size()));
    }
    RiAutElem big = phi1;
    while (big.size() < phi2.size()) {
      big = restrict_step(big, big.domain(0));
    }
    auto alpha = canonical_bijection(phi2.domain_code(), big.domain_code());
    auto beta  = compose(phi2, compose(inverse(alpha), inverse(big)));
    return {std::move(beta), std::move(alpha)};
  }

  //! n!, saturating.
  inline std::uint64_t factorial(std::size_t n) {
    std::uint64_t out = 1;
    for (std::size_t m = 2; m <= n; ++m) {
      if (out > std::numeric_limits<std::uint64_t>::max() / m) {
        return std::numeric_limits<std::uint64_t>::max();
      }
      out *= m;
    }
    return out;
  }

  //! |J_i|, or the dictionary order preserving part of it.
  inline std::uint64_t j_class_size(std::size_t k, std::size_t i, bool dict_only) {
    constexpr auto max = std::numeric_limits<std::uint64_t>::max();
    std::uint64_t  c   = code_count(k, i);
    if (c != 0 && c > max / c) {
      return max;
    }
    std::uint64_t out = c * c;
    if (dict_only) {
      return out;
    }
    std::uint64_t f = factorial(code_size(k, i));
    return (f != 0 && out > max / f) ? max : out * f;
  }

  //! All elements whose domain code has i inner vertices.
  inline std::vector<RiAutElem> enumerate_j_class(Alphabet const& alphabet,
                                                  std::size_t     i,
                                                  bool            dict_only,
                                                  std::size_t cap = default_enumeration_cap) {
    auto const expected = j_class_size(alphabet.size(), i, dict_only);
    if (expected > cap) {
      raise(ErrorCode::TooLarge, "J-class has " + std::to_string(expected)
                                     + " elements, cap is " + std::to_string(cap));
    }
    auto const             codes = enumerate_codes_with_inner(alphabet, i);
    std::vector<RiAutElem> out;
    out.reserve(expected);
    for (auto const& P : codes) {
      for (auto const& Q : codes) {
        if (dict_only) {
          out.push_back(canonical_bijection(P, Q));
          continue;
        }
        std::vector<Word> img = Q.words();
        do {
          out.emplace_back(detail::unchecked, P, img, Q);
        } while (std::next_permutation(img.begin(), img.end()));
      }
    }
    return out;
  }

  //! All elements with at most i inner vertices in their domain code.
  inline std::vector<RiAutElem> enumerate_up_to(Alphabet const& alphabet,
                                                std::size_t     i,
                                                bool            dict_only,
                                                std::size_t cap = default_enumeration_cap) {
    std::uint64_t total = 0;
    for (std::size_t j = 0; j <= i; ++j) {
      total += j_class_size(alphabet.size(), j, dict_only);
      if (total > cap) {
        raise(ErrorCode::TooLarge, "more than " + std::to_string(cap)
                                       + " elements up to level "
                                       + std::to_string(i));
      }
    }
    std::vector<RiAutElem> out;
    out.reserve(total);
    for (std::size_t j = 0; j <= i; ++j) {
      auto level = enumerate_j_class(alphabet, j, dict_only, cap);
      out.insert(out.end(), level.begin(), level.end());
    }
    return out;
  }

  //! The H-class of the idempotent e = id_{PA*}: all bijections P -> P. In
  //! dictionary mode only e itself is order preserving.
  inline std::vector<RiAutElem> maximal_subgroup_at(RiAutElem const& e,
                                                    bool dict_only = false,
                                                    std::size_t cap = default_enumeration_cap) {
    if (!is_idempotent(e)) {
      raise(ErrorCode::NotIdempotent, to_string(e));
    }
    if (dict_only) {
      return {e};
    }
    if (factorial(e.size()) > cap) {
      raise(ErrorCode::TooLarge, std::to_string(e.size()) + "! exceeds the cap");
    }
    std::vector<RiAutElem> out;
    std::vector<Word>      img = e.images();
    do {
      out.emplace_back(detail::unchecked, e.domain_code(), img, e.image_code());
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
  }

}  // namespace riaut

#endif  // RIAUT_GREEN_HPP_
