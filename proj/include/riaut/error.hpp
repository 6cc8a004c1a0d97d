#ifndef RIAUT_ERROR_HPP_
#define RIAUT_ERROR_HPP_

#include <stdexcept>
#include <string>
#include <string_view>

namespace riaut {

  //! Every domain error raised by the library carries one of these codes. The
  //! CLI prints the code name on stderr, so the names are part of the
  //! external interface and must not change.
  enum class ErrorCode {
    ParseError,
    BadAlphabet,
    AlphabetMismatch,
    NotAPrefixCode,
    NotMaximal,
    NotABijection,
    BadCardinality,
    SizeMismatch,
    NotInnerLeaf,
    TooSmall,
    NotInDomainCode,
    SizeOrderViolated,
    TooLarge,
    NotIdempotent,
    NotDictPreserving,
    DegenerateLevel,
    NoMatchingGenerator,
    EqualInputs,
    IndexOutOfRange,
    NotInjective
  };

  constexpr std::string_view error_name(ErrorCode code) noexcept {
    switch (code) {
      case ErrorCode::ParseError: return "ParseError";
      case ErrorCode::BadAlphabet: return "BadAlphabet";
      case ErrorCode::AlphabetMismatch: return "AlphabetMismatch";
      case ErrorCode::NotAPrefixCode: return "NotAPrefixCode";
      case ErrorCode::NotMaximal: return "NotMaximal";
      case ErrorCode::NotABijection: return "NotABijection";
      case ErrorCode::BadCardinality: return "BadCardinality";
      case ErrorCode::SizeMismatch: return "SizeMismatch";
      case ErrorCode::NotInnerLeaf: return "NotInnerLeaf";
      case ErrorCode::TooSmall: return "TooSmall";
      case ErrorCode::NotInDomainCode: return "NotInDomainCode";
      case ErrorCode::SizeOrderViolated: return "SizeOrderViolated";
      case ErrorCode::TooLarge: return "TooLarge";
      case ErrorCode::NotIdempotent: return "NotIdempotent";
      case ErrorCode::NotDictPreserving: return "NotDictPreserving";
      case ErrorCode::DegenerateLevel: return "DegenerateLevel";
      case ErrorCode::NoMatchingGenerator: return "NoMatchingGenerator";
      case ErrorCode::EqualInputs: return "EqualInputs";
      case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
      case ErrorCode::NotInjective: return "NotInjective";
    }
    return "Unknown";
  }

  class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, std::string const& detail)
        : std::runtime_error(std::string(error_name(code))
                             + (detail.empty() ? "" : ": " + detail)),
          _code(code) {}

    ErrorCode code() const noexcept {
      return _code;
    }

    std::string_view name() const noexcept {
      return error_name(_code);
    }

   private:
    ErrorCode _code;
  };

  [[noreturn]] inline void raise(ErrorCode code, std::string const& detail = {}) {
    throw Error(code, detail);
  }

}  // namespace riaut

#endif  // RIAUT_ERROR_HPP_
