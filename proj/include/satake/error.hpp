#pragma once

#include <stdexcept>
#include <string>

namespace satake {

enum class Errc {
  NotGCM,
  NotSymmetrizable,
  Decomposable,
  NotFiniteType,
  NotInWeylGroup,
  BeyondBruteForce,
  NotCompatible,
  InvalidCharacter,
  RankGuardExceeded,
  NotGeneralizedSatake,
  OrderCapExceeded,
  UnrecognizedRestrictedType,
  TruncationOverflow,
  CaseMismatch,
  ParseError,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}
  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t pos, const std::string& what)
      : Error(Errc::ParseError, what + " at position " + std::to_string(pos)), pos_(pos) {}
  std::size_t position() const noexcept { return pos_; }

 private:
  std::size_t pos_;
};

class TruncationOverflow : public Error {
 public:
  TruncationOverflow(int suggested_height, const std::string& what)
      : Error(Errc::TruncationOverflow,
              what + " (retry with height >= " + std::to_string(suggested_height) + ")"),
        suggested_(suggested_height) {}
  int suggested_height() const noexcept { return suggested_; }

 private:
  int suggested_;
};

}  // namespace satake
