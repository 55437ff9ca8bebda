#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace enriques {

enum class Errc {
  NotSymmetric,
  Degenerate,
  ZeroScale,
  DependentVectors,
  NotIsotropic,
  NotSubgroup,
  NotEven,
  TooLarge,
  NonWitt,
  BadLength,
  UnknownTag,
  NotDefinite,
  CapExceeded,
  NotFound,
  BadShape,
  BadParams,
  GramMismatch,
  NotPrimitive,
  DegenerateComplement,
  RankTooLarge,
  Unsupported,
  BadPrime,
  NoUnitVector,
  StarViolated,
  ExistenceFails,
  EvenIndex,
  NotSublattice,
  NotFundamental,
  NotImaginary,
  BadCongruence,
  NotEvenGram,
  NotPositiveDefinite,
  NotTwoGroup,
  DatumInvalid,
  Overflow,
  Parse,
};

std::string_view errc_name(Errc code) noexcept;

/// The single exception type thrown by the library. `code()` identifies the
/// failure class; `what()` carries the human-readable diagnostics.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& message)
      : std::runtime_error(std::string(errc_name(code)) + ": " + message), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& message) { throw Error(code, message); }

}  // namespace enriques
