#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace simconj {

enum class ErrorKind {
  closure_exceeds_cap,
  invalid_permutation,
  inconsistent_presentation,
  not_a_group,
  not_prime_power,
  recursion_depth_exceeded,
  invalid_parameters,
  fingerprint_mismatch,
  quotient_too_large,
  tuple_cap_exceeded,
  parse_error,
};

std::string_view error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

inline std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::closure_exceeds_cap: return "ClosureExceedsCap";
    case ErrorKind::invalid_permutation: return "InvalidPermutation";
    case ErrorKind::inconsistent_presentation: return "InconsistentPresentation";
    case ErrorKind::not_a_group: return "NotAGroup";
    case ErrorKind::not_prime_power: return "NotPrimePower";
    case ErrorKind::recursion_depth_exceeded: return "RecursionDepthExceeded";
    case ErrorKind::invalid_parameters: return "InvalidParameters";
    case ErrorKind::fingerprint_mismatch: return "FingerprintMismatch";
    case ErrorKind::quotient_too_large: return "QuotientTooLarge";
    case ErrorKind::tuple_cap_exceeded: return "TupleCapExceeded";
    case ErrorKind::parse_error: return "ParseError";
  }
  return "Error";
}

}  // namespace simconj
