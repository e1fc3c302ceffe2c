#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hypersmooth {

enum class ErrorKind {
  InvalidDescriptor,
  DivisionByZero,
  DescriptorMismatch,
  WrongCharacteristic,
  NoSolution,
  DegreeMismatch,
  BudgetExceeded,
  NotHomogeneous,
  WitnessNotFoundWithinCap,
  PreconditionViolated,
  ZeroCoefficient,
  CaseMismatch,
  NotFrobeniusCyclic,
  HypothesisViolated,
  RankViolated,
  NotPrimeField,
  ShapeViolated,
  EvenN,
  FieldTooLarge,
  ParseError,
  DependentGenerators,
};

constexpr std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::InvalidDescriptor: return "InvalidDescriptor";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::DescriptorMismatch: return "DescriptorMismatch";
    case ErrorKind::WrongCharacteristic: return "WrongCharacteristic";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::WitnessNotFoundWithinCap: return "WitnessNotFoundWithinCap";
    case ErrorKind::PreconditionViolated: return "PreconditionViolated";
    case ErrorKind::ZeroCoefficient: return "ZeroCoefficient";
    case ErrorKind::CaseMismatch: return "CaseMismatch";
    case ErrorKind::NotFrobeniusCyclic: return "NotFrobeniusCyclic";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::RankViolated: return "RankViolated";
    case ErrorKind::NotPrimeField: return "NotPrimeField";
    case ErrorKind::ShapeViolated: return "ShapeViolated";
    case ErrorKind::EvenN: return "EvenN";
    case ErrorKind::FieldTooLarge: return "FieldTooLarge";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::DependentGenerators: return "DependentGenerators";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the kinds above so
/// callers (and the CLI exit-code mapping) can branch without parsing text.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void raise(ErrorKind kind, const std::string& what) { throw Error(kind, what); }

}  // namespace hypersmooth
