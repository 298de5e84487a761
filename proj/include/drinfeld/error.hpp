#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace drinfeld {

/// Failure categories raised by the library. The CLI maps each to an exit code.
enum class ErrorKind {
  Domain,                     // precondition on an argument violated (zero polynomial, ...)
  Config,                     // malformed problem description
  Reducible,                  // M(x) has a root in k
  BadConstantTerm,            // constant term is not mu * pv^m
  NotWeilAtV,                 // local shape at v incompatible with a Weil polynomial
  UnsupportedCharacteristic,  // characteristic 2 or 3
  InternalInconsistency,      // an exact identity that must hold did not
  NoSolution,                 // integral-basis congruences unsolvable
  NoCandidate,                // no candidate order is contained in End(phi)
  CandidateBound,             // enumeration would exceed the configured bound
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::Domain: return "Domain";
    case ErrorKind::Config: return "Config";
    case ErrorKind::Reducible: return "Reducible";
    case ErrorKind::BadConstantTerm: return "BadConstantTerm";
    case ErrorKind::NotWeilAtV: return "NotWeilAtV";
    case ErrorKind::UnsupportedCharacteristic: return "UnsupportedCharacteristic";
    case ErrorKind::InternalInconsistency: return "InternalInconsistency";
    case ErrorKind::NoSolution: return "NoSolution";
    case ErrorKind::NoCandidate: return "NoCandidate";
    case ErrorKind::CandidateBound: return "CandidateBound";
  }
  return "Unknown";
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

[[noreturn]] inline void fail(ErrorKind kind, const std::string& what) {
  throw Error(kind, what);
}

inline void require(bool cond, ErrorKind kind, const std::string& what) {
  if (!cond) throw Error(kind, what);
}

}  // namespace drinfeld
