#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace turaev {

enum class ErrorKind {
  SyntaxError,
  PairingError,
  SignMismatch,
  NotConnected,
  NotReduced,
  EmptyComponent,
  GeneralizedCodeUnsupported,
  MovePreconditionFailed,
  StaleReference,
  UnknownLabel,
  NotRealizable,
  UnsupportedFormat,
  ProgressStalled,
};

inline std::string_view to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::SyntaxError: return "SyntaxError";
    case ErrorKind::PairingError: return "PairingError";
    case ErrorKind::SignMismatch: return "SignMismatch";
    case ErrorKind::NotConnected: return "NotConnected";
    case ErrorKind::NotReduced: return "NotReduced";
    case ErrorKind::EmptyComponent: return "EmptyComponent";
    case ErrorKind::GeneralizedCodeUnsupported: return "GeneralizedCodeUnsupported";
    case ErrorKind::MovePreconditionFailed: return "MovePreconditionFailed";
    case ErrorKind::StaleReference: return "StaleReference";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::NotRealizable: return "NotRealizable";
    case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
    case ErrorKind::ProgressStalled: return "ProgressStalled";
  }
  return "?";
}

/// One broken rule found while reading or validating a code. `where` is the
/// offending label for pairing/sign rules and the character offset for syntax.
struct Violation {
  ErrorKind rule;
  std::size_t where = 0;
  std::string message;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool valid() const { return violations.empty(); }
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Thrown by parse(); carries every violation, not just the first.
class ParseError : public Error {
 public:
  explicit ParseError(ValidationReport report)
      : Error(report.violations.front().rule, summarize(report)), report_(std::move(report)) {}

  const ValidationReport& report() const noexcept { return report_; }

  bool has(ErrorKind k) const {
    for (const auto& v : report_.violations)
      if (v.rule == k) return true;
    return false;
  }

 private:
  static std::string summarize(const ValidationReport& r) {
    std::string s;
    for (const auto& v : r.violations) {
      if (!s.empty()) s += "; ";
      s += v.message;
    }
    return s;
  }

  ValidationReport report_;
};

}  // namespace turaev
