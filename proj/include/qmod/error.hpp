#pragma once

#include <stdexcept>
#include <string>

namespace qmod {

enum class ErrorKind {
  InvalidArgument,
  NotAdmissible,
  BadRelation,
  ShapeMismatch,
  NotSubmodule,
  FieldNotFinite,
  SearchTooLarge,
  NotOnChart,
  EquationsViolated,
  NotInvertible,
  IdealNotGraded,
  SingularBlock,
  NotSemistable,
  TopMismatch,
  NotNilpotentDirection,
  DimensionMismatch,
  Unsupported,
  SyntaxError,
  UnknownLabel,
  TypeMismatch,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(error_kind_name(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  /// Parse-level failures map to exit status 2, everything else to 1.
  bool is_parse_error() const {
    return kind_ == ErrorKind::SyntaxError || kind_ == ErrorKind::UnknownLabel ||
           kind_ == ErrorKind::TypeMismatch;
  }

 private:
  ErrorKind kind_;
};

/// Three-valued answers for semi-decisions.
enum class Tri { False, True, Unknown };

inline const char* tri_name(Tri t) {
  switch (t) {
    case Tri::False: return "false";
    case Tri::True: return "true";
    default: return "unknown";
  }
}

}  // namespace qmod
