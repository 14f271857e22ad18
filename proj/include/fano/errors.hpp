#pragma once

#include <stdexcept>
#include <string>

namespace fano {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// A mathematical precondition of an operation does not hold for the input.
/// The CLI maps these to exit code 2.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

#define FANO_DEFINE_ERROR(Name, Base, tag)                      \
  class Name : public Base {                                    \
   public:                                                      \
    using Base::Base;                                           \
    const char* kind() const noexcept override { return tag; }  \
  };

FANO_DEFINE_ERROR(FieldError, Error, "field_error")
FANO_DEFINE_ERROR(ParseError, Error, "parse_error")
FANO_DEFINE_ERROR(InconsistencyError, Error, "internal_inconsistency")
FANO_DEFINE_ERROR(GradingError, PreconditionError, "grading_error")
FANO_DEFINE_ERROR(DegenerateLineError, PreconditionError, "degenerate_line")
FANO_DEFINE_ERROR(NoUnitError, PreconditionError, "no_unit")
FANO_DEFINE_ERROR(LineNotOnCubicError, PreconditionError, "line_not_on_cubic")
FANO_DEFINE_ERROR(SingularAlongLineError, PreconditionError, "singular_along_line")
FANO_DEFINE_ERROR(DegenerateRepresentationError, PreconditionError,
                  "degenerate_representation")
FANO_DEFINE_ERROR(DegenerateHyperplaneError, PreconditionError, "degenerate_hyperplane")
FANO_DEFINE_ERROR(PointOffVarietyError, PreconditionError, "point_off_variety")
FANO_DEFINE_ERROR(NonLocallyFreePointError, PreconditionError,
                  "non_locally_free_point")

#undef FANO_DEFINE_ERROR

}  // namespace fano
