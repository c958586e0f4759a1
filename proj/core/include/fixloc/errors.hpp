#pragma once

#include <stdexcept>
#include <string>

namespace fixloc {

// Base for every domain error raised by the library. The CLI maps
// SchemaError to exit status 2 and all other subclasses to 3.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class SchemaError : public Error {
public:
  using Error::Error;
};

#define FIXLOC_DECLARE_ERROR(Name)                                             \
  class Name : public Error {                                                  \
  public:                                                                      \
    explicit Name(const std::string& what) : Error(#Name ": " + what) {}       \
  }

FIXLOC_DECLARE_ERROR(InvalidProfile);
FIXLOC_DECLARE_ERROR(UnknownOrbit);
FIXLOC_DECLARE_ERROR(NonIntegralDegree);
FIXLOC_DECLARE_ERROR(InvalidDatum);
FIXLOC_DECLARE_ERROR(NoSolution);
FIXLOC_DECLARE_ERROR(OddOrder);
FIXLOC_DECLARE_ERROR(InvalidGenus);
FIXLOC_DECLARE_ERROR(InconsistentDegrees);
FIXLOC_DECLARE_ERROR(NotSemistableNotStrict);
FIXLOC_DECLARE_ERROR(InvalidBundle);

#undef FIXLOC_DECLARE_ERROR

} // namespace fixloc
