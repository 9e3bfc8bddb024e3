#pragma once

#include <stdexcept>
#include <string>

namespace xhermite {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define XHERMITE_DEFINE_ERROR(Name)          \
  class Name : public Error {                \
   public:                                   \
    explicit Name(const std::string& what)   \
        : Error(#Name ": " + what) {}        \
  }

XHERMITE_DEFINE_ERROR(ArityMismatch);
XHERMITE_DEFINE_ERROR(IrrationalScaleMismatch);
XHERMITE_DEFINE_ERROR(NonSquare);
XHERMITE_DEFINE_ERROR(MissingVariable);
XHERMITE_DEFINE_ERROR(NotDivisible);
XHERMITE_DEFINE_ERROR(InvalidSequence);
XHERMITE_DEFINE_ERROR(NotKreinAdler);
XHERMITE_DEFINE_ERROR(SingularTime);
XHERMITE_DEFINE_ERROR(WronskianZero);
XHERMITE_DEFINE_ERROR(NearPole);
XHERMITE_DEFINE_ERROR(TruncationTooSmall);
XHERMITE_DEFINE_ERROR(LambdaTooLarge);
XHERMITE_DEFINE_ERROR(ParseError);

#undef XHERMITE_DEFINE_ERROR

}  // namespace xhermite
