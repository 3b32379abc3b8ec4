#pragma once

#include <stdexcept>
#include <string>

namespace screw {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define SCREW_ERROR(Name)                          \
    class Name : public Error {                    \
    public:                                        \
        explicit Name(const std::string& what)     \
            : Error(#Name ": " + what) {}          \
    }

SCREW_ERROR(DivisionByVanishing);
SCREW_ERROR(SqrtOfVanishing);
SCREW_ERROR(DomainError);
SCREW_ERROR(OrderOutOfRange);
SCREW_ERROR(JetOrderTooLow);
SCREW_ERROR(EmptyGrid);
SCREW_ERROR(StepCountTooSmall);
SCREW_ERROR(FrameNotOrthonormal);
SCREW_ERROR(NotTangent);
SCREW_ERROR(NotStrictFramed);
SCREW_ERROR(InvalidPitch);
SCREW_ERROR(NoSmoothSelection);
SCREW_ERROR(InvalidSelection);
SCREW_ERROR(PolarDataUndefined);
SCREW_ERROR(C5RequiresXZero);
SCREW_ERROR(MalformedSpec);

#undef SCREW_ERROR

// Position is a 0-based byte offset into the parsed text.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t position)
        : Error("ParseError at " + std::to_string(position) + ": " + what),
          position_(position) {}
    std::size_t position() const { return position_; }

private:
    std::size_t position_;
};

}  // namespace screw
