#ifndef WEYLCOH_ERRORS_HPP
#define WEYLCOH_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace weylcoh
{

// Base of every error raised by the library. Each failure mode named in the
// module contracts gets its own type so callers (and the CLI exit-code
// mapping) can dispatch on it.
class error : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

#define WEYLCOH_DEFINE_ERROR(name)                                                                                     \
    class name : public error                                                                                          \
    {                                                                                                                  \
    public:                                                                                                            \
        explicit name(const std::string &what) : error(#name ": " + what) {}                                          \
    }

WEYLCOH_DEFINE_ERROR(DivisionByZero);
WEYLCOH_DEFINE_ERROR(ParseError);
WEYLCOH_DEFINE_ERROR(MismatchedArity);
WEYLCOH_DEFINE_ERROR(NonSymplecticMatrix);
WEYLCOH_DEFINE_ERROR(AxisOutOfRange);
WEYLCOH_DEFINE_ERROR(OrderExceedsCap);
WEYLCOH_DEFINE_ERROR(NotFiniteOrder);
WEYLCOH_DEFINE_ERROR(GroupMismatch);
WEYLCOH_DEFINE_ERROR(UnknownClassKey);
WEYLCOH_DEFINE_ERROR(NotNormalized);
WEYLCOH_DEFINE_ERROR(NotInvariant);
WEYLCOH_DEFINE_ERROR(NotEquivariant);
WEYLCOH_DEFINE_ERROR(BasisMismatch);
WEYLCOH_DEFINE_ERROR(DegenerateAlpha);
WEYLCOH_DEFINE_ERROR(WrongSummand);
WEYLCOH_DEFINE_ERROR(NotACocycle);
WEYLCOH_DEFINE_ERROR(DegreeCapExceeded);
WEYLCOH_DEFINE_ERROR(WindowTooSmall);
WEYLCOH_DEFINE_ERROR(CapExceeded);
WEYLCOH_DEFINE_ERROR(UnknownGroup);

#undef WEYLCOH_DEFINE_ERROR

} // namespace weylcoh

#endif
