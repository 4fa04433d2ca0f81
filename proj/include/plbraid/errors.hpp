#pragma once

#include <stdexcept>
#include <string>

namespace plb {

struct Error : std::runtime_error {
    Error(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind(std::move(kind)) {}
    std::string kind;
};

#define PLB_DEFINE_ERROR(NAME)                                                   \
    struct NAME : Error {                                                        \
        explicit NAME(const std::string& what) : Error(#NAME, what) {}           \
    }

PLB_DEFINE_ERROR(NonRegularProjection);
PLB_DEFINE_ERROR(MissingAssignment);
PLB_DEFINE_ERROR(PointNotOnSegment);
PLB_DEFINE_ERROR(PointOnCrossing);
PLB_DEFINE_ERROR(PatternMismatch);
PLB_DEFINE_ERROR(ObstructedDisc);
PLB_DEFINE_ERROR(PerturbationFailed);
PLB_DEFINE_ERROR(StrandMismatch);
PLB_DEFINE_ERROR(IndexOutOfRange);
PLB_DEFINE_ERROR(EffortExceeded);
PLB_DEFINE_ERROR(NotGeneric);
PLB_DEFINE_ERROR(LabelConflict);
PLB_DEFINE_ERROR(InvariantViolation);
PLB_DEFINE_ERROR(FixedPortionNotBraided);
PLB_DEFINE_ERROR(FixedPartCorrupted);
PLB_DEFINE_ERROR(TouchesFixedSubbraid);
PLB_DEFINE_ERROR(NoAdjacentString);
PLB_DEFINE_ERROR(UnknownComponent);
PLB_DEFINE_ERROR(TooManyCrossings);
PLB_DEFINE_ERROR(TooManyStrands);
PLB_DEFINE_ERROR(ParseError);

#undef PLB_DEFINE_ERROR

} // namespace plb
