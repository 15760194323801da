#pragma once

#include <stdexcept>
#include <string>

namespace cgc {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Geometry
struct PointOutsideTube : Error { using Error::Error; };
struct DegeneratePoint : Error { using Error::Error; };
struct NonTangentInput : Error { using Error::Error; };

// Curves and functionals
struct EpsilonOutOfRange : Error { using Error::Error; };
struct DegenerateCurve : Error { using Error::Error; };
struct CurvesTooFar : Error { using Error::Error; };
struct LedgerMismatch : Error { using Error::Error; };
struct EmptySampleSet : Error { using Error::Error; };
struct AmbiguousDegree : Error { using Error::Error; };

// Flow / solver
struct StepTooLarge : Error { using Error::Error; };
struct DegreeLost : Error { using Error::Error; };
struct ScheduleUnderflow : Error { using Error::Error; };
struct NotUnitSpeed : Error { using Error::Error; };
struct NotConstantSpeed : Error { using Error::Error; };

// Configuration
struct ConfigError : Error { using Error::Error; };

} // namespace cgc
