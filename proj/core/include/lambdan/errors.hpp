#pragma once

#include <stdexcept>

namespace lambdan {

// Base class for every error thrown by this library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

#define LAMBDAN_DEFINE_ERROR(Name)  \
  class Name : public Error {       \
   public:                          \
    using Error::Error;             \
  }

LAMBDAN_DEFINE_ERROR(BadOrder);                // n outside the supported range
LAMBDAN_DEFINE_ERROR(NoSignChange);            // bisection endpoints do not bracket a root
LAMBDAN_DEFINE_ERROR(NonFinite);               // a non-finite value where a finite one is required
LAMBDAN_DEFINE_ERROR(DescartesViolation);      // sign-change certificate failed
LAMBDAN_DEFINE_ERROR(NotInterior);             // simplex point touches or crosses the boundary
LAMBDAN_DEFINE_ERROR(BadSum);                  // coordinates do not sum to ~1 before normalization
LAMBDAN_DEFINE_ERROR(ResolutionTooSmall);      // grid resolution below the minimum
LAMBDAN_DEFINE_ERROR(AtCentroid);              // evaluation refused inside the centroid ball
LAMBDAN_DEFINE_ERROR(NonPositiveDenominator);  // numerical breakdown that valid inputs cannot cause
LAMBDAN_DEFINE_ERROR(OutOfRange);              // scalar argument outside its domain
LAMBDAN_DEFINE_ERROR(DegenerateDirection);     // direction with identically vanishing denominator
LAMBDAN_DEFINE_ERROR(NotPositive);             // positive input required
LAMBDAN_DEFINE_ERROR(Unsupported);             // no closed form for this n
LAMBDAN_DEFINE_ERROR(Degenerate);              // side lengths violate the triangle inequality
LAMBDAN_DEFINE_ERROR(InteriorRequired);        // barycentric weights must all be positive
LAMBDAN_DEFINE_ERROR(NoSamples);               // every candidate point was excluded

#undef LAMBDAN_DEFINE_ERROR

}  // namespace lambdan
