#pragma once

#include <stdexcept>
#include <string>

namespace yjunction {

/// Raised by inverse2 when |det| falls below the singularity threshold.
class SingularMatrixError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The ring has no unique scattering solution at the requested wavenumber:
/// (I - s s~) is singular, or a closed-form denominator vanished.
class DegenerateRingError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

}  // namespace yjunction
