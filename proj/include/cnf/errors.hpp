#pragma once

#include <stdexcept>
#include <string>

namespace cnf {

// Root of the library's typed error hierarchy. Callers that only want
// "this input was out of domain" can catch cnf::Error; the CLI maps the
// subtypes onto exit codes.
struct Error : std::runtime_error {
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// |phi(k)| ~ 0: band coefficients and transition amplitudes are undefined
// at a band-touching point.
struct DiracPointError : Error {
  using Error::Error;
};

// 1 - u|phi| ~ 0: the overlap-corrected dispersion has a pole. Cannot be
// reached for u < 1/3 but guarded against invalid parameter sets.
struct OverlapSingularityError : Error {
  using Error::Error;
};

// Absorption quantities are only defined for semiconducting tubes.
struct MetallicTubeError : Error {
  using Error::Error;
};

// The tight-binding model is not trusted above 6 eV.
struct EnergyOutOfRangeError : Error {
  using Error::Error;
};

// No root of the fiber eigenvalue equation in (n_clad k, n_core k).
struct NoGuidedModeError : Error {
  using Error::Error;
};

// optimal_winding needs a nonzero axial field component at the tube radius.
struct ZeroAxialFieldError : Error {
  using Error::Error;
};

// Forest region/density produced zero tubes.
struct EmptyForestError : Error {
  using Error::Error;
};

// Config file rejected (syntax, unknown key, bad value).
struct ConfigError : Error {
  using Error::Error;
};

// Output file could not be written.
struct IoError : Error {
  using Error::Error;
};

} // namespace cnf
