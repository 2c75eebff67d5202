#pragma once

#include <stdexcept>
#include <string>

namespace gassmann {

// Base class for all errors raised by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// --- parsing ---
struct MalformedCycle : Error {
  using Error::Error;
};
struct PointOutOfRange : Error {
  using Error::Error;
};
struct RepeatedPoint : Error {
  using Error::Error;
};

// --- group engine ---
struct DegreeMismatch : Error {
  using Error::Error;
};
struct CapExceeded : Error {
  using Error::Error;
};
struct IndexOutOfRange : Error {
  using Error::Error;
};
struct NotASubgroup : Error {
  using Error::Error;
};

// --- search ---
struct SearchBudgetExceeded : Error {
  using Error::Error;
};

// --- intertwiners / transplantation ---
struct NoInvertibleFound : Error {
  // proven == true means the scan grid was wide enough to certify that the
  // determinant vanishes identically, not merely that the budget ran out.
  bool proven;
  NoInvertibleFound(const std::string& msg, bool proven_) : Error(msg), proven(proven_) {}
};
struct NotInvariant : Error {
  using Error::Error;
};
struct RankDeficient : Error {
  using Error::Error;
};
struct DeltaNotEquivariant : Error {
  using Error::Error;
};
struct NoConvergence : Error {
  using Error::Error;
};

// --- graphs ---
struct IdentityInGeneratingSet : Error {
  using Error::Error;
};
struct NotSymmetric : Error {
  using Error::Error;
};
struct RegularityMismatch : Error {
  using Error::Error;
};
struct BasisMismatch : Error {
  using Error::Error;
};
struct TooLarge : Error {
  using Error::Error;
};

}  // namespace gassmann
