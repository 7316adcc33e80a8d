#pragma once

#include <cstdint>

namespace ef {

/// Size guards for the operations that materialize elements or cosets.
/// The defaults can be overridden process-wide via the environment variable
/// ENGEL_FORGE_THRESHOLDS, e.g.
///
///   ENGEL_FORGE_THRESHOLDS=enum=500000,quotient=20000
///
/// (keys: "enum" = element-enumeration bound on |G|, "quotient" = bound on a
/// coset-action degree).  Unknown keys are rejected at startup.
struct Limits {
  std::uint64_t enumeration = 200000;     // max |G| for exhaustive element sweeps
  std::uint64_t quotient_degree = 100000; // max index for a coset action

  /// Process-wide limits: defaults merged with the environment override.
  static const Limits& current();

  /// Parse an override string ("k=v,k=v").  Throws InvalidInput on bad input.
  static Limits parse(const char* spec, Limits base);
};

}  // namespace ef
