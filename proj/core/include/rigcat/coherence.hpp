#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rigcat/backend.hpp"
#include "rigcat/rng.hpp"
#include "rigcat/witness.hpp"

namespace rigcat {

/// A named coherence law: two witness-term schemas over shape variables
/// that must typecheck to the same MorType and compile to equal morphisms
/// in every environment.
struct LawSpec {
  std::string name;
  std::vector<std::string> params;  // variables the auditor must bind
  WitnessRef lhs;
  WitnessRef rhs;
};

struct CounterExample {
  long trial;
  Env env;
  ConcreteMorphism lhs;
  ConcreteMorphism rhs;
};

struct AuditReport {
  std::string law;
  long trials;
  std::uint64_t seed;
  std::optional<CounterExample> counter;

  bool passed() const { return !counter.has_value(); }
};

/// The builtin registry: pentagons and triangles for both operations, the
/// braided hexagons, additive symmetry, the distributivity subset
/// (braiding, additive associativity, left/right interchange, zero
/// absorption, unit instances), and one naturality square per generator.
const std::vector<LawSpec>& builtinLaws();

/// nullopt when no law has that name.
std::optional<LawSpec> findLaw(const std::string& name);

/// Draws one environment for the given parameters: dimension in
/// [0, maxDim], degrees in [-2, 2], labels derived from the variable name.
/// With probability 1/4 a parameter reuses an earlier parameter's binding,
/// exercising repeated-variable instances.
Env drawEnv(const std::vector<std::string>& params, SplitMix64& rng, long maxDim);

/// Compiles both sides over `trials` seeded environments and compares
/// exactly; stops at the first counterexample. The per-law stream is
/// derived from (seed, law name), so reports are deterministic and
/// independent of audit order.
AuditReport audit(const LawSpec& law, const BackendConfig& cfg, long trials,
                  std::uint64_t seed, long maxDim);

std::vector<AuditReport> auditLaws(const std::vector<LawSpec>& laws, const BackendConfig& cfg,
                                   long trials, std::uint64_t seed, long maxDim);

std::vector<AuditReport> auditAll(const BackendConfig& cfg, long trials, std::uint64_t seed,
                                  long maxDim);

/// One JSON line per report: {"law":..,"outcome":"pass","seed":..,"trials":..}
/// or the counterexample object embedding the env and both morphisms.
std::string reportJsonLine(const AuditReport& r);

}  // namespace rigcat
