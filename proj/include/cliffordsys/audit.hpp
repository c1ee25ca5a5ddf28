#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cliffordsys/galois.hpp"
#include "cliffordsys/spec_file.hpp"
#include "json.hpp"

namespace cliffordsys {

inline constexpr const char* kToolVersion = "0.1.0";

struct CheckResult {
  std::string name;
  bool pass = false;
  /// Always set for failures: the tuple, pair, index or entry involved.
  std::string witness;
  std::string detail;
};

struct BatteryResult {
  std::string name;
  std::string claim;
  std::uint64_t seed = 0;
  std::uint64_t trials = 0;
  std::vector<CheckResult> checks;
  double seconds = 0;

  bool pass() const;
};

struct AuditReport {
  std::uint64_t seed = 0;
  std::string version = kToolVersion;
  std::string setup;
  std::vector<BatteryResult> batteries;

  bool pass() const;
};

/// Batteries that accept a planted fault: "sigma" compares an algebra with
/// the Sigma-image of a deliberately wrong cocycle, "kerchi" corrupts the
/// cocycle extracted from a crossed product at (1,1).
inline const std::vector<std::string> kInjectableBatteries{"sigma", "kerchi"};

struct AuditConfig {
  RingPtr ring;
  UnitModulePtr type;
  std::optional<GaloisParams> galois;
  std::uint64_t seed = 1;
  /// Random trials per battery; must be positive.
  std::uint64_t trials = 20;
  /// Candidate characters tried by the nonzero-obstruction search.
  std::uint64_t search_budget = 200;
  /// Empty, or one of kInjectableBatteries.
  std::string inject;

  /// [ring], [group], [action], [galois] and [audit] (trials,
  /// search_budget) of a spec file.
  static AuditConfig from_spec(const SpecFile& spec);
  /// Throws InvalidArgument for a non-positive budget or an unknown
  /// injection target.
  void validate() const;
};

/// Battery seeds are derived from the root seed and the battery name, so a
/// battery's result does not depend on which other batteries ran.
std::uint64_t derive_seed(std::uint64_t root, const std::string& name);

/// Runs, in order: Sigma injectivity, Ker chi = Im Sigma, realizability
/// versus class zero, multiplicativity of T, invariance of chi under the
/// twist action, the Galois audits (Galois types only) and the nonzero
/// obstruction search. Batteries run concurrently; the report lists them in
/// this order.
AuditReport run_sequence_audit(const AuditConfig& cfg);

struct SearchOutcome {
  std::uint64_t candidates = 0;
  std::uint64_t valid_characters = 0;
  std::uint64_t nonzero = 0;
  std::vector<std::string> nonzero_witnesses;
  std::vector<CheckResult> checks;
};

/// Random collective characters of G in {Z/2, Z/2 x Z/2, Z/4} (trivial
/// action on K) over small K-central algebras, built from inner
/// automorphisms and tensor-factor flips; counts nonzero obstruction
/// classes. Runs exactly `budget` candidates.
SearchOutcome nonzero_obstruction_search(const RingPtr& k, std::uint64_t budget, std::uint64_t seed);

/// Report as JSON: numbers as decimal strings, check-level "verdict",
/// battery and report-level "status", wall-clock times only under the
/// top-level "timing" object.
nlohmann::json report_to_json(const AuditReport& report);

}  // namespace cliffordsys
