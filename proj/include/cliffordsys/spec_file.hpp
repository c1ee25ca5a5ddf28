#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cliffordsys/galois.hpp"
#include "cliffordsys/graded.hpp"

namespace cliffordsys {

/// One `key = value` line. Keys made of digits and commas are table
/// entries (a group tuple or an index pair).
struct SpecEntry {
  std::string key;
  std::string value;
  int line = 0;
};

/// `[name]` or `[name:label]`.
struct SpecSection {
  std::string name;
  std::string label;
  int line = 0;
  std::vector<SpecEntry> entries;

  const SpecEntry* find(std::string_view key) const;
  /// ParseError at the section header when missing.
  const SpecEntry& require(std::string_view key) const;
  /// Entries whose key is a tuple of integers, in file order.
  std::vector<const SpecEntry*> table() const;
};

/// Parsed spec file. All failures, including semantic ones such as an
/// out-of-range element, are Error(ParseError) whose witness is the line
/// number and whose message says what was expected.
class SpecFile {
 public:
  static SpecFile parse(std::string_view text);
  /// InvalidArgument when the file cannot be read.
  static SpecFile load(const std::string& path);

  const std::vector<SpecSection>& sections() const noexcept { return sections_; }
  const SpecSection* section(std::string_view name, std::string_view label = {}) const;
  bool has(std::string_view name) const { return section(name) != nullptr; }

  /// [group] kind = cyclic | dihedral | product | table.
  FiniteGroup group() const;
  /// [ring] kind = mod | field | product.
  RingPtr ring() const;
  /// [action] kind = trivial | frobenius | images; trivial when absent.
  UnitModulePtr type() const;
  /// [cocycle] or [cocycle:label]; unlisted tuples take the value 1.
  Cochain cocycle(std::string_view label = {}) const;
  /// [algebra] kind = base | matrix | group | constants; the base ring when
  /// the section is absent.
  AlgebraPtr algebra() const;
  /// [character] over algebra() and type().
  CollectiveCharacter character() const;
  /// [crossed] over algebra() and type().
  CrossedProduct crossed() const;
  /// [grading] degrees = one per basis element of algebra().
  std::vector<int> grading() const;
  /// [galois] p, poly, n, or q and n with the built-in polynomial table.
  GaloisSetup galois() const;

 private:
  std::vector<SpecSection> sections_;
  int last_line_ = 1;
};

struct GaloisParams {
  long p = 0;
  Poly poly;
  int n = 0;
};

/// Defining polynomials used when a Galois setup names only (q, n):
/// (2,2) x^2+x+1, (3,2) x^2+1, (2,3) x^3+x+1, (2,4) x^4+x+1, (3,3) x^3+2x+1,
/// (5,2) x^2+2.
std::optional<GaloisParams> default_galois_params(long q, int n);

}  // namespace cliffordsys
