#pragma once

// Exhaustive classification of structure matrices into isomorphism classes.
//
// A family narrows the 256 codes before partitioning:
//   ec-curled                  curled and endo-commutative
//   ec-straight-normalized     e^2 = f normal form (codes with first row
//                              (0,1)) and endo-commutative
//   ec-all                     endo-commutative
//   all                        every code
//
// Classes are orbits intersected with the family, keyed by the minimal
// code of the full orbit and ordered by it. A class carries a name when
// its orbit contains one of the named representatives (ECC2_*, ECS2_*).

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "f2alg/iso.hpp"
#include "f2alg/structure.hpp"

namespace f2alg {

enum class Family { EcCurled, EcStraightNormalized, EcAll, All };

std::span<const std::string_view> family_names();
std::string_view family_name(Family f);
Family parse_family(std::string_view name);  // throws UnknownFilterError

// All 256 structure matrices, codes ascending.
std::vector<StructureMatrix> enumerate_all();

bool family_contains(Family f, StructureMatrix m);

struct ClassProperties {
  bool ec = false;
  bool curled = false;
  bool commutative = false;
  bool associative = false;
  bool unital = false;
  bool zeropotent = false;

  friend bool operator==(const ClassProperties&, const ClassProperties&) = default;
};

ClassProperties properties_of(const Algebra& alg);

struct ClassEntry {
  std::uint8_t canonical_code = 0;        // minimal code of the full orbit
  std::optional<std::string> class_name;  // ECC2_* / ECS2_* when applicable
  std::vector<std::uint8_t> members;      // family members, ascending
  int rank = 0;
  ClassProperties properties;

  std::size_t size() const { return members.size(); }
  // class_name, or "#<canonical_code>" for unnamed classes.
  std::string label() const;

  friend bool operator==(const ClassEntry&, const ClassEntry&) = default;
};

struct ClassificationReport {
  std::string family;
  std::vector<ClassEntry> classes;  // canonical_code ascending

  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

ClassificationReport classify(Family f);
ClassificationReport classify(std::string_view family);  // throws UnknownFilterError

struct BreakdownRow {
  std::string label;
  int rank = 0;
  ClassProperties properties;
};

// Per-class property flags for a family, ordered like the report.
std::vector<BreakdownRow> property_breakdown(Family f);

// Names of the EC classes that are neither zeropotent, unital, commutative
// nor associative, in report order.
std::vector<std::string> purely_ec_class_names();

}  // namespace f2alg
