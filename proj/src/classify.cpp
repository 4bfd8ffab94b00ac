#include "f2alg/classify.hpp"

#include <algorithm>
#include <array>

#include "f2alg/catalog.hpp"

namespace f2alg {

namespace {

constexpr std::array<std::string_view, 4> kFamilyNames = {
    "ec-curled", "ec-straight-normalized", "ec-all", "all"};

bool is_normalized_straight(StructureMatrix m) {
  return m.a(1) == 0 && m.b(1) == 1;  // first row (0,1), i.e. e^2 = f
}

}  // namespace

std::span<const std::string_view> family_names() { return kFamilyNames; }

std::string_view family_name(Family f) {
  return kFamilyNames[static_cast<std::size_t>(f)];
}

Family parse_family(std::string_view name) {
  for (std::size_t i = 0; i < kFamilyNames.size(); ++i) {
    if (kFamilyNames[i] == name) return static_cast<Family>(i);
  }
  throw UnknownFilterError(std::string(name));
}

std::vector<StructureMatrix> enumerate_all() {
  std::vector<StructureMatrix> out;
  out.reserve(256);
  for (unsigned code = 0; code < 256; ++code) {
    out.emplace_back(std::uint8_t(code));
  }
  return out;
}

bool family_contains(Family f, StructureMatrix m) {
  Algebra alg(m);
  switch (f) {
    case Family::EcCurled:
      return is_curled(alg) && is_endo_commutative(alg);
    case Family::EcStraightNormalized:
      return is_normalized_straight(m) && is_endo_commutative(alg);
    case Family::EcAll:
      return is_endo_commutative(alg);
    case Family::All:
      return true;
  }
  return false;
}

ClassProperties properties_of(const Algebra& alg) {
  return {is_endo_commutative(alg), is_curled(alg), is_commutative(alg),
          is_associative(alg),      is_unital(alg), is_zeropotent(alg)};
}

std::string ClassEntry::label() const {
  if (class_name) return *class_name;
  return "#" + std::to_string(int(canonical_code));
}

ClassificationReport classify(Family f) {
  ClassificationReport report;
  report.family = std::string(family_name(f));

  std::array<bool, 256> assigned{};
  for (StructureMatrix m : enumerate_all()) {
    if (assigned[m.code()] || !family_contains(f, m)) continue;

    Orbit orbit = orbit_of(m);
    ClassEntry entry;
    entry.canonical_code = orbit.canonical();
    for (std::uint8_t code : orbit.members) {
      if (family_contains(f, StructureMatrix(code))) {
        entry.members.push_back(code);
        assigned[code] = true;
      }
    }
    for (const CatalogEntry& rep : ec_class_representatives()) {
      if (orbit.contains(rep.code)) {
        entry.class_name = std::string(rep.name);
        break;
      }
    }
    StructureMatrix canon(entry.canonical_code);
    entry.rank = canon.rank();
    entry.properties = properties_of(Algebra(canon));
    report.classes.push_back(std::move(entry));
  }

  std::sort(report.classes.begin(), report.classes.end(),
            [](const ClassEntry& x, const ClassEntry& y) {
              return x.canonical_code < y.canonical_code;
            });
  return report;
}

ClassificationReport classify(std::string_view family) {
  return classify(parse_family(family));
}

std::vector<BreakdownRow> property_breakdown(Family f) {
  std::vector<BreakdownRow> rows;
  for (const ClassEntry& c : classify(f).classes) {
    rows.push_back({c.label(), c.rank, c.properties});
  }
  return rows;
}

std::vector<std::string> purely_ec_class_names() {
  std::vector<std::string> names;
  for (const ClassEntry& c : classify(Family::EcAll).classes) {
    const ClassProperties& p = c.properties;
    if (p.ec && !p.zeropotent && !p.unital && !p.commutative && !p.associative) {
      names.push_back(c.label());
    }
  }
  return names;
}

}  // namespace f2alg
