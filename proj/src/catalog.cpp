#include "f2alg/catalog.hpp"

#include <cctype>
#include <vector>

namespace f2alg {

namespace {

constexpr std::uint8_t C(Bit a, Bit b, Bit c, Bit d, Bit eps, Bit delta) {
  return CurledParams{a, b, c, d, eps, delta}.matrix().code();
}

constexpr std::uint8_t S(Bit p, Bit q, Bit a, Bit b, Bit c, Bit d) {
  return StraightParams{p, q, a, b, c, d}.matrix().code();
}

constexpr CatalogEntry kCurled[] = {
    {"C_0", C(0, 0, 0, 0, 0, 0)},   {"C_1", C(0, 1, 0, 1, 0, 0)},
    {"C_1'", C(1, 0, 1, 0, 0, 0)},  {"C_1''", C(1, 1, 1, 1, 0, 0)},
    {"C_2", C(0, 1, 1, 0, 0, 0)},   {"C_3", C(1, 0, 0, 1, 0, 0)},
    {"C_4", C(0, 1, 0, 0, 1, 0)},   {"C_5", C(1, 1, 0, 1, 1, 0)},
    {"C_6", C(0, 1, 1, 1, 1, 0)},   {"C_7", C(0, 0, 0, 1, 1, 0)},
    {"C_8", C(1, 1, 1, 0, 0, 1)},   {"C_9", C(1, 0, 1, 1, 0, 1)},
    {"C_10", C(0, 0, 1, 0, 0, 1)},  {"C_11", C(1, 0, 0, 0, 0, 1)},
    {"C_12", C(0, 0, 0, 0, 1, 1)},  {"C_12'", C(0, 1, 0, 1, 1, 1)},
    {"C_12''", C(1, 0, 1, 0, 1, 1)}, {"C_13", C(1, 1, 1, 1, 1, 1)},
    {"C_14", C(0, 1, 1, 0, 1, 1)},  {"C_15", C(1, 0, 0, 1, 1, 1)},
};

constexpr CatalogEntry kStraight[] = {
    {"S_1", S(0, 0, 0, 0, 0, 1)},  {"S_2", S(0, 0, 0, 1, 0, 0)},
    {"S_3", S(0, 1, 1, 1, 1, 0)},  {"S_4", S(0, 1, 1, 0, 1, 1)},
    {"S_5", S(1, 1, 1, 0, 1, 0)},  {"S_6", S(1, 0, 0, 0, 0, 0)},
    {"S_7", S(1, 0, 1, 1, 1, 1)},  {"S_8", S(0, 0, 0, 0, 0, 0)},
    {"S_9", S(0, 0, 0, 1, 0, 1)},  {"S_10", S(0, 1, 0, 1, 0, 1)},
    {"S_11", S(0, 1, 1, 0, 1, 0)}, {"S_12", S(1, 0, 0, 1, 1, 0)},
    {"S_13", S(1, 0, 1, 0, 0, 1)},
};

constexpr CatalogEntry kStraightPrimed[] = {
    {"S'_1", S(0, 0, 1, 0, 1, 0)}, {"S'_2", S(0, 0, 1, 1, 1, 1)},
    {"S'_3", S(0, 1, 0, 0, 0, 0)}, {"S'_4", S(0, 1, 1, 1, 1, 1)},
    {"S'_5", S(1, 0, 0, 1, 0, 1)}, {"S'_6", S(1, 0, 1, 0, 1, 0)},
    {"S'_7", S(1, 1, 0, 0, 0, 0)}, {"S'_8", S(1, 1, 0, 1, 0, 1)},
    {"S'_9", S(1, 1, 1, 1, 1, 1)}, {"S'_10", S(0, 1, 1, 0, 1, 0)},
};

// Class representatives: each EC class is named after one member.
constexpr CatalogEntry kClassReps[] = {
    {"ECC2_0", C(0, 0, 0, 0, 0, 0)}, {"ECC2_1", C(0, 1, 0, 1, 0, 0)},
    {"ECC2_2", C(0, 1, 1, 0, 0, 0)}, {"ECC2_3", C(1, 0, 0, 1, 0, 0)},
    {"ECC2_4", C(0, 1, 0, 0, 1, 0)}, {"ECC2_5", C(0, 0, 0, 1, 1, 0)},
    {"ECC2_6", C(0, 0, 0, 0, 1, 1)}, {"ECC2_7", C(1, 1, 1, 1, 1, 1)},
    {"ECS2_1", S(0, 0, 0, 0, 0, 1)},  {"ECS2_2", S(0, 0, 0, 1, 0, 0)},
    {"ECS2_3", S(0, 1, 1, 1, 1, 0)},  {"ECS2_4", S(0, 1, 1, 0, 1, 1)},
    {"ECS2_5", S(1, 1, 1, 0, 1, 0)},  {"ECS2_6", S(1, 0, 0, 0, 0, 0)},
    {"ECS2_7", S(1, 0, 1, 1, 1, 1)},  {"ECS2_8", S(0, 0, 0, 0, 0, 0)},
    {"ECS2_9", S(0, 0, 0, 1, 0, 1)},  {"ECS2_10", S(0, 1, 0, 1, 0, 1)},
    {"ECS2_11", S(0, 1, 1, 0, 1, 0)}, {"ECS2_12", S(1, 0, 0, 1, 1, 0)},
    {"ECS2_13", S(1, 0, 1, 0, 0, 1)},
};

const std::vector<CatalogEntry>& full_catalog() {
  static const std::vector<CatalogEntry> all = [] {
    std::vector<CatalogEntry> v;
    v.insert(v.end(), std::begin(kCurled), std::end(kCurled));
    v.insert(v.end(), std::begin(kStraight), std::end(kStraight));
    v.insert(v.end(), std::begin(kStraightPrimed), std::end(kStraightPrimed));
    v.insert(v.end(), std::begin(kClassReps), std::end(kClassReps));
    return v;
  }();
  return all;
}

struct Scanner {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    }
  }
  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }
  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c) {
      throw ParseError(std::string("expected '") + c + "' in \"" +
                       std::string(s) + "\"");
    }
    ++pos;
  }
  Bit bit() {
    skip_ws();
    if (pos < s.size() && (s[pos] == '0' || s[pos] == '1')) {
      return Bit(s[pos++] - '0');
    }
    throw ParseError("expected 0 or 1 in \"" + std::string(s) + "\"");
  }
  void expect_end() {
    skip_ws();
    if (pos != s.size()) {
      throw ParseError("trailing input in \"" + std::string(s) + "\"");
    }
  }
};

Algebra parse_code(Scanner& sc) {
  sc.expect('#');
  std::size_t start = sc.pos;
  unsigned value = 0;
  while (sc.pos < sc.s.size() &&
         std::isdigit(static_cast<unsigned char>(sc.s[sc.pos]))) {
    value = value * 10 + unsigned(sc.s[sc.pos] - '0');
    if (value > 255) throw ParseError("code out of range in \"" + std::string(sc.s) + "\"");
    ++sc.pos;
  }
  if (sc.pos == start) throw ParseError("expected digits after '#'");
  sc.expect_end();
  return Algebra(StructureMatrix(std::uint8_t(value)));
}

Algebra parse_curled(Scanner& sc) {
  sc.expect('C');
  sc.expect('(');
  CurledParams p;
  p.a = sc.bit();
  sc.expect(',');
  p.b = sc.bit();
  sc.expect(',');
  p.c = sc.bit();
  sc.expect(',');
  p.d = sc.bit();
  sc.expect(';');
  p.eps = sc.bit();
  sc.expect(',');
  p.delta = sc.bit();
  sc.expect(')');
  sc.expect_end();
  return Algebra(p.matrix());
}

Algebra parse_straight(Scanner& sc) {
  sc.expect('S');
  sc.expect('(');
  StraightParams p;
  p.p = sc.bit();
  sc.expect(',');
  p.q = sc.bit();
  sc.expect(',');
  p.a = sc.bit();
  sc.expect(',');
  p.b = sc.bit();
  sc.expect(',');
  p.c = sc.bit();
  sc.expect(',');
  p.d = sc.bit();
  sc.expect(')');
  sc.expect_end();
  return Algebra(p.matrix());
}

Algebra parse_matrix(Scanner& sc) {
  sc.expect('M');
  sc.expect('[');
  Bit v[8];
  for (int i = 0; i < 4; ++i) {
    if (i > 0) sc.expect(',');
    sc.expect('[');
    v[2 * i] = sc.bit();
    sc.expect(',');
    v[2 * i + 1] = sc.bit();
    sc.expect(']');
  }
  sc.expect(']');
  sc.expect_end();
  return Algebra(StructureMatrix::from_rows(v[0], v[1], v[2], v[3], v[4], v[5],
                                            v[6], v[7]));
}

}  // namespace

std::span<const CatalogEntry> catalog() { return full_catalog(); }

std::span<const CatalogEntry> ec_class_representatives() { return kClassReps; }

Algebra catalog_lookup(std::string_view name) {
  for (const CatalogEntry& e : full_catalog()) {
    if (e.name == name) return Algebra(StructureMatrix(e.code));
  }
  throw UnknownNameError(std::string(name));
}

Algebra parse_algebra(std::string_view literal) {
  Scanner sc{literal};
  sc.skip_ws();
  if (sc.pos == sc.s.size()) throw ParseError("empty algebra literal");
  char head = sc.s[sc.pos];
  if (head == '#') return parse_code(sc);
  if (head == 'M' && sc.s.find('[', sc.pos) != std::string_view::npos) {
    return parse_matrix(sc);
  }
  if (head == 'C' || head == 'S') {
    Scanner probe = sc;
    ++probe.pos;
    if (probe.peek('(')) {
      return head == 'C' ? parse_curled(sc) : parse_straight(sc);
    }
  }
  // Otherwise a catalog name; trim outer whitespace and match exactly.
  std::size_t end = sc.s.size();
  while (end > sc.pos && std::isspace(static_cast<unsigned char>(sc.s[end - 1]))) {
    --end;
  }
  return catalog_lookup(sc.s.substr(sc.pos, end - sc.pos));
}

std::string to_literal(StructureMatrix m) {
  std::string out = "M[";
  for (int i = 1; i <= 4; ++i) {
    if (i > 1) out += ',';
    out += '[';
    out += char('0' + m.a(i));
    out += ',';
    out += char('0' + m.b(i));
    out += ']';
  }
  out += ']';
  return out;
}

}  // namespace f2alg
