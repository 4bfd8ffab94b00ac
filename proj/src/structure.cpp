#include "f2alg/structure.hpp"

namespace f2alg {

bool is_endo_commutative(const Algebra& alg) {
  for (Vec2 x : Vec2::all()) {
    for (Vec2 y : Vec2::all()) {
      if (alg.multiply(alg.square(x), alg.square(y)) !=
          alg.square(alg.multiply(x, y))) {
        return false;
      }
    }
  }
  return true;
}

bool is_commutative(const Algebra& alg) {
  for (Vec2 x : Vec2::all()) {
    for (Vec2 y : Vec2::all()) {
      if (alg.multiply(x, y) != alg.multiply(y, x)) return false;
    }
  }
  return true;
}

bool is_associative(const Algebra& alg) {
  for (Vec2 x : Vec2::all()) {
    for (Vec2 y : Vec2::all()) {
      for (Vec2 z : Vec2::all()) {
        if (alg.multiply(alg.multiply(x, y), z) !=
            alg.multiply(x, alg.multiply(y, z))) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_zeropotent(const Algebra& alg) {
  for (Vec2 x : Vec2::all()) {
    if (!alg.square(x).is_zero()) return false;
  }
  return true;
}

bool is_anticommutative(const Algebra& alg) {
  for (Vec2 x : Vec2::all()) {
    for (Vec2 y : Vec2::all()) {
      if (alg.square(x + y) != alg.square(x) + alg.square(y)) return false;
    }
  }
  return true;
}

bool is_square_rootable(const Algebra& alg) {
  for (Vec2 y : Vec2::all()) {
    bool hit = false;
    for (Vec2 x : Vec2::all()) {
      if (alg.square(x) == y) {
        hit = true;
        break;
      }
    }
    if (!hit) return false;
  }
  return true;
}

bool is_curled(const Algebra& alg) {
  for (Vec2 x : Vec2::all()) {
    Vec2 sq = alg.square(x);
    if (!sq.is_zero() && sq != x) return false;
  }
  return true;
}

bool is_straight(const Algebra& alg) { return !is_curled(alg); }

std::optional<Vec2> unit_element(const Algebra& alg) {
  for (Vec2 u : Vec2::all()) {
    bool ok = true;
    for (Vec2 x : Vec2::all()) {
      if (alg.multiply(u, x) != x || alg.multiply(x, u) != x) {
        ok = false;
        break;
      }
    }
    if (ok) return u;
  }
  return std::nullopt;
}

bool is_unital(const Algebra& alg) { return unit_element(alg).has_value(); }

bool satisfies_ec_equations(StructureMatrix m) {
  unsigned a1 = m.a(1), b1 = m.b(1), a2 = m.a(2), b2 = m.b(2);
  unsigned a3 = m.a(3), b3 = m.b(3), a4 = m.a(4), b4 = m.b(4);
  unsigned eqs[8] = {
      a1 * a2 + a2 * b1 * b2 + a1 * a3 * b2 + a2 * a4 * b1 + a1 * a3 + a2 * b3 +
          a3 * b3 + a3 * a4 * b3,
      a1 * a2 + a2 * b1 * b2 + a2 * a3 * b1 + a1 * a4 * b2 + a1 * a4 + a2 * b4 +
          a3 * a4 * b4 + a4 * b4,
      a1 * a3 + a1 * a4 + a4 * b1 + a2 * b1 * b3 + a2 * b1 * b4 + a1 * a3 * b4 +
          a3 * b1 + a1 * a4 * b3,
      a1 * a2 * a4 + a2 * a4 * b4 + a2 * b2 * b4 + a1 * a2 * a3 + a2 * b2 * b3 +
          a2 * a3 * b3,
      a1 * a2 * b1 + b1 * b2 + a1 * b2 * b3 + a2 * b1 * b4 + a3 * b1 + b2 * b3 +
          a3 * b3 + a3 * b3 * b4,
      a1 * a2 * b1 + b1 * b2 + a2 * b1 * b3 + a1 * b2 * b4 + a4 * b1 + b2 * b4 +
          a4 * b3 * b4 + a4 * b4,
      a1 * a3 * b1 + a1 * a4 * b1 + a4 * b1 * b4 + b1 * b2 * b3 + b1 * b2 * b4 +
          a3 * b1 * b3,
      a2 * a3 * b1 + a2 * a4 * b1 + a4 * b2 * b3 + b2 * b3 + b2 * b4 + a2 * b4 +
          a2 * b3 + a3 * b2 * b4,
  };
  for (unsigned e : eqs) {
    if (e % 2 != 0) return false;
  }
  return true;
}

bool curled_condition(const CurledParams& p) {
  return (p.eps ^ p.a ^ p.c) == (p.delta ^ p.b ^ p.d);
}

bool curled_ec_equations(const CurledParams& p) {
  unsigned a = p.a, b = p.b, c = p.c, d = p.d, e = p.eps, l = p.delta;
  unsigned eqs[7] = {
      e + l + a + b + c + d,
      a * (e * l + e + b + b * c),
      c * (e * l + e + a * d + d),
      e * (a + c + a * d + b * c),
      b * (e * l + l + a + a * d),
      d * (e * l + l + b * c + c),
      l * (b * c + b + d + a * d),
  };
  for (unsigned q : eqs) {
    if (q % 2 != 0) return false;
  }
  return true;
}

bool straight_ec_equations(const StraightParams& s) {
  unsigned p = s.p, q = s.q, a = s.a, b = s.b, c = s.c, d = s.d;
  unsigned eqs[8] = {
      p * q + p * c + p * b + a * b + a * b * c,
      p * q + p * a + p * d + a * c * d + c * d,
      c + p * b + p * d + a,
      p * c * d + p * q * d + p * q * b + p * a * b,
      q + p * d + a + q * b + a * b + a * b * d,
      q + p * b + c + q * d + b * c * d + c * d,
      c * d + q * b + q * d + a * b,
      p * a + p * c + q * b * c + q * b + q * d + p * d + p * b + q * a * d,
  };
  for (unsigned e : eqs) {
    if (e % 2 != 0) return false;
  }
  return true;
}

bool straight_associative_equations(const StraightParams& s) {
  return s.c == s.a && s.d == s.b && s.p == (s.a & s.b) && s.q == (s.a ^ s.b);
}

bool straight_unital_equations(const StraightParams& s) {
  return s.a == 1 && s.c == 1 && s.p == s.b && s.b == s.d && s.q == (1 ^ s.p);
}

std::string_view element_name(Vec2 v) {
  if (v == Vec2{0, 0}) return "0";
  if (v == Vec2{1, 0}) return "e";
  if (v == Vec2{0, 1}) return "f";
  return "e+f";
}

std::array<std::string_view, 4> multiplication_table(const Algebra& alg) {
  Vec2 e{1, 0}, f{0, 1};
  return {element_name(alg.multiply(e, e)), element_name(alg.multiply(e, f)),
          element_name(alg.multiply(f, e)), element_name(alg.multiply(f, f))};
}

}  // namespace f2alg
