#pragma once

// Two-dimensional GF(2) algebras presented by structure matrices.
//
// A structure matrix lists the coefficients of the four basis products in
// the basis {e, f}:
//
//     e^2 = a1*e + b1*f
//     f^2 = a2*e + b2*f
//     e*f = a3*e + b3*f
//     f*e = a4*e + b4*f
//
// and packs into one byte as a1 b1 a2 b2 a3 b3 a4 b4 with a1 in the most
// significant bit, so enumerating "all algebras" walks codes 0..255.
//
// Two parameter shapes get first-class types:
//   Curled(a,b,c,d;eps,delta)  -> rows (eps,0), (0,delta), (a,b), (c,d)
//   Straight(p,q,a,b,c,d)      -> rows (0,1),   (p,q),     (a,b), (c,d)
// Every algebra in which all squares are scalar multiples ("curled") has
// the first shape; the second is the e^2 = f normal form for the rest.
//
// Each property below is decided definitionally (exhaustively over the 4
// elements); the *_equations functions are the closed-form criteria in the
// structure constants, kept separate so the two routes can be checked
// against each other.

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

#include "f2alg/gf2.hpp"

namespace f2alg {

class StructureMatrix {
 public:
  constexpr StructureMatrix() = default;
  constexpr explicit StructureMatrix(std::uint8_t code) : code_(code) {}

  static constexpr StructureMatrix from_rows(Bit a1, Bit b1, Bit a2, Bit b2,
                                             Bit a3, Bit b3, Bit a4, Bit b4) {
    return StructureMatrix(std::uint8_t(a1 << 7 | b1 << 6 | a2 << 5 | b2 << 4 |
                                        a3 << 3 | b3 << 2 | a4 << 1 | b4));
  }

  // Columns as 4-bit masks, bit i-1 = coefficient in row i.
  static constexpr StructureMatrix from_cols(std::uint8_t col_e,
                                             std::uint8_t col_f) {
    std::uint8_t code = 0;
    for (int i = 0; i < 4; ++i) {
      code |= std::uint8_t(((col_e >> i) & 1) << (7 - 2 * i));
      code |= std::uint8_t(((col_f >> i) & 1) << (6 - 2 * i));
    }
    return StructureMatrix(code);
  }

  constexpr std::uint8_t code() const { return code_; }

  // Row accessors, i in 1..4 matching the display above.
  constexpr Bit a(int i) const { return Bit((code_ >> (9 - 2 * i)) & 1); }
  constexpr Bit b(int i) const { return Bit((code_ >> (8 - 2 * i)) & 1); }

  constexpr std::uint8_t col_e() const {
    return std::uint8_t(a(1) | a(2) << 1 | a(3) << 2 | a(4) << 3);
  }
  constexpr std::uint8_t col_f() const {
    return std::uint8_t(b(1) | b(2) << 1 | b(3) << 2 | b(4) << 3);
  }

  int rank() const { return rank_4x2(col_e(), col_f()); }

  friend constexpr bool operator==(StructureMatrix, StructureMatrix) = default;
  friend constexpr auto operator<=>(StructureMatrix, StructureMatrix) = default;

 private:
  std::uint8_t code_ = 0;
};

struct CurledParams {
  Bit a = 0, b = 0, c = 0, d = 0, eps = 0, delta = 0;

  constexpr StructureMatrix matrix() const {
    return StructureMatrix::from_rows(eps, 0, 0, delta, a, b, c, d);
  }
};

struct StraightParams {
  Bit p = 0, q = 0, a = 0, b = 0, c = 0, d = 0;

  constexpr StructureMatrix matrix() const {
    return StructureMatrix::from_rows(0, 1, p, q, a, b, c, d);
  }
};

// The algebra itself: the unique bilinear multiplication extending the four
// basis products recorded in the structure matrix.
class Algebra {
 public:
  constexpr explicit Algebra(StructureMatrix sm) : sm_(sm) {}

  constexpr const StructureMatrix& structure() const { return sm_; }
  constexpr std::uint8_t code() const { return sm_.code(); }

  constexpr Vec2 multiply(Vec2 x, Vec2 y) const {
    const StructureMatrix& m = sm_;
    Bit e = Bit((x.x1 & y.x1 & m.a(1)) ^ (x.x2 & y.x2 & m.a(2)) ^
                (x.x1 & y.x2 & m.a(3)) ^ (x.x2 & y.x1 & m.a(4)));
    Bit f = Bit((x.x1 & y.x1 & m.b(1)) ^ (x.x2 & y.x2 & m.b(2)) ^
                (x.x1 & y.x2 & m.b(3)) ^ (x.x2 & y.x1 & m.b(4)));
    return {e, f};
  }

  // x^2 through the quadratic form; equal to multiply(x, x).
  constexpr Vec2 square(Vec2 x) const {
    const StructureMatrix& m = sm_;
    Bit cross = Bit(x.x1 & x.x2);
    Bit e = Bit((x.x1 & m.a(1)) ^ (x.x2 & m.a(2)) ^ (cross & (m.a(3) ^ m.a(4))));
    Bit f = Bit((x.x1 & m.b(1)) ^ (x.x2 & m.b(2)) ^ (cross & (m.b(3) ^ m.b(4))));
    return {e, f};
  }

  friend constexpr bool operator==(Algebra, Algebra) = default;

 private:
  StructureMatrix sm_;
};

// Definitional predicates, each an exhaustive check over the 4 elements.
bool is_endo_commutative(const Algebra& alg);  // x^2 y^2 == (xy)^2 for all x, y
bool is_commutative(const Algebra& alg);
bool is_associative(const Algebra& alg);
bool is_zeropotent(const Algebra& alg);        // x^2 == 0 for all x
bool is_anticommutative(const Algebra& alg);   // squaring preserves addition
bool is_square_rootable(const Algebra& alg);   // squaring is surjective
bool is_curled(const Algebra& alg);            // x^2 in {0, x} for all x
bool is_straight(const Algebra& alg);

// Two-sided unit, if one exists (checked over all 4 candidates).
std::optional<Vec2> unit_element(const Algebra& alg);
bool is_unital(const Algebra& alg);

// Closed-form criteria in the structure constants.
bool satisfies_ec_equations(StructureMatrix m);          // endo-commutativity
bool curled_condition(const CurledParams& p);            // eps+a+c == delta+b+d
bool curled_ec_equations(const CurledParams& p);         // curled and EC
bool straight_ec_equations(const StraightParams& p);     // EC in normal form
bool straight_associative_equations(const StraightParams& p);
bool straight_unital_equations(const StraightParams& p);

// Entry names "0", "e", "f", "e+f".
std::string_view element_name(Vec2 v);

// Multiplication table entries in the order e*e, e*f, f*e, f*f.
std::array<std::string_view, 4> multiplication_table(const Algebra& alg);

}  // namespace f2alg
