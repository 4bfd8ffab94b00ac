#pragma once

// Exact linear algebra over GF(2) in the fixed shapes the rest of the
// library needs: packed 2x2 matrices, the 6-element group GL2(F2), the
// induced 4x4 change-of-basis action, and rank of 4x2 matrices.
//
// Scalars live in the low bit of a byte; addition is XOR, multiplication
// is AND. Everything here is a pure function on value types.

#include <array>
#include <bit>
#include <cstdint>

#include "f2alg/errors.hpp"

namespace f2alg {

using Bit = std::uint8_t;  // 0 or 1

// Element x = x1*e + x2*f of the 2-dimensional GF(2) vector space.
struct Vec2 {
  Bit x1 = 0;
  Bit x2 = 0;

  constexpr Vec2 operator+(Vec2 o) const {
    return {Bit(x1 ^ o.x1), Bit(x2 ^ o.x2)};
  }
  constexpr bool is_zero() const { return x1 == 0 && x2 == 0; }
  friend constexpr bool operator==(Vec2, Vec2) = default;

  // The four elements in the fixed iteration order 0, e, f, e+f.
  static constexpr std::array<Vec2, 4> all() {
    return {Vec2{0, 0}, Vec2{1, 0}, Vec2{0, 1}, Vec2{1, 1}};
  }
};

// 2x2 matrix [[a,b],[c,d]]; packs into 4 bits as a*8 + b*4 + c*2 + d.
struct Mat2 {
  Bit a = 0;
  Bit b = 0;
  Bit c = 0;
  Bit d = 0;

  static constexpr Mat2 identity() { return {1, 0, 0, 1}; }
  static constexpr Mat2 from_code(unsigned code) {
    return {Bit((code >> 3) & 1), Bit((code >> 2) & 1), Bit((code >> 1) & 1),
            Bit(code & 1)};
  }
  constexpr unsigned code() const {
    return unsigned(a) << 3 | unsigned(b) << 2 | unsigned(c) << 1 | d;
  }
  friend constexpr bool operator==(Mat2, Mat2) = default;
};

constexpr Bit det(Mat2 x) { return Bit((x.a & x.d) ^ (x.b & x.c)); }

constexpr Mat2 operator*(Mat2 x, Mat2 y) {
  return {Bit((x.a & y.a) ^ (x.b & y.c)), Bit((x.a & y.b) ^ (x.b & y.d)),
          Bit((x.c & y.a) ^ (x.d & y.c)), Bit((x.c & y.b) ^ (x.d & y.d))};
}

// Inverse of an invertible matrix; throws SingularMatrixError when det == 0.
Mat2 inverse(Mat2 x);

// The six invertible 2x2 matrices over GF(2), ascending by packed code.
const std::array<Mat2, 6>& gl2_elements();

// 4x4 matrix over GF(2). Row i is a 4-bit mask with bit j = entry (i,j).
class Mat4 {
 public:
  constexpr Mat4() = default;

  static constexpr Mat4 from_rows(std::array<std::uint8_t, 4> rows) {
    Mat4 m;
    m.rows_ = rows;
    return m;
  }
  static constexpr Mat4 identity() { return from_rows({1, 2, 4, 8}); }

  constexpr Bit at(int i, int j) const { return Bit((rows_[i] >> j) & 1); }
  constexpr std::uint8_t row(int i) const { return rows_[i]; }

  // Matrix-vector product; v and the result carry coordinate i in bit i.
  constexpr std::uint8_t apply(std::uint8_t v) const {
    std::uint8_t out = 0;
    for (int i = 0; i < 4; ++i) {
      out |= std::uint8_t((std::popcount(unsigned(rows_[i] & v)) & 1) << i);
    }
    return out;
  }

  friend constexpr Mat4 operator*(const Mat4& p, const Mat4& q) {
    Mat4 out;
    for (int j = 0; j < 4; ++j) {
      std::uint8_t col = 0;
      for (int k = 0; k < 4; ++k) col |= std::uint8_t(q.at(k, j) << k);
      std::uint8_t pc = p.apply(col);
      for (int i = 0; i < 4; ++i) out.rows_[i] |= std::uint8_t(((pc >> i) & 1) << j);
    }
    return out;
  }
  friend constexpr bool operator==(const Mat4&, const Mat4&) = default;

 private:
  std::array<std::uint8_t, 4> rows_{};
};

// Lift of a 2x2 base change to the 4x4 matrix acting on the stacked
// coefficient rows (e^2, f^2, ef, fe). Defined for every 2x2 matrix; it is
// a group homomorphism GL2 -> GL4 on the invertible ones.
constexpr Mat4 tilde(Mat2 x) {
  auto r = [](Bit c0, Bit c1, Bit c2, Bit c3) {
    return std::uint8_t(c0 | c1 << 1 | c2 << 2 | c3 << 3);
  };
  Bit ab = x.a & x.b, cd = x.c & x.d;
  Bit ac = x.a & x.c, bd = x.b & x.d, ad = x.a & x.d, bc = x.b & x.c;
  return Mat4::from_rows({r(x.a, x.b, ab, ab), r(x.c, x.d, cd, cd),
                          r(ac, bd, ad, bc), r(ac, bd, bc, ad)});
}

// Rank over GF(2) of the 4x2 matrix whose columns arrive as 4-bit masks
// (bit i = row i), by row elimination modulo 2.
int rank_4x2(std::uint8_t col_e, std::uint8_t col_f);

}  // namespace f2alg
