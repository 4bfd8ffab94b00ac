#include "f2alg/gf2.hpp"

namespace f2alg {

Mat2 inverse(Mat2 x) {
  if (det(x) == 0) throw SingularMatrixError();
  // det == 1, so the inverse is the adjugate; signs vanish mod 2.
  return {x.d, x.b, x.c, x.a};
}

const std::array<Mat2, 6>& gl2_elements() {
  static const std::array<Mat2, 6> elems = [] {
    std::array<Mat2, 6> out{};
    std::size_t n = 0;
    for (unsigned code = 0; code < 16; ++code) {
      Mat2 m = Mat2::from_code(code);
      if (det(m) == 1) out[n++] = m;
    }
    return out;
  }();
  return elems;
}

int rank_4x2(std::uint8_t col_e, std::uint8_t col_f) {
  // Rows as 2-bit values, high bit = e-column.
  std::uint8_t rows[4];
  for (int i = 0; i < 4; ++i) {
    rows[i] = std::uint8_t(((col_e >> i) & 1) << 1 | ((col_f >> i) & 1));
  }
  int rank = 0;
  for (std::uint8_t pivot_mask : {std::uint8_t(2), std::uint8_t(1)}) {
    for (int i = rank; i < 4; ++i) {
      if (rows[i] & pivot_mask) {
        std::swap(rows[rank], rows[i]);
        for (int j = 0; j < 4; ++j) {
          if (j != rank && (rows[j] & pivot_mask)) rows[j] ^= rows[rank];
        }
        ++rank;
        break;
      }
    }
  }
  return rank;
}

}  // namespace f2alg
