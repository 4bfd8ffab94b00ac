#include "f2alg/iso.hpp"

#include <algorithm>

namespace f2alg {

StructureMatrix transform(StructureMatrix a, Mat2 x) {
  Mat4 lift = tilde(inverse(x));  // throws on singular x
  // Right-multiply the 4x2 matrix by x, column-wise.
  std::uint8_t ce = a.col_e(), cf = a.col_f();
  std::uint8_t re = std::uint8_t((x.a ? ce : 0) ^ (x.c ? cf : 0));
  std::uint8_t rf = std::uint8_t((x.b ? ce : 0) ^ (x.d ? cf : 0));
  return StructureMatrix::from_cols(lift.apply(re), lift.apply(rf));
}

std::optional<Mat2> isomorphism_witness(StructureMatrix a, StructureMatrix b) {
  for (Mat2 x : gl2_elements()) {
    if (transform(a, x) == b) return x;
  }
  return std::nullopt;
}

std::vector<Mat2> all_witnesses(StructureMatrix a, StructureMatrix b) {
  std::vector<Mat2> out;
  for (Mat2 x : gl2_elements()) {
    if (transform(a, x) == b) out.push_back(x);
  }
  return out;
}

bool Orbit::contains(std::uint8_t code) const {
  return std::binary_search(members.begin(), members.end(), code);
}

Orbit orbit_of(StructureMatrix a) {
  Orbit o;
  for (Mat2 x : gl2_elements()) {
    std::uint8_t code = transform(a, x).code();
    if (std::find(o.members.begin(), o.members.end(), code) == o.members.end()) {
      o.members.push_back(code);
    }
  }
  std::sort(o.members.begin(), o.members.end());
  return o;
}

StructureMatrix canonical_form(StructureMatrix a) {
  return StructureMatrix(orbit_of(a).canonical());
}

}  // namespace f2alg
