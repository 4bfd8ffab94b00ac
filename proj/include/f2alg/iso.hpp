#pragma once

// Isomorphism of two-dimensional GF(2) algebras as an action of GL2(F2) on
// structure matrices: A' = tilde(X^-1) * A * X. Witnesses are the
// transformation matrices X themselves.

#include <cstdint>
#include <optional>
#include <vector>

#include "f2alg/structure.hpp"

namespace f2alg {

// Image of A under the base change X. Throws SingularMatrixError unless
// det(X) == 1.
StructureMatrix transform(StructureMatrix a, Mat2 x);

// First X in gl2_elements() order with transform(a, X) == b, if any.
std::optional<Mat2> isomorphism_witness(StructureMatrix a, StructureMatrix b);

// All witnesses, in gl2_elements() order.
std::vector<Mat2> all_witnesses(StructureMatrix a, StructureMatrix b);

inline bool are_isomorphic(StructureMatrix a, StructureMatrix b) {
  return isomorphism_witness(a, b).has_value();
}

// One isomorphism class: the codes reachable from a member under the
// action. Non-empty, ascending, closed under every X in GL2.
struct Orbit {
  std::vector<std::uint8_t> members;

  std::uint8_t canonical() const { return members.front(); }
  bool contains(std::uint8_t code) const;
};

Orbit orbit_of(StructureMatrix a);

// Minimal packed code in the orbit; idempotent and constant on orbits.
StructureMatrix canonical_form(StructureMatrix a);

}  // namespace f2alg
