#pragma once

// Named catalog of two-dimensional GF(2) algebras and the text grammar for
// algebra literals.
//
// Literal forms accepted by parse_algebra:
//   C(a,b,c,d;eps,delta)                    curled-shape parameters
//   S(p,q,a,b,c,d)                          straight normal form
//   M[[a1,b1],[a2,b2],[a3,b3],[a4,b4]]      full structure matrix
//   #NN                                     decimal packed code, 0..255
//   a catalog name, e.g. C_12', S'_3, ECS2_7
//
// All scalars are 0/1; whitespace between tokens is ignored.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "f2alg/structure.hpp"

namespace f2alg {

struct CatalogEntry {
  std::string_view name;
  std::uint8_t code;
};

// Every named algebra: the C family, the S and S' families, then the class
// names ECC2_0..7 and ECS2_1..13 (aliases of their defining members).
std::span<const CatalogEntry> catalog();

// The 21 class representatives, keyed by class name ECC2_* / ECS2_*.
std::span<const CatalogEntry> ec_class_representatives();

Algebra catalog_lookup(std::string_view name);  // throws UnknownNameError

Algebra parse_algebra(std::string_view literal);  // throws ParseError / UnknownNameError

// Canonical literal printer, M[[...],...] form; parse_algebra inverts it.
std::string to_literal(StructureMatrix m);

}  // namespace f2alg
