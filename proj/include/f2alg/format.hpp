#pragma once

// Rendering of reports as text, JSON, or CSV. All renderers return a full
// document ending in a single newline; identical input gives identical
// bytes.

#include <optional>
#include <string>
#include <string_view>

#include "f2alg/classify.hpp"

namespace f2alg {

enum class OutputFormat { Text, Json, Csv };

OutputFormat parse_format(std::string_view name);  // throws ParseError

// Everything `check` prints about one algebra.
struct CheckReport {
  std::string input;
  std::uint8_t code = 0;
  ClassProperties properties;
  bool straight = false;
  std::optional<Vec2> unit;
  bool anticommutative = false;
  bool square_rootable = false;
  int rank = 0;
  std::uint8_t canonical_code = 0;
  std::optional<std::string> class_name;
};

CheckReport make_check_report(std::string input, const Algebra& alg);

std::string render_check(const CheckReport& r, OutputFormat fmt);
std::string render_report(const ClassificationReport& r, OutputFormat fmt);
std::string render_table(std::string_view name, const Algebra& alg, OutputFormat fmt);
std::string render_catalog(OutputFormat fmt);
std::string render_canon(const Algebra& alg, OutputFormat fmt);

// "X=[[a,b],[c,d]]"
std::string render_witness(Mat2 x);

}  // namespace f2alg
