#include "f2alg/format.hpp"

#include <iomanip>
#include <sstream>

#include "json.hpp"

#include "f2alg/catalog.hpp"

namespace f2alg {

namespace {

using json = nlohmann::ordered_json;

const char* bool_str(bool v) { return v ? "true" : "false"; }
const char* flag_str(bool v) { return v ? "y" : "-"; }

std::string join_codes(const std::vector<std::uint8_t>& codes, char sep) {
  std::string out;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i > 0) out += sep;
    out += std::to_string(int(codes[i]));
  }
  return out;
}

json properties_json(const ClassProperties& p) {
  return json{{"ec", p.ec},
              {"curled", p.curled},
              {"commutative", p.commutative},
              {"associative", p.associative},
              {"unital", p.unital},
              {"zeropotent", p.zeropotent}};
}

std::array<std::string_view, 4> table_of(const Algebra& alg) {
  return multiplication_table(alg);
}

}  // namespace

OutputFormat parse_format(std::string_view name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  throw ParseError("unknown output format: " + std::string(name));
}

CheckReport make_check_report(std::string input, const Algebra& alg) {
  CheckReport r;
  r.input = std::move(input);
  r.code = alg.code();
  r.properties = properties_of(alg);
  r.straight = is_straight(alg);
  r.unit = unit_element(alg);
  r.anticommutative = is_anticommutative(alg);
  r.square_rootable = is_square_rootable(alg);
  r.rank = alg.structure().rank();

  Orbit orbit = orbit_of(alg.structure());
  r.canonical_code = orbit.canonical();
  for (const CatalogEntry& rep : ec_class_representatives()) {
    if (orbit.contains(rep.code)) {
      r.class_name = std::string(rep.name);
      break;
    }
  }
  return r;
}

std::string render_check(const CheckReport& r, OutputFormat fmt) {
  const ClassProperties& p = r.properties;
  switch (fmt) {
    case OutputFormat::Text: {
      std::ostringstream os;
      os << "input: " << r.input << '\n';
      os << "code: " << int(r.code) << '\n';
      os << "matrix: " << to_literal(StructureMatrix(r.code)) << '\n';
      os << "ec: " << bool_str(p.ec) << '\n';
      os << "curled: " << bool_str(p.curled) << '\n';
      os << "straight: " << bool_str(r.straight) << '\n';
      os << "commutative: " << bool_str(p.commutative) << '\n';
      os << "associative: " << bool_str(p.associative) << '\n';
      os << "unital: " << bool_str(p.unital) << '\n';
      if (r.unit) os << "unit: " << element_name(*r.unit) << '\n';
      os << "zeropotent: " << bool_str(p.zeropotent) << '\n';
      os << "anticommutative: " << bool_str(r.anticommutative) << '\n';
      os << "square_rootable: " << bool_str(r.square_rootable) << '\n';
      os << "rank: " << r.rank << '\n';
      os << "canonical_code: " << int(r.canonical_code) << '\n';
      os << "paper_name: " << (r.class_name ? *r.class_name : "-") << '\n';
      return os.str();
    }
    case OutputFormat::Json: {
      json j{{"input", r.input},
             {"code", r.code},
             {"matrix", to_literal(StructureMatrix(r.code))},
             {"ec", p.ec},
             {"curled", p.curled},
             {"straight", r.straight},
             {"commutative", p.commutative},
             {"associative", p.associative},
             {"unital", p.unital},
             {"unit", r.unit ? json(std::string(element_name(*r.unit))) : json(nullptr)},
             {"zeropotent", p.zeropotent},
             {"anticommutative", r.anticommutative},
             {"square_rootable", r.square_rootable},
             {"rank", r.rank},
             {"canonical_code", r.canonical_code},
             {"paper_name", r.class_name ? json(*r.class_name) : json(nullptr)}};
      return j.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << "input,code,ec,curled,straight,commutative,associative,unital,"
            "unit,zeropotent,anticommutative,square_rootable,rank,"
            "canonical_code,paper_name\n";
      os << r.input << ',' << int(r.code) << ',' << bool_str(p.ec) << ','
         << bool_str(p.curled) << ',' << bool_str(r.straight) << ','
         << bool_str(p.commutative) << ',' << bool_str(p.associative) << ','
         << bool_str(p.unital) << ',' << (r.unit ? element_name(*r.unit) : "")
         << ',' << bool_str(p.zeropotent) << ',' << bool_str(r.anticommutative)
         << ',' << bool_str(r.square_rootable) << ',' << r.rank << ','
         << int(r.canonical_code) << ','
         << (r.class_name ? *r.class_name : "") << '\n';
      return os.str();
    }
  }
  return {};
}

std::string render_report(const ClassificationReport& r, OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Text: {
      std::ostringstream os;
      os << "family: " << r.family << '\n';
      os << "classes: " << r.classes.size() << '\n';
      os << "canonical  name      size  rank  ec  cur  com  ass  uni  zer  members\n";
      for (const ClassEntry& c : r.classes) {
        const ClassProperties& p = c.properties;
        os << std::setw(9) << int(c.canonical_code) << "  " << std::left
           << std::setw(8) << c.label() << std::right << "  " << std::setw(4)
           << c.size() << "  " << std::setw(4) << c.rank << "   "
           << flag_str(p.ec) << "    " << flag_str(p.curled) << "    "
           << flag_str(p.commutative) << "    " << flag_str(p.associative)
           << "    " << flag_str(p.unital) << "    " << flag_str(p.zeropotent)
           << "  " << join_codes(c.members, ',') << '\n';
      }
      return os.str();
    }
    case OutputFormat::Json: {
      json classes = json::array();
      for (const ClassEntry& c : r.classes) {
        classes.push_back(
            json{{"canonical_code", c.canonical_code},
                 {"paper_name", c.class_name ? json(*c.class_name) : json(nullptr)},
                 {"members", c.members},
                 {"size", c.size()},
                 {"rank", c.rank},
                 {"properties", properties_json(c.properties)}});
      }
      json j{{"family", r.family}, {"classes", classes}};
      return j.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << "canonical_code,paper_name,size,rank,ec,curled,commutative,"
            "associative,unital,zeropotent,members\n";
      for (const ClassEntry& c : r.classes) {
        const ClassProperties& p = c.properties;
        os << int(c.canonical_code) << ','
           << (c.class_name ? *c.class_name : "") << ',' << c.size() << ','
           << c.rank << ',' << bool_str(p.ec) << ',' << bool_str(p.curled)
           << ',' << bool_str(p.commutative) << ',' << bool_str(p.associative)
           << ',' << bool_str(p.unital) << ',' << bool_str(p.zeropotent) << ','
           << join_codes(c.members, ';') << '\n';
      }
      return os.str();
    }
  }
  return {};
}

std::string render_table(std::string_view name, const Algebra& alg,
                         OutputFormat fmt) {
  auto t = table_of(alg);  // e*e, e*f, f*e, f*f
  switch (fmt) {
    case OutputFormat::Text: {
      std::ostringstream os;
      os << '[' << t[0] << ", " << t[1] << "]\n";
      os << '[' << t[2] << ", " << t[3] << "]\n";
      return os.str();
    }
    case OutputFormat::Json: {
      json j{{"name", std::string(name)},
             {"code", alg.code()},
             {"table", json::array({json::array({t[0], t[1]}),
                                    json::array({t[2], t[3]})})}};
      return j.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << t[0] << ',' << t[1] << '\n' << t[2] << ',' << t[3] << '\n';
      return os.str();
    }
  }
  return {};
}

std::string render_catalog(OutputFormat fmt) {
  switch (fmt) {
    case OutputFormat::Text: {
      std::ostringstream os;
      for (const CatalogEntry& e : catalog()) {
        os << std::left << std::setw(8) << e.name << std::right << "  #"
           << std::left << std::setw(4) << int(e.code) << std::right << "  "
           << to_literal(StructureMatrix(e.code)) << '\n';
      }
      return os.str();
    }
    case OutputFormat::Json: {
      json j = json::array();
      for (const CatalogEntry& e : catalog()) {
        j.push_back(json{{"name", std::string(e.name)},
                         {"code", e.code},
                         {"literal", to_literal(StructureMatrix(e.code))}});
      }
      return j.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << "name,code,literal\n";
      for (const CatalogEntry& e : catalog()) {
        os << e.name << ',' << int(e.code) << ','
           << to_literal(StructureMatrix(e.code)) << '\n';
      }
      return os.str();
    }
  }
  return {};
}

std::string render_canon(const Algebra& alg, OutputFormat fmt) {
  Orbit orbit = orbit_of(alg.structure());
  std::uint8_t canon = orbit.canonical();
  std::optional<std::string> name;
  for (const CatalogEntry& rep : ec_class_representatives()) {
    if (orbit.contains(rep.code)) {
      name = std::string(rep.name);
      break;
    }
  }
  switch (fmt) {
    case OutputFormat::Text: {
      std::ostringstream os;
      os << "canonical_code: " << int(canon) << '\n';
      os << "representative: " << to_literal(StructureMatrix(canon)) << '\n';
      os << "paper_name: " << (name ? *name : "-") << '\n';
      return os.str();
    }
    case OutputFormat::Json: {
      json j{{"canonical_code", canon},
             {"representative", to_literal(StructureMatrix(canon))},
             {"paper_name", name ? json(*name) : json(nullptr)}};
      return j.dump(2) + "\n";
    }
    case OutputFormat::Csv: {
      std::ostringstream os;
      os << "canonical_code,representative,paper_name\n";
      os << int(canon) << ',' << to_literal(StructureMatrix(canon)) << ','
         << (name ? *name : "") << '\n';
      return os.str();
    }
  }
  return {};
}

std::string render_witness(Mat2 x) {
  std::ostringstream os;
  os << "X=[[" << int(x.a) << ',' << int(x.b) << "],[" << int(x.c) << ','
     << int(x.d) << "]]";
  return os.str();
}

}  // namespace f2alg
