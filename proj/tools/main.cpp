// Command-line front end: algebra property checks, isomorphism decisions
// with witnesses, canonical forms, multiplication tables, and family
// classification reports in text/JSON/CSV.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "f2alg/catalog.hpp"
#include "f2alg/classify.hpp"
#include "f2alg/format.hpp"
#include "f2alg/iso.hpp"

namespace {

using namespace f2alg;

constexpr const char* kUsage = R"(f2alg - two-dimensional algebras over GF(2)

Usage: f2alg <command> [arguments] [flags]

Commands:
  check <algebra>          decide every property of one algebra
  iso <algebra> <algebra>  decide isomorphism; print a transformation matrix
  canon <algebra>          canonical form of the isomorphism class
  classify --family NAME   partition a family into isomorphism classes
  table <algebra>          print the multiplication table on the basis {e,f}
  list                     dump the named catalog

Algebra literals:
  C(a,b,c,d;eps,delta)     curled-shape parameters, scalars 0/1
  S(p,q,a,b,c,d)           straight normal form (e^2 = f)
  M[[a1,b1],[a2,b2],[a3,b3],[a4,b4]]
  #NN                      packed structure-matrix code, decimal 0..255
  a catalog name           e.g. C_2, C_12'', S'_10, ECS2_7

Flags:
  --format FMT, -f FMT     text (default), json, or csv
  --out PATH, -o PATH      write the report to PATH instead of stdout
  --family NAME            ec-curled, ec-straight-normalized, ec-all, or all

Exit codes: 0 success (or isomorphic), 1 not isomorphic, 2 usage or parse error.
)";

struct Options {
  std::vector<std::string> positionals;
  OutputFormat format = OutputFormat::Text;
  std::optional<std::string> out_path;
  std::optional<std::string> family;
};

Options parse_options(const std::vector<std::string>& args) {
  Options opt;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& arg = args[i];
    auto value_of = [&](std::string_view flag) -> std::string {
      if (arg.size() > flag.size() && arg[flag.size()] == '=') {
        return arg.substr(flag.size() + 1);
      }
      if (i + 1 >= args.size()) {
        throw ParseError("flag " + std::string(flag) + " needs a value");
      }
      return args[++i];
    };
    if (arg.rfind("--format", 0) == 0) {
      opt.format = parse_format(value_of("--format"));
    } else if (arg == "-f") {
      opt.format = parse_format(value_of("-f"));
    } else if (arg.rfind("--out", 0) == 0) {
      opt.out_path = value_of("--out");
    } else if (arg == "-o") {
      opt.out_path = value_of("-o");
    } else if (arg.rfind("--family", 0) == 0) {
      opt.family = value_of("--family");
    } else if (!arg.empty() && arg[0] == '-' && arg != "-") {
      throw ParseError("unknown flag: " + arg);
    } else {
      opt.positionals.push_back(arg);
    }
  }
  return opt;
}

void emit(const Options& opt, const std::string& document) {
  if (opt.out_path) {
    std::ofstream out(*opt.out_path, std::ios::binary);
    if (!out) throw Error("cannot open output file: " + *opt.out_path);
    out << document;
  } else {
    std::cout << document;
  }
}

int cmd_check(const Options& opt) {
  if (opt.positionals.size() != 1) {
    throw ParseError("check expects exactly one algebra literal");
  }
  Algebra alg = parse_algebra(opt.positionals[0]);
  emit(opt, render_check(make_check_report(opt.positionals[0], alg), opt.format));
  return 0;
}

int cmd_iso(const Options& opt) {
  if (opt.positionals.size() != 2) {
    throw ParseError("iso expects exactly two algebra literals");
  }
  Algebra a = parse_algebra(opt.positionals[0]);
  Algebra b = parse_algebra(opt.positionals[1]);
  if (auto witness = isomorphism_witness(a.structure(), b.structure())) {
    emit(opt, render_witness(*witness) + "\n");
    return 0;
  }
  emit(opt, "NOT-ISOMORPHIC\n");
  return 1;
}

int cmd_canon(const Options& opt) {
  if (opt.positionals.size() != 1) {
    throw ParseError("canon expects exactly one algebra literal");
  }
  emit(opt, render_canon(parse_algebra(opt.positionals[0]), opt.format));
  return 0;
}

int cmd_classify(const Options& opt) {
  if (!opt.positionals.empty()) {
    throw ParseError("classify takes no positional arguments");
  }
  if (!opt.family) throw ParseError("classify needs --family NAME");
  emit(opt, render_report(classify(parse_family(*opt.family)), opt.format));
  return 0;
}

int cmd_table(const Options& opt) {
  if (opt.positionals.size() != 1) {
    throw ParseError("table expects exactly one algebra name or literal");
  }
  Algebra alg = parse_algebra(opt.positionals[0]);
  emit(opt, render_table(opt.positionals[0], alg, opt.format));
  return 0;
}

int cmd_list(const Options& opt) {
  if (!opt.positionals.empty()) {
    throw ParseError("list takes no positional arguments");
  }
  emit(opt, render_catalog(opt.format));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  if (args.empty()) {
    std::cerr << kUsage;
    return 2;
  }
  const std::string command = args.front();
  if (command == "--help" || command == "-h" || command == "help") {
    std::cout << kUsage;
    return 0;
  }
  try {
    Options opt = parse_options({args.begin() + 1, args.end()});
    if (command == "check") return cmd_check(opt);
    if (command == "iso") return cmd_iso(opt);
    if (command == "canon") return cmd_canon(opt);
    if (command == "classify") return cmd_classify(opt);
    if (command == "table") return cmd_table(opt);
    if (command == "list") return cmd_list(opt);
    std::cerr << "error: unknown command: " << command << "\n\n" << kUsage;
    return 2;
  } catch (const f2alg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
