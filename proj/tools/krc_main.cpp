#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "krc/classical.hpp"
#include "krc/io.hpp"
#include "krc/monomial.hpp"
#include "krc/promotion.hpp"
#include "krc/tableaux.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerification = 1;
constexpr int kExitUsage = 2;

struct ShapeFlags {
  int n = 0;
  int m = -1;
  int i = 0;

  bool any() const { return n != 0 || m != -1 || i != 0; }
  krc::CrystalShape resolve() const { return krc::CrystalShape(n, m, i); }
};

void add_shape_flags(CLI::App* cmd, ShapeFlags& flags, bool required) {
  auto* n = cmd->add_option("--n", flags.n, "rank of A_n");
  auto* m = cmd->add_option("--m", flags.m, "level");
  auto* i = cmd->add_option("--i", flags.i, "classical node");
  if (required) {
    n->required();
    m->required();
    i->required();
  }
}

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

krc::Pattern read_pattern(const std::string& path, const ShapeFlags& flags) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_all(path));
  } catch (const nlohmann::json::exception& err) {
    throw std::invalid_argument(std::string("malformed JSON input: ") + err.what());
  }
  krc::Pattern pattern = krc::pattern_from_json(j);
  if (flags.any()) {
    const krc::CrystalShape expected = flags.resolve();
    if (!(pattern.shape() == expected))
      throw std::invalid_argument("input shape disagrees with the --n/--m/--i flags");
  }
  return pattern;
}

void print_pattern(const krc::Pattern& pattern, const std::string& format) {
  if (format == "json")
    std::cout << krc::pattern_to_json(pattern).dump() << '\n';
  else if (format == "text")
    std::cout << krc::pattern_to_text(pattern) << '\n';
  else
    throw std::invalid_argument("unsupported format for patterns: " + format);
}

int run_enumerate(const ShapeFlags& flags, const std::string& format) {
  const auto members = krc::enumerate_patterns(flags.resolve());
  if (format == "json") {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& p : members) list.push_back(krc::pattern_to_json(p));
    std::cout << list.dump() << '\n';
  } else if (format == "text") {
    for (const auto& p : members) std::cout << krc::pattern_to_text(p) << '\n';
  } else {
    throw std::invalid_argument("enumerate supports --format json|text");
  }
  return kExitOk;
}

int run_dim(const ShapeFlags& flags) {
  const auto shape = flags.resolve();
  const krc::Int counted = static_cast<krc::Int>(krc::enumerate_patterns(shape).size());
  const krc::Int predicted = krc::weyl_dimension(shape);
  const bool ok = counted == predicted;
  std::cout << counted << ' ' << predicted << ' ' << (ok ? "OK" : "MISMATCH") << '\n';
  return ok ? kExitOk : kExitVerification;
}

int run_graph(const ShapeFlags& flags, bool affine, const std::string& format) {
  const auto shape = flags.resolve();
  krc::CrystalGraph<krc::Pattern> graph;
  if (affine) {
    graph = krc::build_affine_graph(shape);
  } else {
    krc::PatternCrystal model(shape);
    graph = krc::build_graph(model, {krc::Pattern(shape)});
  }
  if (format == "json")
    std::cout << krc::graph_to_json(graph).dump() << '\n';
  else if (format == "dot")
    std::cout << krc::graph_to_dot(graph);
  else
    throw std::invalid_argument("graph supports --format json|dot");
  return kExitOk;
}

int run_promote(const ShapeFlags& flags, const std::string& input, bool trace,
                const std::string& format) {
  const krc::Pattern pattern = read_pattern(input, flags);
  const auto result = krc::promote(pattern);
  if (trace) std::cout << krc::format_trace(result.trace);
  print_pattern(result.image, format);
  return kExitOk;
}

int run_apply(const ShapeFlags& flags, const std::string& op, const std::string& input,
              const std::string& format) {
  if (op.size() < 2 || (op[0] != 'f' && op[0] != 'e'))
    throw std::invalid_argument("--op expects f<l> or e<l>");
  int label = 0;
  try {
    std::size_t used = 0;
    label = std::stoi(op.substr(1), &used);
    if (used != op.size() - 1) throw std::invalid_argument(op);
  } catch (const std::exception&) {
    throw std::invalid_argument("--op expects f<l> or e<l>");
  }

  const krc::Pattern pattern = read_pattern(input, flags);
  if (label < 0 || label > pattern.shape().n)
    throw std::invalid_argument("operator label out of range for this shape");

  std::optional<krc::Pattern> image;
  if (op[0] == 'f')
    image = label == 0 ? krc::f0(pattern) : krc::f(pattern, label);
  else
    image = label == 0 ? krc::e0(pattern) : krc::e(pattern, label);

  if (!image) {
    std::cout << "none\n";
    return kExitOk;
  }
  print_pattern(*image, format);
  return kExitOk;
}

int run_verify(const ShapeFlags& flags, const std::string& suite) {
  const auto shape = flags.resolve();
  krc::Report report;
  if (suite == "axioms") {
    krc::PatternCrystal model(shape);
    const auto graph = krc::build_graph(model, {krc::Pattern(shape)});
    report = krc::verify_axioms(graph, model);
  } else if (suite == "stembridge") {
    krc::PatternCrystal model(shape);
    const auto graph = krc::build_graph(model, {krc::Pattern(shape)});
    report = krc::verify_stembridge(graph);
  } else if (suite == "promotion") {
    report = krc::verify_weak_promotion(shape);
  } else if (suite == "oracle") {
    report = krc::compare_models(shape).report;
  } else {
    throw std::invalid_argument("verify expects axioms|stembridge|promotion|oracle");
  }
  std::cout << report.to_string();
  if (!report.ok()) std::cout << report.violations.size() << " violation(s)\n";
  return report.ok() ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact affine type A Kirillov-Reshetikhin crystals on lattice patterns"};
  app.require_subcommand(1);

  ShapeFlags flags;
  std::string format = "json";
  std::string input = "-";
  std::string op;
  std::string suite;
  bool affine = false;
  bool trace = false;

  auto* enumerate = app.add_subcommand("enumerate", "list every pattern of a shape");
  add_shape_flags(enumerate, flags, true);
  enumerate->add_option("--format", format, "json|text");

  auto* dim = app.add_subcommand("dim", "enumeration count against the Weyl formula");
  add_shape_flags(dim, flags, true);

  auto* graph = app.add_subcommand("graph", "crystal graph of a shape");
  add_shape_flags(graph, flags, true);
  graph->add_flag("--affine", affine, "include the 0-labelled arrows");
  graph->add_option("--format", format, "json|dot");

  auto* promote = app.add_subcommand("promote", "promotion of one pattern");
  add_shape_flags(promote, flags, false);
  promote->add_flag("--trace", trace, "print the column steps");
  promote->add_option("--format", format, "json|text");
  promote->add_option("input", input, "pattern JSON file, or - for stdin");

  auto* apply = app.add_subcommand("apply", "apply one Kashiwara operator");
  add_shape_flags(apply, flags, false);
  apply->add_option("--op", op, "f<l> or e<l>, label 0 through n")->required();
  apply->add_option("--format", format, "json|text");
  apply->add_option("input", input, "pattern JSON file, or - for stdin");

  auto* verify = app.add_subcommand("verify", "run one verification suite");
  add_shape_flags(verify, flags, true);
  verify->add_option("suite", suite, "axioms|stembridge|promotion|oracle")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (enumerate->parsed()) return run_enumerate(flags, format);
    if (dim->parsed()) return run_dim(flags);
    if (graph->parsed()) return run_graph(flags, affine, format);
    if (promote->parsed()) return run_promote(flags, input, trace, format);
    if (apply->parsed()) return run_apply(flags, op, input, format);
    if (verify->parsed()) return run_verify(flags, suite);
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << '\n';
    return kExitVerification;
  }
  return kExitUsage;
}
