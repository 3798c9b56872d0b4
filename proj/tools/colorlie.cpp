// colorlie: command-line front end for the color Lie algebra engine.
//
//   colorlie generate --family so --p 4 --q 2 --r 2 --s 2 [--emit algebra|realization|defining|adjoint]
//   colorlie generate --fixture so4222|so4211 [--emit ...]
//   colorlie validate [FILE]
//   colorlie roots [FILE] [--order v1,v2,...] [--auto-cartan --seed N]
//   colorlie dynkin [FILE] [--enhanced] [--dot] [--dot-file F]
//   colorlie rep-decompose [FILE] [--module defining|adjoint|trivial|defining-squared]
//   colorlie casimir [FILE] [--module ...]
//
// FILE defaults to stdin. Exit status: 0 success, 1 domain error, 2 parse or I/O error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "colorlie/errors.hpp"
#include "colorlie/families.hpp"
#include "colorlie/io.hpp"
#include "colorlie/representation.hpp"
#include "colorlie/roots.hpp"

using namespace colorlie;
using io::Json;

namespace {

struct Options {
  std::string input = "-";
  std::string output;
  std::uint64_t seed = 0;
  std::string order;
  bool auto_cartan = false;
  // generate
  std::string family;
  std::string fixture;
  std::size_t p = 0, q = 0, r = 0, s = 0;
  std::string emit = "algebra";
  // validate
  std::size_t trials = 8;
  bool skip_simplicity = false;
  // dynkin
  bool enhanced = false;
  bool dot = false;
  std::string dot_file;
  // representations
  std::string module;
  std::string algebra_file;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

Json read_document(const std::string& path) {
  if (path == "-") return io::read_json(std::cin, "stdin");
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  return io::read_json(in, path);
}

void write_text(const Options& opt, const std::string& text) {
  if (opt.output.empty()) {
    std::cout << text;
    std::cout.flush();
    if (!std::cout) throw IoError("cannot write to stdout");
    return;
  }
  std::ofstream out(opt.output);
  if (!out) throw IoError("cannot open '" + opt.output + "' for writing");
  out << text;
  if (!out) throw IoError("cannot write '" + opt.output + "'");
}

void write_json(const Options& opt, const Json& j) { write_text(opt, j.dump(2) + "\n"); }

RootOrder parse_order(const std::string& text) {
  RootOrder order;
  if (text.empty()) return order;
  Vector v;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) v.push_back(Scalar(parse_rational(item)));
  order.functional = std::move(v);
  return order;
}

RootSystem analyse(const GradedAlgebra& g, const std::optional<std::vector<Vector>>& hint, const Options& opt) {
  std::optional<std::vector<Vector>> used = opt.auto_cartan ? std::nullopt : hint;
  CartanSubalgebra t = find_cartan(g, used, opt.seed);
  RootSystem rs = root_decomposition(g, t);
  if (!opt.order.empty()) positive_and_simple(rs, parse_order(opt.order));
  return rs;
}

int cmd_generate(const Options& opt) {
  MatrixRealization real;
  std::vector<Vector> hint;
  if (!opt.fixture.empty()) {
    Fixture f;
    if (opt.fixture == "so4222")
      f = fixture_so4222();
    else if (opt.fixture == "so4211")
      f = fixture_so4211();
    else
      throw ParseError("unknown fixture '" + opt.fixture + "' (so4222, so4211)");
    real = std::move(f.realization);
    hint = std::move(f.cartan_hint);
  } else {
    if (opt.family != "so") throw ParseError("unknown family '" + opt.family + "' (so)");
    SoParams params{opt.p, opt.q, opt.r, opt.s};
    real = so_pqrs(params);
    hint = hint_coordinates(real, so_standard_cartan(params));
  }
  std::optional<std::vector<Vector>> h;
  if (!hint.empty()) h = hint;
  if (opt.emit == "realization") {
    write_json(opt, io::realization_to_json(real, h));
    return 0;
  }
  auto g = std::make_shared<const GradedAlgebra>(from_matrices(real));
  if (opt.emit == "algebra") {
    write_json(opt, io::algebra_to_json(*g, h));
  } else if (opt.emit == "defining") {
    write_json(opt, io::representation_to_json(defining_representation(g, real), "#algebra", h));
  } else if (opt.emit == "adjoint") {
    write_json(opt, io::representation_to_json(adjoint_representation(g), "#algebra", h));
  } else {
    throw ParseError("unknown --emit value '" + opt.emit + "'");
  }
  return 0;
}

int cmd_validate(const Options& opt) {
  io::AlgebraInput in = io::algebra_from_json(read_document(opt.input));
  const GradedAlgebra& g = *in.algebra;
  AxiomReport axioms = check_axioms(g);
  BasicVerdict basic = is_basic(g);
  std::optional<SimplicityVerdict> simplicity;
  if (!opt.skip_simplicity) simplicity = graded_simplicity_probe(g, opt.trials, opt.seed);
  write_json(opt, io::validation_report(g, axioms, basic, simplicity));
  bool ok = true;
  for (const AxiomCheck* c : {&axioms.grading, &axioms.antisymmetry, &axioms.jacobi}) {
    if (c->pass) continue;
    ok = false;
    std::cerr << "error: " << c->axiom << " fails at (";
    for (std::size_t k = 0; k < c->witness.size(); ++k)
      std::cerr << (k ? "," : "") << g.label(c->witness[k]);
    std::cerr << "): lhs " << vector_string(c->lhs) << " rhs " << vector_string(c->rhs) << "\n";
  }
  return ok ? 0 : 1;
}

int cmd_roots(const Options& opt) {
  io::AlgebraInput in = io::algebra_from_json(read_document(opt.input));
  RootSystem rs = analyse(*in.algebra, in.cartan_hint, opt);
  std::optional<WeylGroup> w;
  try {
    w = weyl_group(rs);
  } catch (const DomainError& e) {
    if (e.kind() != ErrorKind::PreconditionFailed) throw;
    std::cerr << "note: " << e.what() << "\n";
  }
  Json report = io::root_report(rs, w ? &*w : nullptr);
  report["cartanSource"] = (in.cartan_hint && !opt.auto_cartan) ? "hint" : "search";
  write_json(opt, report);
  return 0;
}

int cmd_dynkin(const Options& opt) {
  io::AlgebraInput in = io::algebra_from_json(read_document(opt.input));
  RootSystem rs = analyse(*in.algebra, in.cartan_hint, opt);
  Json report = io::dynkin_report(rs, opt.enhanced);
  if (opt.dot || !opt.dot_file.empty()) {
    std::string text = dynkin_dot(enhanced_dynkin(rs));
    if (opt.dot) report["dot"] = text;
    if (!opt.dot_file.empty()) {
      std::ofstream out(opt.dot_file);
      if (!out) throw IoError("cannot open '" + opt.dot_file + "' for writing");
      out << text;
    }
  }
  write_json(opt, report);
  return 0;
}

struct ModuleInput {
  std::shared_ptr<const GradedAlgebra> algebra;
  std::optional<std::vector<Vector>> cartan_hint;
  std::optional<Representation> rep;
};

ModuleInput load_module(const Options& opt) {
  Json doc = read_document(opt.input);
  ModuleInput m;
  if (doc.is_object() && doc.contains("algebraRef")) {
    io::AlgebraInput a;
    if (!opt.algebra_file.empty()) {
      a = io::algebra_from_json(read_document(opt.algebra_file));
    } else if (doc.contains("algebra")) {
      a = io::algebra_from_json(doc["algebra"]);
    } else {
      if (!doc["algebraRef"].is_string()) throw ParseError("representation: algebraRef must be a string");
      std::filesystem::path ref = doc["algebraRef"].get<std::string>();
      if (ref.is_relative() && opt.input != "-") ref = std::filesystem::path(opt.input).parent_path() / ref;
      a = io::algebra_from_json(read_document(ref.string()));
    }
    m.algebra = a.algebra;
    m.cartan_hint = a.cartan_hint;
    m.rep = io::representation_from_json(doc, m.algebra);
    if (!opt.module.empty()) throw ParseError("--module applies to algebra inputs, not representation documents");
    return m;
  }
  io::AlgebraInput a = io::algebra_from_json(doc);
  m.algebra = a.algebra;
  m.cartan_hint = a.cartan_hint;
  const std::string kind = opt.module.empty() ? std::string("adjoint") : opt.module;
  if (kind == "adjoint") {
    m.rep = adjoint_representation(m.algebra);
  } else if (kind == "trivial") {
    m.rep = trivial_representation(m.algebra);
  } else if (kind == "defining" || kind == "defining-squared") {
    if (!a.realization) throw ParseError("--module " + kind + " needs a realization document");
    Representation def = defining_representation(m.algebra, *a.realization);
    m.rep = kind == "defining" ? def : tensor_product(def, def);
  } else {
    throw ParseError("unknown --module value '" + kind + "'");
  }
  return m;
}

void require_representation(const Representation& rep) {
  RepresentationReport report = is_representation(rep);
  if (report.pass()) return;
  throw DomainError(ErrorKind::PreconditionFailed, "is_representation", report.detail);
}

int cmd_rep_decompose(const Options& opt) {
  ModuleInput m = load_module(opt);
  require_representation(*m.rep);
  RootSystem rs = analyse(*m.algebra, m.cartan_hint, opt);
  auto comps = decompose(*m.rep, rs);
  write_json(opt, io::decomposition_report(comps, m.rep->uses_tensor_convention()));
  return 0;
}

int cmd_casimir(const Options& opt) {
  ModuleInput m = load_module(opt);
  require_representation(*m.rep);
  Matrix omega = casimir_matrix(*m.rep);
  bool central = casimir_is_central(*m.rep, omega);
  Json out;
  out["central"] = central;
  RootSystem rs = analyse(*m.algebra, m.cartan_hint, opt);
  auto comps = decompose(*m.rep, rs);
  Json list = Json::array();
  bool agree = true;
  for (const auto& c : comps) {
    bool match = c.casimir_value == c.casimir_formula;
    agree = agree && match;
    list.push_back({{"highestWeight", io::vector_json(c.highest_weight)},
                    {"dim", c.basis.size()},
                    {"casimirValue", io::scalar_object(c.casimir_value)},
                    {"casimirFormula", io::scalar_object(c.casimir_formula)},
                    {"formulaMatches", match}});
  }
  out["components"] = std::move(list);
  out["formulaMatches"] = agree;
  if (m.rep->uses_tensor_convention()) out["tensorConvention"] = kTensorConvention;
  write_json(opt, out);
  if (!central) std::cerr << "error: Casimir does not commute with the action\n";
  return central ? 0 : 1;
}

void add_input(CLI::App* cmd, Options& opt) {
  cmd->add_option("input", opt.input, "Input JSON document ('-' for stdin)");
  cmd->add_option("-o,--output", opt.output, "Write the report here instead of stdout");
}

void add_analysis(CLI::App* cmd, Options& opt) {
  cmd->add_option("--order", opt.order, "Positive-system functional as comma-separated rationals");
  cmd->add_option("--seed", opt.seed, "Seed for the Cartan search");
  cmd->add_flag("--auto-cartan", opt.auto_cartan, "Ignore the Cartan hint and search");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations for Z2xZ2-graded color Lie algebras"};
  app.require_subcommand(1);
  Options opt;

  auto* gen = app.add_subcommand("generate", "Emit a family member or a fixture");
  gen->add_option("--family", opt.family, "Family name (so)");
  gen->add_option("--fixture", opt.fixture, "Fixture name (so4222, so4211)");
  gen->add_option("--p", opt.p, "Size of the (0,0) block");
  gen->add_option("--q", opt.q, "Size of the (0,1) block");
  gen->add_option("--r", opt.r, "Size of the (1,0) block");
  gen->add_option("--s", opt.s, "Size of the (1,1) block");
  gen->add_option("--emit", opt.emit, "algebra, realization, defining or adjoint");
  gen->add_option("-o,--output", opt.output, "Write here instead of stdout");

  auto* val = app.add_subcommand("validate", "Axiom, basic-ness and simplicity report");
  add_input(val, opt);
  val->add_option("--trials", opt.trials, "Random generators for the simplicity probe");
  val->add_option("--seed", opt.seed, "Seed for the simplicity probe");
  val->add_flag("--no-simplicity", opt.skip_simplicity, "Skip the simplicity probe");

  auto* roots = app.add_subcommand("roots", "Root system report");
  add_input(roots, opt);
  add_analysis(roots, opt);

  auto* dyn = app.add_subcommand("dynkin", "Cartan matrix and Dynkin type");
  add_input(dyn, opt);
  add_analysis(dyn, opt);
  dyn->add_flag("--enhanced", opt.enhanced, "Label nodes by degree");
  dyn->add_flag("--dot", opt.dot, "Include the DOT graph in the report");
  dyn->add_option("--dot-file", opt.dot_file, "Write the DOT graph to this file");

  auto* dec = app.add_subcommand("rep-decompose", "Irreducible components of a module");
  add_input(dec, opt);
  add_analysis(dec, opt);
  dec->add_option("--module", opt.module, "For algebra inputs: defining, adjoint, trivial, defining-squared");
  dec->add_option("--algebra", opt.algebra_file, "Algebra document overriding algebraRef");

  auto* cas = app.add_subcommand("casimir", "Casimir centrality and eigenvalues");
  add_input(cas, opt);
  add_analysis(cas, opt);
  cas->add_option("--module", opt.module, "For algebra inputs: defining, adjoint, trivial, defining-squared");
  cas->add_option("--algebra", opt.algebra_file, "Algebra document overriding algebraRef");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed()) {
      if (opt.family.empty() == opt.fixture.empty()) throw ParseError("generate needs exactly one of --family, --fixture");
      return cmd_generate(opt);
    }
    if (val->parsed()) return cmd_validate(opt);
    if (roots->parsed()) return cmd_roots(opt);
    if (dyn->parsed()) return cmd_dynkin(opt);
    if (dec->parsed()) return cmd_rep_decompose(opt);
    if (cas->parsed()) return cmd_casimir(opt);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const IoError& e) {
    std::cerr << "I/O error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
