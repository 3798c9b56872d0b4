#include "colorlie/io.hpp"

#include <istream>
#include <set>

#include "colorlie/errors.hpp"

namespace colorlie::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw ParseError(what); }

const Json& field(const Json& j, const char* name, const std::string& where) {
  if (!j.is_object()) bad(where + ": expected an object");
  auto it = j.find(name);
  if (it == j.end()) bad(where + ": missing field '" + name + "'");
  return *it;
}

std::size_t as_index(const Json& j, const std::string& where) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(where + ": expected a nonnegative integer");
  return j.get<std::size_t>();
}

Rational as_rational(const Json& j, const std::string& where) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  bad(where + ": expected a rational string \"p/q\"");
}

std::string degree_label(Degree d) { return d.to_string(); }

std::vector<Vector> parse_vectors(const Json& j, std::size_t width, const std::string& where) {
  if (!j.is_array()) bad(where + ": expected an array of vectors");
  std::vector<Vector> out;
  for (const auto& v : j) out.push_back(parse_vector(v, width));
  return out;
}

Json vectors_json(const std::vector<Vector>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) {
    Json row = Json::array();
    for (const auto& x : v) row.push_back(scalar_pair(x));
    out.push_back(std::move(row));
  }
  return out;
}

std::vector<Degree> parse_degrees(const Json& j, const std::string& where) {
  if (!j.is_array()) bad(where + ": expected an array of degrees");
  std::vector<Degree> out;
  for (const auto& d : j) out.push_back(parse_degree(d));
  return out;
}

std::vector<std::string> parse_labels(const Json& j, std::size_t n, const std::string& where) {
  if (!j.is_array() || j.size() != n) bad(where + ": labels must be an array of " + std::to_string(n) + " strings");
  std::vector<std::string> out;
  for (const auto& s : j) {
    if (!s.is_string()) bad(where + ": labels must be strings");
    out.push_back(s.get<std::string>());
  }
  return out;
}

Json degree_dims(const std::map<Degree, std::vector<Vector>>& spaces) {
  Json out = Json::array();
  for (const auto& [d, vs] : spaces)
    if (!vs.empty()) out.push_back({{"degree", degree_label(d)}, {"dim", vs.size()}});
  return out;
}

Json long_matrix(const std::vector<std::vector<long>>& a) {
  Json out = Json::array();
  for (const auto& row : a) out.push_back(row);
  return out;
}

}  // namespace

Json scalar_pair(const Scalar& s) { return Json::array({rational_to_string(s.re()), rational_to_string(s.im())}); }

Json scalar_object(const Scalar& s) {
  return Json{{"re", rational_to_string(s.re())}, {"im", rational_to_string(s.im())}};
}

Scalar parse_scalar(const Json& j) {
  if (j.is_array()) {
    if (j.size() != 2) bad("scalar: expected a [re, im] pair");
    return Scalar(as_rational(j[0], "scalar"), as_rational(j[1], "scalar"));
  }
  if (j.is_object()) return Scalar(as_rational(field(j, "re", "scalar"), "scalar"), as_rational(field(j, "im", "scalar"), "scalar"));
  return Scalar(as_rational(j, "scalar"));
}

Json degree_json(Degree d) { return Json::array({int(d.a1), int(d.a2)}); }

Degree parse_degree(const Json& j) {
  if (!j.is_array() || j.size() != 2) bad("degree: expected a two-element 0/1 array");
  int a[2];
  for (int k = 0; k < 2; ++k) {
    if (!j[k].is_number_integer() || (j[k].get<int>() != 0 && j[k].get<int>() != 1))
      bad("degree: entries must be 0 or 1");
    a[k] = j[k].get<int>();
  }
  return Degree(a[0], a[1]);
}

Json vector_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(scalar_object(x));
  return out;
}

Vector parse_vector(const Json& j, std::size_t expected) {
  if (!j.is_array() || j.size() != expected) bad("vector: expected " + std::to_string(expected) + " entries");
  Vector v;
  for (const auto& x : j) v.push_back(parse_scalar(x));
  return v;
}

Json matrix_json(const Matrix& m) {
  Json out = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_pair(m(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

Matrix parse_matrix(const Json& j, std::size_t rows, std::size_t cols) {
  if (!j.is_array() || j.size() != rows) bad("matrix: expected " + std::to_string(rows) + " rows");
  Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    if (!j[r].is_array() || j[r].size() != cols) bad("matrix: expected " + std::to_string(cols) + " columns");
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_scalar(j[r][c]);
  }
  return m;
}

Json read_json(std::istream& in, const std::string& source) {
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    bad(source + ": " + e.what());
  }
}

Json algebra_to_json(const GradedAlgebra& g, const std::optional<std::vector<Vector>>& cartan_hint) {
  Json out;
  out["dim"] = g.dim();
  Json degrees = Json::array();
  for (auto d : g.degrees()) degrees.push_back(degree_json(d));
  out["degrees"] = std::move(degrees);
  Json structure = Json::array();
  for (const auto& [ij, coeffs] : g.upper_table())
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      if (!coeffs[k].is_zero())
        structure.push_back({{"i", ij.first},
                             {"j", ij.second},
                             {"k", k},
                             {"re", rational_to_string(coeffs[k].re())},
                             {"im", rational_to_string(coeffs[k].im())}});
  out["structure"] = std::move(structure);
  out["labels"] = g.labels();
  if (cartan_hint) out["cartanHint"] = vectors_json(*cartan_hint);
  return out;
}

Json realization_to_json(const MatrixRealization& real, const std::optional<std::vector<Vector>>& cartan_hint) {
  Json out;
  out["ambientDim"] = real.ambient_dim();
  out["blockSizes"] = real.block_sizes;
  Json bd = Json::array();
  for (const auto& row : real.block_degrees) {
    Json r = Json::array();
    for (auto d : row) r.push_back(degree_json(d));
    bd.push_back(std::move(r));
  }
  out["blockDegrees"] = std::move(bd);
  Json degrees = Json::array();
  for (auto d : real.degrees) degrees.push_back(degree_json(d));
  out["degrees"] = std::move(degrees);
  out["labels"] = real.labels;
  Json mats = Json::array();
  for (const auto& m : real.matrices) mats.push_back(matrix_json(m));
  out["matrices"] = std::move(mats);
  if (cartan_hint) out["cartanHint"] = vectors_json(*cartan_hint);
  return out;
}

MatrixRealization realization_from_json(const Json& j) {
  const std::string where = "realization";
  MatrixRealization real;
  const std::size_t n = as_index(field(j, "ambientDim", where), where);
  const Json& sizes = field(j, "blockSizes", where);
  if (!sizes.is_array()) bad(where + ": blockSizes must be an array");
  std::size_t total = 0;
  for (const auto& s : sizes) {
    real.block_sizes.push_back(as_index(s, where));
    total += real.block_sizes.back();
  }
  if (total != n) bad(where + ": blockSizes do not add up to ambientDim");
  const Json& bd = field(j, "blockDegrees", where);
  if (!bd.is_array() || bd.size() != real.block_sizes.size()) bad(where + ": blockDegrees must be square in the blocks");
  for (const auto& row : bd) {
    auto r = parse_degrees(row, where);
    if (r.size() != real.block_sizes.size()) bad(where + ": blockDegrees must be square in the blocks");
    real.block_degrees.push_back(std::move(r));
  }
  const Json& mats = field(j, "matrices", where);
  if (!mats.is_array()) bad(where + ": matrices must be an array");
  for (const auto& m : mats) real.matrices.push_back(parse_matrix(m, n, n));
  if (j.contains("degrees")) {
    real.degrees = parse_degrees(j["degrees"], where);
    if (real.degrees.size() != real.matrices.size()) bad(where + ": one degree per matrix expected");
  } else {
    for (const auto& m : real.matrices) {
      Degree d;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
          if (!m(r, c).is_zero()) {
            d = real.entry_degree(r, c);
            r = n;
            break;
          }
      real.degrees.push_back(d);
    }
  }
  if (j.contains("labels")) real.labels = parse_labels(j["labels"], real.matrices.size(), where);
  return real;
}

AlgebraInput algebra_from_json(const Json& j) {
  AlgebraInput in;
  if (!j.is_object()) bad("document: expected an object");
  if (j.contains("ambientDim")) {
    in.realization = realization_from_json(j);
    in.algebra = std::make_shared<const GradedAlgebra>(from_matrices(*in.realization));
  } else {
    const std::string where = "algebra";
    const std::size_t n = as_index(field(j, "dim", where), where);
    auto degrees = parse_degrees(field(j, "degrees", where), where);
    if (degrees.size() != n) bad(where + ": degrees must have dim entries");
    StructureTable table;
    std::set<std::tuple<std::size_t, std::size_t, std::size_t>> seen;
    const Json& st = field(j, "structure", where);
    if (!st.is_array()) bad(where + ": structure must be an array");
    for (const auto& rec : st) {
      std::size_t i = as_index(field(rec, "i", where), where);
      std::size_t jj = as_index(field(rec, "j", where), where);
      std::size_t k = as_index(field(rec, "k", where), where);
      if (i >= n || jj >= n || k >= n) bad(where + ": structure index out of range");
      if (!seen.insert({i, jj, k}).second)
        bad(where + ": duplicate structure record (" + std::to_string(i) + "," + std::to_string(jj) + "," +
            std::to_string(k) + ")");
      Rational re = as_rational(field(rec, "re", where), where);
      Rational im = rec.contains("im") ? as_rational(rec["im"], where) : Rational(0);
      auto [it, fresh] = table.try_emplace({i, jj}, zero_vector(n));
      it->second[k] = Scalar(re, im);
    }
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = parse_labels(j["labels"], n, where);
    in.algebra = std::make_shared<const GradedAlgebra>(std::move(degrees), table, std::move(labels));
  }
  if (j.contains("cartanHint")) in.cartan_hint = parse_vectors(j["cartanHint"], in.algebra->dim(), "cartanHint");
  return in;
}

Json representation_to_json(const Representation& rep, const std::string& algebra_ref,
                            const std::optional<std::vector<Vector>>& cartan_hint, bool embed) {
  Json out;
  out["algebraRef"] = embed ? std::string("#algebra") : algebra_ref;
  if (embed) out["algebra"] = algebra_to_json(rep.algebra(), cartan_hint);
  out["dim"] = rep.dim();
  Json mats = Json::array();
  for (const auto& m : rep.matrices()) mats.push_back(matrix_json(m));
  out["matrices"] = std::move(mats);
  if (rep.grading()) {
    Json gr = Json::array();
    for (auto d : *rep.grading()) gr.push_back(degree_json(d));
    out["grading"] = std::move(gr);
  }
  if (rep.uses_tensor_convention()) out["tensorConvention"] = kTensorConvention;
  return out;
}

Representation representation_from_json(const Json& j, std::shared_ptr<const GradedAlgebra> algebra) {
  const std::string where = "representation";
  const std::size_t n = as_index(field(j, "dim", where), where);
  const Json& mats = field(j, "matrices", where);
  if (!mats.is_array() || mats.size() != algebra->dim())
    bad(where + ": expected one matrix per algebra basis element (" + std::to_string(algebra->dim()) + ")");
  std::vector<Matrix> m;
  for (const auto& x : mats) m.push_back(parse_matrix(x, n, n));
  std::optional<std::vector<Degree>> grading;
  if (j.contains("grading")) {
    grading = parse_degrees(j["grading"], where);
    if (grading->size() != n) bad(where + ": grading must have dim entries");
  }
  if (n == 0) bad(where + ": dim must be positive");
  Representation rep(std::move(algebra), std::move(m), std::move(grading));
  if (j.contains("tensorConvention")) rep.mark_tensor_convention();
  return rep;
}

Json axiom_check_json(const AxiomCheck& c) {
  Json out{{"axiom", c.axiom}, {"pass", c.pass}};
  if (!c.pass) {
    out["witness"] = c.witness;
    out["lhs"] = vector_json(c.lhs);
    out["rhs"] = vector_json(c.rhs);
  }
  return out;
}

Json validation_report(const GradedAlgebra& g, const AxiomReport& axioms, const BasicVerdict& basic,
                       const std::optional<SimplicityVerdict>& simplicity) {
  Json out;
  out["dim"] = g.dim();
  Json dims = Json::object();
  for (auto d : kAllDegrees) dims[degree_label(d)] = g.indices_of_degree(d).size();
  out["degreeDims"] = std::move(dims);
  out["axioms"] = {{"pass", axioms.pass()},
                   {"checks",
                    Json::array({axiom_check_json(axioms.grading), axiom_check_json(axioms.antisymmetry),
                                 axiom_check_json(axioms.jacobi)})}};
  out["basic"] = {{"basic", basic.basic},
                  {"killingNondegenerate", basic.killing_nondegenerate},
                  {"evenPartReductive", basic.even_part_reductive},
                  {"radicalDim", basic.radical_dim},
                  {"evenCenterDim", basic.even_center_dim},
                  {"evenDerivedDim", basic.even_derived_dim},
                  {"reason", basic.reason}};
  if (simplicity)
    out["simplicity"] = {{"probablySimple", simplicity->probably_simple},
                         {"reason", simplicity->reason},
                         {"witnessDim", simplicity->witness.size()}};
  return out;
}

namespace {

std::vector<std::vector<long>> plain_cartan_matrix(const RootSystem& rs) {
  std::vector<std::vector<long>> a(rs.simple.size(), std::vector<long>(rs.simple.size()));
  for (std::size_t i = 0; i < rs.simple.size(); ++i)
    for (std::size_t j = 0; j < rs.simple.size(); ++j) {
      Rational c = cartan_number(rs, rs.simple[i], rs.simple[j]);
      a[i][j] = c.get_num().get_si();
    }
  return a;
}

}  // namespace

Json root_report(const RootSystem& rs, const WeylGroup* weyl) {
  Json out;
  out["rank"] = rs.rank();
  out["selfCentralizing"] = is_self_centralizing(rs);
  out["cartan"] = vectors_json(rs.cartan.basis);
  out["rootCount"] = rs.roots.size();
  Json roots = Json::array();
  for (std::size_t k = 0; k < rs.roots.size(); ++k) {
    const auto& r = rs.roots[k];
    Json degrees = Json::array();
    for (const auto& [d, vs] : r.spaces)
      if (!vs.empty()) degrees.push_back(degree_label(d));
    roots.push_back({{"vector", vector_json(r.alpha)},
                     {"dims", degree_dims(r.spaces)},
                     {"degrees", std::move(degrees)},
                     {"positive", rs.is_positive(k)}});
  }
  out["roots"] = std::move(roots);
  out["zeroPart"] = degree_dims(rs.zero_part);
  Json simple = Json::array();
  for (auto s : rs.simple) simple.push_back(vector_json(rs.roots[s].alpha));
  out["simpleRoots"] = std::move(simple);
  out["rho"] = vector_json(rs.rho);
  Json d = dynkin_report(rs, is_self_centralizing(rs));
  out["cartanMatrix"] = d["cartanMatrix"];
  out["dynkinType"] = d["dynkinType"];
  out["nodeDegrees"] = d.contains("nodeDegrees") ? d["nodeDegrees"] : Json(nullptr);
  out["weylOrder"] = weyl ? Json(weyl->order()) : Json(nullptr);
  return out;
}

Json dynkin_report(const RootSystem& rs, bool enhanced) {
  Json out;
  if (!is_self_centralizing(rs)) {
    if (enhanced) enhanced_dynkin(rs);  // raises NotSelfCentralizing
    out["cartanMatrix"] = long_matrix(plain_cartan_matrix(rs));
    out["dynkinType"] = nullptr;
    out["reason"] = "classification is disabled when the Cartan subalgebra is not self-centralizing";
    Json nodes = Json::array();
    for (auto s : rs.simple) nodes.push_back(vector_json(rs.roots[s].alpha));
    out["nodes"] = std::move(nodes);
    return out;
  }
  EnhancedDynkin d = enhanced_dynkin(rs);
  out["cartanMatrix"] = long_matrix(d.cartan_matrix);
  out["dynkinType"] = d.type;
  Json nodes = Json::array();
  for (auto s : d.nodes) nodes.push_back(vector_json(rs.roots[s].alpha));
  out["nodes"] = std::move(nodes);
  if (enhanced) {
    Json degrees = Json::array();
    for (auto deg : d.node_degrees) degrees.push_back(degree_label(deg));
    out["nodeDegrees"] = std::move(degrees);
  }
  return out;
}

Json decomposition_report(const std::vector<IrreducibleComponent>& comps, bool tensor_convention) {
  Json out;
  Json list = Json::array();
  std::size_t total = 0;
  for (const auto& c : comps) {
    total += c.basis.size();
    list.push_back({{"highestWeight", vector_json(c.highest_weight)},
                    {"dim", c.basis.size()},
                    {"casimirValue", scalar_object(c.casimir_value)},
                    {"casimirFormula", scalar_object(c.casimir_formula)},
                    {"degreeOfHighestWeightSpace",
                     c.highest_weight_degree ? Json(degree_label(*c.highest_weight_degree)) : Json(nullptr)}});
  }
  out["moduleDim"] = total;
  out["components"] = std::move(list);
  if (tensor_convention) out["tensorConvention"] = kTensorConvention;
  return out;
}

}  // namespace colorlie::io
