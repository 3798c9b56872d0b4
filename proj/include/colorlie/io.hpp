#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "colorlie/algebra.hpp"
#include "colorlie/representation.hpp"
#include "colorlie/roots.hpp"

namespace colorlie::io {

using Json = nlohmann::ordered_json;

// Scalars travel as ["re", "im"] pairs inside documents and as {"re", "im"}
// objects in reports. Every number is an exact rational string.
Json scalar_pair(const Scalar& s);
Json scalar_object(const Scalar& s);
Scalar parse_scalar(const Json& j);
Json degree_json(Degree d);
Degree parse_degree(const Json& j);
Json vector_json(const Vector& v);
Vector parse_vector(const Json& j, std::size_t expected);
Json matrix_json(const Matrix& m);
Matrix parse_matrix(const Json& j, std::size_t rows, std::size_t cols);

/// Throws ParseError for malformed JSON.
Json read_json(std::istream& in, const std::string& source);

Json algebra_to_json(const GradedAlgebra& g, const std::optional<std::vector<Vector>>& cartan_hint = std::nullopt);
Json realization_to_json(const MatrixRealization& real,
                         const std::optional<std::vector<Vector>>& cartan_hint = std::nullopt);
MatrixRealization realization_from_json(const Json& j);

/// An algebra document, or a realization document turned into its algebra.
struct AlgebraInput {
  std::shared_ptr<const GradedAlgebra> algebra;
  std::optional<std::vector<Vector>> cartan_hint;
  std::optional<MatrixRealization> realization;
};

/// Schema errors raise ParseError; a realization that is not a graded Lie
/// algebra raises the DomainError from from_matrices.
AlgebraInput algebra_from_json(const Json& j);

/// `algebraRef` names where the algebra lives; when `embed` is set the algebra
/// document is included under "algebra" and the reference is "#algebra".
Json representation_to_json(const Representation& rep, const std::string& algebra_ref,
                            const std::optional<std::vector<Vector>>& cartan_hint = std::nullopt, bool embed = true);
Representation representation_from_json(const Json& j, std::shared_ptr<const GradedAlgebra> algebra);

Json axiom_check_json(const AxiomCheck& c);
Json validation_report(const GradedAlgebra& g, const AxiomReport& axioms, const BasicVerdict& basic,
                       const std::optional<SimplicityVerdict>& simplicity);

Json root_report(const RootSystem& rs, const WeylGroup* weyl);
Json dynkin_report(const RootSystem& rs, bool enhanced);
Json decomposition_report(const std::vector<IrreducibleComponent>& comps, bool tensor_convention);

}  // namespace colorlie::io
