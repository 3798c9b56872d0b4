#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "colorlie/algebra.hpp"
#include "colorlie/roots.hpp"

namespace colorlie {

/// A finite-dimensional module: one matrix per algebra basis element, acting
/// on column vectors, with an optional degree per basis vector of V.
class Representation {
 public:
  /// Throws InvalidArgument for dimension 0 and DimensionMismatch for a wrong
  /// matrix count, matrix shape or grading length.
  Representation(std::shared_ptr<const GradedAlgebra> algebra, std::vector<Matrix> matrices,
                 std::optional<std::vector<Degree>> grading = std::nullopt);

  const GradedAlgebra& algebra() const { return *algebra_; }
  const std::shared_ptr<const GradedAlgebra>& algebra_ptr() const { return algebra_; }
  std::size_t dim() const { return dim_; }
  const std::vector<Matrix>& matrices() const { return matrices_; }
  const Matrix& matrix(std::size_t i) const { return matrices_[i]; }
  const std::optional<std::vector<Degree>>& grading() const { return grading_; }

  /// pi(x) for a coefficient vector x.
  Matrix act(const Vector& x) const;

  Representation with_grading(std::optional<std::vector<Degree>> grading) const;
  /// Set on tensor products (and anything built from one): the module
  /// structure depends on the sign convention for x(v (x) w).
  bool uses_tensor_convention() const { return tensor_convention_; }
  void mark_tensor_convention() { tensor_convention_ = true; }

 private:
  std::shared_ptr<const GradedAlgebra> algebra_;
  std::size_t dim_ = 0;
  std::vector<Matrix> matrices_;
  std::optional<std::vector<Degree>> grading_;
  bool tensor_convention_ = false;
};

extern const char* const kTensorConvention;

Representation adjoint_representation(std::shared_ptr<const GradedAlgebra> g);
Representation trivial_representation(std::shared_ptr<const GradedAlgebra> g);
/// The realization's own matrices, graded by the block grading when it exists.
Representation defining_representation(std::shared_ptr<const GradedAlgebra> g, const MatrixRealization& real);
Representation direct_sum(const Representation& a, const Representation& b);
/// x(v (x) w) = xv (x) w + (-1)^{pairing(|x|,|v|)} v (x) xw on the basis v_i (x) w_j
/// (index i*dim(b)+j). Throws UngradedFirstFactor when `a` has no grading and
/// DimensionMismatch for different algebras.
Representation tensor_product(const Representation& a, const Representation& b);

struct RepresentationReport {
  bool homomorphism = true;
  std::vector<std::size_t> witness;  // basis pair (i, j)
  Matrix lhs, rhs;                   // pi([e_i,e_j]) and the graded commutator
  bool graded = true;                // vacuous without a grading
  std::string detail;
  bool pass() const { return homomorphism && graded; }
};

RepresentationReport is_representation(const Representation& rep);

/// sum_{i,k} (K^-1)_{ki} pi(e_i) pi(e_k). Throws SingularForm.
Matrix casimir_matrix(const Representation& rep);
/// Omega commutes with every pi(e_i).
bool casimir_is_central(const Representation& rep, const Matrix& omega);

struct WeightSpace {
  Vector weight;
  std::vector<Vector> basis;
};

struct WeightDecomposition {
  std::vector<WeightSpace> spaces;  // sorted by weight, lexicographically descending
  std::optional<std::size_t> find(const Vector& weight) const;
};

/// Joint eigenspaces of pi(t). Throws IrrationalEigenvalue or NonIntegralWeight.
WeightDecomposition weight_decomposition(const Representation& rep, const RootSystem& rs);

/// 2<mu,alpha>/<alpha,alpha> for every root.
bool is_integral(const RootSystem& rs, const Vector& mu);
bool is_dominant(const RootSystem& rs, const Vector& mu);

/// The multiset of weights is stable under every root reflection.
bool weights_weyl_invariant(const WeightDecomposition& wd, const RootSystem& rs);

/// Vectors killed by every positive root vector, grouped by weight. Throws
/// PreconditionFailed if a returned weight is not dominant integral.
std::vector<WeightSpace> highest_weight_vectors(const Representation& rep, const RootSystem& rs,
                                                const WeightDecomposition& wd);

struct IrreducibleComponent {
  Vector highest_weight;
  std::vector<Vector> basis;     // weight vectors
  std::vector<Vector> weights;   // weight of each basis vector
  Scalar casimir_value;          // scalar by which the Casimir acts
  Scalar casimir_formula;        // <lambda, lambda + 2 rho>
  std::size_t highest_weight_dim = 0;  // dimension of the n+-invariants in the component
  std::optional<Degree> highest_weight_degree;
};

/// Cyclic submodules generated by highest-weight vectors under the negative
/// root spaces, breadth first. Throws NotSelfCentralizing, and
/// DecompositionIncomplete when the components do not form a direct sum of V
/// or a component fails to be invariant, irreducible-shaped or Casimir-scalar.
std::vector<IrreducibleComponent> decompose(const Representation& rep, const RootSystem& rs);

/// <lambda, lambda> + 2 <lambda, rho>
Scalar casimir_eigenvalue_formula(const RootSystem& rs, const Vector& lambda);

struct GradingSynthesis {
  WeightDecomposition weights;
  std::vector<Degree> weight_degrees;           // one per weight space
  std::vector<std::size_t> coset;               // coset index of each weight space
  std::vector<Vector> coset_base;               // maximal weight of each coset
  Matrix basis;                                 // columns: concatenated weight bases
  std::vector<Degree> vector_degrees;           // degree of each column
  std::optional<Representation> graded;         // the module in the new basis
};

/// Degrees |V_mu| = sum n_i |alpha_i| for mu = lambda + sum n_i alpha_i, with
/// lambda the maximal weight of its root-lattice coset. Throws
/// NotSelfCentralizing, LatticeSolveFailed, or PreconditionFailed when the
/// result violates g^a V^b in V^{a+b}.
GradingSynthesis grading_synthesis(const Representation& rep, const RootSystem& rs);

/// Representation in the basis given by the columns of p: p^-1 pi(e_i) p.
Representation change_basis(const Representation& rep, const Matrix& p,
                            std::optional<std::vector<Degree>> grading = std::nullopt);

}  // namespace colorlie
