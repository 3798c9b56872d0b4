#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "colorlie/algebra.hpp"

namespace colorlie {

struct CartanSubalgebra {
  std::vector<Vector> basis;  // coefficient vectors inside the degree-(0,0) part
  Matrix gram;                // Killing form restricted to the basis
  Matrix gram_inverse;
};

/// Checks a proposed Cartan subalgebra in the order: inside degree (0,0),
/// independent, abelian, ad-diagonalizable, nondegenerate Killing restriction,
/// equal to its centralizer in degree (0,0). Throws HintInvalid naming the
/// first failed condition.
CartanSubalgebra validate_cartan(const GradedAlgebra& g, const std::vector<Vector>& hint);

/// Uses the hint when given. Otherwise each attempt takes a pseudorandom
/// element h of degree (0,0), first from a torus built greedily from
/// semisimple basis elements and then unrestricted, and proposes the null
/// component of ad(h) on degree (0,0). Accepts the first proposal that
/// validates and has all ad eigenvalues in Q(i); throws AutoSearchFailed
/// after `budget` attempts.
CartanSubalgebra find_cartan(const GradedAlgebra& g, const std::optional<std::vector<Vector>>& hint,
                             std::uint64_t seed, std::size_t budget = 16);

struct RootDatum {
  Vector alpha;                                  // alpha(H_k) on the Cartan basis
  std::map<Degree, std::vector<Vector>> spaces;  // nonzero degree components only
  Vector h_alpha;                                // Killing dual, algebra coordinates
  Vector h_alpha_cartan;                         // same, Cartan coordinates

  std::size_t multiplicity() const;
};

struct RootSystem {
  CartanSubalgebra cartan;
  std::vector<RootDatum> roots;  // sorted by alpha, lexicographically descending
  /// Weight-zero vectors outside the Cartan, by degree.
  std::map<Degree, std::vector<Vector>> zero_part;
  Matrix killing;  // full Killing Gram matrix of the algebra

  // Positive system (filled by positive_and_simple).
  std::vector<std::size_t> positive;
  std::vector<std::size_t> simple;
  /// Coordinates of every root on the simple roots (integers).
  std::vector<std::vector<long>> simple_coords;
  Vector rho;

  std::size_t rank() const { return cartan.basis.size(); }
  Scalar inner(const Vector& a, const Vector& b) const;
  std::optional<std::size_t> find(const Vector& alpha) const;
  bool is_positive(std::size_t root) const;
};

/// Simultaneous eigenspaces of ad(t) split by degree. Throws
/// IrrationalEigenvalue or NonDiagonalizable from the splitter.
RootSystem root_decomposition(const GradedAlgebra& g, const CartanSubalgebra& t);

bool is_self_centralizing(const RootSystem& rs);

/// H with K(H, H_k) = alpha_k for the Cartan basis H_k, returned in Cartan
/// coordinates. Throws SingularForm when the restriction is degenerate.
Vector killing_dual(const CartanSubalgebra& t, const Vector& alpha);
/// The same element expanded in algebra coordinates.
Vector killing_dual_in_algebra(const CartanSubalgebra& t, const Vector& alpha);

/// Ordering functional for the positive system. Without weights the order is
/// lexicographic in the Cartan coordinates when every root is real there and
/// lexicographic in the coordinates on a subset of roots otherwise.
struct RootOrder {
  std::optional<Vector> functional;
};

/// Fills positive, simple, simple_coords and rho. Throws DegenerateOrder.
void positive_and_simple(RootSystem& rs, const RootOrder& order = {});

struct Sl2Triplet {
  Vector h, x, y;
  std::size_t root = 0;
  Degree degree;
};

/// Throws PreconditionFailed if either root space of that degree is missing,
/// PairingDegenerate if K(E, F) = 0, InconsistentRootSystem if a relation fails.
Sl2Triplet sl2_triplet(const GradedAlgebra& g, const RootSystem& rs, std::size_t root, Degree degree);
std::vector<Sl2Triplet> all_sl2_triplets(const GradedAlgebra& g, const RootSystem& rs);

struct RootString {
  long p = 0;
  long q = 0;
};

/// Membership is tested in the roots together with 0. Throws
/// InconsistentRootSystem when p - q differs from 2<b,a>/<a,a>.
RootString root_string(const RootSystem& rs, std::size_t beta, std::size_t alpha);

/// 2<b,a>/<a,a>
Rational cartan_number(const RootSystem& rs, std::size_t beta, std::size_t alpha);
/// Index of s_alpha(beta). Throws InconsistentRootSystem if it is not a root.
std::size_t reflect(const RootSystem& rs, std::size_t alpha, std::size_t beta);

struct WeylGroup {
  std::vector<std::size_t> generators;              // root indices of the reflections
  std::vector<std::vector<std::uint16_t>> elements;  // permutations of the root list
  std::vector<std::vector<std::size_t>> words;      // shortest word in the generators
  std::size_t order() const { return elements.size(); }
};

/// Closure of all root reflections acting on the root list. Throws
/// PreconditionFailed if the closure exceeds max_order.
WeylGroup weyl_group(const RootSystem& rs, std::size_t max_order = 200000);

/// Every element permutes the roots and preserves <,> on all root pairs.
bool weyl_group_preserves_form(const RootSystem& rs, const WeylGroup& w);

/// The unique degree of the root space. Throws MultiDegreeRoot.
Degree root_degree(const RootSystem& rs, std::size_t root);

struct EnhancedDynkin {
  std::vector<std::vector<long>> cartan_matrix;  // 2<a_i,a_j>/<a_j,a_j>
  std::string type;                              // "D5", ..., or "unclassified"
  std::vector<std::size_t> nodes;                // simple root indices in canonical order
  std::vector<Degree> node_degrees;
};

/// Throws NotSelfCentralizing.
EnhancedDynkin enhanced_dynkin(const RootSystem& rs);

/// Classification of a Cartan matrix under the same convention. Returns the
/// type label and a node order matching the standard numbering, or
/// "unclassified" with the identity order. Among diagram automorphisms the
/// order whose sequence of `keys` is lexicographically smallest wins.
std::pair<std::string, std::vector<std::size_t>> classify_cartan_matrix(const std::vector<std::vector<long>>& a,
                                                                        const std::vector<std::size_t>& keys = {});

/// Cartan matrix of a standard type ("A3", "B2", "E8", ...).
std::optional<std::vector<std::vector<long>>> standard_cartan_matrix(const std::string& type);

std::string dynkin_dot(const EnhancedDynkin& d);

struct CheckResult {
  std::string name;
  bool pass = true;
  std::string detail;
};

/// Structural identities of a computed root system: eigenvector property,
/// per-degree multiplicity, Killing duals, pairing and orthogonality of root
/// spaces, bracket-to-dual, the dimension count and the abstract root system
/// axioms.
std::vector<CheckResult> verify_root_system(const GradedAlgebra& g, const RootSystem& rs);

/// Dimension of the subalgebra generated by the x and y of every sl2-triplet.
std::size_t sl2_generated_dimension(const GradedAlgebra& g, const RootSystem& rs);

}  // namespace colorlie
