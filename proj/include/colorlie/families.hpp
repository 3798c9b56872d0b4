#pragma once

#include <map>
#include <vector>

#include "colorlie/algebra.hpp"

namespace colorlie {

struct SoParams {
  std::size_t p = 0, q = 0, r = 0, s = 0;
};

/// Graded orthogonal algebra so(p,q,r,s): block grading (0,0),(0,1),(1,0),(1,1)
/// on blocks of sizes p,q,r,s. Antisymmetric diagonal blocks come first
/// (pairs (a,b), a<b, row-major), then one element per entry of each upper
/// off-diagonal block (blocks top to bottom, left to right, entries row-major)
/// whose mirror entry is -1 when the row block is the (0,0) block and +1
/// otherwise. Empty blocks are dropped. Throws InvalidArgument if p+q+r+s < 2.
MatrixRealization so_pqrs(const SoParams& params);

/// Diagonal Cartan matrices: i at (o+2t, o+2t+1) and -i at the mirror, for
/// each consecutive coordinate pair inside a block at offset o.
std::vector<Matrix> so_standard_cartan(const SoParams& params);

/// Cartan hint matrices converted to coefficient vectors of the realization.
std::vector<Vector> hint_coordinates(const MatrixRealization& real, const std::vector<Matrix>& hint);

struct ExpectedRoot {
  Vector alpha;                        // values on the hint basis
  std::map<Degree, std::size_t> dims;  // degree-split multiplicities
};

struct Fixture {
  MatrixRealization realization;
  std::vector<Vector> cartan_hint;  // coefficient vectors
  std::vector<ExpectedRoot> roots;
  std::map<Degree, std::size_t> zero_part;  // centralizer beyond the Cartan
  bool self_centralizing = true;
};

/// so(4,2,2,2): Cartan H1..H5 followed by the forty 2x2-block root vectors
/// E(+-ei+-ej), i<j.
Fixture fixture_so4222();

/// so(4,2,1,1) as an 8x8 realization: Cartan H1..H3, twelve long-root vectors,
/// twelve short-root vectors (two per short root), and E0 on the r/s corner.
Fixture fixture_so4211();

}  // namespace colorlie
