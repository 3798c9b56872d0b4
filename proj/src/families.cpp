#include "colorlie/families.hpp"

#include <array>

#include "colorlie/errors.hpp"

namespace colorlie {

namespace {

struct Layout {
  std::vector<std::size_t> sizes;
  std::vector<Degree> grading;
  std::vector<std::size_t> offsets;
};

Layout layout(const SoParams& params) {
  Layout l;
  std::array<std::size_t, 4> sizes = {params.p, params.q, params.r, params.s};
  std::size_t offset = 0;
  for (std::size_t b = 0; b < 4; ++b) {
    if (sizes[b] == 0) continue;
    l.sizes.push_back(sizes[b]);
    l.grading.push_back(kAllDegrees[b]);
    l.offsets.push_back(offset);
    offset += sizes[b];
  }
  return l;
}

std::string index_label(const char* prefix, std::size_t r, std::size_t c) {
  return std::string(prefix) + std::to_string(r) + "_" + std::to_string(c);
}

}  // namespace

MatrixRealization so_pqrs(const SoParams& params) {
  const std::size_t n = params.p + params.q + params.r + params.s;
  if (n < 2) throw DomainError(ErrorKind::InvalidArgument, "so_pqrs", "p+q+r+s must be at least 2");
  Layout l = layout(params);
  MatrixRealization real;
  real.block_sizes = l.sizes;
  real.block_degrees = additive_block_degrees(l.grading);
  const std::size_t nb = l.sizes.size();
  for (std::size_t b = 0; b < nb; ++b)
    for (std::size_t x = 0; x < l.sizes[b]; ++x)
      for (std::size_t y = x + 1; y < l.sizes[b]; ++y) {
        std::size_t r = l.offsets[b] + x, c = l.offsets[b] + y;
        Matrix m(n, n);
        m(r, c) = Scalar(1);
        m(c, r) = Scalar(-1);
        real.matrices.push_back(std::move(m));
        real.degrees.push_back(Degree(0, 0));
        real.labels.push_back(index_label("A", r, c));
      }
  for (std::size_t bi = 0; bi < nb; ++bi)
    for (std::size_t bj = bi + 1; bj < nb; ++bj) {
      Scalar mirror(l.grading[bi].is_zero() ? -1 : 1);
      for (std::size_t x = 0; x < l.sizes[bi]; ++x)
        for (std::size_t y = 0; y < l.sizes[bj]; ++y) {
          std::size_t r = l.offsets[bi] + x, c = l.offsets[bj] + y;
          Matrix m(n, n);
          m(r, c) = Scalar(1);
          m(c, r) = mirror;
          real.matrices.push_back(std::move(m));
          real.degrees.push_back(l.grading[bi] + l.grading[bj]);
          real.labels.push_back(index_label("B", r, c));
        }
    }
  return real;
}

std::vector<Matrix> so_standard_cartan(const SoParams& params) {
  const std::size_t n = params.p + params.q + params.r + params.s;
  Layout l = layout(params);
  std::vector<Matrix> out;
  for (std::size_t b = 0; b < l.sizes.size(); ++b)
    for (std::size_t t = 0; 2 * t + 1 < l.sizes[b]; ++t) {
      std::size_t k = l.offsets[b] + 2 * t;
      Matrix h(n, n);
      h(k, k + 1) = Scalar::i();
      h(k + 1, k) = -Scalar::i();
      out.push_back(std::move(h));
    }
  return out;
}

std::vector<Vector> hint_coordinates(const MatrixRealization& real, const std::vector<Matrix>& hint) {
  std::vector<Vector> out;
  for (std::size_t k = 0; k < hint.size(); ++k) {
    auto c = realization_coordinates(real, hint[k]);
    if (!c)
      throw DomainError(ErrorKind::HintInvalid, "hint_coordinates",
                        "hint matrix " + std::to_string(k) + " is not in the realization");
    out.push_back(std::move(*c));
  }
  return out;
}

namespace {

// 2x2 block for the root s1*e_i + s2*e_j (s = +1 or -1).
std::array<Scalar, 4> root_block(int s1, int s2) {
  const Scalar one(1), i = Scalar::i();
  if (s1 > 0 && s2 < 0) return {one, i, -i, one};
  if (s1 > 0 && s2 > 0) return {one, -i, -i, Scalar(-1)};
  if (s1 < 0 && s2 > 0) return {one, -i, i, one};
  return {one, i, i, Scalar(-1)};
}

std::string root_label(int s1, std::size_t i, int s2, std::size_t j) {
  std::string out = "E(";
  out += s1 > 0 ? "" : "-";
  out += "e" + std::to_string(i + 1);
  out += s2 > 0 ? "+" : "-";
  out += "e" + std::to_string(j + 1) + ")";
  return out;
}

Matrix cartan_matrix(std::size_t n, std::size_t k) {
  Matrix h(n, n);
  h(2 * k, 2 * k + 1) = Scalar::i();
  h(2 * k + 1, 2 * k) = -Scalar::i();
  return h;
}

// Root vector with block X at (i, j) and -X^T (i in the p block) or +X^T at (j, i).
Matrix long_root_matrix(std::size_t n, std::size_t i, std::size_t j, int s1, int s2, bool negate_mirror) {
  auto x = root_block(s1, s2);
  Matrix m(n, n);
  Scalar f(negate_mirror ? -1 : 1);
  for (std::size_t a = 0; a < 2; ++a)
    for (std::size_t b = 0; b < 2; ++b) {
      m(2 * i + a, 2 * j + b) = x[2 * a + b];
      m(2 * j + b, 2 * i + a) = f * x[2 * a + b];
    }
  return m;
}

Vector root_vector(std::size_t rank, std::size_t i, int s1, std::size_t j, int s2) {
  Vector v(rank);
  v[i] = Scalar(s1);
  v[j] = Scalar(s2);
  return v;
}

void add_element(Fixture& f, Matrix m, Degree d, std::string label) {
  f.realization.matrices.push_back(std::move(m));
  f.realization.degrees.push_back(d);
  f.realization.labels.push_back(std::move(label));
}

}  // namespace

Fixture fixture_so4222() {
  constexpr std::size_t n = 10, rank = 5;
  const std::array<Degree, rank> eps = {Degree(0, 0), Degree(0, 0), Degree(0, 1), Degree(1, 0), Degree(1, 1)};
  Fixture f;
  f.realization.block_sizes = {4, 2, 2, 2};
  f.realization.block_degrees = additive_block_degrees({Degree(0, 0), Degree(0, 1), Degree(1, 0), Degree(1, 1)});
  for (std::size_t k = 0; k < rank; ++k) add_element(f, cartan_matrix(n, k), Degree(0, 0), "H" + std::to_string(k + 1));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j)
      for (int s1 : {1, -1})
        for (int s2 : {-1, 1}) {
          Degree d = eps[i] + eps[j];
          add_element(f, long_root_matrix(n, i, j, s1, s2, i < 2), d, root_label(s1, i, s2, j));
          f.roots.push_back({root_vector(rank, i, s1, j, s2), {{d, 1}}});
        }
  for (std::size_t k = 0; k < rank; ++k) f.cartan_hint.push_back(unit_vector(f.realization.matrices.size(), k));
  f.self_centralizing = true;
  return f;
}

Fixture fixture_so4211() {
  constexpr std::size_t n = 8, rank = 3, col_r = 6, col_s = 7;
  Fixture f;
  f.realization.block_sizes = {4, 2, 1, 1};
  const std::vector<Degree> grading = {Degree(0, 0), Degree(0, 1), Degree(1, 0), Degree(1, 1)};
  f.realization.block_degrees = additive_block_degrees(grading);
  const std::array<Degree, rank> eps = {Degree(0, 0), Degree(0, 0), Degree(0, 1)};
  for (std::size_t k = 0; k < rank; ++k) add_element(f, cartan_matrix(n, k), Degree(0, 0), "H" + std::to_string(k + 1));
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = i + 1; j < rank; ++j)
      for (int s1 : {1, -1})
        for (int s2 : {-1, 1}) {
          Degree d = eps[i] + eps[j];
          add_element(f, long_root_matrix(n, i, j, s1, s2, true), d, root_label(s1, i, s2, j));
          f.roots.push_back({root_vector(rank, i, s1, j, s2), {{d, 1}}});
        }
  const Scalar i = Scalar::i();
  for (std::size_t k = 0; k < rank; ++k)
    for (int s : {1, -1}) {
      std::map<Degree, std::size_t> dims;
      for (std::size_t c : {col_r, col_s}) {
        Scalar second = s > 0 ? -i : i;
        Scalar mirror(k < 2 ? -1 : 1);
        Matrix m(n, n);
        m(2 * k, c) = Scalar(1);
        m(2 * k + 1, c) = second;
        m(c, 2 * k) = mirror;
        m(c, 2 * k + 1) = mirror * second;
        Degree d = eps[k] + grading[c == col_r ? 2 : 3];
        dims[d] += 1;
        std::string label = std::string("E") + (c == col_r ? "r" : "s") + "(" + (s > 0 ? "" : "-") + "e" +
                            std::to_string(k + 1) + ")";
        add_element(f, std::move(m), d, std::move(label));
      }
      Vector alpha(rank);
      alpha[k] = Scalar(s);
      f.roots.push_back({std::move(alpha), std::move(dims)});
    }
  Matrix e0(n, n);
  e0(col_r, col_s) = Scalar(1);
  e0(col_s, col_r) = Scalar(1);
  add_element(f, std::move(e0), Degree(0, 1), "E0");
  for (std::size_t k = 0; k < rank; ++k) f.cartan_hint.push_back(unit_vector(f.realization.matrices.size(), k));
  f.zero_part = {{Degree(0, 1), 1}};
  f.self_centralizing = false;
  return f;
}

}  // namespace colorlie
