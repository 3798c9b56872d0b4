#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "colorlie/errors.hpp"
#include "colorlie/polynomial.hpp"
#include "support.hpp"

using namespace colorlie;
using testing::rational_vector;

namespace {

Scalar q(long n, long d = 1) { return Scalar(Rational(n, d)); }
Scalar gi(long re, long im) { return Scalar(Rational(re), Rational(im)); }

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi, bool complex = false) {
  std::uniform_int_distribution<int> d(lo, hi);
  Matrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = complex ? gi(d(rng), d(rng)) : q(d(rng));
  return m;
}

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const DomainError& e) {
    return e.kind();
  }
  FAIL("no DomainError raised");
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST_CASE("degree pairing and sign") {
  CHECK(degree_pairing(Degree(0, 1), Degree(1, 0)) == 1);
  CHECK(degree_pairing(Degree(1, 1), Degree(1, 1)) == 0);
  CHECK(degree_pairing(Degree(0, 0), Degree(1, 1)) == 0);
  CHECK(sign(Degree(0, 1), Degree(1, 0)) == -1);
  CHECK(sign(Degree(0, 1), Degree(0, 1)) == 1);
  for (Degree a : kAllDegrees) {
    CHECK(sign(Degree(), a) == 1);
    CHECK((a + a).is_zero());
    CHECK(a + Degree() == a);
    for (Degree b : kAllDegrees) CHECK(degree_pairing(a, b) == degree_pairing(b, a));
  }
}

TEST_CASE("scalar field axioms stay exact and canonical") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> d(-9, 9);
  auto draw = [&] {
    auto part = [&] {
      long den = d(rng);
      Rational q(d(rng), den == 0 ? 1 : den);
      q.canonicalize();
      return q;
    };
    Rational re = part();
    return Scalar(re, part());
  };
  for (int t = 0; t < 200; ++t) {
    Scalar a = draw(), b = draw(), c = draw();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    if (!a.is_zero()) CHECK(a * a.inverse() == Scalar(1));
    Scalar ab = a * b;
    for (const Rational* part : {&ab.re(), &ab.im()}) {
      CHECK(sgn(part->get_den()) > 0);
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), part->get_num_mpz_t(), part->get_den_mpz_t());
      CHECK((part->get_num() == 0 || g == 1));
    }
  }
  CHECK(Scalar::i() * Scalar::i() == Scalar(-1));
  CHECK(parse_rational("-6/4") == Rational(-3, 2));
  CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
  CHECK_THROWS_AS(parse_rational("3/0"), ParseError);
  CHECK(gi(1, -2).to_string().size() > 0);
}

TEST_CASE("row reduction, kernels and inverses on random matrices") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 20; ++t) {
    Matrix m = random_matrix(rng, 5, 7, -3, 3, t % 2 == 1);
    auto ker = kernel(m);
    CHECK(ker.size() + rank(m) == 7);
    for (const auto& v : ker) CHECK(is_zero(m * v));
    Matrix sq = random_matrix(rng, 4, 4, -5, 5, t % 3 == 0);
    auto inv = inverse(sq);
    if (rank(sq) == 4) {
      REQUIRE(inv);
      CHECK(*inv * sq == Matrix::identity(4));
    } else {
      CHECK(!inv);
    }
  }
  Matrix singular = Matrix::from_rows(std::vector<Vector>{rational_vector({1, 2}), rational_vector({2, 4})}, 2);
  CHECK(rank(singular) == 1);
  CHECK(!inverse(singular));
}

TEST_CASE("span helpers") {
  std::vector<Vector> basis{rational_vector({1, 0, 1}), rational_vector({0, 1, 1})};
  SpanSolver s(basis);
  auto c = s.coordinates(rational_vector({2, 3, 5}));
  REQUIRE(c);
  CHECK(*c == rational_vector({2, 3}));
  CHECK(!s.coordinates(rational_vector({0, 0, 1})));
  std::vector<Vector> dep{rational_vector({1, 1}), rational_vector({2, 2})};
  CHECK(kind_of([&] { SpanSolver bad(dep); }) == ErrorKind::LinearlyDependent);
  IncrementalSpan span(3);
  CHECK(span.insert(basis[0]));
  CHECK(!span.insert(Scalar(3) * basis[0]));
  CHECK(span.insert(basis[1]));
  CHECK(span.contains(rational_vector({1, 1, 2})));
}

TEST_CASE("characteristic polynomial satisfies Cayley-Hamilton") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    Matrix m = random_matrix(rng, 5, 5, -2, 2, t % 2 == 0);
    Polynomial p = characteristic_polynomial(m);
    CHECK(p.degree() == 5);
    CHECK(p.leading() == Scalar(1));
    CHECK(p(m).is_zero());
    CHECK(p.coeff(4) == -m.trace());
  }
}

TEST_CASE("Gaussian rational roots") {
  // (x - 1/2)(x + 2i)(x - (1+i))^2 (x^2 + 2)
  Polynomial p = Polynomial::linear(q(1, 2)) * Polynomial::linear(gi(0, -2)) * Polynomial::linear(gi(1, 1)) *
                 Polynomial::linear(gi(1, 1));
  RootSearch r = gaussian_rational_roots(p);
  CHECK(r.complete);
  CHECK(r.roots.size() == 3);
  for (const auto& x : r.roots) CHECK(p(x).is_zero());
  Polynomial irr = p * Polynomial({q(2), q(0), q(1)});
  RootSearch r2 = gaussian_rational_roots(irr);
  CHECK(!r2.complete);
  CHECK(r2.roots.size() == 3);
  auto divs = gaussian_divisors({5, 0});
  REQUIRE(divs);
  CHECK(divs->size() == 4);  // 1, 2+i, 2-i, 5 up to units
}

TEST_CASE("joint eigenspaces of commuting diagonalizable operators") {
  // P diag(...) P^-1 for two commuting diagonal matrices
  Matrix p = Matrix::from_rows(
      std::vector<Vector>{rational_vector({1, 1, 0}), rational_vector({0, 1, 1}), rational_vector({1, 0, 1})}, 3);
  Matrix pinv = *inverse(p);
  Matrix d1(3, 3), d2(3, 3);
  d1(0, 0) = q(1), d1(1, 1) = q(1), d1(2, 2) = gi(0, 2);
  d2(0, 0) = q(3), d2(1, 1) = q(-1), d2(2, 2) = q(3);
  std::vector<Matrix> ops{p * d1 * pinv, p * d2 * pinv};
  std::vector<Vector> start{unit_vector(3, 0), unit_vector(3, 1), unit_vector(3, 2)};
  auto spaces = joint_eigenspaces(ops, start, "test");
  REQUIRE(spaces.size() == 3);
  for (const auto& s : spaces) {
    CHECK(s.basis.size() == 1);
    for (std::size_t k = 0; k < 2; ++k) CHECK(ops[k] * s.basis[0] == s.eigenvalues[k] * s.basis[0]);
  }
  Matrix jordan(2, 2);
  jordan(0, 0) = q(1), jordan(0, 1) = q(1), jordan(1, 1) = q(1);
  std::vector<Matrix> j{jordan};
  std::vector<Vector> s2{unit_vector(2, 0), unit_vector(2, 1)};
  CHECK(kind_of([&] { joint_eigenspaces(j, s2, "test"); }) == ErrorKind::NonDiagonalizable);
  Matrix rot(2, 2);
  rot(0, 1) = q(1), rot(1, 0) = q(2);
  std::vector<Matrix> r{rot};
  CHECK(kind_of([&] { joint_eigenspaces(r, s2, "test"); }) == ErrorKind::IrrationalEigenvalue);
}

TEST_CASE("so(4,2,2,2) passes the axioms and is basic") {
  const auto& g = *testing::so4222().algebra;
  CHECK(g.dim() == 45);
  CHECK(check_axioms(g).pass());
  CHECK(killing_radical(g).empty());
  CHECK(is_basic(g).basic);
  CHECK(graded_simplicity_probe(g, 2, 1).probably_simple);
}

TEST_CASE("bracket examples on so(4,2,2,2)") {
  const auto& g = *testing::so4222().algebra;
  const auto& labels = g.labels();
  auto idx = [&](const std::string& l) {
    auto it = std::find(labels.begin(), labels.end(), l);
    REQUIRE(it != labels.end());
    return static_cast<std::size_t>(it - labels.begin());
  };
  std::size_t h1 = idx("H1"), e = idx("E(e1-e2)");
  CHECK(g.basis_bracket(h1, e) == unit_vector(45, e));
  CHECK(is_zero(g.basis_bracket(h1, h1)));
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 20; ++t) {
    Degree a = kAllDegrees[t % 4], b = kAllDegrees[(t / 4) % 4];
    Vector x = zero_vector(45), y = zero_vector(45);
    for (auto i : g.indices_of_degree(a)) x[i] = q(d(rng));
    for (auto i : g.indices_of_degree(b)) y[i] = q(d(rng));
    CHECK(g.bracket(x, y) == Scalar(-sign(a, b)) * g.bracket(y, x));
  }
}

TEST_CASE("Killing form: homogeneity, invariance and a dense-trace oracle") {
  const auto& g = *testing::so4222().algebra;
  Matrix k = killing_form(g).gram;
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      CHECK(k(i, j) == k(j, i));
      if (g.degree(i) != g.degree(j)) CHECK(k(i, j).is_zero());
    }
  // Dense oracle: trace of the explicit product.
  Matrix prod = g.ad(0) * g.ad(0);
  CHECK(k(0, 0) == prod.trace());
  CHECK(k(0, 0) == Scalar(16));
  // K([x,y],z) + s(x,y) K(y,[x,z]) = 0 on sampled basis triples (full check is in the property suite).
  auto kv = [&](const Vector& a, const Vector& b) {
    Scalar s;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!a[i].is_zero() && !b[j].is_zero()) s += a[i] * k(i, j) * b[j];
    return s;
  };
  for (std::size_t x = 0; x < n; x += 2)
    for (std::size_t y = 1; y < n; y += 3)
      for (std::size_t z = 0; z < n; z += 5) {
        Scalar lhs = kv(g.basis_bracket(x, y), unit_vector(n, z)) +
                     Scalar(sign(g.degree(x), g.degree(y))) * kv(unit_vector(n, y), g.basis_bracket(x, z));
        CHECK(lhs.is_zero());
      }
}

TEST_CASE("corrupted structure constant yields a Jacobi witness") {
  const auto& g = *testing::so4222().algebra;
  // Flip the sign of one coefficient of [e_i, e_j] for the first nonzero bracket between non-Cartan elements.
  auto table = g.upper_table();
  auto it = std::find_if(table.begin(), table.end(), [](const auto& kv) { return kv.first.first >= 5; });
  REQUIRE(it != table.end());
  std::size_t k = 0;
  while (it->second[k].is_zero()) ++k;
  it->second[k] = -it->second[k];
  GradedAlgebra bad(g.degrees(), table, g.labels());
  AxiomReport r = check_axioms(bad);
  CHECK(r.grading.pass);
  CHECK(r.antisymmetry.pass);
  CHECK(!r.jacobi.pass);
  CHECK(r.jacobi.witness.size() == 3);
  CHECK(r.jacobi.lhs != r.jacobi.rhs);
  // Inconsistent two-way table breaks antisymmetry.
  GradedAlgebra skew = g.with_entry(it->first.first, it->first.second, k, Scalar(5));
  CHECK(!check_axioms(skew).antisymmetry.pass);
}

TEST_CASE("abelian and degenerate inputs") {
  GradedAlgebra a = GradedAlgebra::abelian({Degree(0, 0), Degree(0, 1)});
  CHECK(check_axioms(a).pass());
  CHECK(killing_form(a).gram.is_zero());
  CHECK(killing_radical(a).size() == 2);
  CHECK(!is_basic(a).basic);
  GradedAlgebra one = GradedAlgebra::abelian({Degree(0, 0)});
  CHECK(!graded_simplicity_probe(one, 2, 0).probably_simple);
  GradedAlgebra empty = GradedAlgebra::abelian({});
  CHECK(check_axioms(empty).pass());
  CHECK(killing_radical(empty).empty());
}

TEST_CASE("killing radical of a sum with an abelian summand") {
  const auto& g = *testing::so4222().algebra;
  GradedAlgebra sum = direct_sum(g, GradedAlgebra::abelian({Degree(0, 0)}));
  auto rad = killing_radical(sum);
  REQUIRE(rad.size() == 1);
  CHECK(rad[0] == unit_vector(46, 45));
  CHECK(!is_basic(sum).basic);
}

TEST_CASE("direct sum of two simple algebras is not simple") {
  const auto& g = *testing::so4222().algebra;
  GradedAlgebra sum = direct_sum(g, g);
  SimplicityVerdict v = graded_simplicity_probe(sum, 1, 0);
  CHECK(!v.probably_simple);
  CHECK(v.witness.size() == 45);
}

TEST_CASE("from_matrices errors and trivial cases") {
  auto gl = gl_graded({{Degree(0, 0), 2}});
  // Single matrix in degree (0,0): 1-dim abelian.
  MatrixRealization single = gl;
  single.matrices = {gl.matrices[0]};
  single.degrees = {gl.degrees[0]};
  single.labels = {gl.labels[0]};
  GradedAlgebra a = from_matrices(single);
  CHECK(a.dim() == 1);
  CHECK(a.is_abelian());
  // E01 and E10 commute to E00 - E11, which is absent.
  MatrixRealization open = gl;
  open.matrices = {gl.matrices[1], gl.matrices[2]};
  open.degrees = {gl.degrees[1], gl.degrees[2]};
  open.labels = {gl.labels[1], gl.labels[2]};
  CHECK(kind_of([&] { from_matrices(open); }) == ErrorKind::NotClosed);
  MatrixRealization dep = gl;
  dep.matrices.push_back(gl.matrices[0]);
  dep.degrees.push_back(gl.degrees[0]);
  dep.labels.push_back("dup");
  CHECK(kind_of([&] { from_matrices(dep); }) == ErrorKind::LinearlyDependent);
  auto graded = gl_graded({{Degree(0, 0), 1}, {Degree(0, 1), 1}});
  MatrixRealization mixed = graded;
  mixed.matrices = {graded.matrices[0] + graded.matrices[1]};
  mixed.degrees = {Degree(0, 0)};
  mixed.labels = {"mixed"};
  CHECK(kind_of([&] { from_matrices(mixed); }) == ErrorKind::NotHomogeneous);
  CHECK(kind_of([&] { gl_graded({}); }) == ErrorKind::EmptySpace);
}

TEST_CASE("gl_graded examples") {
  auto gl = gl_graded({{Degree(0, 0), 1}, {Degree(0, 1), 1}});
  REQUIRE(gl.matrices.size() == 4);
  CHECK(gl.degrees == std::vector<Degree>{Degree(0, 0), Degree(0, 1), Degree(0, 1), Degree(0, 0)});
  auto gl2 = gl_graded({{Degree(0, 0), 2}});
  for (auto d : gl2.degrees) CHECK(d == Degree(0, 0));
  auto gl11 = gl_graded({{Degree(0, 0), 1}, {Degree(1, 1), 1}});
  CHECK(std::count(gl11.degrees.begin(), gl11.degrees.end(), Degree(1, 1)) == 2);
  // Degree (0,0) part of gl(V) brackets as block-diagonal ordinary gl.
  auto big = gl_graded({{Degree(0, 0), 2}, {Degree(1, 0), 1}});
  GradedAlgebra g = from_matrices(big);
  CHECK(check_axioms(g).pass());
  auto even = g.indices_of_degree(Degree(0, 0));
  CHECK(even.size() == 5);
  for (auto i : even)
    for (auto j : even) {
      Matrix ordinary = big.matrices[i] * big.matrices[j] - big.matrices[j] * big.matrices[i];
      CHECK(big.expand(g.basis_bracket(i, j)) == ordinary);
    }
}

TEST_CASE("structure constants reproduce the matrix commutators") {
  const auto& f = testing::so4222().fixture.realization;
  const auto& g = *testing::so4222().algebra;
  for (std::size_t i = 0; i < g.dim(); i += 3)
    for (std::size_t j = 0; j < g.dim(); j += 2) {
      Matrix c = graded_commutator(f.matrices[i], f.matrices[j], sign(g.degree(i), g.degree(j)));
      CHECK(f.expand(g.basis_bracket(i, j)) == c);
    }
}
