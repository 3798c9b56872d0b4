#pragma once

#include <optional>
#include <vector>

#include "colorlie/linalg.hpp"
#include "colorlie/scalar.hpp"

namespace colorlie {

/// Univariate polynomial over Q(i), coefficients stored low degree first and
/// trimmed so the leading coefficient is nonzero (the zero polynomial is empty).
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Scalar> coeffs);
  static Polynomial monomial(const Scalar& c, std::size_t degree);
  /// x - root
  static Polynomial linear(const Scalar& root);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  const std::vector<Scalar>& coeffs() const { return c_; }
  const Scalar& leading() const { return c_.back(); }
  Scalar coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Scalar(); }

  Scalar operator()(const Scalar& x) const;
  Matrix operator()(const Matrix& m) const;
  Polynomial derivative() const;
  Polynomial monic() const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  /// Quotient and remainder; throws on division by zero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

 private:
  void trim();
  std::vector<Scalar> c_;
};

/// Monic gcd (zero if both are zero).
Polynomial gcd(Polynomial a, Polynomial b);
/// p / gcd(p, p'), monic.
Polynomial squarefree_part(const Polynomial& p);

/// det(x I - m), computed by Hessenberg reduction.
Polynomial characteristic_polynomial(const Matrix& m);

struct RootSearch {
  std::vector<Scalar> roots;  // distinct roots in Q(i), sorted by lex_less
  bool complete = false;      // true iff p splits over Q(i) (up to multiplicity)
};

/// Distinct roots of p lying in Q(i). Candidates come from the rational-root
/// theorem over Z[i]: after clearing denominators every root is u*d/e with d
/// dividing the constant term, e the leading term, u a unit.
RootSearch gaussian_rational_roots(const Polynomial& p);

/// Factorization helpers for Gaussian integers, exposed for testing.
struct GaussianInteger {
  mpz_class re;
  mpz_class im;
  friend bool operator==(const GaussianInteger&, const GaussianInteger&) = default;
};
/// All divisors of z up to units (one representative per associate class).
/// Returns nullopt if z's norm has a large composite cofactor that trial
/// division cannot split.
std::optional<std::vector<GaussianInteger>> gaussian_divisors(const GaussianInteger& z);

}  // namespace colorlie
