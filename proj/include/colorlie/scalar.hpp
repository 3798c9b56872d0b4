#pragma once

#include <gmpxx.h>

#include <array>
#include <compare>
#include <cstdint>
#include <ostream>
#include <string>

namespace colorlie {

using Rational = mpq_class;

/// Element (a1, a2) of Z2 x Z2.
struct Degree {
  std::uint8_t a1 = 0;
  std::uint8_t a2 = 0;

  constexpr Degree() = default;
  constexpr Degree(int x, int y) : a1(static_cast<std::uint8_t>(x & 1)), a2(static_cast<std::uint8_t>(y & 1)) {}

  constexpr Degree operator+(Degree o) const { return Degree(a1 ^ o.a1, a2 ^ o.a2); }
  constexpr Degree& operator+=(Degree o) { return *this = *this + o; }
  constexpr bool is_zero() const { return a1 == 0 && a2 == 0; }
  constexpr int index() const { return 2 * a1 + a2; }

  constexpr auto operator<=>(const Degree&) const = default;

  std::string to_string() const;
};

inline constexpr std::array<Degree, 4> kAllDegrees = {Degree(0, 0), Degree(0, 1), Degree(1, 0), Degree(1, 1)};

/// Determinant pairing a1*b2 - a2*b1 reduced mod 2.
constexpr int degree_pairing(Degree a, Degree b) { return (a.a1 * b.a2 + a.a2 * b.a1) & 1; }

std::ostream& operator<<(std::ostream& os, Degree d);

/// Parses "p" or "p/q" (optional leading '-') into a canonical rational.
Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& q);

/// Exact Gaussian rational re + im*i. Both parts are kept canonical by GMP.
class Scalar {
 public:
  Scalar() = default;
  Scalar(long v) : re_(v), im_(0) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re) : re_(std::move(re)), im_(0) {}  // NOLINT(google-explicit-constructor)
  Scalar(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Scalar i() { return Scalar(Rational(0), Rational(1)); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return sgn(im_) == 0 && re_ == 1; }
  /// True when both parts have denominator one.
  bool is_gaussian_integer() const;

  Scalar conj() const { return Scalar(re_, -im_); }
  Rational norm() const { return re_ * re_ + im_ * im_; }
  Scalar inverse() const;

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  /// this += a * b without temporaries for the common real case.
  void add_product(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Total order: real part first, then imaginary part. Used only for
  /// deterministic sorting, not as a field order.
  friend bool lex_less(const Scalar& a, const Scalar& b) {
    if (a.re_ != b.re_) return a.re_ < b.re_;
    return a.im_ < b.im_;
  }

  std::string to_string() const;

 private:
  Rational re_{0};
  Rational im_{0};
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// +1 when degree_pairing(a, b) = 0, -1 otherwise.
inline int sign(Degree a, Degree b) { return degree_pairing(a, b) == 0 ? 1 : -1; }

}  // namespace colorlie
