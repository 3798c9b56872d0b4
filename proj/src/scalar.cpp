#include "colorlie/scalar.hpp"

#include <cctype>
#include <stdexcept>

#include "colorlie/errors.hpp"

namespace colorlie {

std::string Degree::to_string() const {
  return "(" + std::to_string(a1) + "," + std::to_string(a2) + ")";
}

std::ostream& operator<<(std::ostream& os, Degree d) { return os << d.to_string(); }

namespace {

bool all_digits(const std::string& s, std::size_t from, std::size_t to) {
  if (from >= to) return false;
  for (std::size_t k = from; k < to; ++k)
    if (!std::isdigit(static_cast<unsigned char>(s[k]))) return false;
  return true;
}

}  // namespace

Rational parse_rational(const std::string& text) {
  std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
  auto slash = text.find('/');
  bool ok = slash == std::string::npos ? all_digits(text, start, text.size())
                                       : all_digits(text, start, slash) && all_digits(text, slash + 1, text.size());
  if (!ok) throw ParseError("malformed rational '" + text + "'");
  std::string body = text[0] == '+' ? text.substr(1) : text;
  Rational q;
  if (q.set_str(body, 10) != 0) throw ParseError("malformed rational '" + text + "'");
  if (sgn(q.get_den()) == 0) throw ParseError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

std::string rational_to_string(const Rational& q) { return q.get_str(10); }

bool Scalar::is_gaussian_integer() const { return re_.get_den() == 1 && im_.get_den() == 1; }

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero scalar");
  if (is_real()) return Scalar(Rational(1) / re_);
  Rational n = norm();
  return Scalar(re_ / n, -im_ / n);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  re_ += o.re_;
  if (sgn(o.im_) != 0) im_ += o.im_;
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  re_ -= o.re_;
  if (sgn(o.im_) != 0) im_ -= o.im_;
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_real() && o.is_real()) {
    re_ *= o.re_;
    return *this;
  }
  Rational r = re_ * o.re_ - im_ * o.im_;
  Rational i = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(r);
  im_ = std::move(i);
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  if (o.is_zero()) throw std::domain_error("division by zero scalar");
  if (o.is_real()) {
    re_ /= o.re_;
    if (sgn(im_) != 0) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (a.is_real() && b.is_real()) {
    re_ += a.re_ * b.re_;
    return;
  }
  re_ += a.re_ * b.re_ - a.im_ * b.im_;
  im_ += a.re_ * b.im_ + a.im_ * b.re_;
}

std::string Scalar::to_string() const {
  if (is_real()) return rational_to_string(re_);
  std::string imag = im_ == 1 ? "" : im_ == -1 ? "-" : rational_to_string(im_);
  if (sgn(re_) == 0) return imag + "i";
  std::string sep = sgn(im_) > 0 ? "+" : "";
  return rational_to_string(re_) + sep + imag + "i";
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace colorlie
