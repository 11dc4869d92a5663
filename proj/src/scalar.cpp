#include "orbitkit/scalar.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

namespace orbitkit {

std::string to_string(const Rational& q) { return q.get_str(); }

std::optional<Rational> parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;

  bool negative = false;
  std::size_t pos = 0;
  if (text[pos] == '+' || text[pos] == '-') {
    negative = text[pos] == '-';
    ++pos;
  }
  auto digits = [&](std::size_t from) {
    std::size_t end = from;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    return end;
  };

  std::size_t end = digits(pos);
  if (end == pos) return std::nullopt;
  mpz_class num(std::string(text.substr(pos, end - pos)), 10);
  mpz_class den = 1;

  if (end < text.size() && text[end] == '/') {
    std::size_t dstart = end + 1;
    std::size_t dend = digits(dstart);
    if (dend == dstart || dend != text.size()) return std::nullopt;
    den = mpz_class(std::string(text.substr(dstart, dend - dstart)), 10);
    if (den == 0) return std::nullopt;
  } else if (end < text.size() && text[end] == '.') {
    std::size_t fstart = end + 1;
    std::size_t fend = digits(fstart);
    if (fend != text.size()) return std::nullopt;
    std::string frac(text.substr(fstart, fend - fstart));
    for (char c : frac) {
      num = num * 10 + (c - '0');
      den *= 10;
    }
  } else if (end != text.size()) {
    return std::nullopt;
  }

  Rational q(num, den);
  q.canonicalize();
  if (negative) q = -q;
  return q;
}

int compare(const Rational& a, const Rational& b) { return cmp(a, b); }

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (sgn(base) == 0) throw std::domain_error("zero to a negative power");
    Rational inv = 1 / base;
    return pow(inv, -exponent);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  Rational r(n, d);
  r.canonicalize();
  return r;
}

std::optional<Rational> exact_root(const Rational& value, unsigned long k) {
  if (k == 0) return std::nullopt;
  if (sgn(value) < 0) return std::nullopt;
  mpz_class n, d;
  if (mpz_root(n.get_mpz_t(), value.get_num_mpz_t(), k) == 0) return std::nullopt;
  if (mpz_root(d.get_mpz_t(), value.get_den_mpz_t(), k) == 0) return std::nullopt;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Gaussian& Gaussian::operator/=(const Gaussian& o) {
  Rational n = o.norm();
  if (sgn(n) == 0) throw std::domain_error("division by zero Gaussian rational");
  Rational r = (re_ * o.re_ + im_ * o.im_) / n;
  Rational m = (im_ * o.re_ - re_ * o.im_) / n;
  re_ = std::move(r);
  im_ = std::move(m);
  return *this;
}

std::string to_string(const Gaussian& z) {
  if (z.is_real()) return to_string(z.re());
  std::string imag;
  if (z.im() == 1) {
    imag = "i";
  } else if (z.im() == -1) {
    imag = "-i";
  } else {
    imag = to_string(z.im()) + "i";
  }
  if (sgn(z.re()) == 0) return imag;
  std::string out = to_string(z.re());
  if (imag.front() != '-') out += "+";
  return out + imag;
}

std::ostream& operator<<(std::ostream& os, const Gaussian& z) { return os << to_string(z); }

}  // namespace orbitkit
