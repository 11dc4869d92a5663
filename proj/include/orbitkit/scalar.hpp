#pragma once

// Exact scalars: arbitrary precision rationals and Gaussian rationals a + bi.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace orbitkit {

using Rational = mpq_class;

/// Canonical text form: "n" for integers, "n/d" otherwise (d > 0, lowest terms).
std::string to_string(const Rational& q);

/// Parses "n", "-n", "n/d" or a terminating decimal such as "0.25".
std::optional<Rational> parse_rational(std::string_view text);

int compare(const Rational& a, const Rational& b);
inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

/// Exact power with integer exponent (negative allowed for nonzero base).
Rational pow(const Rational& base, long exponent);

/// Exact k-th root of a nonnegative rational if it is rational.
std::optional<Rational> exact_root(const Rational& value, unsigned long k);

class Gaussian {
 public:
  Gaussian() = default;
  Gaussian(int re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Gaussian(long re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Gaussian(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
  }

  static Gaussian i() { return {Rational(0), Rational(1)}; }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  Gaussian conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  Gaussian& operator+=(const Gaussian& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  Gaussian& operator-=(const Gaussian& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  Gaussian& operator*=(const Gaussian& o) {
    Rational r = re_ * o.re_ - im_ * o.im_;
    Rational m = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(m);
    return *this;
  }
  Gaussian& operator/=(const Gaussian& o);

  friend Gaussian operator+(Gaussian a, const Gaussian& b) { return a += b; }
  friend Gaussian operator-(Gaussian a, const Gaussian& b) { return a -= b; }
  friend Gaussian operator*(Gaussian a, const Gaussian& b) { return a *= b; }
  friend Gaussian operator/(Gaussian a, const Gaussian& b) { return a /= b; }
  Gaussian operator-() const { return {-re_, -im_}; }

  friend bool operator==(const Gaussian& a, const Gaussian& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  /// Lexicographic on (re, im); used only for deterministic container ordering.
  friend std::strong_ordering operator<=>(const Gaussian& a, const Gaussian& b) {
    int c = cmp(a.re_, b.re_);
    if (c == 0) c = cmp(a.im_, b.im_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  Rational re_{0};
  Rational im_{0};
};

inline bool is_zero(const Gaussian& z) { return z.is_zero(); }

/// "3", "-1/2", "2i", "1-i", "1/2+3/4i".
std::string to_string(const Gaussian& z);

std::ostream& operator<<(std::ostream& os, const Gaussian& z);

// Field traits used by the templated linear algebra.
template <class F>
struct FieldTraits;

template <>
struct FieldTraits<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
};

template <>
struct FieldTraits<Gaussian> {
  static Gaussian zero() { return Gaussian(); }
  static Gaussian one() { return Gaussian(1); }
};

inline Gaussian to_gaussian(const Rational& q) { return Gaussian(q); }
inline const Gaussian& to_gaussian(const Gaussian& z) { return z; }

}  // namespace orbitkit
