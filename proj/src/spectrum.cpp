#include "orbitkit/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <sstream>

namespace orbitkit {
namespace {

using Cx = std::complex<long double>;

Cx to_cx(const Gaussian& z) {
  return {static_cast<long double>(z.re().get_d()), static_cast<long double>(z.im().get_d())};
}

// Aberth-Ehrlich simultaneous iteration; p must be square-free of degree >= 1.
std::vector<Cx> numeric_roots(const std::vector<Cx>& coeffs) {
  const std::size_t n = coeffs.size() - 1;
  std::vector<Cx> monic(coeffs.size());
  for (std::size_t i = 0; i <= n; ++i) monic[i] = coeffs[i] / coeffs[n];

  long double radius = 0;
  for (std::size_t i = 0; i < n; ++i) radius = std::max(radius, std::abs(monic[i]));
  radius = 1 + radius;

  std::vector<Cx> z(n);
  for (std::size_t k = 0; k < n; ++k) {
    long double angle = 2.0L * 3.14159265358979323846L * (static_cast<long double>(k) + 0.25L) /
                        static_cast<long double>(n);
    z[k] = std::polar(radius * 0.5L, angle);
  }

  auto eval = [&](const Cx& x, Cx& dp) {
    Cx p = monic[n];
    dp = 0;
    for (std::size_t i = n; i-- > 0;) {
      dp = dp * x + p;
      p = p * x + monic[i];
    }
    return p;
  };

  for (int iter = 0; iter < 500; ++iter) {
    long double max_step = 0;
    for (std::size_t k = 0; k < n; ++k) {
      Cx dp;
      Cx p = eval(z[k], dp);
      if (p == Cx(0)) continue;
      Cx ratio = p / dp;
      Cx s = 0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) s += 1.0L / (z[k] - z[j]);
      Cx step = ratio / (1.0L - ratio * s);
      z[k] -= step;
      max_step = std::max(max_step, std::abs(step) / (1 + std::abs(z[k])));
    }
    if (max_step < 1e-18L) break;
  }
  return z;
}

// Rational approximation of x with bounded denominator by continued fractions.
Rational approximate(long double x, long max_den) {
  long double a = std::floor(x);
  mpz_class h_prev = 1, h = static_cast<long>(a);
  mpz_class k_prev = 0, k = 1;
  long double frac = x - a;
  for (int i = 0; i < 40 && std::fabs(frac) > 1e-30L; ++i) {
    long double inv = 1.0L / frac;
    long double ai = std::floor(inv);
    frac = inv - ai;
    mpz_class a_int = static_cast<long>(ai);
    mpz_class h_next = a_int * h + h_prev;
    mpz_class k_next = a_int * k + k_prev;
    if (k_next > max_den) break;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  Rational q(h, k);
  q.canonicalize();
  return q;
}

Rational round_to_integer(long double x) {
  long double r = std::nearbyint(x);
  std::ostringstream os;
  os.precision(0);
  os << std::fixed << r;
  return Rational(mpz_class(os.str(), 10));
}

}  // namespace

EigenvalueSearch gaussian_roots(const Poly<Gaussian>& p) {
  EigenvalueSearch out;
  if (p.is_zero()) throw PreconditionFailed("roots of the zero polynomial");
  if (p.degree() == 0) {
    out.complete = true;
    return out;
  }

  Poly<Gaussian> squarefree = Poly<Gaussian>::divmod(p, Poly<Gaussian>::gcd(p, p.derivative())).first.monic();

  // Clear denominators so the leading coefficient bounds the root denominators.
  mpz_class lcm = 1;
  for (const auto& c : squarefree.coeffs()) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.re().get_den_mpz_t());
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.im().get_den_mpz_t());
  }
  Gaussian scale{Rational(lcm)};
  std::vector<Cx> coeffs;
  for (const auto& c : squarefree.coeffs()) coeffs.push_back(to_cx(c * scale));
  Gaussian lead = squarefree.leading() * scale;  // a Gaussian integer

  std::vector<Gaussian> found;
  auto accept = [&](const Gaussian& r) {
    if (std::find(found.begin(), found.end(), r) != found.end()) return true;
    if (!squarefree.eval(r).is_zero()) return false;
    found.push_back(r);
    return true;
  };

  if (squarefree.eval(Gaussian()).is_zero()) found.emplace_back();
  if (squarefree.degree() >= 1) {
    for (const Cx& z : numeric_roots(coeffs)) {
      Cx scaled = z * to_cx(lead);
      Gaussian cand = Gaussian(round_to_integer(scaled.real()), round_to_integer(scaled.imag())) / lead;
      if (accept(cand)) continue;
      Gaussian approx(approximate(z.real(), 1000000), approximate(z.imag(), 1000000));
      accept(approx);
    }
  }

  std::sort(found.begin(), found.end());
  std::size_t total = 0;
  for (const auto& r : found) {
    Poly<Gaussian> factor(Vec<Gaussian>{-r, Gaussian(1)});
    Poly<Gaussian> rest = p;
    std::size_t mult = 0;
    while (true) {
      auto [q, rem] = Poly<Gaussian>::divmod(rest, factor);
      if (!rem.is_zero()) break;
      rest = std::move(q);
      ++mult;
    }
    out.roots.emplace_back(r, mult);
    total += mult;
  }
  out.complete = total == static_cast<std::size_t>(p.degree());
  return out;
}

EigenvalueSearch eigenvalues(const Matrix<Gaussian>& a) {
  if (a.rows() == 0) return {{}, true};
  return gaussian_roots(characteristic_polynomial(a));
}

std::string to_string(const Poly<Gaussian>& p, const std::string& var) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = p.coeffs().size(); i-- > 0;) {
    const Gaussian& c = p.coeffs()[i];
    if (c.is_zero()) continue;
    std::string cs = to_string(c);
    bool compound = !c.is_real() && !is_zero(c.re());
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << (compound ? "(" + cs + ")" : cs);
      continue;
    }
    if (!(c == Gaussian(1))) os << (compound ? "(" + cs + ")" : cs) << "*";
    os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace orbitkit
