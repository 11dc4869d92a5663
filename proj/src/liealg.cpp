#include "orbitkit/liealg.hpp"

#include <algorithm>
#include <sstream>

#include "orbitkit/spectrum.hpp"

namespace orbitkit {
namespace {

std::vector<std::string> to_strings(const Vec<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

void validate_names(const std::vector<std::string>& names) {
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw PreconditionFailed("empty basis name");
    for (std::size_t j = 0; j < i; ++j)
      if (names[i] == names[j]) throw PreconditionFailed("duplicate basis name '" + names[i] + "'");
  }
}

void check_jacobi(const std::vector<std::string>& names, const std::vector<Rational>& c) {
  const std::size_t n = names.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vec<Rational> d = jacobi_defect(c, n, i, j, k);
        if (!is_zero_vec(d)) {
          std::ostringstream os;
          os << "Jacobi identity fails for (" << names[i] << ", " << names[j] << ", " << names[k] << ")";
          throw JacobiViolation(i, j, k, to_strings(d), os.str());
        }
      }
}

}  // namespace

Vec<Rational> jacobi_defect(const std::vector<Rational>& c, std::size_t n, std::size_t i, std::size_t j,
                            std::size_t k) {
  auto at = [&](std::size_t a, std::size_t b, std::size_t l) -> const Rational& { return c[(a * n + b) * n + l]; };
  Vec<Rational> d = zero_vec<Rational>(n);
  // [e_a, [e_b, e_c]] accumulated into d
  auto nested = [&](std::size_t a, std::size_t b, std::size_t cc) {
    for (std::size_t l = 0; l < n; ++l) {
      const Rational& inner = at(b, cc, l);
      if (is_zero(inner)) continue;
      for (std::size_t m = 0; m < n; ++m) d[m] += inner * at(a, l, m);
    }
  };
  nested(i, j, k);
  nested(j, k, i);
  nested(k, i, j);
  return d;
}

LieAlgebra LieAlgebra::construct(std::vector<std::string> names, const std::vector<BracketSpec>& brackets) {
  validate_names(names);
  const std::size_t n = names.size();
  std::vector<Rational> c(n * n * n, Rational(0));
  std::vector<bool> assigned(n * n, false);
  for (const auto& b : brackets) {
    if (b.i >= n || b.j >= n || b.value.size() != n) throw DimensionMismatch("bracket entry out of range");
    if (b.i == b.j) {
      if (!is_zero_vec(b.value))
        throw AntisymmetryViolation(b.i, b.j, "[" + names[b.i] + ", " + names[b.i] + "] must vanish");
      continue;
    }
    if (assigned[b.i * n + b.j]) {
      for (std::size_t k = 0; k < n; ++k)
        if (c[(b.i * n + b.j) * n + k] != b.value[k])
          throw AntisymmetryViolation(b.i, b.j,
                                      "conflicting entries for [" + names[b.i] + ", " + names[b.j] + "]");
      continue;
    }
    for (std::size_t k = 0; k < n; ++k) {
      c[(b.i * n + b.j) * n + k] = b.value[k];
      c[(b.j * n + b.i) * n + k] = -b.value[k];
    }
    assigned[b.i * n + b.j] = assigned[b.j * n + b.i] = true;
  }
  check_jacobi(names, c);
  LieAlgebra g;
  g.names_ = std::move(names);
  g.c_ = std::move(c);
  return g;
}

LieAlgebra LieAlgebra::from_tensor(std::vector<std::string> names, std::vector<Rational> tensor) {
  validate_names(names);
  const std::size_t n = names.size();
  if (tensor.size() != n * n * n) throw DimensionMismatch("structure tensor must have n^3 entries");
  for (auto& x : tensor) x.canonicalize();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (tensor[(i * n + j) * n + k] != -tensor[(j * n + i) * n + k])
          throw AntisymmetryViolation(i, j, "structure constants are not antisymmetric in (" + names[i] + ", " +
                                                names[j] + ")");
  check_jacobi(names, tensor);
  LieAlgebra g;
  g.names_ = std::move(names);
  g.c_ = std::move(tensor);
  return g;
}

LieAlgebra LieAlgebra::abelian(std::size_t n, const std::string& prefix) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(prefix + std::to_string(i + 1));
  return construct(std::move(names), {});
}

std::optional<std::size_t> LieAlgebra::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - names_.begin());
}

Vec<Rational> LieAlgebra::bracket_basis(std::size_t i, std::size_t j) const {
  const std::size_t n = dim();
  return Vec<Rational>(c_.begin() + static_cast<std::ptrdiff_t>((i * n + j) * n),
                       c_.begin() + static_cast<std::ptrdiff_t>((i * n + j + 1) * n));
}

Vec<Rational> LieAlgebra::bracket(const Vec<Rational>& x, const Vec<Rational>& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) throw DimensionMismatch("bracket: vector length mismatch");
  Vec<Rational> out = zero_vec<Rational>(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (is_zero(x[i])) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (is_zero(y[j]) || i == j) continue;
      Rational xy = x[i] * y[j];
      for (std::size_t k = 0; k < n; ++k) {
        const Rational& ck = constant(i, j, k);
        if (!is_zero(ck)) out[k] += xy * ck;
      }
    }
  }
  return out;
}

Matrix<Rational> LieAlgebra::ad(const Vec<Rational>& x) const {
  const std::size_t n = dim();
  Matrix<Rational> m(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    Vec<Rational> col = bracket(x, basis_vector(j));
    for (std::size_t k = 0; k < n; ++k) m(k, j) = col[k];
  }
  return m;
}

RSubspace bracket_space(const LieAlgebra& g, const RSubspace& a, const RSubspace& b) {
  std::vector<Vec<Rational>> span;
  for (const auto& x : a.basis())
    for (const auto& y : b.basis()) {
      auto z = g.bracket(x, y);
      if (!is_zero_vec(z)) span.push_back(std::move(z));
    }
  return RSubspace(g.dim(), span);
}

RSubspace commutator_ideal(const LieAlgebra& g) {
  auto full = RSubspace::full(g.dim());
  return bracket_space(g, full, full);
}

RSubspace centralizer(const LieAlgebra& g, const RSubspace& v, const RSubspace& w) {
  const std::size_t n = g.dim();
  // Unknowns: coefficients a_l of x = sum a_l v_l; equations: [x, w_m]_k = 0.
  std::vector<Vec<Rational>> rows;
  for (const auto& wm : w.basis()) {
    std::vector<Vec<Rational>> images;
    for (const auto& vl : v.basis()) images.push_back(g.bracket(vl, wm));
    for (std::size_t k = 0; k < n; ++k) {
      Vec<Rational> row;
      for (const auto& img : images) row.push_back(img[k]);
      rows.push_back(std::move(row));
    }
  }
  if (v.dim() == 0) return RSubspace::zero(n);
  if (rows.empty()) return v;
  auto ker = kernel(Matrix<Rational>::from_rows(rows, v.dim()));
  std::vector<Vec<Rational>> out;
  for (const auto& a : ker.basis()) {
    Vec<Rational> x = zero_vec<Rational>(n);
    for (std::size_t l = 0; l < v.dim(); ++l)
      if (!is_zero(a[l])) x = add(x, scale(v.basis()[l], a[l]));
    out.push_back(std::move(x));
  }
  return RSubspace(n, out);
}

RSubspace center(const LieAlgebra& g) {
  auto full = RSubspace::full(g.dim());
  return centralizer(g, full, full);
}

bool is_subalgebra(const LieAlgebra& g, const RSubspace& v) { return bracket_space(g, v, v).is_subset_of(v); }

bool is_ideal(const LieAlgebra& g, const RSubspace& v) {
  return bracket_space(g, RSubspace::full(g.dim()), v).is_subset_of(v);
}

CentralSeries descending_central_series(const LieAlgebra& g, const RSubspace& m) {
  if (!is_subalgebra(g, m)) throw NotSubalgebra("descending central series needs a subalgebra");
  CentralSeries s;
  RSubspace current = bracket_space(g, m, m);
  s.terms.push_back(current);
  for (std::size_t step = 0; step <= g.dim(); ++step) {
    RSubspace next = bracket_space(g, m, current);
    if (next == current) break;
    s.terms.push_back(next);
    current = std::move(next);
  }
  s.limit = current;
  return s;
}

std::vector<RSubspace> derived_series(const LieAlgebra& g, const RSubspace& m) {
  if (!is_subalgebra(g, m)) throw NotSubalgebra("derived series needs a subalgebra");
  std::vector<RSubspace> out;
  RSubspace current = bracket_space(g, m, m);
  out.push_back(current);
  for (std::size_t step = 0; step <= g.dim(); ++step) {
    RSubspace next = bracket_space(g, current, current);
    if (next == current) break;
    out.push_back(next);
    current = std::move(next);
  }
  return out;
}

bool is_nilpotent(const LieAlgebra& g, const RSubspace& m) { return descending_central_series(g, m).limit.dim() == 0; }
bool is_nilpotent(const LieAlgebra& g) { return is_nilpotent(g, RSubspace::full(g.dim())); }
bool is_solvable(const LieAlgebra& g) { return derived_series(g, RSubspace::full(g.dim())).back().dim() == 0; }
bool is_abelian(const LieAlgebra& g, const RSubspace& m) { return bracket_space(g, m, m).dim() == 0; }

Quotient quotient(const LieAlgebra& g, const RSubspace& ideal) {
  if (ideal.ambient_dim() != g.dim()) throw DimensionMismatch("quotient: ideal lives in another space");
  if (!is_ideal(g, ideal)) throw NotIdeal("quotient requires an ideal");
  const std::size_t n = g.dim();
  Quotient q;
  q.complement = ideal.greedy_complement();
  const std::size_t k = q.complement.size();

  std::vector<Vec<Rational>> columns = ideal.basis();
  for (auto c : q.complement) columns.push_back(g.basis_vector(c));
  auto inv = inverse(Matrix<Rational>::from_columns(columns, n));
  if (!inv) throw Error("quotient: complement does not complete the ideal");  // unreachable
  q.projection = Matrix<Rational>(k, n);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t j = 0; j < n; ++j) q.projection(r, j) = (*inv)(ideal.dim() + r, j);

  std::vector<std::string> names;
  for (auto c : q.complement) names.push_back(g.names()[c]);
  std::vector<Rational> tensor(k * k * k, Rational(0));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      auto img = q.projection.apply(g.bracket_basis(q.complement[a], q.complement[b]));
      for (std::size_t c = 0; c < k; ++c) tensor[(a * k + b) * k + c] = img[c];
    }
  q.algebra = LieAlgebra::from_tensor(std::move(names), std::move(tensor));
  return q;
}

SubalgebraView subalgebra(const LieAlgebra& g, const RSubspace& h) {
  if (h.ambient_dim() != g.dim()) throw DimensionMismatch("subalgebra: subspace lives in another space");
  if (!is_subalgebra(g, h)) throw NotSubalgebra("subspace is not closed under the bracket");
  const std::size_t k = h.dim();
  SubalgebraView view;
  view.embedding = Matrix<Rational>::from_columns(h.basis(), g.dim());
  std::vector<std::string> names;
  for (std::size_t j = 0; j < k; ++j) {
    const auto& b = h.basis()[j];
    std::size_t nonzero = 0;
    for (const auto& x : b)
      if (!is_zero(x)) ++nonzero;
    if (nonzero == 1 && b[h.pivots()[j]] == 1) {
      names.push_back(g.names()[h.pivots()[j]]);
    } else {
      names.push_back("v" + std::to_string(j + 1));
    }
  }
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (names[i] == names[j]) names[j] = "v" + std::to_string(j + 1);
  std::vector<Rational> tensor(k * k * k, Rational(0));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b) {
      auto coords = h.coordinates(g.bracket(h.basis()[a], h.basis()[b]));
      for (std::size_t c = 0; c < k; ++c) tensor[(a * k + b) * k + c] = (*coords)[c];
    }
  view.algebra = LieAlgebra::from_tensor(std::move(names), std::move(tensor));
  return view;
}

CompositionSeries composition_series(const LieAlgebra& g, const std::vector<Matrix<Gaussian>>& ops) {
  if (ops.size() != g.dim()) throw DimensionMismatch("composition series: one operator per basis element");
  CompositionSeries out;
  if (ops.empty()) return out;
  const std::size_t m = ops.front().rows();
  const auto derived = commutator_ideal(g);

  Subspace<Gaussian> current = Subspace<Gaussian>::zero(m);
  for (std::size_t step = 0; step < m; ++step) {
    const auto free = current.free_coordinates();
    const std::size_t r = free.size();

    // Induced action on V / current in the coordinates `free`.
    std::vector<Matrix<Gaussian>> induced;
    for (const auto& op : ops) {
      Matrix<Gaussian> q(r, r);
      for (std::size_t jj = 0; jj < r; ++jj) {
        Vec<Gaussian> w = op.col(free[jj]);
        for (std::size_t b = 0; b < current.dim(); ++b) {
          Gaussian c = w[current.pivots()[b]];
          if (c.is_zero()) continue;
          for (std::size_t t = 0; t < m; ++t) w[t] -= c * current.basis()[b][t];
        }
        for (std::size_t ii = 0; ii < r; ++ii) q(ii, jj) = w[free[ii]];
      }
      induced.push_back(std::move(q));
    }

    // The commutator ideal acts nilpotently; its joint kernel is g-invariant and
    // the whole algebra acts there through commuting operators.
    std::vector<Vec<Gaussian>> rows;
    for (const auto& y : derived.basis()) {
      Matrix<Gaussian> acc(r, r);
      for (std::size_t i = 0; i < g.dim(); ++i)
        if (!is_zero(y[i])) acc = acc + induced[i] * Gaussian(y[i]);
      for (std::size_t ii = 0; ii < r; ++ii) rows.push_back(acc.row(ii));
    }
    Subspace<Gaussian> joint = rows.empty() ? Subspace<Gaussian>::full(r)
                                            : kernel(Matrix<Gaussian>::from_rows(rows, r));
    if (joint.dim() == 0) throw PreconditionFailed("action is not solvable: no common eigenvector");
    Matrix<Gaussian> w_cols = Matrix<Gaussian>::from_columns(joint.basis(), r);

    Matrix<Gaussian> s_cols = Matrix<Gaussian>::identity(joint.dim());
    Vec<Gaussian> weight = zero_vec<Gaussian>(g.dim());
    for (std::size_t i = 0; i < g.dim(); ++i) {
      Matrix<Gaussian> on_w = restrict_operator(induced[i], w_cols);
      Matrix<Gaussian> on_s = restrict_operator(on_w, s_cols);
      auto ev = eigenvalues(on_s);
      if (ev.roots.empty())
        throw NonRationalSpectrum(g.names()[i], "eigenvalues of the action of " + g.names()[i] +
                                                    " are not in Q(i)");
      const Gaussian& lambda = ev.roots.front().first;
      Matrix<Gaussian> shifted = on_s - Matrix<Gaussian>::identity(on_s.rows()) * lambda;
      auto eig = kernel(shifted);
      s_cols = s_cols * Matrix<Gaussian>::from_columns(eig.basis(), on_s.rows());
      weight[i] = lambda;
    }
    Vec<Gaussian> v = w_cols.apply(s_cols.col(0));
    Vec<Gaussian> lifted = zero_vec<Gaussian>(m);
    for (std::size_t ii = 0; ii < r; ++ii) lifted[free[ii]] = v[ii];
    current = sum(current, Subspace<Gaussian>(m, {lifted}));
    out.flag.push_back(current);
    out.weights.push_back(std::move(weight));
  }
  return out;
}

namespace {

std::vector<Matrix<Gaussian>> adjoint_ops(const LieAlgebra& g) {
  std::vector<Matrix<Gaussian>> ops;
  for (std::size_t i = 0; i < g.dim(); ++i) ops.push_back(complexify(g.ad(g.basis_vector(i))));
  return ops;
}

}  // namespace

std::vector<Root> adjoint_weights(const LieAlgebra& g) {
  if (!is_solvable(g)) throw PreconditionFailed("adjoint weights are computed for solvable algebras only");
  auto series = composition_series(g, adjoint_ops(g));
  std::vector<Root> roots;
  for (const auto& w : series.weights) {
    Root r;
    for (const auto& z : w) {
      r.re.push_back(z.re());
      r.im.push_back(z.im());
    }
    auto it = std::find(roots.begin(), roots.end(), r);
    if (it != roots.end()) {
      ++it->multiplicity;
    } else {
      roots.push_back(std::move(r));
    }
  }
  return roots;
}

std::vector<RSubspace> ideal_flag(const LieAlgebra& g) {
  if (!is_solvable(g)) throw PreconditionFailed("ideal flags are computed for solvable algebras only");
  auto series = composition_series(g, adjoint_ops(g));
  for (const auto& w : series.weights)
    for (const auto& z : w)
      if (!z.is_real()) throw PreconditionFailed("no flag of ideals over Q: a weight is not real");
  std::vector<RSubspace> flag;
  for (const auto& s : series.flag) flag.push_back(real_part_subspace(s));
  return flag;
}

RSubspace nilradical(const LieAlgebra& g) {
  auto roots = adjoint_weights(g);
  std::vector<Vec<Rational>> rows;
  for (const auto& r : roots) {
    if (!is_zero_vec(r.re)) rows.push_back(r.re);
    if (!is_zero_vec(r.im)) rows.push_back(r.im);
  }
  RSubspace n = rows.empty() ? RSubspace::full(g.dim()) : kernel(Matrix<Rational>::from_rows(rows, g.dim()));
  if (!is_ideal(g, n) || !is_nilpotent(g, n) || !commutator_ideal(g).is_subset_of(n))
    throw Error("nilradical check failed: common root kernel is not a nilpotent ideal containing [g,g]");
  return n;
}

ExponentialVerdict is_exponential(const LieAlgebra& g) {
  ExponentialVerdict v;
  if (!is_solvable(g)) {
    v.note = "algebra is not solvable";
    return v;
  }
  std::vector<Root> roots;
  try {
    roots = adjoint_weights(g);
  } catch (const NonRationalSpectrum& e) {
    v.note = e.what();
    return v;
  }
  for (const auto& r : roots) {
    bool bad = false;
    if (is_zero_vec(r.im)) continue;
    if (is_zero_vec(r.re)) {
      bad = true;
    } else {
      bad = rank(Matrix<Rational>::from_rows({r.re, r.im}, g.dim())) > 1;
    }
    if (bad) {
      v.kind = ExponentialVerdict::Kind::NotExponential;
      v.witness = r;
      v.note = "root " + format_root(g, r) + " takes nonzero purely imaginary values";
      return v;
    }
  }
  v.kind = ExponentialVerdict::Kind::Exponential;
  v.note = "no root takes nonzero purely imaginary values";
  return v;
}

std::string format_vector(const LieAlgebra& g, const Vec<Rational>& v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (is_zero(v[i])) continue;
    Rational c = v[i];
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    if (a != 1) os << to_string(a) << "*";
    os << g.names()[i];
    first = false;
  }
  return first ? "0" : os.str();
}

std::string format_covector(const LieAlgebra& g, const Vec<Rational>& v) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (is_zero(v[i])) continue;
    os << (first ? "" : ",") << g.names()[i] << "=" << to_string(v[i]);
    first = false;
  }
  return first ? "0" : os.str();
}

std::string format_subspace(const LieAlgebra& g, const RSubspace& s) {
  std::ostringstream os;
  os << "span{";
  for (std::size_t i = 0; i < s.dim(); ++i) os << (i ? ", " : "") << format_vector(g, s.basis()[i]);
  os << "}";
  return os.str();
}

std::string format_root(const LieAlgebra& g, const Root& r) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (std::size_t i = 0; i < g.dim(); ++i) {
    Gaussian z(r.re[i], r.im[i]);
    if (z.is_zero()) continue;
    os << (first ? "" : ", ") << g.names()[i] << ": " << to_string(z);
    first = false;
  }
  if (first) os << "0";
  os << ")";
  return os.str();
}

}  // namespace orbitkit
