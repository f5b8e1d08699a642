#pragma once

// Finite-dimensional coalgebras given by structure constants: matrix
// coalgebras, dual group algebras, direct sums and subcoalgebras, together with
// group-like elements, the skew-primitive solver for kg + E, the simple
// subcoalgebras of k^G spanned by matrix coefficients, and the filtration
// certificate Delta(F_n) in sum_i F_i (x) F_{n-i}.

#include <algorithm>
#include <array>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfcheck/groups.hpp"
#include "hopfcheck/linalg.hpp"
#include "hopfcheck/report.hpp"
#include "hopfcheck/scalars.hpp"

namespace hopfcheck {

class CoalgebraError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <ExactRing S>
struct CoTerm {
  std::size_t left;
  std::size_t right;
  S coef;
};

template <ExactRing S>
class FinCoalgebra {
 public:
  FinCoalgebra() = default;
  FinCoalgebra(std::vector<std::string> labels, std::vector<std::vector<CoTerm<S>>> comult, std::vector<S> counit)
      : labels_(std::move(labels)), comult_(std::move(comult)), counit_(std::move(counit)) {
    if (comult_.size() != labels_.size() || counit_.size() != labels_.size()) {
      throw CoalgebraError("coalgebra tables do not match the basis size");
    }
    for (const auto& terms : comult_)
      for (const auto& t : terms)
        if (t.left >= dim() || t.right >= dim()) throw CoalgebraError("comultiplication index out of range");
  }

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<CoTerm<S>>& comult(std::size_t i) const { return comult_.at(i); }
  const S& counit(std::size_t i) const { return counit_.at(i); }

  std::size_t index(const std::string& label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw CoalgebraError("no basis element '" + label + "'");
    return static_cast<std::size_t>(it - labels_.begin());
  }

  Vec<S> basis_vector(std::size_t i) const {
    Vec<S> v(dim(), S::zero());
    v.at(i) = S::one();
    return v;
  }

  /// Delta(v) as a dim x dim coefficient matrix: entry (i, j) multiplies b_i (x) b_j.
  Matrix<S> apply_comult(const Vec<S>& v) const {
    Matrix<S> t(dim(), dim());
    for (std::size_t c = 0; c < dim(); ++c) {
      if (v[c].is_zero()) continue;
      for (const auto& term : comult_[c]) t(term.left, term.right) += v[c] * term.coef;
    }
    return t;
  }

  S apply_counit(const Vec<S>& v) const {
    S s = S::zero();
    for (std::size_t c = 0; c < dim(); ++c)
      if (!v[c].is_zero()) s += v[c] * counit_[c];
    return s;
  }

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<CoTerm<S>>> comult_;
  std::vector<S> counit_;
};

/// Outer product u (x) v as a coefficient matrix.
template <ExactRing S>
Matrix<S> tensor(const Vec<S>& u, const Vec<S>& v) {
  Matrix<S> t(u.size(), v.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (u[i].is_zero()) continue;
    for (std::size_t j = 0; j < v.size(); ++j)
      if (!v[j].is_zero()) t(i, j) = u[i] * v[j];
  }
  return t;
}

/// Coassociativity and both counit laws on every basis element.
template <ExactRing S>
Report check_coalgebra(const FinCoalgebra<S>& c, std::string name = "coalgebra") {
  Stopwatch sw;
  Report rep(std::move(name));
  using Key = std::array<std::size_t, 3>;
  for (std::size_t b = 0; b < c.dim(); ++b) {
    std::map<Key, S> lhs;
    std::map<Key, S> rhs;
    for (const auto& t : c.comult(b)) {
      for (const auto& u : c.comult(t.left)) lhs[{u.left, u.right, t.right}] += t.coef * u.coef;
      for (const auto& u : c.comult(t.right)) rhs[{t.left, u.left, u.right}] += t.coef * u.coef;
    }
    std::erase_if(lhs, [](const auto& kv) { return kv.second.is_zero(); });
    std::erase_if(rhs, [](const auto& kv) { return kv.second.is_zero(); });
    if (lhs != rhs) rep.fail("coassociativity fails on " + c.labels()[b]);
    Vec<S> left(c.dim(), S::zero());
    Vec<S> right(c.dim(), S::zero());
    for (const auto& t : c.comult(b)) {
      left[t.right] += c.counit(t.left) * t.coef;
      right[t.left] += c.counit(t.right) * t.coef;
    }
    Vec<S> basis = c.basis_vector(b);
    if (left != basis) rep.fail("left counit law fails on " + c.labels()[b]);
    if (right != basis) rep.fail("right counit law fails on " + c.labels()[b]);
    rep.add_count("basis_checked");
  }
  rep.ms = sw.elapsed_ms();
  return rep;
}

/// Matrix coalgebra of rank n with basis e_ij (labels prefix + "ij").
template <ExactRing S>
FinCoalgebra<S> matrix_coalgebra(std::size_t n, const std::string& prefix = "e") {
  std::vector<std::string> labels;
  std::vector<std::vector<CoTerm<S>>> comult;
  std::vector<S> counit;
  auto idx = [n](std::size_t i, std::size_t j) { return i * n + j; };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      labels.push_back(prefix + std::to_string(i + 1) + std::to_string(j + 1));
      std::vector<CoTerm<S>> terms;
      for (std::size_t k = 0; k < n; ++k) terms.push_back({idx(i, k), idx(k, j), S::one()});
      comult.push_back(std::move(terms));
      counit.push_back(i == j ? S::one() : S::zero());
    }
  }
  return {std::move(labels), std::move(comult), std::move(counit)};
}

inline std::string delta_label(const Perm& g) { return "d_" + g.str(); }

/// k^G with Delta(d_h) = sum_t d_t (x) d_{t^-1 h} and eps(d_g) = [g = e].
template <ExactRing S>
FinCoalgebra<S> dual_group_coalgebra(const std::vector<Perm>& group) {
  std::vector<std::string> labels;
  std::vector<std::vector<CoTerm<S>>> comult;
  std::vector<S> counit;
  for (const auto& h : group) {
    labels.push_back(delta_label(h));
    std::vector<CoTerm<S>> terms;
    for (std::size_t t = 0; t < group.size(); ++t) {
      terms.push_back({t, index_of(group, group[t].inverse() * h), S::one()});
    }
    comult.push_back(std::move(terms));
    counit.push_back(h.is_identity() ? S::one() : S::zero());
  }
  return {std::move(labels), std::move(comult), std::move(counit)};
}

/// Algebra structure of k^G in the delta basis.
template <ExactRing S>
Vec<S> dual_group_multiply(const Vec<S>& x, const Vec<S>& y) {
  Vec<S> out(x.size(), S::zero());
  for (std::size_t g = 0; g < x.size(); ++g) out[g] = x[g] * y[g];
  return out;
}

template <ExactRing S>
Vec<S> dual_group_unit(const std::vector<Perm>& group) {
  return Vec<S>(group.size(), S::one());
}

/// S(d_g) = d_{g^-1}; involutive on k^G.
template <ExactRing S>
Vec<S> dual_group_antipode(const std::vector<Perm>& group, const Vec<S>& x) {
  Vec<S> out(x.size(), S::zero());
  for (std::size_t g = 0; g < group.size(); ++g) out[index_of(group, group[g].inverse())] = x[g];
  return out;
}

template <ExactRing S>
FinCoalgebra<S> direct_sum(const FinCoalgebra<S>& c, const FinCoalgebra<S>& d) {
  std::set<std::string> seen(c.labels().begin(), c.labels().end());
  for (const auto& l : d.labels())
    if (seen.count(l)) throw CoalgebraError("direct_sum: label clash on '" + l + "'");
  std::vector<std::string> labels = c.labels();
  labels.insert(labels.end(), d.labels().begin(), d.labels().end());
  std::vector<std::vector<CoTerm<S>>> comult;
  std::vector<S> counit;
  for (std::size_t i = 0; i < c.dim(); ++i) {
    comult.push_back(c.comult(i));
    counit.push_back(c.counit(i));
  }
  std::size_t off = c.dim();
  for (std::size_t i = 0; i < d.dim(); ++i) {
    std::vector<CoTerm<S>> terms;
    for (const auto& t : d.comult(i)) terms.push_back({t.left + off, t.right + off, t.coef});
    comult.push_back(std::move(terms));
    counit.push_back(d.counit(i));
  }
  return {std::move(labels), std::move(comult), std::move(counit)};
}

/// The subcoalgebra spanned by linearly independent vectors, re-expressed in
/// that basis. Throws when the span is not closed under Delta.
template <ExactRing S>
FinCoalgebra<S> subcoalgebra(const FinCoalgebra<S>& c, const std::vector<Vec<S>>& basis,
                             std::vector<std::string> labels) {
  if (labels.size() != basis.size()) throw CoalgebraError("subcoalgebra: label count mismatch");
  if (rank_of(basis, c.dim()) != basis.size()) throw CoalgebraError("subcoalgebra: basis is dependent");
  std::size_t m = basis.size();
  std::vector<std::vector<CoTerm<S>>> comult;
  std::vector<S> counit;
  for (std::size_t b = 0; b < m; ++b) {
    Matrix<S> t = c.apply_comult(basis[b]);
    // Express t = sum_{p,q} x_pq basis[p] (x) basis[q]: first solve each column
    // over the basis (right leg), then each resulting row (left leg).
    std::vector<Vec<S>> right_coords(c.dim());
    for (std::size_t i = 0; i < c.dim(); ++i) {
      auto coords = solve_coordinates(basis, t.row(i), c.dim());
      if (!coords) throw CoalgebraError("subcoalgebra: span is not closed under comultiplication");
      right_coords[i] = *coords;
    }
    std::vector<CoTerm<S>> terms;
    for (std::size_t q = 0; q < m; ++q) {
      Vec<S> col(c.dim(), S::zero());
      for (std::size_t i = 0; i < c.dim(); ++i) col[i] = right_coords[i][q];
      auto left = solve_coordinates(basis, col, c.dim());
      if (!left) throw CoalgebraError("subcoalgebra: span is not closed under comultiplication");
      for (std::size_t p = 0; p < m; ++p)
        if (!(*left)[p].is_zero()) terms.push_back({p, q, (*left)[p]});
    }
    comult.push_back(std::move(terms));
    counit.push_back(c.apply_counit(basis[b]));
  }
  return {std::move(labels), std::move(comult), std::move(counit)};
}

// ---------------------------------------------------------------------------
// Group-like elements

/// Group-likes of k^G in closed form: x = sum_g chi(g) d_g for every
/// multiplicative character chi : G -> roots of unity available in S.
template <ExactRing S>
std::vector<Vec<S>> dual_group_group_likes(const std::vector<Perm>& group) {
  std::vector<S> roots = roots_of_unity<S>();
  std::vector<Vec<S>> out;
  std::size_t n = group.size();
  std::size_t e = index_of(group, Perm::identity(group.front().degree()));
  // Backtracking over assignments g -> root, checking chi(gh) = chi(g)chi(h)
  // whenever all three values are assigned.
  std::vector<int> assign(n, -1);
  std::vector<std::vector<std::size_t>> mult(n, std::vector<std::size_t>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) mult[i][j] = index_of(group, group[i] * group[j]);
  auto consistent = [&](std::size_t upto) {
    for (std::size_t i = 0; i <= upto; ++i) {
      for (std::size_t j = 0; j <= upto; ++j) {
        std::size_t k = mult[i][j];
        if (k > upto) continue;
        if (!(roots[assign[i]] * roots[assign[j]] == roots[assign[k]])) return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t pos) -> void {
    if (pos == n) {
      Vec<S> x(n);
      for (std::size_t g = 0; g < n; ++g) x[g] = roots[assign[g]];
      out.push_back(std::move(x));
      return;
    }
    for (std::size_t r = 0; r < roots.size(); ++r) {
      if (pos == e && r != 0) continue;
      assign[pos] = static_cast<int>(r);
      if (consistent(pos)) self(self, pos + 1);
    }
    assign[pos] = -1;
  };
  rec(rec, 0);
  return out;
}

namespace detail {

/// Characteristic polynomial coefficients c_0..c_n (monic) via Faddeev-LeVerrier.
std::vector<Rational> characteristic_polynomial(const Matrix<Rational>& a);
/// Distinct rational roots of a polynomial with rational coefficients c_0..c_n.
std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs);

}  // namespace detail

/// Group-like elements of a coalgebra over Q: nonzero x with Delta(x) = x (x) x
/// and eps(x) = 1. They are the characters of the dual algebra, i.e. common
/// eigenvectors y of the operators M_a[i][c] = (coefficient of b_i (x) b_a in
/// Delta(b_c)) with eigenvalue y_a; the search intersects rational eigenspaces.
template <ExactRing S>
std::vector<Vec<S>> group_likes(const FinCoalgebra<S>& c) {
  if constexpr (!std::same_as<S, Rational>) {
    throw CoalgebraError("group_likes: unsupported for this scalar kind (needs exact rational eigenvalues)");
  } else {
    std::size_t d = c.dim();
    std::vector<Matrix<Rational>> ops(d, Matrix<Rational>(d, d));
    for (std::size_t col = 0; col < d; ++col)
      for (const auto& t : c.comult(col)) ops[t.right](t.left, col) += t.coef;
    std::vector<std::vector<Rational>> eig(d);
    for (std::size_t a = 0; a < d; ++a) eig[a] = detail::rational_roots(detail::characteristic_polynomial(ops[a]));

    std::vector<Vec<Rational>> found;
    std::vector<Rational> lambda(d);
    auto rec = [&](auto&& self, std::size_t a, const std::vector<Vec<Rational>>& space) -> void {
      if (space.empty()) return;
      if (a == d) {
        Vec<Rational> y(lambda.begin(), lambda.end());
        if (!in_span(space, y, d)) return;
        if (!(c.apply_comult(y) == tensor(y, y)) || !c.apply_counit(y).is_one()) return;
        found.push_back(std::move(y));
        return;
      }
      for (const auto& l : eig[a]) {
        // Intersect span(space) with ker(ops[a] - l).
        Matrix<Rational> shifted = ops[a];
        for (std::size_t i = 0; i < d; ++i) shifted(i, i) -= l;
        // Vectors sum_k z_k space[k] with shifted * (sum z_k space[k]) = 0.
        Matrix<Rational> sys(d, space.size());
        for (std::size_t k = 0; k < space.size(); ++k) {
          Vec<Rational> img = shifted.apply(space[k]);
          for (std::size_t i = 0; i < d; ++i) sys(i, k) = img[i];
        }
        std::vector<Vec<Rational>> next;
        for (const auto& z : nullspace(sys)) {
          Vec<Rational> v(d, Rational(0));
          for (std::size_t k = 0; k < space.size(); ++k)
            for (std::size_t i = 0; i < d; ++i)
              if (!z[k].is_zero()) v[i] += z[k] * space[k][i];
          next.push_back(std::move(v));
        }
        lambda[a] = l;
        self(self, a + 1, next);
      }
    };
    std::vector<Vec<Rational>> all;
    for (std::size_t i = 0; i < d; ++i) all.push_back(c.basis_vector(i));
    rec(rec, 0, all);
    std::sort(found.begin(), found.end());
    return found;
  }
}

// ---------------------------------------------------------------------------
// Skew primitives in kg + E

template <ExactRing S>
struct SkewPrimitiveSolution {
  std::size_t n = 0;
  /// Basis of the solution space; each element is a tuple (x_1, ..., x_n).
  std::vector<std::vector<Vec<S>>> basis;
  /// For each basis tuple, the scalars a_1..a_n of the closed form.
  std::vector<Vec<S>> closed_form_coefficients;
  bool matches_closed_form = false;
  std::size_t dimension() const { return basis.size(); }
};

/// Solves Delta(x_i) = x_i (x) g + sum_j e_ij (x) x_j for tuples in the
/// ambient coalgebra. `g` must be group-like and `e` (n x n, row-major) must
/// satisfy the matrix coalgebra rules; the result is checked against
/// x_i = a_i g - sum_j a_j e_ij.
template <ExactRing S>
SkewPrimitiveSolution<S> skew_primitive_solver(const FinCoalgebra<S>& ambient, const Vec<S>& g,
                                               const std::vector<std::vector<Vec<S>>>& e) {
  std::size_t n = e.size();
  std::size_t m = ambient.dim();
  if (ambient.apply_comult(g) != tensor(g, g) || !(ambient.apply_counit(g) == S::one())) {
    throw CoalgebraError("skew_primitive_solver: g is not group-like");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (e[i].size() != n) throw CoalgebraError("skew_primitive_solver: e is not square");
    for (std::size_t j = 0; j < n; ++j) {
      Matrix<S> expect(m, m);
      for (std::size_t k = 0; k < n; ++k) expect = expect + tensor(e[i][k], e[k][j]);
      if (ambient.apply_comult(e[i][j]) != expect) {
        throw CoalgebraError("skew_primitive_solver: e does not form a matrix coalgebra");
      }
    }
  }
  // Unknown vector: x_i coordinates at offset i*m. Equations: for each i and
  // each (p, q) coordinate of ambient (x) ambient.
  Matrix<S> sys(n * m * m, n * m);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t c = 0; c < m; ++c) {
      std::size_t var = i * m + c;
      Matrix<S> delta = ambient.apply_comult(ambient.basis_vector(c));
      Vec<S> unit = ambient.basis_vector(c);
      Matrix<S> right = tensor(unit, g);
      for (std::size_t p = 0; p < m; ++p)
        for (std::size_t q = 0; q < m; ++q) sys(i * m * m + p * m + q, var) += delta(p, q) - right(p, q);
    }
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t c = 0; c < m; ++c) {
        std::size_t var = j * m + c;
        Matrix<S> t = tensor(e[i][j], ambient.basis_vector(c));
        for (std::size_t p = 0; p < m; ++p)
          for (std::size_t q = 0; q < m; ++q) sys(i * m * m + p * m + q, var) -= t(p, q);
      }
    }
  }
  SkewPrimitiveSolution<S> sol;
  sol.n = n;
  for (const auto& v : nullspace(sys)) {
    std::vector<Vec<S>> tuple(n);
    for (std::size_t i = 0; i < n; ++i) tuple[i] = Vec<S>(v.begin() + i * m, v.begin() + (i + 1) * m);
    sol.basis.push_back(std::move(tuple));
  }
  // Closed form: coordinates of each x_i along g within span{g, e_st}.
  std::vector<Vec<S>> frame{g};
  for (const auto& row : e) frame.insert(frame.end(), row.begin(), row.end());
  bool ok = sol.dimension() == n && rank_of(frame, m) == frame.size();
  for (const auto& tuple : sol.basis) {
    Vec<S> a(n, S::zero());
    for (std::size_t i = 0; i < n && ok; ++i) {
      auto coords = solve_coordinates(frame, tuple[i], m);
      if (!coords) {
        ok = false;
        break;
      }
      a[i] = (*coords)[0];
    }
    for (std::size_t i = 0; i < n && ok; ++i) {
      Vec<S> expect(m, S::zero());
      for (std::size_t k = 0; k < m; ++k) expect[k] = a[i] * g[k];
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < m; ++k) expect[k] -= a[j] * e[i][j][k];
      if (expect != tuple[i]) ok = false;
    }
    sol.closed_form_coefficients.push_back(std::move(a));
  }
  sol.matches_closed_form = ok;
  return sol;
}

// ---------------------------------------------------------------------------
// Simple subcoalgebras of k^G

template <ExactRing S>
struct SimpleSubcoalgebra {
  std::string irrep;
  std::size_t rank = 0;
  /// f[i][j] = matrix coefficient g -> rho(g)_ij as a vector in k^G.
  std::vector<std::vector<Vec<S>>> f;
  /// e[i][j] = S^{-1}(f_ji) = S(f_ji).
  std::vector<std::vector<Vec<S>>> e;
  /// The span of the f_ij as a matrix coalgebra in the f basis.
  FinCoalgebra<S> coalgebra;
};

template <ExactRing S>
std::vector<SimpleSubcoalgebra<S>> simple_subcoalgebras_of_dual_group(const std::vector<Perm>& group,
                                                                      const std::vector<Irrep<S>>& irreps) {
  std::size_t total = 0;
  for (const auto& rho : irreps) {
    if (!rho.covers(group)) throw CoalgebraError("irrep '" + rho.name + "' is not a representation of G");
    total += rho.dim * rho.dim;
  }
  if (total != group.size()) throw CoalgebraError("irreps incomplete: sum of squared dimensions != |G|");
  FinCoalgebra<S> kg = dual_group_coalgebra<S>(group);
  std::vector<SimpleSubcoalgebra<S>> out;
  std::vector<Vec<S>> all;
  for (const auto& rho : irreps) {
    SimpleSubcoalgebra<S> sc;
    sc.irrep = rho.name;
    sc.rank = rho.dim;
    std::size_t d = rho.dim;
    sc.f.assign(d, std::vector<Vec<S>>(d, Vec<S>(group.size(), S::zero())));
    for (std::size_t g = 0; g < group.size(); ++g) {
      const auto& mat = rho.at(group[g]);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) sc.f[i][j][g] = mat(i, j);
    }
    sc.e.assign(d, std::vector<Vec<S>>(d));
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) sc.e[i][j] = dual_group_antipode(group, sc.f[j][i]);
    for (std::size_t i = 0; i < d; ++i) {
      for (std::size_t j = 0; j < d; ++j) {
        Matrix<S> expect(group.size(), group.size());
        for (std::size_t k = 0; k < d; ++k) expect = expect + tensor(sc.f[i][k], sc.f[k][j]);
        if (kg.apply_comult(sc.f[i][j]) != expect) {
          throw CoalgebraError("matrix coefficients of '" + rho.name + "' do not comultiply as a matrix coalgebra");
        }
        all.push_back(sc.f[i][j]);
      }
    }
    sc.coalgebra = matrix_coalgebra<S>(d, "f[" + rho.name + "]");
    out.push_back(std::move(sc));
  }
  if (rank_of(all, group.size()) != group.size()) {
    throw CoalgebraError("matrix coefficients are not linearly independent");
  }
  return out;
}

// ---------------------------------------------------------------------------
// Filtration certificate

/// Checks Delta(F_n) in sum_{i<=n} F_i (x) F_{n-i} for every level. The
/// filtration is given by spanning sets; it must be nested and exhaust C.
/// Coefficients are taken in a basis adapted to the flag, where the target
/// subspace is a coordinate subspace.
template <ExactRing S>
Report verify_coalgebra_filtration(const FinCoalgebra<S>& c, const std::vector<std::vector<Vec<S>>>& levels,
                                   std::string name = "coalgebra_filtration") {
  Stopwatch sw;
  Report rep(std::move(name));
  std::size_t d = c.dim();
  if (levels.empty()) throw CoalgebraError("filtration is empty");
  std::vector<Vec<S>> adapted;
  std::vector<std::size_t> level_of;
  for (std::size_t n = 0; n < levels.size(); ++n) {
    if (n > 0) {
      for (const auto& v : levels[n - 1])
        if (!in_span(levels[n], v, d)) throw CoalgebraError("filtration is not nested at level " + std::to_string(n));
    }
    for (const auto& v : levels[n]) {
      auto ext = adapted;
      ext.push_back(v);
      if (rank_of(ext, d) > adapted.size()) {
        adapted.push_back(v);
        level_of.push_back(n);
      }
    }
  }
  if (adapted.size() != d) throw CoalgebraError("filtration does not exhaust the coalgebra");
  Matrix<S> p(d, d);
  for (std::size_t k = 0; k < d; ++k)
    for (std::size_t i = 0; i < d; ++i) p(i, k) = adapted[k][i];
  auto pinv = inverse(p);
  if (!pinv) throw NeedsSpecialization();
  Matrix<S> pinv_t = pinv->transpose();
  rep.set_count("levels", static_cast<std::int64_t>(levels.size()));
  bool failed = false;
  for (std::size_t n = 0; n < levels.size() && !failed; ++n) {
    for (std::size_t s = 0; s < levels[n].size() && !failed; ++s) {
      Matrix<S> t = *pinv * c.apply_comult(levels[n][s]) * pinv_t;
      for (std::size_t i = 0; i < d && !failed; ++i) {
        for (std::size_t j = 0; j < d; ++j) {
          if (!t(i, j).is_zero() && level_of[i] + level_of[j] > n) {
            rep.fail("level " + std::to_string(n) + ": spanning vector " + std::to_string(s) +
                     " has a component in F_" + std::to_string(level_of[i]) + " (x) F_" +
                     std::to_string(level_of[j]));
            rep.set_count("first_failing_level", static_cast<std::int64_t>(n));
            failed = true;
            break;
          }
        }
      }
      rep.add_count("vectors_checked");
    }
  }
  rep.ms = sw.elapsed_ms();
  return rep;
}

/// k1 (+) C inside k^{S3}, where C is spanned by the coefficients f_ij of the
/// standard 2-dimensional representation; the unit comes first, then f11,
/// f12, f21, f22. `e` holds the S(f_ji) in that basis.
template <ExactRing S>
struct SkewPrimitiveSetup {
  FinCoalgebra<S> ambient;
  Vec<S> g;
  std::vector<std::vector<Vec<S>>> e;
  /// The ambient basis in delta coordinates.
  std::vector<Vec<S>> delta_basis;
};

template <ExactRing S>
SkewPrimitiveSetup<S> s3_skew_primitive_setup() {
  auto group = symmetric_group(3);
  auto kg = dual_group_coalgebra<S>(group);
  auto simples = simple_subcoalgebras_of_dual_group(group, builtin_irreps<S>(GroupDescriptor::s3()));
  const auto& st = simples[2];
  std::vector<Vec<S>> basis{dual_group_unit<S>(group), st.f[0][0], st.f[0][1], st.f[1][0], st.f[1][1]};
  SkewPrimitiveSetup<S> out;
  out.ambient = subcoalgebra(kg, basis, {"1", "f11", "f12", "f21", "f22"});
  out.delta_basis = basis;
  out.g = out.ambient.basis_vector(0);
  out.e.assign(2, std::vector<Vec<S>>(2));
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) out.e[i][j] = *solve_coordinates(basis, st.e[i][j], group.size());
  return out;
}

}  // namespace hopfcheck
