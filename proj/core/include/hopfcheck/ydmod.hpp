#pragma once

// Yetter-Drinfeld modules over kG and over k^G.
//
// Over kG a module is a G-graded G-module (g . V_h in V_{ghg^-1}) with braiding
// c(u (x) v) = deg(u).v (x) u. Over k^G a module carries a label per basis
// vector (d_h . v = [h = label(v)] v) and a coaction
// lambda(v) = sum_h d_h (x) C_h v.

#include <algorithm>
#include <string>
#include <vector>

#include "hopfcheck/groups.hpp"
#include "hopfcheck/linalg.hpp"
#include "hopfcheck/report.hpp"

namespace hopfcheck {

class YDError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

template <ExactRing S>
struct YDModuleOverGroup {
  std::vector<Perm> group;  // sorted
  std::vector<std::string> labels;
  std::vector<Perm> degrees;
  std::vector<Matrix<S>> action;  // action[k]: column j = group[k] . b_j

  std::size_t dim() const { return labels.size(); }
  const Matrix<S>& act(const Perm& g) const { return action.at(index_of(group, g)); }
};

template <ExactRing S>
struct YDModuleOverDualGroup {
  std::vector<Perm> group;
  std::vector<std::string> labels;
  std::vector<Perm> label_degrees;   // d_h . b_j = [h = label_degrees[j]] b_j
  std::vector<Matrix<S>> coaction;   // coaction[k]: column j = component of lambda(b_j) at d_{group[k]}

  std::size_t dim() const { return labels.size(); }
  const Matrix<S>& coact(const Perm& h) const { return coaction.at(index_of(group, h)); }

  /// Matrix of d_h acting on V.
  Matrix<S> delta_action(const Perm& h) const {
    Matrix<S> m(dim(), dim());
    for (std::size_t j = 0; j < dim(); ++j)
      if (label_degrees[j] == h) m(j, j) = S::one();
    return m;
  }
};

/// M(g, rho) induced from an irreducible representation of the centralizer of
/// g. Basis h_j (x) w_i with the minimal coset representatives h_j; index
/// j * dim(rho) + i.
template <ExactRing S>
YDModuleOverGroup<S> induce(const std::vector<Perm>& group, const Perm& g, const Irrep<S>& rho) {
  std::vector<Perm> cent = centralizer(g, group);
  if (!rho.covers(cent)) throw YDError("induce: representation is not over the centralizer of " + g.str());
  std::vector<Perm> reps = coset_representatives(group, cent);
  std::size_t r = rho.dim;
  YDModuleOverGroup<S> m;
  m.group = group;
  for (const auto& h : reps) {
    for (std::size_t i = 0; i < r; ++i) {
      m.labels.push_back(h.str() + "(x)w" + std::to_string(i + 1));
      m.degrees.push_back(conjugate(h, g));
    }
  }
  std::size_t d = m.dim();
  for (const auto& h : group) {
    Matrix<S> a(d, d);
    for (std::size_t j = 0; j < reps.size(); ++j) {
      Perm hhj = h * reps[j];
      // h h_j = h_k g~ with g~ in the centralizer.
      std::size_t k = 0;
      for (; k < reps.size(); ++k)
        if (std::binary_search(cent.begin(), cent.end(), reps[k].inverse() * hhj)) break;
      Perm gt = reps[k].inverse() * hhj;
      const Matrix<S>& rg = rho.at(gt);
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t l = 0; l < r; ++l) a(k * r + l, j * r + i) = rg(l, i);
    }
    m.action.push_back(std::move(a));
  }
  return m;
}

/// V_n = M((12), sgn) over S_n in the transposition basis x_t (t in increasing
/// lexicographic order of (i, j)), with deg x_t = t and g . x_t = sgn(g) x_{gtg^-1}.
template <ExactRing S>
YDModuleOverGroup<S> transposition_module(std::size_t n) {
  if (n < 2 || n > Perm::kMaxN) throw YDError("transposition_module: n must be in 2..5");
  YDModuleOverGroup<S> m;
  m.group = symmetric_group(n);
  std::vector<Perm> ts;
  for (int i = 1; i <= static_cast<int>(n); ++i) {
    for (int j = i + 1; j <= static_cast<int>(n); ++j) {
      ts.push_back(Perm::transposition(i, j, n));
      m.labels.push_back("x" + std::to_string(i) + std::to_string(j));
    }
  }
  m.degrees = ts;
  for (const auto& g : m.group) {
    Matrix<S> a(ts.size(), ts.size());
    for (std::size_t j = 0; j < ts.size(); ++j) {
      Perm c = conjugate(g, ts[j]);
      std::size_t k = static_cast<std::size_t>(std::find(ts.begin(), ts.end(), c) - ts.begin());
      a(k, j) = S(Rational(g.sign()));
    }
    m.action.push_back(std::move(a));
  }
  return m;
}

/// V_3 obtained by inducing the sign character of the centralizer of (12),
/// rewritten in the basis x12 = e(x)w, x13 = -(23)(x)w, x23 = (123)(x)w.
template <ExactRing S>
YDModuleOverGroup<S> v3() {
  auto group = symmetric_group(3);
  Perm s = Perm::parse("(12)", 3);
  auto irreps = builtin_irreps<S>(GroupDescriptor::cyclic(s));
  YDModuleOverGroup<S> ind = induce(group, s, irreps.at(1));
  // ind basis: e(x)w, (23)(x)w, (123)(x)w, i.e. degrees (12), (13), (23).
  std::vector<S> scale{S::one(), -S::one(), S::one()};
  YDModuleOverGroup<S> m;
  m.group = group;
  m.labels = {"x12", "x13", "x23"};
  m.degrees = ind.degrees;
  for (const auto& a : ind.action) {
    Matrix<S> b(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) b(i, j) = scale[i] * a(i, j) * scale[j];  // scale is its own inverse
    m.action.push_back(std::move(b));
  }
  return m;
}

/// Representation property and degree compatibility, exhaustively.
template <ExactRing S>
Report yd_axiom_check(const YDModuleOverGroup<S>& v, std::string name = "yd_axioms") {
  Stopwatch sw;
  Report rep(std::move(name));
  const auto& g = v.group;
  if (v.action.size() != g.size() || v.degrees.size() != v.dim()) {
    rep.fail("module tables have the wrong size");
    return rep;
  }
  for (const auto& d : v.degrees)
    if (!std::binary_search(g.begin(), g.end(), d)) rep.fail("degree " + d.str() + " outside the group");
  if (!v.act(Perm::identity(g.front().degree())).is_identity()) rep.fail("identity does not act trivially");
  for (std::size_t a = 0; a < g.size(); ++a) {
    for (std::size_t b = 0; b < g.size(); ++b) {
      if (!(v.act(g[a] * g[b]) == v.action[a] * v.action[b])) {
        rep.fail("action is not multiplicative at " + g[a].str() + ", " + g[b].str());
      }
      rep.add_count("pairs_checked");
    }
    for (std::size_t j = 0; j < v.dim(); ++j) {
      Perm target = conjugate(g[a], v.degrees[j]);
      for (std::size_t i = 0; i < v.dim(); ++i) {
        if (!v.action[a](i, j).is_zero() && !(v.degrees[i] == target)) {
          rep.fail(g[a].str() + " . " + v.labels[j] + " leaves degree " + target.str());
        }
      }
    }
  }
  rep.ms = sw.elapsed_ms();
  return rep;
}

/// Index of b_i (x) b_j in V (x) V.
inline std::size_t pair_index(std::size_t i, std::size_t j, std::size_t d) { return i * d + j; }

/// c(b_i (x) b_j) = deg(b_i).b_j (x) b_i as a d^2 x d^2 matrix.
template <ExactRing S>
Matrix<S> braiding(const YDModuleOverGroup<S>& v) {
  std::size_t d = v.dim();
  Matrix<S> c(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i) {
    const Matrix<S>& a = v.act(v.degrees[i]);
    for (std::size_t j = 0; j < d; ++j)
      for (std::size_t k = 0; k < d; ++k)
        if (!a(k, j).is_zero()) c(pair_index(k, i, d), pair_index(i, j, d)) = a(k, j);
  }
  return c;
}

/// c(u (x) v) = u_(-1) . v (x) u_(0) = v (x) C_{label(v)} u.
template <ExactRing S>
Matrix<S> braiding(const YDModuleOverDualGroup<S>& v) {
  std::size_t d = v.dim();
  Matrix<S> c(d * d, d * d);
  for (std::size_t j = 0; j < d; ++j) {
    const Matrix<S>& cm = v.coact(v.label_degrees[j]);
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t k = 0; k < d; ++k)
        if (!cm(k, i).is_zero()) c(pair_index(j, k, d), pair_index(i, j, d)) = cm(k, i);
  }
  return c;
}

/// The flip u (x) v -> v (x) u on V (x) V.
template <ExactRing S>
Matrix<S> flip(std::size_t d) {
  Matrix<S> t(d * d, d * d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) t(pair_index(j, i, d), pair_index(i, j, d)) = S::one();
  return t;
}

/// A (x) B for square matrices.
template <ExactRing S>
Matrix<S> kronecker(const Matrix<S>& a, const Matrix<S>& b) {
  Matrix<S> k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a(i, j).is_zero()) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          if (!b(p, q).is_zero()) k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

/// (c (x) 1)(1 (x) c)(c (x) 1) = (1 (x) c)(c (x) 1)(1 (x) c) on V^(x)3.
template <ExactRing S>
bool satisfies_braid_relation(const Matrix<S>& c, std::size_t d) {
  Matrix<S> id = Matrix<S>::identity(d);
  Matrix<S> c1 = kronecker(c, id);
  Matrix<S> c2 = kronecker(id, c);
  return c1 * c2 * c1 == c2 * c1 * c2;
}

/// f . v = <S(f), v_(-1)> v_(0) and lambda(v) = sum_h d_{h^-1} (x) h . v, with
/// the deltas dual to the group elements.
template <ExactRing S>
YDModuleOverDualGroup<S> dualize(const YDModuleOverGroup<S>& v) {
  YDModuleOverDualGroup<S> w;
  w.group = v.group;
  w.labels = v.labels;
  for (const auto& d : v.degrees) w.label_degrees.push_back(d.inverse());
  for (const auto& h : v.group) w.coaction.push_back(v.act(h.inverse()));
  return w;
}

/// Inverse of dualize under the canonical identification.
template <ExactRing S>
YDModuleOverGroup<S> dualize_back(const YDModuleOverDualGroup<S>& w) {
  YDModuleOverGroup<S> v;
  v.group = w.group;
  v.labels = w.labels;
  for (const auto& d : w.label_degrees) v.degrees.push_back(d.inverse());
  for (const auto& h : w.group) v.action.push_back(w.coact(h.inverse()));
  return v;
}

/// Coaction is a k^G-comodule (C_st = C_t C_s, C_e = id) and C_h maps the
/// label-g part into the label h^-1 g h part.
template <ExactRing S>
Report yd_axiom_check(const YDModuleOverDualGroup<S>& w, std::string name = "yd_axioms_dual") {
  Stopwatch sw;
  Report rep(std::move(name));
  const auto& g = w.group;
  if (!w.coact(Perm::identity(g.front().degree())).is_identity()) rep.fail("counit law fails");
  for (const auto& s : g) {
    for (const auto& t : g) {
      if (!(w.coact(s * t) == w.coact(t) * w.coact(s))) rep.fail("coassociativity fails at " + s.str() + ", " + t.str());
      rep.add_count("pairs_checked");
    }
    const Matrix<S>& c = w.coact(s);
    for (std::size_t j = 0; j < w.dim(); ++j) {
      Perm target = s.inverse() * w.label_degrees[j] * s;
      for (std::size_t i = 0; i < w.dim(); ++i)
        if (!c(i, j).is_zero() && !(w.label_degrees[i] == target)) rep.fail("compatibility fails on " + w.labels[j]);
    }
  }
  rep.ms = sw.elapsed_ms();
  return rep;
}

template <ExactRing S>
struct SimpleYD {
  Perm g;
  std::string irrep;
  std::size_t dim;
  YDModuleOverGroup<S> module;
};

/// One M(g, rho) per class representative g (minimal in group order) and
/// irreducible representation rho of its centralizer. Needs cube roots of
/// unity in S for the 3-cycle class.
template <ExactRing S>
std::vector<SimpleYD<S>> simples_list(std::size_t n = 3) {
  if (n != 3) throw YDError("simples_list: only S3 is supported");
  auto group = symmetric_group(3);
  std::vector<SimpleYD<S>> out;
  for (const auto& g : conjugacy_class_representatives(group)) {
    for (const auto& rho : builtin_irreps<S>(centralizer_descriptor_s3(g))) {
      auto m = induce(group, g, rho);
      std::size_t d = m.dim();
      out.push_back({g, rho.name, d, std::move(m)});
    }
  }
  return out;
}

}  // namespace hopfcheck
