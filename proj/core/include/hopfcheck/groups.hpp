#pragma once

// Permutation groups S_n (n <= 5), their conjugacy classes and centralizers,
// and the hardcoded irreducible representations of S3, Z2 and Z3.
//
// Composition is right-to-left: compose(p, q)(i) = p(q(i)).

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hopfcheck/linalg.hpp"
#include "hopfcheck/scalars.hpp"

namespace hopfcheck {

class GroupError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Perm {
 public:
  static constexpr std::size_t kMaxN = 5;

  /// Degree-0 placeholder; use identity(n) for the group identity.
  Perm() = default;
  /// images[i] is the image of point i+1, written 1-based.
  static Perm from_images(std::span<const int> images);
  static Perm identity(std::size_t n);
  /// Cycle notation: "e", "(12)", "(123)", "(12)(34)".
  static Perm parse(std::string_view cycles, std::size_t n);
  static Perm transposition(int i, int j, std::size_t n);

  std::size_t degree() const { return n_; }
  /// Image of the 1-based point i.
  int operator()(int i) const { return img_[i - 1] + 1; }
  std::vector<int> images() const;

  Perm inverse() const;
  int sign() const;
  bool is_identity() const;
  std::size_t order() const;

  std::string str() const;

  friend bool operator==(const Perm&, const Perm&) = default;
  /// Lexicographic on image sequences (degree first).
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b);

 private:
  std::array<std::uint8_t, kMaxN> img_{};  // 0-based images
  std::uint8_t n_ = 0;
  friend Perm compose(const Perm& p, const Perm& q);
};

/// (p o q)(i) = p(q(i)).
Perm compose(const Perm& p, const Perm& q);
inline Perm operator*(const Perm& p, const Perm& q) { return compose(p, q); }

/// h g h^{-1}
inline Perm conjugate(const Perm& h, const Perm& g) { return h * g * h.inverse(); }

/// All elements of S_n in the fixed (lexicographic) order.
std::vector<Perm> symmetric_group(std::size_t n);
/// Closure of the generators under composition, sorted.
std::vector<Perm> generated_subgroup(const std::vector<Perm>& generators, std::size_t n);

std::vector<Perm> conjugacy_class(const Perm& g, const std::vector<Perm>& group);
std::vector<Perm> centralizer(const Perm& g, const std::vector<Perm>& group);
/// Minimal element of every conjugacy class, in group order.
std::vector<Perm> conjugacy_class_representatives(const std::vector<Perm>& group);
bool is_subgroup(const std::vector<Perm>& h, const std::vector<Perm>& group);
/// One representative per left coset gH, each the minimal element of its coset;
/// the first is always e. Throws when H is not a subgroup of G.
std::vector<Perm> coset_representatives(const std::vector<Perm>& group, const std::vector<Perm>& subgroup);

/// Index of g inside a sorted element list.
std::size_t index_of(const std::vector<Perm>& group, const Perm& g);

// ---------------------------------------------------------------------------
// Representations

enum class GroupKind { S3, Z2, Z3 };

struct GroupDescriptor {
  GroupKind kind;
  /// Generator of the cyclic subgroup (ignored for S3).
  Perm generator;

  static GroupDescriptor s3() { return {GroupKind::S3, Perm::identity(3)}; }
  static GroupDescriptor cyclic(const Perm& gen);
  std::vector<Perm> elements() const;
};

template <ExactRing S>
struct Irrep {
  std::string name;
  std::size_t dim = 0;
  std::vector<Perm> elements;    // sorted
  std::vector<Matrix<S>> images;  // images[i] = rho(elements[i])

  const Matrix<S>& at(const Perm& g) const { return images.at(index_of(elements, g)); }
  bool covers(const std::vector<Perm>& group) const { return elements == group; }
};

namespace detail {

template <ExactRing S>
Irrep<S> irrep_from_generators(std::string name, const std::vector<Perm>& gens, const std::vector<Matrix<S>>& mats,
                               std::size_t n) {
  std::vector<Perm> elems = generated_subgroup(gens, n);
  std::size_t dim = mats.front().rows();
  std::vector<std::optional<Matrix<S>>> found(elems.size());
  found[index_of(elems, Perm::identity(n))] = Matrix<S>::identity(dim);
  std::vector<std::size_t> frontier{index_of(elems, Perm::identity(n))};
  while (!frontier.empty()) {
    std::vector<std::size_t> next;
    for (std::size_t i : frontier) {
      for (std::size_t k = 0; k < gens.size(); ++k) {
        std::size_t j = index_of(elems, gens[k] * elems[i]);
        if (!found[j]) {
          found[j] = mats[k] * *found[i];
          next.push_back(j);
        }
      }
    }
    frontier = std::move(next);
  }
  Irrep<S> rep{std::move(name), dim, elems, {}};
  for (auto& m : found) rep.images.push_back(*m);
  return rep;
}

template <ExactRing S>
Matrix<S> mat2(long a, long b, long c, long d) {
  Matrix<S> m(2, 2);
  m(0, 0) = S(Rational(a));
  m(0, 1) = S(Rational(b));
  m(1, 0) = S(Rational(c));
  m(1, 1) = S(Rational(d));
  return m;
}

template <ExactRing S>
Matrix<S> mat1(const S& x) {
  Matrix<S> m(1, 1);
  m(0, 0) = x;
  return m;
}

}  // namespace detail

/// Built-in irreducible representations.
///  S3: trivial, sign, and the 2-dimensional representation with
///      rho(12) e1 = e2 and rho(123) e1 = -e2.
///  Z2: the two characters. Z3: chi_j(gen) = w^j, which needs cube roots of
///  unity in S (Cyclotomic3); other scalar kinds raise GroupError.
template <ExactRing S>
std::vector<Irrep<S>> builtin_irreps(const GroupDescriptor& desc) {
  using detail::irrep_from_generators;
  using detail::mat1;
  using detail::mat2;
  switch (desc.kind) {
    case GroupKind::S3: {
      Perm s = Perm::parse("(12)", 3);
      Perm r = Perm::parse("(123)", 3);
      std::vector<Perm> gens{s, r};
      S one = S::one();
      return {
          irrep_from_generators<S>("trivial", gens, {mat1(one), mat1(one)}, 3),
          irrep_from_generators<S>("sign", gens, {mat1(-one), mat1(one)}, 3),
          // Column j holds rho(g) e_j.
          irrep_from_generators<S>("standard", gens, {mat2<S>(0, 1, 1, 0), mat2<S>(0, 1, -1, -1)}, 3),
      };
    }
    case GroupKind::Z2: {
      const Perm& t = desc.generator;
      if (t.order() != 2) throw GroupError("Z2 descriptor needs an involution");
      S one = S::one();
      return {irrep_from_generators<S>("trivial", {t}, {mat1(one)}, t.degree()),
              irrep_from_generators<S>("sign", {t}, {mat1(-one)}, t.degree())};
    }
    case GroupKind::Z3: {
      const Perm& c = desc.generator;
      if (c.order() != 3) throw GroupError("Z3 descriptor needs an element of order 3");
      if constexpr (has_cube_roots_of_unity_v<S>) {
        S w = Cyclotomic3::omega();
        return {irrep_from_generators<S>("chi0", {c}, {mat1(S::one())}, c.degree()),
                irrep_from_generators<S>("chi1", {c}, {mat1(w)}, c.degree()),
                irrep_from_generators<S>("chi2", {c}, {mat1(w * w)}, c.degree())};
      } else {
        throw GroupError("Z3 characters need cube roots of unity in the scalar ring");
      }
    }
  }
  throw GroupError("unsupported group");
}

/// Descriptor for the centralizer of g in S3.
GroupDescriptor centralizer_descriptor_s3(const Perm& g);

}  // namespace hopfcheck
