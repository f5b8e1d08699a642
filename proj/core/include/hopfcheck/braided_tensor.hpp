#pragma once

// The braided tensor algebra T(V) for a braided vector space (V, c): words in
// the basis of V, the twisted product on T(V) (x) T(V), the comultiplication
// with primitive generators, and the quadratic relations of V_n.

#include <map>
#include <utility>
#include <vector>

#include "hopfcheck/linalg.hpp"
#include "hopfcheck/word.hpp"
#include "hopfcheck/ydmod.hpp"

namespace hopfcheck {

template <ExactRing S>
using TensorAlgElt = std::map<Word, S>;

template <ExactRing S>
using TensorSquareElt = std::map<std::pair<Word, Word>, S>;

template <class K, ExactRing S>
void accumulate_term(std::map<K, S>& m, const K& key, const S& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = m.try_emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

template <ExactRing S>
class BraidedTensorAlgebra {
 public:
  /// `c` is the braiding on V (x) V in the pair_index layout; `names` label the letters.
  BraidedTensorAlgebra(Matrix<S> c, std::vector<std::string> names, std::size_t cap = Word::kDefaultCap)
      : c_(std::move(c)), names_(std::move(names)), d_(names_.size()), cap_(cap) {
    if (c_.rows() != d_ * d_ || c_.cols() != d_ * d_) throw std::invalid_argument("braiding has the wrong shape");
    cross_.resize(d_ * d_);
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t j = 0; j < d_; ++j)
        for (std::size_t k = 0; k < d_; ++k)
          for (std::size_t l = 0; l < d_; ++l) {
            const S& x = c_(pair_index(k, l, d_), pair_index(i, j, d_));
            if (!x.is_zero()) cross_[pair_index(i, j, d_)].push_back({k, l, x});
          }
  }

  static BraidedTensorAlgebra from_module(const YDModuleOverGroup<S>& v, std::size_t cap = Word::kDefaultCap) {
    return BraidedTensorAlgebra(braiding(v), v.labels, cap);
  }

  std::size_t rank() const { return d_; }
  std::size_t cap() const { return cap_; }
  const std::vector<std::string>& names() const { return names_; }

  TensorAlgElt<S> letter(std::size_t i) const { return {{Word{static_cast<int>(i)}, S::one()}}; }
  TensorAlgElt<S> word(const Word& w) const { return {{w, S::one()}}; }

  TensorAlgElt<S> multiply(const TensorAlgElt<S>& x, const TensorAlgElt<S>& y) const {
    TensorAlgElt<S> out;
    for (const auto& [a, ca] : x)
      for (const auto& [b, cb] : y) accumulate_term(out, concat(a, b, cap_), ca * cb);
    return out;
  }

  /// c(b (x) d) for words b, d: each letter of d crosses b from right to left, in order.
  TensorSquareElt<S> cross(const Word& b, const Word& d) const {
    TensorSquareElt<S> cur{{{Word{}, b}, S::one()}};
    for (auto letter : d) {
      TensorSquareElt<S> next;
      for (const auto& [pair, coef] : cur) {
        // Move `letter` leftward across pair.second, producing letter' (x) b'.
        std::map<std::pair<std::uint8_t, Word>, S> partial{{{letter, Word{}}, coef}};
        const Word& bw = pair.second;
        for (std::size_t pos = bw.size(); pos-- > 0;) {
          std::map<std::pair<std::uint8_t, Word>, S> step;
          for (const auto& [st, pc] : partial) {
            for (const auto& t : cross_[pair_index(bw[pos], st.first, d_)]) {
              // c(b_pos (x) v) = sum v' (x) b_pos'
              Word tail;
              tail.push_back(static_cast<std::uint8_t>(t.right));
              accumulate_term(step, {static_cast<std::uint8_t>(t.left), concat(tail, st.second, cap_)}, pc * t.coef);
            }
          }
          partial = std::move(step);
        }
        for (const auto& [st, pc] : partial) {
          Word left = pair.first;
          left.push_back(st.first);
          accumulate_term(next, {left, st.second}, pc);
        }
      }
      cur = std::move(next);
    }
    return cur;
  }

  /// (a (x) b)(d (x) e) = sum a d' (x) b' e with c(b (x) d) = sum d' (x) b'.
  TensorSquareElt<S> square_multiply(const TensorSquareElt<S>& x, const TensorSquareElt<S>& y) const {
    TensorSquareElt<S> out;
    for (const auto& [ab, cx] : x) {
      for (const auto& [de, cy] : y) {
        for (const auto& [db, cc] : cross(ab.second, de.first)) {
          accumulate_term(out, {concat(ab.first, db.first, cap_), concat(db.second, de.second, cap_)}, cx * cy * cc);
        }
      }
    }
    return out;
  }

  TensorSquareElt<S> comult_word(const Word& w) const {
    TensorSquareElt<S> acc{{{Word{}, Word{}}, S::one()}};
    for (auto l : w) {
      Word single;
      single.push_back(l);
      TensorSquareElt<S> dv{{{single, Word{}}, S::one()}, {{Word{}, single}, S::one()}};
      acc = square_multiply(acc, dv);
    }
    return acc;
  }

  TensorSquareElt<S> comult(const TensorAlgElt<S>& x) const {
    TensorSquareElt<S> out;
    for (const auto& [w, c] : x)
      for (const auto& [pair, d] : comult_word(w)) accumulate_term(out, pair, c * d);
    return out;
  }

  bool is_primitive(const TensorAlgElt<S>& x) const {
    TensorSquareElt<S> expect;
    for (const auto& [w, c] : x) {
      accumulate_term(expect, {w, Word{}}, c);
      accumulate_term(expect, {Word{}, w}, c);
    }
    return comult(x) == expect;
  }

  /// Primitive elements of degree 2: ker(I + c) inside V (x) V, as words.
  std::vector<TensorAlgElt<S>> degree_two_primitives() const {
    Matrix<S> m = Matrix<S>::identity(d_ * d_) + c_;
    std::vector<TensorAlgElt<S>> out;
    for (const auto& v : nullspace(m)) out.push_back(from_degree_two(v));
    return out;
  }

  TensorAlgElt<S> from_degree_two(const Vec<S>& v) const {
    TensorAlgElt<S> x;
    for (std::size_t i = 0; i < d_; ++i)
      for (std::size_t j = 0; j < d_; ++j)
        accumulate_term(x, Word{static_cast<int>(i), static_cast<int>(j)}, v[pair_index(i, j, d_)]);
    return x;
  }

  Vec<S> to_degree_two(const TensorAlgElt<S>& x) const {
    Vec<S> v(d_ * d_, S::zero());
    for (const auto& [w, c] : x) {
      if (w.size() != 2) throw std::invalid_argument("to_degree_two: element is not homogeneous of degree 2");
      v[pair_index(w[0], w[1], d_)] = c;
    }
    return v;
  }

  std::string str(const TensorAlgElt<S>& x) const {
    if (x.empty()) return "0";
    std::string out;
    for (const auto& [w, c] : x) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")" + w.str(names_);
    }
    return out;
  }

 private:
  struct Crossing {
    std::size_t left;
    std::size_t right;
    S coef;
  };
  Matrix<S> c_;
  std::vector<std::string> names_;
  std::size_t d_;
  std::size_t cap_;
  std::vector<std::vector<Crossing>> cross_;
};

/// Squares, disjoint anticommutators and the three-term relations
/// x_s x_t + x_t x_{sts} + x_{sts} x_s of V_n, without duplicates. Letters
/// follow transposition_module(n).
template <ExactRing S>
std::vector<TensorAlgElt<S>> quadratic_relations(std::size_t n) {
  if (n < 3 || n > 5) throw std::invalid_argument("quadratic_relations: n must be 3, 4 or 5");
  auto v = transposition_module<S>(n);
  const auto& ts = v.degrees;
  auto idx = [&](const Perm& t) { return static_cast<int>(std::find(ts.begin(), ts.end(), t) - ts.begin()); };
  std::vector<TensorAlgElt<S>> out;
  auto add_unique = [&](TensorAlgElt<S> x) {
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
  };
  for (std::size_t i = 0; i < ts.size(); ++i) add_unique({{Word{static_cast<int>(i), static_cast<int>(i)}, S::one()}});
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = i + 1; j < ts.size(); ++j) {
      if (!(ts[i] * ts[j] == ts[j] * ts[i])) continue;
      int a = static_cast<int>(i), b = static_cast<int>(j);
      add_unique({{Word{a, b}, S::one()}, {Word{b, a}, S::one()}});
    }
  }
  for (std::size_t i = 0; i < ts.size(); ++i) {
    for (std::size_t j = 0; j < ts.size(); ++j) {
      if (i == j || ts[i] * ts[j] == ts[j] * ts[i]) continue;
      int s = static_cast<int>(i), t = static_cast<int>(j), u = idx(ts[i] * ts[j] * ts[i]);
      TensorAlgElt<S> r;
      accumulate_term(r, Word{s, t}, S::one());
      accumulate_term(r, Word{t, u}, S::one());
      accumulate_term(r, Word{u, s}, S::one());
      add_unique(std::move(r));
    }
  }
  return out;
}

}  // namespace hopfcheck
