#pragma once

// The Hopf algebra A_[a1,a2] on the basis {w d_g}: structure tables for the
// product, coproduct, counit and antipode, and the certificates run on them.
//
// Elements of A are SparseVec over basis indices; elements of A (x) A are
// SparseVec over the flat index left * 72 + right.

#include <map>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "hopfcheck/coalg.hpp"
#include "hopfcheck/linalg.hpp"
#include "hopfcheck/rewrite.hpp"

namespace hopfcheck {

template <ExactRing S>
using TensorElt = SparseVec<S>;

template <ExactRing S>
struct IsotypicPiece {
  Perm g;
  std::size_t n = 0;
  std::vector<SparseVec<S>> span;
};

namespace detail {

/// Dense accumulator with a touched list, reused across products.
template <ExactRing S>
class Accumulator {
 public:
  explicit Accumulator(std::size_t n) : vals_(n, S::zero()), hit_(n, false) {}
  void add(std::uint32_t k, const S& c) {
    if (!hit_[k]) {
      hit_[k] = true;
      touched_.push_back(k);
      vals_[k] = c;
    } else {
      vals_[k] += c;
    }
  }
  SparseVec<S> take() {
    std::sort(touched_.begin(), touched_.end());
    SparseVec<S> out;
    for (auto k : touched_) {
      if (!vals_[k].is_zero()) out.push_back({k, std::move(vals_[k])});
      vals_[k] = S::zero();
      hit_[k] = false;
    }
    touched_.clear();
    return out;
  }

 private:
  std::vector<S> vals_;
  std::vector<bool> hit_;
  std::vector<std::uint32_t> touched_;
};

template <ExactRing S>
SparseVec<S> sparse_scaled(const SparseVec<S>& v, const S& c) {
  SparseVec<S> out;
  if (c.is_zero()) return out;
  for (const auto& [k, x] : v) out.push_back({k, x * c});
  return out;
}

template <ExactRing S>
SparseVec<S> sparse_add(const SparseVec<S>& a, const SparseVec<S>& b, const S& scale = S::one()) {
  std::map<std::uint32_t, S> acc;
  for (const auto& [k, x] : a) acc.emplace(k, x);
  for (const auto& [k, x] : b) {
    auto [it, ins] = acc.try_emplace(k, x * scale);
    if (!ins) it->second += x * scale;
  }
  SparseVec<S> out;
  for (auto& [k, x] : acc)
    if (!x.is_zero()) out.push_back({k, std::move(x)});
  return out;
}

}  // namespace detail

template <ExactRing S>
class Hopf72 {
 public:
  static constexpr std::size_t kDim = 72;

  /// Builds the tables; throws RewriteError when an ambiguity fails to resolve.
  static Hopf72 build(const S& a1, const S& a2, std::size_t fuel = kDefaultFuel) {
    Hopf72 h;
    h.a1_ = a1;
    h.a2_ = a2;
    h.ctx_ = SmashContext::v3();
    h.rules_.emplace(default_rules<S>(h.ctx_, a1, a2));
    for (const auto& amb : h.rules_->overlap_ambiguities()) {
      auto res = h.rules_->resolve_ambiguity(amb, fuel);
      if (!res.resolved) throw RewriteError("unresolved ambiguity\n" + res.trace);
    }
    auto words = h.rules_->irreducible_words(Word::kDefaultCap);
    if (words.size() * h.ctx_->group_size() != kDim) throw RewriteError("basis does not have 72 elements");
    h.table_ = structure_constants(*h.rules_, words, fuel);
    h.init_from_table(fuel);
    return h;
  }

  const S& a1() const { return a1_; }
  const S& a2() const { return a2_; }
  const SmashContext& context() const { return *ctx_; }
  const ContextPtr& context_ptr() const { return ctx_; }
  const RuleSystem<S>& rules() const { return *rules_; }
  const MultTable<S>& table() const { return table_; }
  std::size_t dim() const { return kDim; }
  std::string label(std::uint32_t i) const { return table_.label(i); }
  std::size_t degree(std::uint32_t i) const { return table_.mono(i).w.size(); }
  std::uint8_t group_part(std::uint32_t i) const { return table_.mono(i).g; }

  const TensorElt<S>& comult(std::size_t i) const { return comult_[i]; }
  const S& counit(std::size_t i) const { return counit_[i]; }
  const SparseVec<S>& antipode(std::size_t i) const { return antipode_[i]; }

  SparseVec<S> basis(std::size_t i) const { return {{static_cast<std::uint32_t>(i), S::one()}}; }
  SparseVec<S> unit() const {
    SparseVec<S> u;
    for (std::size_t g = 0; g < ctx_->group_size(); ++g) u.push_back({static_cast<std::uint32_t>(g), S::one()});
    return u;
  }
  SparseVec<S> delta(std::uint8_t g) const { return {{g, S::one()}}; }
  /// x_t as the sum of x_t d_g.
  SparseVec<S> letter(std::uint8_t l) const {
    SparseVec<S> x;
    Word w;
    w.push_back(l);
    for (std::size_t g = 0; g < ctx_->group_size(); ++g)
      x.push_back({table_.index(Mono{w, static_cast<std::uint8_t>(g)}), S::one()});
    return x;
  }

  /// Normal form of an element of T(V) # k^G, as coordinates.
  SparseVec<S> reduce(const SmashElt<S>& x, std::size_t fuel = kDefaultFuel) const {
    return table_.coords(rules_->reduce(x, fuel));
  }
  SmashElt<S> element(const SparseVec<S>& v) const { return table_.element(v); }

  SparseVec<S> multiply(const SparseVec<S>& x, const SparseVec<S>& y) const { return table_.multiply(x, y); }

  TensorElt<S> comult(const SparseVec<S>& x) const {
    detail::Accumulator<S> acc(kDim * kDim);
    for (const auto& [i, c] : x)
      for (const auto& [k, d] : comult_[i]) acc.add(k, c * d);
    return acc.take();
  }
  S counit(const SparseVec<S>& x) const {
    S out = S::zero();
    for (const auto& [i, c] : x) out += c * counit_[i];
    return out;
  }
  SparseVec<S> antipode(const SparseVec<S>& x) const {
    detail::Accumulator<S> acc(kDim);
    for (const auto& [i, c] : x)
      for (const auto& [k, d] : antipode_[i]) acc.add(k, c * d);
    return acc.take();
  }

  TensorElt<S> outer(const SparseVec<S>& x, const SparseVec<S>& y) const {
    TensorElt<S> out;
    for (const auto& [i, c] : x)
      for (const auto& [j, d] : y) out.push_back({static_cast<std::uint32_t>(i * kDim + j), c * d});
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  }

  /// Product in A (x) A. For a left term (a, b) only one right term per pair
  /// of words can contribute, fixed by the k^G parts of a and b.
  TensorElt<S> tensor_multiply(const TensorElt<S>& x, const TensorElt<S>& y) const {
    std::vector<std::int32_t> pos(kDim * kDim, -1);
    for (std::size_t p = 0; p < y.size(); ++p) pos[y[p].first] = static_cast<std::int32_t>(p);
    std::size_t ng = ctx_->group_size();
    std::size_t nw = word_sigma_.size();
    detail::Accumulator<S> acc(kDim * kDim);
    for (const auto& [k, cx] : x) {
      std::uint32_t a = k / kDim, b = k % kDim;
      std::uint8_t ga = static_cast<std::uint8_t>(a % ng), gb = static_cast<std::uint8_t>(b % ng);
      for (std::size_t wc = 0; wc < nw; ++wc) {
        std::uint32_t c = static_cast<std::uint32_t>(wc * ng + ctx_->mul(word_sigma_[wc], ga));
        const auto& e1 = table_.at(a, c);
        if (e1.empty()) continue;
        for (std::size_t wd = 0; wd < nw; ++wd) {
          std::uint32_t d = static_cast<std::uint32_t>(wd * ng + ctx_->mul(word_sigma_[wd], gb));
          std::int32_t p = pos[c * kDim + d];
          if (p < 0) continue;
          const auto& e2 = table_.at(b, d);
          if (e2.empty()) continue;
          S coef = cx * y[p].second;
          for (const auto& [k1, c1] : e1) {
            S c1c = coef * c1;
            for (const auto& [k2, c2] : e2) acc.add(k1 * kDim + k2, c1c * c2);
          }
        }
      }
    }
    return acc.take();
  }

  /// ad d_h (x) = sum_t d_t x S(d_{t^-1 h}) = sum_t d_t x d_{h^-1 t}.
  SparseVec<S> ad_delta(std::uint8_t h, const SparseVec<S>& x) const {
    SparseVec<S> out;
    for (std::size_t t = 0; t < ctx_->group_size(); ++t) {
      auto tt = static_cast<std::uint8_t>(t);
      auto left = multiply(delta(tt), x);
      if (left.empty()) continue;
      out = detail::sparse_add(out, multiply(left, delta(ctx_->mul(ctx_->inv(h), tt))));
    }
    return out;
  }

  /// Hopf structure with every table entry mapped through f.
  template <ExactRing T, class F>
  Hopf72<T> map(F&& f) const {
    Hopf72<T> h;
    h.a1_ = T(f(a1_));
    h.a2_ = T(f(a2_));
    h.ctx_ = ctx_;
    h.rules_.emplace(rules_->template map_scalars<T>(f));
    h.table_ = table_.template map<T>(f);
    h.word_sigma_ = word_sigma_;
    auto mapv = [&](const SparseVec<S>& v) {
      SparseVec<T> out;
      for (const auto& [k, c] : v) {
        T x = f(c);
        if (!x.is_zero()) out.push_back({k, std::move(x)});
      }
      return out;
    };
    for (const auto& v : comult_) h.comult_.push_back(mapv(v));
    for (const auto& c : counit_) h.counit_.push_back(T(f(c)));
    for (const auto& v : antipode_) h.antipode_.push_back(mapv(v));
    return h;
  }

  friend bool same_tables(const Hopf72& a, const Hopf72& b) {
    return a.table_ == b.table_ && a.comult_ == b.comult_ && a.counit_ == b.counit_ && a.antipode_ == b.antipode_;
  }

  std::string str(const SparseVec<S>& v) const {
    if (v.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : v) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")" + label(k);
    }
    return out;
  }
  std::string tensor_str(const TensorElt<S>& v) const {
    if (v.empty()) return "0";
    std::string out;
    for (const auto& [k, c] : v) {
      if (!out.empty()) out += " + ";
      out += "(" + c.str() + ")" + label(k / kDim) + " (x) " + label(k % kDim);
    }
    return out;
  }

 private:
  template <ExactRing T>
  friend class Hopf72;

  Hopf72() = default;

  void init_from_table(std::size_t fuel) {
    const SmashContext& c = *ctx_;
    std::size_t ng = c.group_size();
    const auto& words = table_.words();
    for (const auto& w : words) word_sigma_.push_back(c.sigma(w));

    // Generators.
    std::vector<TensorElt<S>> delta_co(ng);
    for (std::size_t g = 0; g < ng; ++g) {
      detail::Accumulator<S> acc(kDim * kDim);
      for (std::size_t t = 0; t < ng; ++t) {
        auto tt = static_cast<std::uint8_t>(t);
        acc.add(static_cast<std::uint32_t>(t * kDim + c.mul(c.inv(tt), static_cast<std::uint8_t>(g))), S::one());
      }
      delta_co[g] = acc.take();
    }
    std::vector<TensorElt<S>> letter_co;
    std::vector<SparseVec<S>> letter_s;
    for (std::size_t l = 0; l < c.num_letters(); ++l) {
      auto ll = static_cast<std::uint8_t>(l);
      std::uint8_t t = c.letter_element(ll);
      detail::Accumulator<S> acc(kDim * kDim);
      SparseVec<S> x = letter(ll);
      for (const auto& [k, _] : x)
        for (std::size_t g = 0; g < ng; ++g) acc.add(static_cast<std::uint32_t>(k * kDim + g), S::one());
      SmashElt<S> s;
      for (std::size_t h = 0; h < ng; ++h) {
        auto hh = static_cast<std::uint8_t>(h);
        const Perm& hp = c.group()[h];
        S sg = hp.sign() > 0 ? S::one() : -S::one();
        std::uint8_t conj = c.mul(c.inv(hh), c.mul(t, hh));
        std::uint8_t target = letter_for(conj);
        for (const auto& [k, _] : letter(target)) acc.add(static_cast<std::uint32_t>(h * kDim + k), sg);
        Word tw;
        tw.push_back(target);
        add_into(s, smash_mult_raw(c, delta_elt<S>(c, c.group()[c.inv(hh)]), full_tail<S>(c, tw)), -sg);
      }
      letter_co.push_back(acc.take());
      letter_s.push_back(reduce(s, fuel));
    }

    // Words: D(w x) = D(w) D(x), S(w x) = S(x) S(w).
    std::vector<TensorElt<S>> word_co(words.size());
    std::vector<SparseVec<S>> word_s(words.size());
    word_co[0] = outer(unit(), unit());
    word_s[0] = unit();
    for (std::size_t i = 1; i < words.size(); ++i) {
      const Word& w = words[i];
      std::size_t prev = index_of_word(w.prefix(w.size() - 1));
      std::uint8_t last = w[w.size() - 1];
      word_co[i] = tensor_multiply(word_co[prev], letter_co[last]);
      word_s[i] = multiply(letter_s[last], word_s[prev]);
    }
    comult_.assign(kDim, {});
    counit_.assign(kDim, S::zero());
    antipode_.assign(kDim, {});
    for (std::uint32_t i = 0; i < kDim; ++i) {
      Mono m = table_.mono(i);
      std::size_t wi = i / ng;
      comult_[i] = tensor_multiply(word_co[wi], delta_co[m.g]);
      if (m.w.empty() && m.g == c.identity()) counit_[i] = S::one();
      antipode_[i] = multiply(delta(c.inv(m.g)), word_s[wi]);
    }
  }

  std::uint8_t letter_for(std::uint8_t g) const {
    for (std::size_t l = 0; l < ctx_->num_letters(); ++l)
      if (ctx_->letter_element(static_cast<std::uint8_t>(l)) == g) return static_cast<std::uint8_t>(l);
    throw RewriteError("conjugate of a letter degree is not a letter degree");
  }

  std::size_t index_of_word(const Word& w) const { return table_.index(Mono{w, 0}) / ctx_->group_size(); }

  S a1_, a2_;
  ContextPtr ctx_;
  std::optional<RuleSystem<S>> rules_;
  MultTable<S> table_;
  std::vector<std::uint8_t> word_sigma_;
  std::vector<TensorElt<S>> comult_;
  std::vector<S> counit_;
  std::vector<SparseVec<S>> antipode_;
};

// ---------------------------------------------------------------------------
// Certificates

struct HopfCheckOptions {
  /// Check multiplicativity of the coproduct on all 72^2 pairs, or on
  /// `samples` seeded random pairs.
  bool exhaustive_pairs = true;
  std::uint64_t seed = 1;
  std::size_t samples = 500;
};

template <ExactRing S>
Report verify_hopf_axioms(const Hopf72<S>& h, const HopfCheckOptions& opt = {}) {
  Stopwatch sw;
  Report rep("hopf_axioms");
  constexpr std::size_t D = Hopf72<S>::kDim;
  for (std::uint32_t i = 0; i < D; ++i) {
    const auto& d = h.comult(i);
    // Coassociativity.
    std::map<std::uint64_t, S> left, right;
    auto add = [](std::map<std::uint64_t, S>& m, std::uint64_t k, const S& c) {
      auto [it, ins] = m.try_emplace(k, c);
      if (!ins) {
        it->second += c;
        if (it->second.is_zero()) m.erase(it);
      }
    };
    for (const auto& [k, c] : d) {
      std::uint64_t a = k / D, b = k % D;
      for (const auto& [k2, c2] : h.comult(a)) add(left, std::uint64_t(k2) * D + b, c * c2);
      for (const auto& [k2, c2] : h.comult(b)) add(right, a * D * D + k2, c * c2);
    }
    if (left != right) rep.fail("coassociativity fails on " + h.label(i));
    rep.add_count("coassociativity");

    // Counit.
    SparseVec<S> el, er;
    {
      detail::Accumulator<S> al(D), ar(D);
      for (const auto& [k, c] : d) {
        std::uint32_t a = k / D, b = k % D;
        if (!h.counit(a).is_zero()) al.add(b, c * h.counit(a));
        if (!h.counit(b).is_zero()) ar.add(a, c * h.counit(b));
      }
      el = al.take();
      er = ar.take();
    }
    if (el != h.basis(i) || er != h.basis(i)) rep.fail("counit law fails on " + h.label(i));
    rep.add_count("counit");

    // Antipode.
    SparseVec<S> sl, sr;
    for (const auto& [k, c] : d) {
      std::uint32_t a = k / D, b = k % D;
      sl = detail::sparse_add(sl, h.multiply(h.antipode(a), h.basis(b)), c);
      sr = detail::sparse_add(sr, h.multiply(h.basis(a), h.antipode(b)), c);
    }
    SparseVec<S> expect = detail::sparse_scaled(h.unit(), h.counit(i));
    if (sl != expect || sr != expect) rep.fail("antipode law fails on " + h.label(i) + ": " + h.str(sl));
    rep.add_count("antipode");

    // Consequences: eps S = eps, Delta S = (S (x) S) flip Delta.
    if (h.counit(h.antipode(i)) != h.counit(i)) rep.fail("counit(S(x)) != counit(x) on " + h.label(i));
    TensorElt<S> ss;
    for (const auto& [k, c] : d) {
      std::uint32_t a = k / D, b = k % D;
      ss = detail::sparse_add(ss, h.outer(h.antipode(b), h.antipode(a)), c);
    }
    if (h.comult(h.antipode(i)) != ss) rep.fail("comult(S(x)) != (S (x) S) flip comult(x) on " + h.label(i));
    rep.add_count("antipode_consequences");
  }

  // Multiplicativity.
  auto check_pair = [&](std::uint32_t i, std::uint32_t j) {
    TensorElt<S> lhs = h.comult(h.table().at(i, j));
    TensorElt<S> rhs = h.tensor_multiply(h.comult(i), h.comult(j));
    if (lhs != rhs) rep.fail("comult(xy) != comult(x)comult(y) for " + h.label(i) + ", " + h.label(j));
    rep.add_count("multiplicativity_pairs");
  };
  if (opt.exhaustive_pairs) {
    for (std::uint32_t i = 0; i < D; ++i)
      for (std::uint32_t j = 0; j < D; ++j) check_pair(i, j);
  } else {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::uint32_t> pick(0, D - 1);
    for (std::size_t s = 0; s < opt.samples; ++s) check_pair(pick(rng), pick(rng));
    rep.note("multiplicativity sampled on " + std::to_string(opt.samples) + " pairs");
  }
  rep.ms = sw.elapsed_ms();
  return rep;
}

namespace detail {

template <ExactRing S>
using RawTensor = std::map<std::pair<Mono, Mono>, S>;

template <ExactRing S>
void raw_add(RawTensor<S>& t, const Mono& a, const Mono& b, const S& c) {
  if (c.is_zero()) return;
  auto [it, ins] = t.try_emplace({a, b}, c);
  if (!ins) {
    it->second += c;
    if (it->second.is_zero()) t.erase(it);
  }
}

template <ExactRing S>
RawTensor<S> raw_multiply(const SmashContext& ctx, const RawTensor<S>& x, const RawTensor<S>& y) {
  RawTensor<S> out;
  for (const auto& [ab, cx] : x)
    for (const auto& [cd, cy] : y) {
      if (ctx.mul(ctx.sigma(cd.first.w), ab.first.g) != cd.first.g) continue;
      if (ctx.mul(ctx.sigma(cd.second.w), ab.second.g) != cd.second.g) continue;
      raw_add(out, Mono{concat(ab.first.w, cd.first.w, Word::kHardMax), cd.first.g},
              Mono{concat(ab.second.w, cd.second.w, Word::kHardMax), cd.second.g}, cx * cy);
    }
  return out;
}

/// Coproduct of the generators inside (T(V) # k^G) (x) (T(V) # k^G).
template <ExactRing S>
RawTensor<S> raw_letter_comult(const SmashContext& ctx, std::uint8_t l) {
  RawTensor<S> out;
  std::size_t ng = ctx.group_size();
  std::uint8_t t = ctx.letter_element(l);
  Word w;
  w.push_back(l);
  for (std::size_t g = 0; g < ng; ++g)
    for (std::size_t k = 0; k < ng; ++k)
      raw_add(out, Mono{w, static_cast<std::uint8_t>(g)}, Mono{Word{}, static_cast<std::uint8_t>(k)}, S::one());
  for (std::size_t h = 0; h < ng; ++h) {
    auto hh = static_cast<std::uint8_t>(h);
    S sg = ctx.group()[h].sign() > 0 ? S::one() : -S::one();
    std::uint8_t conj = ctx.mul(ctx.inv(hh), ctx.mul(t, hh));
    Word cw;
    for (std::size_t m = 0; m < ctx.num_letters(); ++m)
      if (ctx.letter_element(static_cast<std::uint8_t>(m)) == conj) cw.push_back(static_cast<std::uint8_t>(m));
    for (std::size_t g = 0; g < ng; ++g) raw_add(out, Mono{Word{}, hh}, Mono{cw, static_cast<std::uint8_t>(g)}, sg);
  }
  return out;
}

template <ExactRing S>
RawTensor<S> raw_comult(const SmashContext& ctx, const SmashElt<S>& x) {
  RawTensor<S> out;
  std::size_t ng = ctx.group_size();
  for (const auto& [m, c] : x) {
    RawTensor<S> acc;
    for (std::size_t g = 0; g < ng; ++g)
      for (std::size_t k = 0; k < ng; ++k)
        raw_add(acc, Mono{Word{}, static_cast<std::uint8_t>(g)}, Mono{Word{}, static_cast<std::uint8_t>(k)}, S::one());
    for (auto l : m.w) acc = raw_multiply(ctx, acc, raw_letter_comult<S>(ctx, l));
    RawTensor<S> dg;
    for (std::size_t t = 0; t < ng; ++t) {
      auto tt = static_cast<std::uint8_t>(t);
      raw_add(dg, Mono{Word{}, tt}, Mono{Word{}, ctx.mul(ctx.inv(tt), m.g)}, S::one());
    }
    for (const auto& [ab, v] : raw_multiply(ctx, acc, dg)) raw_add(out, ab.first, ab.second, v * c);
  }
  return out;
}

/// S(w d_g) = d_{g^-1} S(x_tn) ... S(x_t1), inside T(V) # k^G.
template <ExactRing S>
SmashElt<S> raw_antipode(const SmashContext& ctx, const SmashElt<S>& x) {
  std::size_t ng = ctx.group_size();
  auto letter_s = [&](std::uint8_t l) {
    SmashElt<S> s;
    std::uint8_t t = ctx.letter_element(l);
    for (std::size_t h = 0; h < ng; ++h) {
      auto hh = static_cast<std::uint8_t>(h);
      S sg = ctx.group()[h].sign() > 0 ? S::one() : -S::one();
      std::uint8_t conj = ctx.mul(ctx.inv(hh), ctx.mul(t, hh));
      Word cw;
      for (std::size_t m = 0; m < ctx.num_letters(); ++m)
        if (ctx.letter_element(static_cast<std::uint8_t>(m)) == conj) cw.push_back(static_cast<std::uint8_t>(m));
      SmashElt<S> d;
      add_term(d, Mono{Word{}, ctx.inv(hh)}, -sg);
      add_into(s, smash_mult_raw(ctx, d, full_tail<S>(ctx, cw)));
    }
    return s;
  };
  SmashElt<S> out;
  for (const auto& [m, c] : x) {
    SmashElt<S> acc;
    add_term(acc, Mono{Word{}, ctx.inv(m.g)}, c);
    for (std::size_t p = m.w.size(); p-- > 0;) acc = smash_mult_raw(ctx, acc, letter_s(m.w[p]));
    add_into(out, acc);
  }
  return out;
}

}  // namespace detail

/// The five generators of I_(a1,a2), in the order R_(13)(23), R_(23)(13),
/// then the x13, x23 and x12 square relations.
template <ExactRing S>
std::vector<std::pair<std::string, SmashElt<S>>> ideal_generators(const SmashContext& ctx, const S& a1, const S& a2) {
  auto w = [&](const char* s) { return full_tail<S>(ctx, ctx.parse_word(s)); };
  auto d = [&](const char* g, const S& c) { return delta_elt<S>(ctx, Perm::parse(g, 3), c); };
  auto sum = [](std::initializer_list<SmashElt<S>> parts) {
    SmashElt<S> out;
    for (const auto& p : parts) add_into(out, p);
    return out;
  };
  S m1 = -S::one();
  return {
      {"R_(13)(23)", sum({w("x13x23"), w("x23x12"), w("x12x13")})},
      {"R_(23)(13)", sum({w("x23x13"), w("x13x12"), w("x12x23")})},
      {"x13^2 relation", sum({w("x13x13"), d("(12)", m1 * (a1 - a2)), d("(123)", m1 * (a1 - a2)), d("(23)", m1 * a1),
                              d("(132)", m1 * a1)})},
      {"x23^2 relation", sum({w("x23x23"), d("(13)", m1 * a2), d("(123)", m1 * a2), d("(12)", m1 * (a2 - a1)),
                              d("(132)", m1 * (a2 - a1))})},
      {"x12^2 relation", sum({w("x12x12"), d("(23)", a1), d("(123)", a1), d("(13)", a2), d("(132)", a2)})},
  };
}

/// Matrix coefficients of the standard representation of S3 inside k^S3 and
/// e_ij = S^-1(f_ji), as k^G vectors in the group order of ctx.
template <ExactRing S>
SimpleSubcoalgebra<S> standard_coefficients(const SmashContext& ctx) {
  auto subs = simple_subcoalgebras_of_dual_group<S>(ctx.group(), builtin_irreps<S>(GroupDescriptor::s3()));
  for (auto& s : subs)
    if (s.irrep == "standard") return s;
  throw CoalgebraError("standard representation missing");
}

template <ExactRing S>
SmashElt<S> delta_combination([[maybe_unused]] const SmashContext& ctx, const Vec<S>& v) {
  SmashElt<S> x;
  for (std::size_t g = 0; g < v.size(); ++g) add_term(x, Mono{Word{}, static_cast<std::uint8_t>(g)}, v[g]);
  return x;
}

/// c_i - a_i + sum_j a_j e_ij for i = 1, 2.
template <ExactRing S>
std::vector<std::pair<std::string, SmashElt<S>>> c_relations(const SmashContext& ctx, const S& a1, const S& a2) {
  auto sc = standard_coefficients<S>(ctx);
  auto w = [&](const char* s) { return full_tail<S>(ctx, ctx.parse_word(s)); };
  std::vector<S> a{a1, a2};
  std::vector<std::pair<std::string, SmashElt<S>>> out;
  const char* squares[] = {"x13x13", "x23x23"};
  for (std::size_t i = 0; i < 2; ++i) {
    SmashElt<S> r = w(squares[i]);
    add_into(r, w("x12x12"), -S::one());
    add_into(r, unit_elt<S>(ctx), -a[i]);
    for (std::size_t j = 0; j < 2; ++j) add_into(r, delta_combination(ctx, sc.e[i][j]), a[j]);
    out.push_back({"c" + std::to_string(i + 1) + " relation", std::move(r)});
  }
  return out;
}

template <ExactRing S>
Report verify_hopf_ideal(const Hopf72<S>& h, std::size_t fuel = kDefaultFuel) {
  Stopwatch sw;
  Report rep("hopf_ideal");
  const SmashContext& ctx = h.context();
  constexpr std::size_t D = Hopf72<S>::kDim;
  std::map<Mono, SparseVec<S>> cache;
  auto red = [&](const Mono& m) -> const SparseVec<S>& {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    SmashElt<S> x;
    add_term(x, m, S::one());
    return cache.emplace(m, h.reduce(x, fuel)).first->second;
  };
  auto check = [&](const std::string& name, const SmashElt<S>& r) {
    S eps = S::zero();
    for (const auto& [m, c] : r)
      if (m.w.empty() && m.g == ctx.identity()) eps += c;
    if (!eps.is_zero()) rep.fail(name + ": counit is " + eps.str());
    detail::Accumulator<S> acc(D * D);
    for (const auto& [ab, c] : detail::raw_comult(ctx, r)) {
      const auto& l = red(ab.first);
      const auto& rr = red(ab.second);
      for (const auto& [i, ci] : l)
        for (const auto& [j, cj] : rr) acc.add(static_cast<std::uint32_t>(i * D + j), c * ci * cj);
    }
    auto d = acc.take();
    if (!d.empty()) rep.fail(name + ": coproduct does not vanish in A (x) A: " + h.tensor_str(d));
    auto s = h.reduce(detail::raw_antipode(ctx, r), fuel);
    if (!s.empty()) rep.fail(name + ": antipode does not vanish: " + h.str(s));
    auto self = h.reduce(r, fuel);
    if (!self.empty()) rep.fail(name + ": does not vanish in A: " + h.str(self));
    rep.add_count("elements");
  };
  for (const auto& [name, r] : ideal_generators<S>(ctx, h.a1(), h.a2())) check(name, r);
  for (const auto& [name, r] : c_relations<S>(ctx, h.a1(), h.a2())) check(name, r);
  SmashElt<S> squares;
  for (const char* w : {"x12x12", "x13x13", "x23x23"}) add_into(squares, full_tail<S>(ctx, ctx.parse_word(w)));
  check("sum of squares", squares);

  // Every mixed relation R_(ij)(ik) = x_ij x_ik + x_ik x_jk' + ... vanishes in A.
  std::vector<std::uint8_t> letters{0, 1, 2};
  for (auto s : letters)
    for (auto t : letters) {
      if (s == t) continue;
      std::uint8_t st = ctx.letter_element(s), tt = ctx.letter_element(t);
      std::uint8_t u_elem = ctx.mul(st, ctx.mul(tt, st));
      std::uint8_t u = 0;
      for (auto l : letters)
        if (ctx.letter_element(l) == u_elem) u = l;
      SmashElt<S> r;
      add_into(r, full_tail<S>(ctx, Word{s, t}));
      add_into(r, full_tail<S>(ctx, Word{t, u}));
      add_into(r, full_tail<S>(ctx, Word{u, s}));
      if (!h.reduce(r, fuel).empty()) rep.fail("mixed relation " + Word{s, t}.str(ctx.names()) + " does not vanish");
      rep.add_count("mixed_relations");
    }
  rep.ms = sw.elapsed_ms();
  return rep;
}

/// x13^2 - x12^2 = a1 1 - a1 e11 - a2 e12, x23^2 - x12^2 = a2 1 - a1 e21 - a2 e22,
/// and Delta(c_i) = c_i (x) 1 + sum_j e_ij (x) c_j.
template <ExactRing S>
Report c_identity(const Hopf72<S>& h) {
  Stopwatch sw;
  Report rep("c_identity");
  const SmashContext& ctx = h.context();
  auto sc = standard_coefficients<S>(ctx);
  std::vector<S> a{h.a1(), h.a2()};
  auto w = [&](const char* s) { return full_tail<S>(ctx, ctx.parse_word(s)); };
  const char* squares[] = {"x13x13", "x23x23"};
  std::vector<SparseVec<S>> cbar, e_rows[2];
  for (std::size_t i = 0; i < 2; ++i) {
    SmashElt<S> c = w(squares[i]);
    add_into(c, w("x12x12"), -S::one());
    cbar.push_back(h.reduce(c));
    SmashElt<S> rhs = scaled(unit_elt<S>(ctx), a[i]);
    for (std::size_t j = 0; j < 2; ++j) add_into(rhs, delta_combination(ctx, sc.e[i][j]), -a[j]);
    auto r = h.reduce(rhs);
    if (cbar[i] != r) rep.fail("c" + std::to_string(i + 1) + ": " + h.str(cbar[i]) + " != " + h.str(r));
    for (std::size_t j = 0; j < 2; ++j) e_rows[i].push_back(h.reduce(delta_combination(ctx, sc.e[i][j])));
    rep.add_count("identities");
  }
  for (std::size_t i = 0; i < 2; ++i) {
    TensorElt<S> expect = h.outer(cbar[i], h.unit());
    for (std::size_t j = 0; j < 2; ++j) expect = detail::sparse_add(expect, h.outer(e_rows[i][j], cbar[j]));
    if (h.comult(cbar[i]) != expect) rep.fail("coproduct of c" + std::to_string(i + 1) + " has the wrong shape");
    rep.add_count("coproducts");
  }
  rep.ms = sw.elapsed_ms();
  return rep;
}

/// ad d_h label of each basis element: w d_g lies in A^{sigma(w)^-1}. Throws
/// if some basis element is not an eigenvector of every ad d_h.
template <ExactRing S>
std::vector<std::uint8_t> isotypic_labels(const Hopf72<S>& h) {
  std::vector<std::uint8_t> out;
  std::size_t ng = h.context().group_size();
  for (std::uint32_t i = 0; i < Hopf72<S>::kDim; ++i) {
    std::optional<std::uint8_t> found;
    for (std::size_t g = 0; g < ng; ++g) {
      auto r = h.ad_delta(static_cast<std::uint8_t>(g), h.basis(i));
      if (r.empty()) continue;
      if (r != h.basis(i) || found) throw RewriteError("basis element " + h.label(i) + " is not ad-isotypic");
      found = static_cast<std::uint8_t>(g);
    }
    if (!found) throw RewriteError("basis element " + h.label(i) + " is killed by every ad d_h");
    out.push_back(*found);
  }
  return out;
}

template <ExactRing S>
Vec<S> dense(const SparseVec<S>& v, std::size_t n) {
  Vec<S> out(n, S::zero());
  for (const auto& [k, c] : v) out[k] = c;
  return out;
}

/// Pieces F_n^g = ad d_g(F_n), F_n spanned by w d_g with |w| <= n.
template <ExactRing S>
std::vector<IsotypicPiece<S>> adjoint_isotypics(const Hopf72<S>& h, std::size_t n) {
  if (n > 4) throw std::invalid_argument("adjoint_isotypics: degree must be at most 4");
  const SmashContext& ctx = h.context();
  std::vector<IsotypicPiece<S>> out;
  for (std::size_t g = 0; g < ctx.group_size(); ++g) {
    IsotypicPiece<S> p{ctx.group()[g], n, {}};
    std::vector<Vec<S>> dv;
    for (std::uint32_t i = 0; i < Hopf72<S>::kDim; ++i) {
      if (h.degree(i) > n) continue;
      auto v = h.ad_delta(static_cast<std::uint8_t>(g), h.basis(i));
      if (v.empty()) continue;
      auto ext = dv;
      ext.push_back(dense(v, Hopf72<S>::kDim));
      if (rank_of(ext, Hopf72<S>::kDim) > dv.size()) {
        dv = std::move(ext);
        p.span.push_back(std::move(v));
      }
    }
    out.push_back(std::move(p));
  }
  return out;
}

template <ExactRing S>
std::size_t filtration_dim(const Hopf72<S>& h, std::size_t n) {
  std::size_t d = 0;
  for (std::uint32_t i = 0; i < Hopf72<S>::kDim; ++i)
    if (h.degree(i) <= n) ++d;
  return d;
}

template <ExactRing S>
Report isotypic_filtration_suite(const Hopf72<S>& h) {
  Stopwatch sw;
  Report rep("isotypic_filtration");
  const SmashContext& ctx = h.context();
  constexpr std::size_t D = Hopf72<S>::kDim;
  auto labels = isotypic_labels(h);
  std::vector<std::vector<IsotypicPiece<S>>> pieces;
  for (std::size_t n = 0; n <= 4; ++n) {
    pieces.push_back(adjoint_isotypics(h, n));
    std::size_t total = 0;
    for (const auto& p : pieces.back()) total += p.span.size();
    if (total != filtration_dim(h, n)) rep.fail("isotypic pieces of F_" + std::to_string(n) + " do not add up");
  }
  // Membership of v in F_n^g, using the isotypic basis.
  auto in_piece = [&](const SparseVec<S>& v, std::size_t n, std::uint8_t g) {
    for (const auto& [k, c] : v)
      if (h.degree(k) > n || labels[k] != g) return false;
    return true;
  };
  // Each piece is spanned by the basis elements with the matching label.
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::size_t g = 0; g < ctx.group_size(); ++g) {
      std::size_t count = 0;
      for (std::uint32_t i = 0; i < D; ++i)
        if (h.degree(i) <= n && labels[i] == g) ++count;
      const auto& p = pieces[n][g];
      bool ok = count == p.span.size();
      for (const auto& v : p.span) ok = ok && in_piece(v, n, static_cast<std::uint8_t>(g));
      if (!ok) rep.fail("F_" + std::to_string(n) + "^" + ctx.group()[g].str() + " is not spanned by labelled basis");
    }

  // (a) F_n^g F_m^h in F_{n+m}^{gh}.
  for (std::uint32_t i = 0; i < D; ++i)
    for (std::uint32_t j = 0; j < D; ++j) {
      const auto& p = h.table().at(i, j);
      std::size_t n = std::min<std::size_t>(h.degree(i) + h.degree(j), 4);
      if (!in_piece(p, n, ctx.mul(labels[i], labels[j]))) {
        rep.fail("(a) " + h.label(i) + " * " + h.label(j) + " leaves F_" + std::to_string(n) + "^" +
                 ctx.group()[ctx.mul(labels[i], labels[j])].str());
      }
      rep.add_count("a_products");
    }

  // (b) d_h x_t = x_t d_{t^-1 h}.
  for (std::size_t l = 0; l < ctx.num_letters(); ++l) {
    auto ll = static_cast<std::uint8_t>(l);
    std::uint8_t t = ctx.letter_element(ll);
    Word w;
    w.push_back(ll);
    for (std::size_t g = 0; g < ctx.group_size(); ++g) {
      auto gg = static_cast<std::uint8_t>(g);
      auto lhs = h.multiply(h.delta(gg), h.letter(ll));
      SparseVec<S> rhs{{h.table().index(Mono{w, ctx.mul(ctx.inv(t), gg)}), S::one()}};
      if (lhs != rhs) rep.fail("(b) fails for d_" + ctx.group()[g].str() + " " + ctx.names()[l]);
      rep.add_count("b_pairs");
    }
  }

  // S(F_n^g) = F_n^{g^-1}, piece by piece. This fails for S3 whenever g is
  // not central; the class-wise form below is what holds.
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::size_t g = 0; g < ctx.group_size(); ++g) {
      auto gi = ctx.inv(static_cast<std::uint8_t>(g));
      std::vector<Vec<S>> images;
      bool inside = true;
      for (const auto& v : pieces[n][g].span) {
        auto s = h.antipode(v);
        inside = inside && in_piece(s, n, gi);
        images.push_back(dense(s, D));
      }
      if (!inside || rank_of(images, D) != pieces[n][gi].span.size()) {
        rep.fail("S(F_" + std::to_string(n) + "^" + ctx.group()[g].str() + ") != F_" + std::to_string(n) + "^" +
                 ctx.group()[gi].str());
        rep.add_count("antipode_pieces_failed");
      }
      rep.add_count("antipode_pieces");
    }

  // Class-wise: S maps the sum of F_n^c over a conjugacy class O onto the sum over O^-1.
  auto class_of = [&](std::uint8_t g) {
    std::vector<std::uint8_t> cls;
    for (std::size_t k = 0; k < ctx.group_size(); ++k) {
      auto kk = static_cast<std::uint8_t>(k);
      auto c = ctx.mul(kk, ctx.mul(g, ctx.inv(kk)));
      if (std::find(cls.begin(), cls.end(), c) == cls.end()) cls.push_back(c);
    }
    return cls;
  };
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::size_t g = 0; g < ctx.group_size(); ++g) {
      auto cls = class_of(static_cast<std::uint8_t>(g));
      if (*std::min_element(cls.begin(), cls.end()) != g) continue;
      auto inv_cls = class_of(ctx.inv(static_cast<std::uint8_t>(g)));
      std::vector<Vec<S>> images;
      std::size_t target_dim = 0;
      bool inside = true;
      for (auto c : inv_cls) target_dim += pieces[n][c].span.size();
      for (auto c : cls)
        for (const auto& v : pieces[n][c].span) {
          auto s = h.antipode(v);
          for (const auto& [k, x] : s)
            inside = inside && h.degree(k) <= n &&
                     std::find(inv_cls.begin(), inv_cls.end(), labels[k]) != inv_cls.end();
          images.push_back(dense(s, D));
        }
      bool held = inside && rank_of(images, D) == target_dim;
      if (!held) {
        rep.fail("class-wise antipode fails at F_" + std::to_string(n) + " for the class of " + ctx.group()[g].str());
      }
      rep.add_count("antipode_classes");
      rep.add_count("antipode_classes_held", held ? 1 : 0);
    }

  // (d) supp F_1, closed under inverses.
  std::vector<Perm> supp;
  for (std::size_t g = 0; g < ctx.group_size(); ++g)
    if (!pieces[1][g].span.empty()) supp.push_back(ctx.group()[g]);
  std::vector<Perm> expect{Perm::parse("e", 3), Perm::parse("(12)", 3), Perm::parse("(13)", 3),
                           Perm::parse("(23)", 3)};
  std::sort(expect.begin(), expect.end());
  if (supp != expect) rep.fail("(d) supp F_1 is not {e, (12), (13), (23)}");
  for (const auto& g : supp)
    if (std::find(supp.begin(), supp.end(), g.inverse()) == supp.end()) rep.fail("(d) supp F_1 not inverse-closed");
  rep.set_count("supp_F1", static_cast<std::int64_t>(supp.size()));

  // (e) F_1^e = k^G.
  const auto& f1e = pieces[1][ctx.identity()].span;
  bool only_deltas = f1e.size() == ctx.group_size();
  for (const auto& v : f1e)
    for (const auto& [k, c] : v) only_deltas = only_deltas && h.degree(k) == 0;
  if (!only_deltas) rep.fail("(e) F_1^e is not k^G");
  rep.ms = sw.elapsed_ms();
  return rep;
}

template <ExactRing S>
FinCoalgebra<S> as_coalgebra(const Hopf72<S>& h) {
  constexpr std::size_t D = Hopf72<S>::kDim;
  std::vector<std::string> labels;
  std::vector<std::vector<CoTerm<S>>> comult;
  std::vector<S> counit;
  for (std::uint32_t i = 0; i < D; ++i) {
    labels.push_back(h.label(i));
    std::vector<CoTerm<S>> terms;
    for (const auto& [k, c] : h.comult(i)) terms.push_back({k / D, k % D, c});
    comult.push_back(std::move(terms));
    counit.push_back(h.counit(i));
  }
  return {std::move(labels), std::move(comult), std::move(counit)};
}

/// Filtration F_0 ... F_4 by word length passes the coalgebra-filtration
/// check, and F_0 is k^G with simple subcoalgebras of ranks 1, 1, 2. Together
/// these pin the coradical to F_0 = k^G.
template <ExactRing S>
Report coradical_certificate(const Hopf72<S>& h) {
  Stopwatch sw;
  Report rep("coradical");
  constexpr std::size_t D = Hopf72<S>::kDim;
  const SmashContext& ctx = h.context();
  auto c = as_coalgebra(h);
  std::vector<std::vector<Vec<S>>> levels(5);
  for (std::size_t n = 0; n <= 4; ++n)
    for (std::uint32_t i = 0; i < D; ++i)
      if (h.degree(i) <= n) levels[n].push_back(dense(h.basis(i), D));
  rep.absorb(verify_coalgebra_filtration(c, levels));

  std::vector<Vec<S>> deltas;
  std::vector<std::string> names;
  for (std::size_t g = 0; g < ctx.group_size(); ++g) {
    deltas.push_back(dense(h.delta(static_cast<std::uint8_t>(g)), D));
    names.push_back(delta_label(ctx.group()[g]));
  }
  auto f0 = subcoalgebra(c, deltas, names);
  auto kg = dual_group_coalgebra<S>(ctx.group());
  for (std::size_t g = 0; g < ctx.group_size(); ++g) {
    if (f0.apply_comult(kg.basis_vector(g)) != kg.apply_comult(kg.basis_vector(g)) || f0.counit(g) != kg.counit(g))
      rep.fail("F_0 differs from k^G at " + names[g]);
  }
  auto simples = simple_subcoalgebras_of_dual_group<S>(ctx.group(), builtin_irreps<S>(GroupDescriptor::s3()));
  std::vector<std::int64_t> ranks;
  std::int64_t total = 0;
  for (const auto& s : simples) {
    ranks.push_back(static_cast<std::int64_t>(s.rank));
    total += static_cast<std::int64_t>(s.rank * s.rank);
    // The matrix coefficients comultiply as a matrix coalgebra inside A.
    for (std::size_t i = 0; i < s.rank; ++i)
      for (std::size_t j = 0; j < s.rank; ++j) {
        auto fij = h.reduce(delta_combination(ctx, s.f[i][j]));
        TensorElt<S> expect;
        for (std::size_t k = 0; k < s.rank; ++k)
          expect = detail::sparse_add(expect, h.outer(h.reduce(delta_combination(ctx, s.f[i][k])),
                                                      h.reduce(delta_combination(ctx, s.f[k][j]))));
        if (h.comult(fij) != expect) rep.fail("matrix coefficient of " + s.irrep + " is not a matrix coalgebra in A");
      }
  }
  std::sort(ranks.begin(), ranks.end());
  if (ranks != std::vector<std::int64_t>{1, 1, 2} || total != 6) rep.fail("F_0 does not split as 1 + 1 + 4");
  rep.set_count("simple_subcoalgebras", static_cast<std::int64_t>(simples.size()));
  rep.set_count("coradical_dim", total);
  rep.note("coradical = F_0 = k^S3: the filtration bounds it above, cosemisimplicity of F_0 below");
  rep.ms = sw.elapsed_ms();
  return rep;
}

/// The length-homogeneous top part of every product agrees with the product
/// in the graded algebra A_[0,0].
template <ExactRing S>
Report gr_check(const Hopf72<S>& h, const MultTable<S>& graded) {
  Stopwatch sw;
  Report rep("gr_check");
  constexpr std::size_t D = Hopf72<S>::kDim;
  auto top = [&](const SparseVec<S>& v, std::size_t len) {
    SparseVec<S> out;
    for (const auto& [k, c] : v)
      if (h.degree(k) == len) out.push_back({k, c});
    return out;
  };
  for (std::uint32_t i = 0; i < D; ++i)
    for (std::uint32_t j = 0; j < D; ++j) {
      std::size_t len = h.degree(i) + h.degree(j);
      if (top(h.table().at(i, j), len) != top(graded.at(i, j), len))
        rep.fail("top part differs for " + h.label(i) + " * " + h.label(j));
      rep.add_count("pairs");
    }
  rep.ms = sw.elapsed_ms();
  return rep;
}

template <ExactRing S>
Report gr_check(const Hopf72<S>& h) {
  auto zero = default_rules<S>(h.context_ptr(), S::zero(), S::zero());
  return gr_check(h, structure_constants(zero, h.table().words()));
}

/// Text dump of all structure tables; stable across runs.
template <ExactRing S>
std::string dump_text(const Hopf72<S>& h) {
  constexpr std::size_t D = Hopf72<S>::kDim;
  std::ostringstream os;
  os << "a1 = " << h.a1().str() << "\na2 = " << h.a2().str() << "\n[basis]\n";
  for (std::uint32_t i = 0; i < D; ++i) os << i << " " << h.label(i) << "\n";
  os << "[mult]\n";
  for (std::uint32_t i = 0; i < D; ++i)
    for (std::uint32_t j = 0; j < D; ++j) {
      const auto& e = h.table().at(i, j);
      if (!e.empty()) os << h.label(i) << " * " << h.label(j) << " = " << h.str(e) << "\n";
    }
  os << "[comult]\n";
  for (std::uint32_t i = 0; i < D; ++i) os << h.label(i) << " -> " << h.tensor_str(h.comult(i)) << "\n";
  os << "[counit]\n";
  for (std::uint32_t i = 0; i < D; ++i)
    if (!h.counit(i).is_zero()) os << h.label(i) << " -> " << h.counit(i).str() << "\n";
  os << "[antipode]\n";
  for (std::uint32_t i = 0; i < D; ++i) os << h.label(i) << " -> " << h.str(h.antipode(i)) << "\n";
  return os.str();
}

}  // namespace hopfcheck
