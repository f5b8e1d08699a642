#pragma once

// Rewriting in T(V) # k^G. An element is a combination of monomials w d_g with
// the k^G part always on the right; d_s w = w d_{sigma(w) s} where
// sigma(x_t1 ... x_tn) = t_n ... t_1. Rules rewrite x-words only.

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <unordered_map>
#include <vector>

#include "hopfcheck/groups.hpp"
#include "hopfcheck/report.hpp"
#include "hopfcheck/scalars.hpp"
#include "hopfcheck/word.hpp"

namespace hopfcheck {

class RewriteError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SmashContext {
 public:
  SmashContext(std::vector<Perm> group, std::vector<std::string> letter_names, std::vector<Perm> letter_elements,
               std::size_t cap = Word::kDefaultCap);

  /// S3 with letters x12, x13, x23.
  static std::shared_ptr<const SmashContext> v3(std::size_t cap = Word::kDefaultCap);
  /// Trivial group: the plain free algebra on the given letters.
  static std::shared_ptr<const SmashContext> free_algebra(std::vector<std::string> letter_names,
                                                          std::size_t cap = Word::kDefaultCap);

  std::size_t group_size() const { return group_.size(); }
  const std::vector<Perm>& group() const { return group_; }
  std::uint8_t identity() const { return identity_; }
  std::uint8_t mul(std::uint8_t a, std::uint8_t b) const { return mul_[a * group_.size() + b]; }
  std::uint8_t inv(std::uint8_t a) const { return inv_[a]; }
  std::uint8_t index(const Perm& g) const { return static_cast<std::uint8_t>(index_of(group_, g)); }

  std::size_t num_letters() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  std::uint8_t letter_element(std::uint8_t letter) const { return letter_elem_[letter]; }
  std::uint8_t letter_index(const std::string& name) const;
  std::size_t cap() const { return cap_; }

  /// sigma(x_t1 ... x_tn) = t_n o ... o t_1.
  std::uint8_t sigma(const Word& w) const {
    std::uint8_t s = identity_;
    for (auto l : w) s = mul(letter_elem_[l], s);
    return s;
  }

  Word parse_word(const std::string& text) const;

 private:
  std::vector<Perm> group_;
  std::vector<std::string> names_;
  std::vector<std::uint8_t> letter_elem_;
  std::vector<std::uint8_t> mul_;
  std::vector<std::uint8_t> inv_;
  std::uint8_t identity_ = 0;
  std::size_t cap_;
};

using ContextPtr = std::shared_ptr<const SmashContext>;

struct Mono {
  Word w;
  std::uint8_t g = 0;
  friend bool operator==(const Mono&, const Mono&) = default;
  friend std::strong_ordering operator<=>(const Mono& a, const Mono& b) {
    if (auto c = a.w <=> b.w; c != 0) return c;
    return a.g <=> b.g;
  }
};

template <ExactRing S>
using SmashElt = std::map<Mono, S>;

template <ExactRing S>
void add_term(SmashElt<S>& x, const Mono& m, const S& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = x.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) x.erase(it);
  }
}

template <ExactRing S>
void add_into(SmashElt<S>& x, const SmashElt<S>& y, const S& scale = S::one()) {
  for (const auto& [m, c] : y) add_term(x, m, c * scale);
}

template <ExactRing S>
SmashElt<S> difference(const SmashElt<S>& x, const SmashElt<S>& y) {
  SmashElt<S> d = x;
  add_into(d, y, -S::one());
  return d;
}

template <ExactRing S>
SmashElt<S> scaled(const SmashElt<S>& x, const S& c) {
  SmashElt<S> out;
  add_into(out, x, c);
  return out;
}

/// w times the unit sum_g d_g.
template <ExactRing S>
SmashElt<S> full_tail(const SmashContext& ctx, const Word& w, const S& c = S::one()) {
  SmashElt<S> x;
  for (std::size_t g = 0; g < ctx.group_size(); ++g) add_term(x, Mono{w, static_cast<std::uint8_t>(g)}, c);
  return x;
}

template <ExactRing S>
SmashElt<S> unit_elt(const SmashContext& ctx) {
  return full_tail<S>(ctx, Word{});
}

template <ExactRing S>
SmashElt<S> delta_elt(const SmashContext& ctx, const Perm& g, const S& c = S::one()) {
  SmashElt<S> x;
  add_term(x, Mono{Word{}, ctx.index(g)}, c);
  return x;
}

/// kappa' with kappa w = w kappa': kappa'(sigma(w) s) = kappa(s).
template <ExactRing S>
std::vector<S> shift_tail(const SmashContext& ctx, const std::vector<S>& kappa, const Word& w) {
  std::uint8_t sw = ctx.sigma(w);
  std::vector<S> out(ctx.group_size(), S::zero());
  for (std::size_t s = 0; s < kappa.size(); ++s) out[ctx.mul(sw, static_cast<std::uint8_t>(s))] = kappa[s];
  return out;
}

/// (w d_g)(w' d_h) = [sigma(w') g = h] (w w') d_h, without reduction.
template <ExactRing S>
SmashElt<S> smash_mult_raw(const SmashContext& ctx, const SmashElt<S>& x, const SmashElt<S>& y) {
  SmashElt<S> out;
  for (const auto& [my, cy] : y) {
    std::uint8_t sy = ctx.sigma(my.w);
    for (const auto& [mx, cx] : x) {
      if (ctx.mul(sy, mx.g) != my.g) continue;
      add_term(out, Mono{concat(mx.w, my.w, ctx.cap()), my.g}, cx * cy);
    }
  }
  return out;
}

template <ExactRing S>
std::string to_string(const SmashContext& ctx, const SmashElt<S>& x) {
  if (x.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : x) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    if (!m.w.empty()) out += "*" + m.w.str(ctx.names());
    out += "*d_" + ctx.group()[m.g].str();
  }
  return out;
}

template <ExactRing S>
struct Rule {
  Word lhs;
  SmashElt<S> rhs;
};

struct TraceStep {
  std::size_t position;
  std::size_t rule;
  Mono mono;
};

class ReductionError : public RewriteError {
 public:
  ReductionError(const std::string& what, std::string trace) : RewriteError(what), trace_(std::move(trace)) {}
  const std::string& trace() const { return trace_; }

 private:
  std::string trace_;
};

inline constexpr std::size_t kDefaultFuel = 1000000;

template <ExactRing S>
struct Ambiguity {
  std::size_t left_rule;
  std::size_t right_rule;
  std::size_t overlap;  // |Y|
  Word word;            // XYZ
};

template <ExactRing S>
struct AmbiguityResult {
  bool resolved = false;
  SmashElt<S> via_left;
  SmashElt<S> via_right;
  std::string trace;
};

template <ExactRing S>
class RuleSystem {
 public:
  /// Checks: rhs words shorter than lhs, or of equal length and free of every
  /// lhs; and no lhs is a subword of another.
  RuleSystem(ContextPtr ctx, std::vector<Rule<S>> rules) : RuleSystem(std::move(ctx), std::move(rules), true) {}

  const SmashContext& context() const { return *ctx_; }
  const ContextPtr& context_ptr() const { return ctx_; }
  const std::vector<Rule<S>>& rules() const { return rules_; }
  std::size_t size() const { return rules_.size(); }

  std::optional<std::pair<std::size_t, std::size_t>> leftmost_redex(const Word& w) const {
    for (std::size_t pos = 0; pos < w.size(); ++pos) {
      for (std::size_t r : by_first_[w[pos]]) {
        if (w.matches_at(rules_[r].lhs, pos)) return std::make_pair(pos, r);
      }
    }
    return std::nullopt;
  }

  bool is_irreducible(const Word& w) const { return !leftmost_redex(w); }

  /// Normal form: repeatedly rewrite the leftmost redex (ties by rule order)
  /// in the deglex-largest pending monomial.
  SmashElt<S> reduce(const SmashElt<S>& x, std::size_t fuel = kDefaultFuel,
                     std::vector<TraceStep>* trace = nullptr) const {
    SmashElt<S> pending = x;
    SmashElt<S> done;
    std::deque<TraceStep> recent;
    std::size_t steps = 0;
    while (!pending.empty()) {
      auto it = std::prev(pending.end());
      Mono m = it->first;
      S c = std::move(it->second);
      pending.erase(it);
      auto redex = leftmost_redex(m.w);
      if (!redex) {
        add_term(done, m, c);
        continue;
      }
      if (++steps > fuel) {
        throw ReductionError("reduction fuel exhausted after " + std::to_string(fuel) + " rewrites",
                             format_trace(recent));
      }
      auto [pos, r] = *redex;
      TraceStep step{pos, r, m};
      if (trace) trace->push_back(step);
      recent.push_back(step);
      if (recent.size() > 16) recent.pop_front();
      const Rule<S>& rule = rules_[r];
      Word u = m.w.prefix(pos);
      Word v = m.w.suffix_from(pos + rule.lhs.size());
      std::uint8_t sv = ctx_->sigma(v);
      for (const auto& [rm, rc] : rule.rhs) {
        if (ctx_->mul(sv, rm.g) != m.g) continue;
        add_term(pending, Mono{concat3(u, rm.w, v, Word::kHardMax), m.g}, c * rc);
      }
    }
    return done;
  }

  SmashElt<S> multiply(const SmashElt<S>& x, const SmashElt<S>& y, std::size_t fuel = kDefaultFuel) const {
    return reduce(smash_mult_raw(*ctx_, x, y), fuel);
  }

  std::string format_trace(const std::deque<TraceStep>& steps) const {
    std::ostringstream os;
    for (const auto& s : steps) os << step_string(s) << "\n";
    return os.str();
  }
  std::string format_trace(const std::vector<TraceStep>& steps) const {
    std::ostringstream os;
    for (const auto& s : steps) os << step_string(s) << "\n";
    return os.str();
  }

  /// (position, rule index, result of the single rewrite).
  std::string step_string(const TraceStep& s) const {
    const Rule<S>& rule = rules_[s.rule];
    Word u = s.mono.w.prefix(s.position);
    Word v = s.mono.w.suffix_from(s.position + rule.lhs.size());
    std::uint8_t sv = ctx_->sigma(v);
    SmashElt<S> res;
    for (const auto& [rm, rc] : rule.rhs)
      if (ctx_->mul(sv, rm.g) == s.mono.g) add_term(res, Mono{concat3(u, rm.w, v, Word::kHardMax), s.mono.g}, rc);
    return "(" + std::to_string(s.position) + ", " + std::to_string(s.rule) + ", " + to_string(*ctx_, res) + ")";
  }

  /// Breadth-first enumeration of words avoiding every lhs.
  std::vector<Word> irreducible_words(std::size_t maxlen) const {
    std::vector<Word> out{Word{}};
    std::vector<Word> frontier{Word{}};
    for (std::size_t len = 1; !frontier.empty(); ++len) {
      if (len > maxlen) {
        throw RewriteError("irreducible words still appear at length " + std::to_string(maxlen) +
                           "; basis possibly infinite");
      }
      std::vector<Word> next;
      for (const auto& w : frontier) {
        for (std::size_t l = 0; l < ctx_->num_letters(); ++l) {
          Word x = w;
          x.push_back(static_cast<std::uint8_t>(l));
          if (!ends_with_lhs(x)) next.push_back(x);
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    return out;
  }

  std::vector<Ambiguity<S>> overlap_ambiguities() const {
    std::vector<Ambiguity<S>> out;
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      for (std::size_t j = 0; j < rules_.size(); ++j) {
        const Word& a = rules_[i].lhs;
        const Word& b = rules_[j].lhs;
        for (std::size_t k = 1; k < std::min(a.size(), b.size()); ++k) {
          if (a.suffix_from(a.size() - k) == b.prefix(k)) {
            out.push_back({i, j, k, concat(a, b.suffix_from(k), Word::kHardMax)});
          }
        }
      }
    }
    return out;
  }

  /// Reduces XYZ (with the full k^G tail) via the left redex XY and via the
  /// right redex YZ and compares the normal forms.
  AmbiguityResult<S> resolve_ambiguity(const Ambiguity<S>& amb, std::size_t fuel = kDefaultFuel) const {
    const Rule<S>& l = rules_[amb.left_rule];
    const Rule<S>& r = rules_[amb.right_rule];
    Word z = amb.word.suffix_from(l.lhs.size());
    Word xw = amb.word.prefix(amb.word.size() - r.lhs.size());
    SmashElt<S> left_step = smash_mult_raw(*ctx_, l.rhs, full_tail<S>(*ctx_, z));
    SmashElt<S> right_step = smash_mult_raw(*ctx_, full_tail<S>(*ctx_, xw), r.rhs);
    AmbiguityResult<S> res;
    std::vector<TraceStep> tl, tr;
    res.via_left = reduce(left_step, fuel, &tl);
    res.via_right = reduce(right_step, fuel, &tr);
    res.resolved = res.via_left == res.via_right;
    if (!res.resolved) {
      res.trace = "word " + amb.word.str(ctx_->names()) + "\nleft:\n" + format_trace(tl) + "right:\n" +
                  format_trace(tr) + "difference: " + to_string(*ctx_, difference(res.via_left, res.via_right)) +
                  "\n";
    }
    return res;
  }

  /// Each rule's lhs - rhs, times the unit, reduces to zero.
  bool rules_reduce_to_zero(std::size_t fuel = kDefaultFuel) const {
    for (const auto& rule : rules_) {
      SmashElt<S> x = full_tail<S>(*ctx_, rule.lhs);
      add_into(x, rule.rhs, -S::one());
      if (!reduce(x, fuel).empty()) return false;
    }
    return true;
  }

  template <ExactRing T, class F>
  RuleSystem<T> map_scalars(F&& f) const {
    std::vector<Rule<T>> out;
    for (const auto& rule : rules_) {
      Rule<T> r{rule.lhs, {}};
      for (const auto& [m, c] : rule.rhs) add_term(r.rhs, m, T(f(c)));
      out.push_back(std::move(r));
    }
    return RuleSystem<T>(ctx_, std::move(out));
  }

  static RuleSystem unchecked(ContextPtr ctx, std::vector<Rule<S>> rules) {
    return RuleSystem(std::move(ctx), std::move(rules), false);
  }

 private:
  RuleSystem(ContextPtr ctx, std::vector<Rule<S>> rules, bool validate) : ctx_(std::move(ctx)), rules_(std::move(rules)) {
    by_first_.assign(ctx_->num_letters(), {});
    for (std::size_t r = 0; r < rules_.size(); ++r) {
      if (rules_[r].lhs.empty()) throw RewriteError("rule with empty left side");
      by_first_[rules_[r].lhs[0]].push_back(r);
    }
    if (validate) check_invariants();
  }

  void check_invariants() const {
    for (std::size_t i = 0; i < rules_.size(); ++i) {
      for (std::size_t j = 0; j < rules_.size(); ++j) {
        if (i != j && rules_[j].lhs.contains(rules_[i].lhs)) {
          throw RewriteError("inclusion ambiguity: " + rules_[i].lhs.str(ctx_->names()) + " inside " +
                             rules_[j].lhs.str(ctx_->names()));
        }
      }
      for (const auto& [m, c] : rules_[i].rhs) {
        if (m.w.size() > rules_[i].lhs.size()) {
          throw RewriteError("rule " + std::to_string(i) + " has a longer word on the right");
        }
        if (m.w.size() == rules_[i].lhs.size()) {
          for (const auto& other : rules_) {
            if (m.w.contains(other.lhs)) {
              throw RewriteError("rule " + std::to_string(i) + ": equal-length right word " +
                                 m.w.str(ctx_->names()) + " is reducible");
            }
          }
        }
      }
    }
  }

  bool ends_with_lhs(const Word& x) const {
    for (const auto& rule : rules_) {
      if (rule.lhs.size() <= x.size() && x.matches_at(rule.lhs, x.size() - rule.lhs.size())) return true;
    }
    return false;
  }

  ContextPtr ctx_;
  std::vector<Rule<S>> rules_;
  std::vector<std::vector<std::size_t>> by_first_;
};

/// The eight rules of A_[a1,a2] over the context of SmashContext::v3().
template <ExactRing S>
RuleSystem<S> default_rules(const ContextPtr& ctx, const S& a1, const S& a2) {
  const SmashContext& c = *ctx;
  auto L = [&](const char* name) { return c.letter_index(name); };
  auto W = [&](std::initializer_list<const char*> names) {
    Word w;
    for (auto n : names) w.push_back(L(n));
    return w;
  };
  auto d = [&](const char* g, const S& coef) { return delta_elt<S>(c, Perm::parse(g, 3), coef); };
  auto sum = [](std::initializer_list<SmashElt<S>> parts) {
    SmashElt<S> out;
    for (const auto& p : parts) add_into(out, p);
    return out;
  };
  S one = S::one();
  std::vector<Rule<S>> rules;
  rules.push_back({W({"x13", "x13"}), sum({d("(12)", a1 - a2), d("(123)", a1 - a2), d("(23)", a1), d("(132)", a1)})});
  rules.push_back({W({"x23", "x23"}), sum({d("(13)", a2), d("(123)", a2), d("(12)", a2 - a1), d("(132)", a2 - a1)})});
  rules.push_back({W({"x12", "x12"}), sum({d("(23)", -a1), d("(123)", -a1), d("(13)", -a2), d("(132)", -a2)})});
  rules.push_back({W({"x13", "x23"}), sum({full_tail<S>(c, W({"x23", "x12"}), -one), full_tail<S>(c, W({"x12", "x13"}), -one)})});
  rules.push_back({W({"x23", "x13"}), sum({full_tail<S>(c, W({"x12", "x23"}), -one), full_tail<S>(c, W({"x13", "x12"}), -one)})});
  rules.push_back({W({"x12", "x13", "x12"}), sum({full_tail<S>(c, W({"x13", "x12", "x13"})), full_tail<S>(c, W({"x23"}), a1)})});
  rules.push_back({W({"x23", "x12", "x23"}), sum({full_tail<S>(c, W({"x12", "x23", "x12"})), full_tail<S>(c, W({"x13"}), -a2)})});
  // x12 . Omega, Omega = (a2-a1)(d_(12) - d_e) + a1(d_(13) - d_(132)) - a2(d_(23) - d_(123))
  SmashElt<S> omega = sum({d("(12)", a2 - a1), d("e", a1 - a2), d("(13)", a1), d("(132)", -a1), d("(23)", -a2),
                           d("(123)", a2)});
  rules.push_back({W({"x23", "x12", "x13"}),
                   sum({full_tail<S>(c, W({"x13", "x12", "x23"})), smash_mult_raw(c, full_tail<S>(c, W({"x12"})), omega)})});
  return RuleSystem<S>(ctx, std::move(rules));
}

/// Counts of words per length.
std::vector<std::size_t> hilbert_series(const std::vector<Word>& words);

// ---------------------------------------------------------------------------
// Structure constants on the basis {w d_g : w irreducible}

template <ExactRing S>
using SparseVec = std::vector<std::pair<std::uint32_t, S>>;

template <ExactRing S>
class MultTable {
 public:
  MultTable() = default;
  MultTable(ContextPtr ctx, std::vector<Word> words) : ctx_(std::move(ctx)), words_(std::move(words)) {
    for (std::size_t i = 0; i < words_.size(); ++i) word_index_[words_[i]] = i;
    n_ = words_.size() * ctx_->group_size();
    entries_.assign(n_ * n_, {});
  }

  const SmashContext& context() const { return *ctx_; }
  const ContextPtr& context_ptr() const { return ctx_; }
  std::size_t dim() const { return n_; }
  const std::vector<Word>& words() const { return words_; }

  std::uint32_t index(const Mono& m) const {
    auto it = word_index_.find(m.w);
    if (it == word_index_.end()) throw RewriteError("word " + m.w.str(ctx_->names()) + " is not a basis word");
    return static_cast<std::uint32_t>(it->second * ctx_->group_size() + m.g);
  }
  Mono mono(std::uint32_t i) const {
    return Mono{words_[i / ctx_->group_size()], static_cast<std::uint8_t>(i % ctx_->group_size())};
  }
  std::string label(std::uint32_t i) const {
    Mono m = mono(i);
    return (m.w.empty() ? std::string() : m.w.str(ctx_->names()) + "*") + "d_" + ctx_->group()[m.g].str();
  }

  const SparseVec<S>& at(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  SparseVec<S>& at(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }

  SparseVec<S> coords(const SmashElt<S>& x) const {
    SparseVec<S> v;
    for (const auto& [m, c] : x) v.push_back({index(m), c});
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return v;
  }
  SmashElt<S> element(const SparseVec<S>& v) const {
    SmashElt<S> x;
    for (const auto& [i, c] : v) add_term(x, mono(i), c);
    return x;
  }

  /// Product of two coordinate vectors using the table.
  SparseVec<S> multiply(const SparseVec<S>& x, const SparseVec<S>& y) const {
    std::map<std::uint32_t, S> acc;
    for (const auto& [i, ci] : x)
      for (const auto& [j, cj] : y) {
        const auto& e = at(i, j);
        if (e.empty()) continue;
        S cij = ci * cj;
        for (const auto& [k, ck] : e) {
          auto [it, ins] = acc.try_emplace(k, cij * ck);
          if (!ins) it->second += cij * ck;
        }
      }
    SparseVec<S> out;
    for (auto& [k, c] : acc)
      if (!c.is_zero()) out.push_back({k, std::move(c)});
    return out;
  }

  template <ExactRing T, class F>
  MultTable<T> map(F&& f) const {
    MultTable<T> t(ctx_, words_);
    for (std::size_t i = 0; i < n_ * n_; ++i) {
      for (const auto& [k, c] : entries_[i]) {
        T v = f(c);
        if (!v.is_zero()) t.raw(i).push_back({k, std::move(v)});
      }
    }
    return t;
  }

  SparseVec<S>& raw(std::size_t flat) { return entries_[flat]; }
  const SparseVec<S>& raw(std::size_t flat) const { return entries_[flat]; }

  friend bool operator==(const MultTable& a, const MultTable& b) {
    return a.words_ == b.words_ && a.entries_ == b.entries_;
  }

 private:
  ContextPtr ctx_;
  std::vector<Word> words_;
  std::unordered_map<Word, std::size_t> word_index_;
  std::size_t n_ = 0;
  std::vector<SparseVec<S>> entries_;
};

/// Products of all basis pairs, reduced. Only (w, w', h) matters for
/// (w d_g)(w' d_h) once sigma(w') g = h, so each reduction is shared.
template <ExactRing S>
MultTable<S> structure_constants(const RuleSystem<S>& rules, const std::vector<Word>& basis_words,
                                 std::size_t fuel = kDefaultFuel) {
  const SmashContext& ctx = rules.context();
  MultTable<S> t(rules.context_ptr(), basis_words);
  std::size_t g = ctx.group_size();
  std::size_t nw = basis_words.size();
  std::vector<std::optional<SparseVec<S>>> cache(nw * nw * g);
  for (std::size_t i = 0; i < t.dim(); ++i) {
    Mono mi = t.mono(static_cast<std::uint32_t>(i));
    for (std::size_t j = 0; j < t.dim(); ++j) {
      Mono mj = t.mono(static_cast<std::uint32_t>(j));
      if (ctx.mul(ctx.sigma(mj.w), mi.g) != mj.g) continue;
      std::size_t key = ((i / g) * nw + (j / g)) * g + mj.g;
      if (!cache[key]) {
        SmashElt<S> x;
        add_term(x, Mono{concat(mi.w, mj.w, Word::kHardMax), mj.g}, S::one());
        cache[key] = t.coords(rules.reduce(x, fuel));
      }
      t.at(i, j) = *cache[key];
    }
  }
  return t;
}

struct AssociativityOptions {
  enum class Mode { Exhaustive, Sampled } mode = Mode::Exhaustive;
  std::uint64_t seed = 1;
  std::size_t samples = 10000;
  /// Wall-clock budget in seconds; 0 means unlimited. On expiry the report is
  /// marked with the count "timed_out" = 1.
  double budget_sec = 0;
};

namespace detail {

template <ExactRing S>
bool triple_associates(const MultTable<S>& t, std::size_t i, std::size_t j, std::size_t k) {
  SparseVec<S> lhs = t.multiply(t.at(i, j), {{static_cast<std::uint32_t>(k), S::one()}});
  SparseVec<S> rhs = t.multiply({{static_cast<std::uint32_t>(i), S::one()}}, t.at(j, k));
  return lhs == rhs;
}

}  // namespace detail

template <ExactRing S>
Report check_associativity(const MultTable<S>& t, const AssociativityOptions& opt = {},
                           std::string name = "associativity") {
  Stopwatch sw;
  Report rep(std::move(name));
  std::size_t n = t.dim();
  auto expired = [&] { return opt.budget_sec > 0 && sw.elapsed_ms() > opt.budget_sec * 1000.0; };
  auto check = [&](std::size_t i, std::size_t j, std::size_t k) {
    if (!detail::triple_associates(t, i, j, k)) {
      rep.fail("(" + t.label(i) + " " + t.label(j) + ") " + t.label(k) + " != " + t.label(i) + " (" + t.label(j) +
               " " + t.label(k) + ")");
    }
  };
  std::int64_t count = 0;
  bool timed_out = false;
  if (opt.mode == AssociativityOptions::Mode::Exhaustive) {
    for (std::size_t i = 0; i < n && !timed_out; ++i) {
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) check(i, j, k);
      count += static_cast<std::int64_t>(n * n);
      timed_out = expired();
    }
  } else {
    std::mt19937_64 rng(opt.seed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t s = 0; s < opt.samples && !timed_out; ++s) {
      check(pick(rng), pick(rng), pick(rng));
      ++count;
      if (s % 256 == 0) timed_out = expired();
    }
  }
  rep.set_count("triples_checked", count);
  if (timed_out) {
    rep.set_count("timed_out", 1);
    rep.note("budget exhausted before all triples were checked");
  }
  rep.ms = sw.elapsed_ms();
  return rep;
}

// ---------------------------------------------------------------------------
// Completion over a trivial-group context

struct CompletionStats {
  std::size_t rules_added = 0;
  std::size_t rules_removed = 0;
  std::size_t ambiguities_processed = 0;
};

/// Relations in a free algebra (trivial-group context) as rules: the
/// deglex-largest word of each relation becomes a monic lhs. Unvalidated; meant
/// as input to complete().
template <ExactRing S>
RuleSystem<S> relations_to_rules(const ContextPtr& ctx, const std::vector<std::map<Word, S>>& rels) {
  std::vector<Rule<S>> rules;
  for (const auto& r : rels) {
    if (r.empty()) continue;
    auto lead = std::prev(r.end());
    S inv = field_invert(lead->second);
    Rule<S> rule{lead->first, {}};
    for (auto it = r.begin(); it != lead; ++it) add_term(rule.rhs, Mono{it->first, 0}, -(it->second * inv));
    rules.push_back(std::move(rule));
  }
  return RuleSystem<S>::unchecked(ctx, std::move(rules));
}

/// Appends normal-form differences of unresolved ambiguities (words up to
/// maxdeg) as new rules oriented by deglex, inter-reducing as it goes.
/// Requires a field and a context whose group is trivial.
template <ExactRing S>
RuleSystem<S> complete(const RuleSystem<S>& start, std::size_t maxdeg, std::size_t fuel = kDefaultFuel,
                       CompletionStats* stats = nullptr, double budget_sec = 0);

namespace detail {

template <ExactRing S>
struct Completer {
  ContextPtr ctx;
  std::size_t fuel;
  std::vector<Rule<S>> rules;
  std::vector<bool> active;
  CompletionStats st;

  RuleSystem<S> system() const {
    std::vector<Rule<S>> live;
    for (std::size_t i = 0; i < rules.size(); ++i)
      if (active[i]) live.push_back(rules[i]);
    return RuleSystem<S>::unchecked(ctx, std::move(live));
  }

  /// Turns a nonzero normal form into a monic rule with deglex-largest lhs.
  Rule<S> orient(const SmashElt<S>& d) const {
    auto lead = std::prev(d.end());
    S inv = field_invert(lead->second);
    Rule<S> r{lead->first.w, {}};
    for (auto it = d.begin(); it != lead; ++it) add_term(r.rhs, it->first, -(it->second * inv));
    return r;
  }
};

}  // namespace detail

template <ExactRing S>
RuleSystem<S> complete(const RuleSystem<S>& start, std::size_t maxdeg, std::size_t fuel, CompletionStats* stats,
                       double budget_sec) {
  if constexpr (!is_field_v<S>) {
    throw RewriteError("completion needs a field of scalars");
  } else {
    if (start.context().group_size() != 1) throw RewriteError("completion needs a trivial-group context");
    if (maxdeg > Word::kHardMax) throw RewriteError("completion degree exceeds the word hard limit");
    Stopwatch sw;
    detail::Completer<S> c{start.context_ptr(), fuel, {}, {}, {}};
    // Start from inter-reduced, monic relations.
    std::deque<SmashElt<S>> pending;
    for (const auto& r : start.rules()) {
      SmashElt<S> x = full_tail<S>(start.context(), r.lhs);
      add_into(x, r.rhs, -S::one());
      pending.push_back(std::move(x));
    }
    std::set<std::tuple<Word, Word, std::size_t>> seen;
    for (;;) {
      bool changed = false;
      while (!pending.empty()) {
        if (budget_sec > 0 && sw.elapsed_ms() > budget_sec * 1000.0) throw RewriteError("completion budget exhausted");
        SmashElt<S> d = c.system().reduce(pending.front(), fuel);
        pending.pop_front();
        if (d.empty()) continue;
        Rule<S> nr = c.orient(d);
        if (nr.lhs.size() > maxdeg) continue;
        // Rules whose lhs becomes reducible return to the pending pool.
        for (std::size_t i = 0; i < c.rules.size(); ++i) {
          if (!c.active[i] || !c.rules[i].lhs.contains(nr.lhs)) continue;
          c.active[i] = false;
          ++c.st.rules_removed;
          SmashElt<S> x = full_tail<S>(*c.ctx, c.rules[i].lhs);
          add_into(x, c.rules[i].rhs, -S::one());
          pending.push_back(std::move(x));
        }
        c.rules.push_back(std::move(nr));
        c.active.push_back(true);
        ++c.st.rules_added;
        changed = true;
      }
      // Inter-reduce right sides.
      {
        auto sys = c.system();
        for (std::size_t i = 0; i < c.rules.size(); ++i)
          if (c.active[i]) c.rules[i].rhs = sys.reduce(c.rules[i].rhs, fuel);
      }
      auto sys = c.system();
      bool any = false;
      for (const auto& amb : sys.overlap_ambiguities()) {
        if (amb.word.size() > maxdeg) continue;
        auto key = std::make_tuple(sys.rules()[amb.left_rule].lhs, sys.rules()[amb.right_rule].lhs, amb.overlap);
        if (!seen.insert(key).second) continue;
        ++c.st.ambiguities_processed;
        auto res = sys.resolve_ambiguity(amb, fuel);
        if (!res.resolved) {
          pending.push_back(difference(res.via_left, res.via_right));
          any = true;
        }
      }
      if (!any && !changed) break;
      if (!any && pending.empty()) break;
    }
    if (stats) *stats = c.st;
    auto live = c.system();
    std::vector<Rule<S>> sorted = live.rules();
    std::sort(sorted.begin(), sorted.end(), [](const Rule<S>& a, const Rule<S>& b) { return a.lhs < b.lhs; });
    return RuleSystem<S>(c.ctx, std::move(sorted));
  }
}

}  // namespace hopfcheck
