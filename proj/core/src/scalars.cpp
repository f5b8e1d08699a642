#include "hopfcheck/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace hopfcheck {

// ---------------------------------------------------------------------------
// Rational

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

mpz_class parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  std::string_view s = trim(text);
  auto slash = s.find('/');
  std::string_view num = trim(s.substr(0, slash));
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : trim(s.substr(slash + 1));
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw ScalarError("cannot parse rational: '" + std::string(text) + "'");
  }
  mpz_class d = parse_integer(den);
  if (d == 0) throw DivisionByZero();
  mpq_class q(parse_integer(num), d);
  q.canonicalize();
  return Rational(q);
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  return Rational(mpq_class(1 / q_));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero();
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

// ---------------------------------------------------------------------------
// MultiPoly

namespace {
constexpr unsigned kBitsPerVar = 16;
constexpr std::uint64_t kVarMask = 0xFFFF;

unsigned exponent_at(std::uint64_t key, std::size_t var) {
  return static_cast<unsigned>((key >> (kBitsPerVar * (MultiPoly::kMaxVars - 1 - var))) & kVarMask);
}
}  // namespace

MultiPoly::MultiPoly(const Rational& c) {
  if (!c.is_zero()) terms_.push_back({0, c});
}

std::shared_ptr<const MultiPoly::VarList> MultiPoly::make_context(VarList names) {
  if (names.size() > kMaxVars) throw ScalarError("MultiPoly supports at most 4 variables");
  return std::make_shared<const VarList>(std::move(names));
}

std::uint64_t MultiPoly::pack(std::span<const unsigned> exponents) {
  if (exponents.size() > kMaxVars) throw ScalarError("too many exponents");
  std::uint64_t key = 0;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > kVarMask) throw ScalarError("exponent overflow");
    key |= static_cast<std::uint64_t>(exponents[i]) << (kBitsPerVar * (kMaxVars - 1 - i));
  }
  return key;
}

std::vector<unsigned> MultiPoly::unpack(std::uint64_t key, std::size_t arity) {
  std::vector<unsigned> e(arity);
  for (std::size_t i = 0; i < arity; ++i) e[i] = exponent_at(key, i);
  return e;
}

MultiPoly MultiPoly::variable(const std::shared_ptr<const VarList>& ctx, std::size_t index) {
  if (!ctx || index >= ctx->size()) throw ScalarError("variable index out of range");
  std::vector<unsigned> e(ctx->size(), 0);
  e[index] = 1;
  return monomial(ctx, e, Rational(1));
}

MultiPoly MultiPoly::constant(const std::shared_ptr<const VarList>& ctx, const Rational& c) {
  MultiPoly p(c);
  p.ctx_ = ctx;
  return p;
}

MultiPoly MultiPoly::monomial(const std::shared_ptr<const VarList>& ctx, std::span<const unsigned> exponents,
                              const Rational& c) {
  if (!ctx || exponents.size() != ctx->size()) throw ScalarError("monomial arity mismatch");
  MultiPoly p;
  p.ctx_ = ctx;
  if (!c.is_zero()) p.terms_.push_back({pack(exponents), c});
  return p;
}

Rational MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.front().key == 0) return terms_.front().coef;
  return Rational(0);
}

unsigned MultiPoly::total_degree() const {
  unsigned best = 0;
  for (const auto& t : terms_) {
    unsigned d = 0;
    for (std::size_t v = 0; v < kMaxVars; ++v) d += exponent_at(t.key, v);
    best = std::max(best, d);
  }
  return best;
}

void MultiPoly::merge_context(const MultiPoly& o) {
  if (!o.ctx_ || ctx_ == o.ctx_) return;
  if (!ctx_) {
    ctx_ = o.ctx_;
    return;
  }
  if (*ctx_ != *o.ctx_) throw ScalarError("MultiPoly variable context mismatch");
}

void MultiPoly::add_scaled(const MultiPoly& o, int sign) {
  if (&o == this) {
    MultiPoly copy = o;
    add_scaled(copy, sign);
    return;
  }
  merge_context(o);
  if (o.terms_.empty()) return;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  while (a != terms_.end() || b != o.terms_.end()) {
    if (b == o.terms_.end() || (a != terms_.end() && a->key < b->key)) {
      out.push_back(std::move(*a++));
    } else if (a == terms_.end() || b->key < a->key) {
      out.push_back({b->key, sign > 0 ? b->coef : -b->coef});
      ++b;
    } else {
      Rational c = sign > 0 ? a->coef + b->coef : a->coef - b->coef;
      if (!c.is_zero()) out.push_back({a->key, std::move(c)});
      ++a;
      ++b;
    }
  }
  terms_ = std::move(out);
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  add_scaled(o, +1);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  add_scaled(o, -1);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly r;
  r.ctx_ = a.ctx_;
  r.merge_context(b);
  if (a.terms_.empty() || b.terms_.empty()) return r;
  if (a.terms_.size() == 1 && a.terms_[0].key == 0) {
    r.terms_ = b.terms_;
    for (auto& t : r.terms_) t.coef = a.terms_[0].coef * t.coef;
    return r;
  }
  if (b.terms_.size() == 1 && b.terms_[0].key == 0) {
    r.terms_ = a.terms_;
    for (auto& t : r.terms_) t.coef *= b.terms_[0].coef;
    return r;
  }
  std::vector<MultiPoly::Term> prod;
  prod.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      std::uint64_t key = 0;
      for (std::size_t v = 0; v < MultiPoly::kMaxVars; ++v) {
        unsigned e = exponent_at(x.key, v) + exponent_at(y.key, v);
        if (e > kVarMask) throw ScalarError("exponent overflow");
        key |= static_cast<std::uint64_t>(e) << (kBitsPerVar * (MultiPoly::kMaxVars - 1 - v));
      }
      prod.push_back({key, x.coef * y.coef});
    }
  }
  std::sort(prod.begin(), prod.end(), [](const auto& l, const auto& m) { return l.key < m.key; });
  for (auto& t : prod) {
    if (!r.terms_.empty() && r.terms_.back().key == t.key) {
      r.terms_.back().coef += t.coef;
      if (r.terms_.back().coef.is_zero()) r.terms_.pop_back();
    } else if (!t.coef.is_zero()) {
      r.terms_.push_back(std::move(t));
    }
  }
  return r;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) {
  *this = *this * o;
  return *this;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coef = -t.coef;
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.ctx_ && b.ctx_ && a.ctx_ != b.ctx_ && *a.ctx_ != *b.ctx_) {
    throw ScalarError("MultiPoly variable context mismatch");
  }
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].key != b.terms_[i].key || !(a.terms_[i].coef == b.terms_[i].coef)) return false;
  }
  return true;
}

Rational MultiPoly::eval(std::span<const Rational> point) const {
  if (ctx_ && point.size() != ctx_->size()) {
    throw ScalarError("poly_eval: point has " + std::to_string(point.size()) + " coordinates, expected " +
                      std::to_string(ctx_->size()));
  }
  Rational sum;
  for (const auto& t : terms_) {
    Rational v = t.coef;
    for (std::size_t i = 0; i < point.size() && i < kMaxVars; ++i) {
      unsigned e = exponent_at(t.key, i);
      for (unsigned k = 0; k < e; ++k) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // Descending lexicographic order on exponent vectors.
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Rational& c = it->coef;
    Rational mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (std::size_t v = 0; v < arity(); ++v) {
      unsigned e = exponent_at(it->key, v);
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += (*ctx_)[v];
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) {
      os << mag.str();
    } else if (mag.is_one()) {
      os << mono;
    } else {
      os << mag.str() << "*" << mono;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << p.str(); }

std::optional<MultiPoly> try_invert(const MultiPoly& x) {
  if (x.is_zero() || !x.is_constant()) return std::nullopt;
  return MultiPoly::constant(x.context(), x.constant_term().inverse());
}

// ---------------------------------------------------------------------------
// Cyclotomic3

Cyclotomic3& Cyclotomic3::operator*=(const Cyclotomic3& o) {
  // (p + qw)(r + sw) = pr - qs + (ps + qr - qs) w
  Rational qs = q_ * o.q_;
  Rational re = p_ * o.p_ - qs;
  Rational om = p_ * o.q_ + q_ * o.p_ - qs;
  p_ = std::move(re);
  q_ = std::move(om);
  return *this;
}

Rational Cyclotomic3::norm() const { return p_ * p_ - p_ * q_ + q_ * q_; }

Cyclotomic3 Cyclotomic3::conjugate() const {
  // w -> w^2 = -1 - w
  return {p_ - q_, -q_};
}

Cyclotomic3 Cyclotomic3::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Rational n = norm().inverse();
  Cyclotomic3 c = conjugate();
  return {c.p_ * n, c.q_ * n};
}

std::string Cyclotomic3::str() const {
  if (q_.is_zero()) return p_.str();
  std::string w;
  if (q_.is_one()) {
    w = "w";
  } else if (q_ == Rational(-1)) {
    w = "-w";
  } else {
    w = q_.str() + "*w";
  }
  if (p_.is_zero()) return w;
  if (q_.sign() < 0) {
    std::string mag = (-q_).is_one() ? "w" : (-q_).str() + "*w";
    return p_.str() + " - " + mag;
  }
  return p_.str() + " + " + w;
}

std::ostream& operator<<(std::ostream& os, const Cyclotomic3& c) { return os << c.str(); }

}  // namespace hopfcheck
