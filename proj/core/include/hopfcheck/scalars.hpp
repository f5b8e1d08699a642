#pragma once

// Exact coefficient rings. Every algebraic module is templated over a type
// modelling ExactRing; there is no floating point anywhere in the library.

#include <compare>
#include <concepts>
#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace hopfcheck {

class ScalarError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DivisionByZero : public ScalarError {
 public:
  DivisionByZero() : ScalarError("division by zero") {}
};

// ---------------------------------------------------------------------------
// Rational

class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  static Rational zero() { return {}; }
  static Rational one() { return {1}; }

  /// Parses "p/q" or "p" (optional sign, surrounding whitespace ignored).
  static Rational parse(std::string_view text);

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }

  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  Rational inverse() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  Rational operator-() const { return Rational(mpq_class(-q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string str() const;

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

// ---------------------------------------------------------------------------
// MultiPoly: polynomials over Q in up to four named commuting indeterminates.
//
// Monomials are packed into a 64-bit key, 16 bits per variable with the first
// variable most significant, so numeric order on keys is lexicographic order
// on exponent vectors. A polynomial without a variable context is a constant
// and adopts the context of whatever it is combined with.

class MultiPoly {
 public:
  static constexpr std::size_t kMaxVars = 4;
  using VarList = std::vector<std::string>;

  struct Term {
    std::uint64_t key;
    Rational coef;
  };

  MultiPoly() = default;
  MultiPoly(long c) : MultiPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  MultiPoly(const Rational& c);                  // NOLINT(google-explicit-constructor)

  static MultiPoly zero() { return {}; }
  static MultiPoly one() { return {1}; }

  static std::shared_ptr<const VarList> make_context(VarList names);
  static MultiPoly variable(const std::shared_ptr<const VarList>& ctx, std::size_t index);
  static MultiPoly constant(const std::shared_ptr<const VarList>& ctx, const Rational& c);
  static MultiPoly monomial(const std::shared_ptr<const VarList>& ctx,
                            std::span<const unsigned> exponents, const Rational& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].key == 0); }
  /// Constant term (zero when absent).
  Rational constant_term() const;
  std::size_t num_terms() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }
  const std::shared_ptr<const VarList>& context() const { return ctx_; }
  std::size_t arity() const { return ctx_ ? ctx_->size() : 0; }
  unsigned total_degree() const;

  static std::vector<unsigned> unpack(std::uint64_t key, std::size_t arity);
  static std::uint64_t pack(std::span<const unsigned> exponents);

  /// Exact substitution; point.size() must equal the arity of the context.
  Rational eval(std::span<const Rational> point) const;

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly operator-() const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  std::string str() const;

 private:
  void merge_context(const MultiPoly& o);
  void add_scaled(const MultiPoly& o, int sign);

  std::shared_ptr<const VarList> ctx_;
  std::vector<Term> terms_;  // ascending key, no zero coefficients
};

std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

/// Convenience: evaluate p at a point.
inline Rational poly_eval(const MultiPoly& p, std::span<const Rational> point) {
  return p.eval(point);
}

// ---------------------------------------------------------------------------
// Cyclotomic3: Q(w) with w^2 + w + 1 = 0. Stored as p + q*w.

class Cyclotomic3 {
 public:
  Cyclotomic3() = default;
  Cyclotomic3(long v) : p_(v) {}                          // NOLINT(google-explicit-constructor)
  Cyclotomic3(const Rational& p) : p_(p) {}               // NOLINT(google-explicit-constructor)
  Cyclotomic3(Rational p, Rational q) : p_(std::move(p)), q_(std::move(q)) {}

  static Cyclotomic3 zero() { return {}; }
  static Cyclotomic3 one() { return {1}; }
  static Cyclotomic3 omega() { return {Rational(0), Rational(1)}; }

  const Rational& real_part() const { return p_; }
  const Rational& omega_part() const { return q_; }

  bool is_zero() const { return p_.is_zero() && q_.is_zero(); }
  /// Field norm p^2 - pq + q^2, nonzero for nonzero elements.
  Rational norm() const;
  Cyclotomic3 conjugate() const;
  Cyclotomic3 inverse() const;

  Cyclotomic3& operator+=(const Cyclotomic3& o) { p_ += o.p_; q_ += o.q_; return *this; }
  Cyclotomic3& operator-=(const Cyclotomic3& o) { p_ -= o.p_; q_ -= o.q_; return *this; }
  Cyclotomic3& operator*=(const Cyclotomic3& o);
  friend Cyclotomic3 operator+(Cyclotomic3 a, const Cyclotomic3& b) { return a += b; }
  friend Cyclotomic3 operator-(Cyclotomic3 a, const Cyclotomic3& b) { return a -= b; }
  friend Cyclotomic3 operator*(Cyclotomic3 a, const Cyclotomic3& b) { return a *= b; }
  Cyclotomic3 operator-() const { return {-p_, -q_}; }
  friend bool operator==(const Cyclotomic3& a, const Cyclotomic3& b) = default;

  std::string str() const;

 private:
  Rational p_;
  Rational q_;
};

std::ostream& operator<<(std::ostream& os, const Cyclotomic3& c);

// ---------------------------------------------------------------------------
// Ring interface shared by the three realizations.

template <class S>
concept ExactRing = std::regular<S> && requires(S a, const S& b, const Rational& r) {
  { a + b } -> std::convertible_to<S>;
  { a - b } -> std::convertible_to<S>;
  { a * b } -> std::convertible_to<S>;
  { -a } -> std::convertible_to<S>;
  { a += b };
  { a -= b };
  { a.is_zero() } -> std::convertible_to<bool>;
  { S::zero() } -> std::convertible_to<S>;
  { S::one() } -> std::convertible_to<S>;
  { a.str() } -> std::convertible_to<std::string>;
  S(r);
};

/// Inverse when it exists inside the ring without guessing: every nonzero
/// element for the fields, nonzero constants only for polynomials.
inline std::optional<Rational> try_invert(const Rational& x) {
  if (x.is_zero()) return std::nullopt;
  return x.inverse();
}
inline std::optional<Cyclotomic3> try_invert(const Cyclotomic3& x) {
  if (x.is_zero()) return std::nullopt;
  return x.inverse();
}
std::optional<MultiPoly> try_invert(const MultiPoly& x);

inline Rational field_invert(const Rational& x) { return x.inverse(); }
inline Cyclotomic3 field_invert(const Cyclotomic3& x) { return x.inverse(); }

template <class S>
inline constexpr bool is_field_v = std::same_as<S, Rational> || std::same_as<S, Cyclotomic3>;

template <class S>
inline constexpr bool has_cube_roots_of_unity_v = std::same_as<S, Cyclotomic3>;

/// Roots of unity available in S (as a list, identity first).
template <class S>
std::vector<S> roots_of_unity() {
  if constexpr (std::same_as<S, Cyclotomic3>) {
    Cyclotomic3 w = Cyclotomic3::omega();
    Cyclotomic3 w2 = w * w;
    return {Cyclotomic3(1), Cyclotomic3(-1), w, -w, w2, -w2};
  } else {
    return {S(Rational(1)), S(Rational(-1))};
  }
}

}  // namespace hopfcheck
