#include "hopfcheck/coalg.hpp"

namespace hopfcheck::detail {

std::vector<Rational> characteristic_polynomial(const Matrix<Rational>& a) {
  std::size_t n = a.rows();
  std::vector<Rational> c(n + 1, Rational(0));
  c[n] = Rational(1);
  Matrix<Rational> m(n, n);
  for (std::size_t k = 1; k <= n; ++k) {
    Matrix<Rational> next = a * m;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    m = std::move(next);
    Matrix<Rational> am = a * m;
    Rational tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

namespace {

std::vector<mpz_class> positive_divisors(mpz_class v) {
  if (v < 0) v = -v;
  if (v > mpz_class("1000000000000")) throw CoalgebraError("rational_roots: coefficient too large to factor");
  std::vector<mpz_class> small;
  std::vector<mpz_class> large;
  for (mpz_class d = 1; d * d <= v; ++d) {
    if (v % d == 0) {
      small.push_back(d);
      if (d * d != v) large.push_back(v / d);
    }
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

Rational eval_poly(const std::vector<Rational>& c, const Rational& x) {
  Rational acc(0);
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

}  // namespace

std::vector<Rational> rational_roots(const std::vector<Rational>& coeffs) {
  std::vector<Rational> c = coeffs;
  while (!c.empty() && c.back().is_zero()) c.pop_back();
  std::vector<Rational> roots;
  if (c.size() <= 1) return roots;
  if (c.front().is_zero()) {
    roots.push_back(Rational(0));
    while (c.front().is_zero()) c.erase(c.begin());
  }
  if (c.size() > 1) {
    mpz_class lcm = 1;
    for (const auto& x : c) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), x.denominator().get_mpz_t());
    std::vector<mpz_class> ints;
    for (const auto& x : c) ints.push_back(x.numerator() * (lcm / x.denominator()));
    for (const auto& p : positive_divisors(ints.front())) {
      for (const auto& q : positive_divisors(ints.back())) {
        for (int s : {1, -1}) {
          Rational cand(mpq_class(s * p, q));
          if (eval_poly(c, cand).is_zero()) roots.push_back(cand);
        }
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

}  // namespace hopfcheck::detail
