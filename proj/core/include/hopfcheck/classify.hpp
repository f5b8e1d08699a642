#pragma once

// The right action of Gamma = k^x x S3 on parameter pairs, orbit equality,
// canonical representatives, and the isomorphisms Theta_{mu,theta}.

#include <istream>
#include <string>
#include <vector>

#include "hopfcheck/hopf72.hpp"

namespace hopfcheck {

class ClassifyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public ClassifyError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : ClassifyError("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

template <ExactRing S>
struct ParamPair {
  S a1;
  S a2;
  friend bool operator==(const ParamPair&, const ParamPair&) = default;
};

using RationalPair = ParamPair<Rational>;

template <ExactRing S>
struct GammaElt {
  S mu;
  Perm theta;
};

/// Letters of the fixed factorization of theta into s = (12) and r = (123),
/// read left to right: e = [], (12) = [s], (123) = [r], (132) = [r, r],
/// (23) = [s, r], (13) = [r, s].
std::vector<char> factorization(const Perm& theta);

/// One generator with unit scale: s(a1, a2) = (a2, a1), r(a1, a2) = -(a2, a2 - a1).
template <ExactRing S>
ParamPair<S> act_letter(const ParamPair<S>& a, char letter) {
  if (letter == 's') return {a.a2, a.a1};
  if (letter == 'r') return {-a.a2, -(a.a2 - a.a1)};
  throw ClassifyError(std::string("unknown generator '") + letter + "'");
}

/// a <| (mu, theta): the letters of theta in order, then the overall scale.
template <ExactRing S>
ParamPair<S> act(const ParamPair<S>& a, const GammaElt<S>& g) {
  if (g.mu.is_zero()) throw ClassifyError("mu must be nonzero");
  ParamPair<S> b = a;
  for (char l : factorization(g.theta)) b = act_letter(b, l);
  return {g.mu * b.a1, g.mu * b.a2};
}

/// Applies a word in s and r with unit scale.
template <ExactRing S>
ParamPair<S> act_word(const ParamPair<S>& a, const std::string& letters) {
  ParamPair<S> b = a;
  for (char l : letters) b = act_letter(b, l);
  return b;
}

/// b = mu (a <| (1, theta)) for some theta and nonzero mu.
bool orbit_eq(const RationalPair& a, const RationalPair& b);

/// Least normalized image (first nonzero coordinate scaled to 1) over the six
/// images a <| (1, theta); (0, 0) for the zero pair.
RationalPair canonical_rep(const RationalPair& a);

std::string pair_str(const RationalPair& a);

/// Theta_{mu,theta}: d_g -> d_{theta g theta^-1}, x_t -> mu x_{theta t theta^-1}.
template <ExactRing S>
SmashElt<S> theta_morphism(const SmashContext& ctx, const S& mu, const Perm& theta, const SmashElt<S>& x) {
  SmashElt<S> out;
  std::uint8_t th = ctx.index(theta);
  auto conj = [&](std::uint8_t g) { return ctx.mul(th, ctx.mul(g, ctx.inv(th))); };
  std::vector<std::uint8_t> letter_map;
  for (std::size_t l = 0; l < ctx.num_letters(); ++l) {
    std::uint8_t target = conj(ctx.letter_element(static_cast<std::uint8_t>(l)));
    std::optional<std::uint8_t> found;
    for (std::size_t m = 0; m < ctx.num_letters(); ++m)
      if (ctx.letter_element(static_cast<std::uint8_t>(m)) == target) found = static_cast<std::uint8_t>(m);
    if (!found) throw ClassifyError("theta does not permute the letters");
    letter_map.push_back(*found);
  }
  for (const auto& [m, c] : x) {
    Word w;
    S coef = c;
    for (auto l : m.w) {
      w.push_back(letter_map[l]);
      coef = coef * mu;
    }
    add_term(out, Mono{w, conj(m.g)}, coef);
  }
  return out;
}

/// With symbolic a1, a2, mu: b = a <| (mu^2, theta); the images under
/// Theta_{mu,theta} of the generators of I_b reduce to zero in A_a. Also
/// records whether the opposite orientation (images of I_a vanish in A_b)
/// holds, and checks Delta(Theta x) = (Theta (x) Theta) Delta(x) on generators.
Report verify_iso(const Perm& theta);

struct BatchResult {
  std::vector<RationalPair> pairs;
  std::vector<RationalPair> labels;
  /// Groups of 1-based line numbers, ordered by first line.
  std::vector<std::vector<std::size_t>> groups;
  std::vector<std::size_t> lines;
};

/// One pair per line, "p/q, r/s"; blank lines and lines starting with '#'
/// are skipped. Throws ParseError with the line number.
std::vector<std::pair<std::size_t, RationalPair>> parse_pairs(std::istream& in);

BatchResult classify_batch(const std::vector<std::pair<std::size_t, RationalPair>>& input);

}  // namespace hopfcheck
