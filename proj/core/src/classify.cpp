#include "hopfcheck/classify.hpp"

#include <algorithm>
#include <sstream>

namespace hopfcheck {

std::vector<char> factorization(const Perm& theta) {
  if (theta.degree() != 3) throw ClassifyError("theta must be a permutation of degree 3");
  const std::string t = theta.str();
  if (t == "e") return {};
  if (t == "(12)") return {'s'};
  if (t == "(123)") return {'r'};
  if (t == "(132)") return {'r', 'r'};
  if (t == "(23)") return {'s', 'r'};
  if (t == "(13)") return {'r', 's'};
  throw ClassifyError("no factorization for " + t);
}

namespace {

bool is_zero(const RationalPair& a) { return a.a1.is_zero() && a.a2.is_zero(); }

RationalPair normalized(const RationalPair& a) {
  const Rational& lead = a.a1.is_zero() ? a.a2 : a.a1;
  Rational inv = lead.inverse();
  return {a.a1 * inv, a.a2 * inv};
}

std::vector<RationalPair> unit_images(const RationalPair& a) {
  std::vector<RationalPair> out;
  for (const auto& theta : symmetric_group(3)) out.push_back(act(a, GammaElt<Rational>{Rational(1), theta}));
  return out;
}

}  // namespace

bool orbit_eq(const RationalPair& a, const RationalPair& b) {
  if (is_zero(a) || is_zero(b)) return is_zero(a) && is_zero(b);
  for (const auto& c : unit_images(a))
    if (c.a1 * b.a2 == c.a2 * b.a1) return true;
  return false;
}

RationalPair canonical_rep(const RationalPair& a) {
  if (is_zero(a)) return a;
  std::optional<RationalPair> best;
  for (const auto& c : unit_images(a)) {
    RationalPair n = normalized(c);
    if (!best || std::tie(n.a1, n.a2) < std::tie(best->a1, best->a2)) best = n;
  }
  return *best;
}

std::string pair_str(const RationalPair& a) { return "(" + a.a1.str() + ", " + a.a2.str() + ")"; }

namespace {

using P = MultiPoly;

detail::RawTensor<P> theta_tensor(const SmashContext& ctx, const P& mu, const Perm& theta,
                                  const detail::RawTensor<P>& t) {
  detail::RawTensor<P> out;
  for (const auto& [ab, c] : t) {
    SmashElt<P> l, r;
    add_term(l, ab.first, P::one());
    add_term(r, ab.second, P::one());
    for (const auto& [ml, cl] : theta_morphism(ctx, mu, theta, l))
      for (const auto& [mr, cr] : theta_morphism(ctx, mu, theta, r)) detail::raw_add(out, ml, mr, c * cl * cr);
  }
  return out;
}

}  // namespace

Report verify_iso(const Perm& theta) {
  Stopwatch sw;
  Report rep("verify_iso " + theta.str());
  auto vars = MultiPoly::make_context({"a1", "a2", "mu"});
  P a1 = P::variable(vars, 0), a2 = P::variable(vars, 1), mu = P::variable(vars, 2);
  auto ctx = SmashContext::v3();
  ParamPair<P> a{a1, a2};
  ParamPair<P> b = act(a, GammaElt<P>{mu * mu, theta});
  auto rules_a = default_rules<P>(ctx, a.a1, a.a2);
  auto rules_b = default_rules<P>(ctx, b.a1, b.a2);

  bool forward = true;
  for (const auto& [name, r] : ideal_generators<P>(*ctx, b.a1, b.a2)) {
    auto red = rules_a.reduce(theta_morphism(*ctx, mu, theta, r));
    if (!red.empty()) {
      forward = false;
      rep.fail("Theta(" + name + " of I_b) = " + to_string(*ctx, red) + " in A_a");
    }
    rep.add_count("generators");
  }
  bool reverse = true;
  for (const auto& [name, r] : ideal_generators<P>(*ctx, a.a1, a.a2))
    if (!rules_b.reduce(theta_morphism(*ctx, mu, theta, r)).empty()) reverse = false;
  rep.set_count("forward_orientation", forward ? 1 : 0);
  rep.set_count("reverse_orientation", reverse ? 1 : 0);
  rep.note(std::string("Theta(I_{a<|(mu^2,theta)}) lies in I_a: ") + (forward ? "yes" : "no") +
           "; Theta(I_a) lies in I_{a<|(mu^2,theta)}: " + (reverse ? "yes" : "no"));

  // Theta is a coalgebra map on the generators.
  std::vector<SmashElt<P>> gens;
  for (std::size_t l = 0; l < ctx->num_letters(); ++l) {
    Word w;
    w.push_back(static_cast<std::uint8_t>(l));
    gens.push_back(full_tail<P>(*ctx, w));
  }
  for (const auto& g : ctx->group()) gens.push_back(delta_elt<P>(*ctx, g));
  for (const auto& x : gens) {
    auto lhs = detail::raw_comult(*ctx, theta_morphism(*ctx, mu, theta, x));
    auto rhs = theta_tensor(*ctx, mu, theta, detail::raw_comult(*ctx, x));
    if (lhs != rhs) rep.fail("Theta does not commute with the coproduct on " + to_string(*ctx, x));
    rep.add_count("coalgebra_generators");
  }
  rep.ms = sw.elapsed_ms();
  return rep;
}

std::vector<std::pair<std::size_t, RationalPair>> parse_pairs(std::istream& in) {
  std::vector<std::pair<std::size_t, RationalPair>> out;
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    ++n;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    auto comma = line.find(',');
    if (comma == std::string::npos || line.find(',', comma + 1) != std::string::npos) {
      throw ParseError(n, "expected two rationals separated by a comma: '" + line + "'");
    }
    auto strip = [](std::string s) {
      s.erase(std::remove(s.begin(), s.end(), '\r'), s.end());
      return s;
    };
    try {
      out.push_back({n, {Rational::parse(strip(line.substr(0, comma))), Rational::parse(strip(line.substr(comma + 1)))}});
    } catch (const std::exception& e) {
      throw ParseError(n, e.what());
    }
  }
  return out;
}

BatchResult classify_batch(const std::vector<std::pair<std::size_t, RationalPair>>& input) {
  BatchResult res;
  std::vector<RationalPair> group_labels;
  for (const auto& [line, pair] : input) {
    RationalPair label = canonical_rep(pair);
    res.pairs.push_back(pair);
    res.labels.push_back(label);
    res.lines.push_back(line);
    auto it = std::find(group_labels.begin(), group_labels.end(), label);
    if (it == group_labels.end()) {
      group_labels.push_back(label);
      res.groups.push_back({line});
    } else {
      res.groups[static_cast<std::size_t>(it - group_labels.begin())].push_back(line);
    }
  }
  return res;
}

}  // namespace hopfcheck
