#include "hopfcheck/suites.hpp"

#include <random>
#include <stdexcept>
#include <type_traits>

#include "hopfcheck/braided_tensor.hpp"
#include "hopfcheck/classify.hpp"
#include "hopfcheck/coalg.hpp"
#include "hopfcheck/hopf72.hpp"
#include "hopfcheck/ydmod.hpp"

namespace hopfcheck {

namespace {

using Q = Rational;
using P = MultiPoly;

template <class F>
std::vector<Report> with_params(const SuiteOptions& opt, F&& f) {
  if (opt.point) return f(opt.point->first, opt.point->second);
  auto vars = P::make_context({"a1", "a2"});
  return f(P::variable(vars, 0), P::variable(vars, 1));
}

std::string series_str(const std::vector<std::size_t>& h) {
  std::string out = "(";
  for (std::size_t i = 0; i < h.size(); ++i) out += (i ? "," : "") + std::to_string(h[i]);
  return out + ")";
}

Q random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  return Q(num(rng)) / Q(den(rng));
}

/// Every triple with at least one entry among the generators x_t, d_g.
template <ExactRing S>
Report generator_triples(const MultTable<S>& t) {
  Report rep("associativity_generator_triples");
  std::vector<std::size_t> gens;
  for (std::size_t i = 0; i < t.dim(); ++i) {
    const Mono& m = t.mono(i);
    if (m.w.size() == 0 || (m.w.size() == 1 && m.g == t.context().identity())) gens.push_back(i);
  }
  std::int64_t count = 0;
  auto check = [&](std::size_t i, std::size_t j, std::size_t k) {
    ++count;
    if (!detail::triple_associates(t, i, j, k)) rep.fail(t.label(i) + " " + t.label(j) + " " + t.label(k));
  };
  for (auto g : gens)
    for (std::size_t j = 0; j < t.dim(); ++j)
      for (std::size_t k = 0; k < t.dim(); ++k) {
        check(g, j, k);
        check(j, g, k);
        check(j, k, g);
      }
  rep.set_count("generators", static_cast<std::int64_t>(gens.size()));
  rep.set_count("triples_checked", count);
  return rep;
}

template <ExactRing S>
Report associativity(const RuleSystem<S>& rules, const std::vector<Word>& words, const SuiteOptions& opt) {
  Stopwatch sw;
  auto t = structure_constants(rules, words, opt.fuel);
  AssociativityOptions ao;
  ao.budget_sec = opt.budget_sec;
  Report rep = check_associativity(t, ao, "associativity");
  if (!rep.passed() || rep.count("timed_out") == 0) {
    rep.ms = sw.elapsed_ms();
    return rep;
  }
  // Budget exhausted: exhaustive at seeded rational points plus the symbolic
  // triples that involve a generator.
  Report fb("associativity");
  fb.note("exhaustive check exceeded the budget after " + std::to_string(rep.count("triples_checked")) +
          " triples; fell back to seeded points and generator triples");
  if constexpr (std::is_same_v<S, P>) {
    std::mt19937_64 rng(opt.seed);
    for (int i = 0; i < 5; ++i) {
      std::vector<Q> pt{random_rational(rng), random_rational(rng)};
      auto tq = t.template map<Q>([&](const P& p) { return p.eval(pt); });
      auto sub = check_associativity(tq, {}, "point_" + std::to_string(i));
      fb.note("point " + std::to_string(i) + " = (" + pt[0].str() + ", " + pt[1].str() + ")");
      fb.absorb(sub);
    }
  } else {
    AssociativityOptions so;
    so.mode = AssociativityOptions::Mode::Sampled;
    so.seed = opt.seed;
    fb.absorb(check_associativity(t, so, "sampled"));
  }
  fb.absorb(generator_triples(t));
  fb.ms = sw.elapsed_ms();
  return fb;
}

Report dualize_v3_formulas() {
  Report rep("dualize_v3");
  auto w = dualize(v3<Q>());
  auto ts = v3<Q>().degrees;
  // d_h . x_t = [h = t] x_t
  for (std::size_t i = 0; i < 3; ++i)
    for (const auto& h : w.group) {
      rep.add_count("action_entries");
      Q expect = h == ts[i] ? Q(1) : Q(0);
      if (w.delta_action(h)(i, i) != expect) rep.fail("d_" + h.str() + " . x_" + ts[i].str());
    }
  // lambda(x_t) = sum_h sgn(h) d_h (x) x_{h^-1 t h}
  for (std::size_t j = 0; j < 3; ++j) {
    for (const auto& h : w.group) {
      const auto& c = w.coact(h);
      Perm target = h.inverse() * ts[j] * h;
      for (std::size_t i = 0; i < 3; ++i) {
        rep.add_count("coaction_entries");
        Q expect = ts[i] == target ? Q(h.sign()) : Q(0);
        if (c(i, j) != expect) rep.fail("coaction of x_" + ts[j].str() + " at d_" + h.str());
      }
    }
  }
  rep.absorb(yd_axiom_check(w));
  return rep;
}

Report yetter_drinfeld() {
  Stopwatch sw;
  Report rep("yetter_drinfeld");
  auto simples = simples_list<Cyclotomic3>();
  std::int64_t sq = 0;
  for (const auto& s : simples) {
    sq += static_cast<std::int64_t>(s.dim * s.dim);
    auto tag = s.g.str() + "/" + s.irrep;
    if (!yd_axiom_check(s.module).passed()) rep.fail("yd axioms: " + tag);
    auto dual = dualize(s.module);
    if (!yd_axiom_check(dual).passed()) rep.fail("dual yd axioms: " + tag);
    if (!satisfies_braid_relation(braiding(s.module), s.dim)) rep.fail("braid relation: " + tag);
    if (!satisfies_braid_relation(braiding(dual), s.dim)) rep.fail("dual braid relation: " + tag);
    rep.add_count("braidings", 2);
  }
  rep.set_count("simples", static_cast<std::int64_t>(simples.size()));
  rep.set_count("sum_dim_squared", sq);
  if (simples.size() != 8) rep.fail("expected 8 simple modules");
  if (sq != 36) rep.fail("expected sum of squared dimensions 36");
  rep.absorb(dualize_v3_formulas());

  auto t = BraidedTensorAlgebra<Q>::from_module(v3<Q>());
  auto rels = quadratic_relations<Q>(3);
  std::vector<Vec<Q>> rv, pv;
  for (const auto& r : rels) {
    if (!t.is_primitive(r)) rep.fail("not primitive: " + t.str(r));
    rv.push_back(t.to_degree_two(r));
  }
  for (const auto& p : t.degree_two_primitives()) pv.push_back(t.to_degree_two(p));
  auto both = rv;
  both.insert(both.end(), pv.begin(), pv.end());
  rep.set_count("quadratic_relations", static_cast<std::int64_t>(rels.size()));
  rep.set_count("relation_rank", static_cast<std::int64_t>(rank_of(rv, 9)));
  rep.set_count("degree_two_primitives", static_cast<std::int64_t>(pv.size()));
  if (rels.size() != 5 || rank_of(rv, 9) != pv.size() || rank_of(both, 9) != pv.size())
    rep.fail("quadratic relations do not span the degree-two primitives");
  rep.ms = sw.elapsed_ms();
  return rep;
}

Report skew_primitive() {
  Stopwatch sw;
  Report rep("skew_primitive");
  auto s = s3_skew_primitive_setup<Q>();
  rep.absorb(check_coalgebra(s.ambient, "ambient"));
  auto sol = skew_primitive_solver(s.ambient, s.g, s.e);
  rep.set_count("dimension", static_cast<std::int64_t>(sol.dimension()));
  if (sol.dimension() != 2) rep.fail("solution space has dimension " + std::to_string(sol.dimension()));
  if (!sol.matches_closed_form) rep.fail("solutions do not match x_i = a_i g - sum_j a_j e_ij");
  rep.ms = sw.elapsed_ms();
  return rep;
}

}  // namespace

const std::vector<std::string>& suite_scopes() {
  static const std::vector<std::string> scopes{"nichols", "diamond", "hopf", "lemmas", "classify"};
  return scopes;
}

std::vector<Report> nichols_suite(const SuiteOptions& opt) {
  Stopwatch sw;
  Report rep("nichols");
  auto ctx = SmashContext::v3();
  auto rules = default_rules<Q>(ctx, Q(0), Q(0));
  auto words = rules.irreducible_words(Word::kDefaultCap);
  auto h = hilbert_series(words);
  rep.set_count("words", static_cast<std::int64_t>(words.size()));
  for (std::size_t i = 0; i < h.size(); ++i) rep.set_count("degree_" + std::to_string(i), static_cast<std::int64_t>(h[i]));
  std::size_t dim = words.size() * ctx->group_size();
  rep.set_count("dim_smash", static_cast<std::int64_t>(dim));
  if (words.size() != 12) rep.fail("expected 12 irreducible words");
  if (h != std::vector<std::size_t>{1, 3, 4, 3, 1}) rep.fail("unexpected Hilbert series " + series_str(h));
  if (dim != 72) rep.fail("expected dimension 72 with delta tails");
  rep.note("dim B(V_3) = " + std::to_string(words.size()) + ", Hilbert " + series_str(h));
  rep.note("dim B(V_3)#k^{S3} = " + std::to_string(dim));
  Report quad("nichols_relations");
  for (const auto& r : quadratic_relations<Q>(3)) {
    SmashElt<Q> x;
    for (const auto& [w, c] : r) add_into(x, full_tail<Q>(*ctx, w, c));
    quad.add_count("relations");
    if (!rules.reduce(x, opt.fuel).empty()) quad.fail("relation does not vanish");
  }
  rep.absorb(quad);
  rep.ms = sw.elapsed_ms();
  return {rep};
}

std::vector<Report> diamond_suite(const SuiteOptions& opt) {
  return with_params(opt, [&](auto a1, auto a2) {
    using S = decltype(a1);
    std::vector<Report> out;
    auto ctx = SmashContext::v3();
    auto rules = default_rules<S>(ctx, a1, a2);
    Stopwatch sw;
    Report amb("ambiguities");
    std::int64_t checked = 0, resolved = 0;
    for (const auto& a : rules.overlap_ambiguities()) {
      ++checked;
      auto res = rules.resolve_ambiguity(a, opt.fuel);
      if (res.resolved) ++resolved;
      else amb.fail(res.trace);
    }
    amb.set_count("checked", checked);
    amb.set_count("resolved", resolved);
    amb.note("ambiguities: " + std::to_string(checked) + " checked, " + std::to_string(resolved) + " resolved");
    amb.ms = sw.elapsed_ms();
    out.push_back(amb);

    Stopwatch sw2;
    Report basis("basis");
    auto words = rules.irreducible_words(Word::kDefaultCap);
    basis.set_count("words", static_cast<std::int64_t>(words.size()));
    basis.set_count("dim", static_cast<std::int64_t>(words.size() * ctx->group_size()));
    basis.note("basis: " + std::to_string(words.size()) + " words, Hilbert " + series_str(hilbert_series(words)));
    if (words.size() != 12) basis.fail("expected 12 irreducible words");
    basis.ms = sw2.elapsed_ms();
    out.push_back(basis);

    out.push_back(associativity(rules, words, opt));
    return out;
  });
}

std::vector<Report> hopf_suite(const SuiteOptions& opt) {
  return with_params(opt, [&](auto a1, auto a2) {
    using S = decltype(a1);
    auto h = Hopf72<S>::build(a1, a2, opt.fuel);
    HopfCheckOptions ho;
    ho.seed = opt.seed;
    return std::vector<Report>{verify_hopf_axioms(h, ho), verify_hopf_ideal(h, opt.fuel), c_identity(h),
                               coradical_certificate(h), gr_check(h)};
  });
}

std::vector<Report> lemmas_suite(const SuiteOptions& opt) {
  auto out = with_params(opt, [&](auto a1, auto a2) {
    using S = decltype(a1);
    auto h = Hopf72<S>::build(a1, a2, opt.fuel);
    return std::vector<Report>{isotypic_filtration_suite(h)};
  });
  out.push_back(skew_primitive());
  out.push_back(yetter_drinfeld());
  return out;
}

std::vector<Report> classify_suite(const SuiteOptions& opt) {
  std::vector<Report> out;
  std::mt19937_64 rng(opt.seed);
  auto group = symmetric_group(3);

  Stopwatch sw;
  Report action("gamma_action");
  for (int trial = 0; trial < 50; ++trial) {
    RationalPair a{random_rational(rng), random_rational(rng)};
    Q mu = random_rational(rng);
    if (mu.is_zero()) mu = Q(1);
    action.add_count("pairs");
    if (!(act_word(a, "ss") == a)) action.fail("s^2 != 1 at " + pair_str(a));
    if (!(act_word(a, "rrr") == a)) action.fail("r^3 != 1 at " + pair_str(a));
    if (!(act_word(a, "srsr") == a)) action.fail("(sr)^2 != 1 at " + pair_str(a));
    for (const auto& p : group) {
      // The scale commutes with the permutation part.
      auto scaled = act(a, GammaElt<Q>{mu, p});
      auto split = act(act(a, GammaElt<Q>{Q(1), p}), GammaElt<Q>{mu, Perm::identity(3)});
      if (!(scaled == split)) action.fail("scale does not commute at " + pair_str(a));
      for (const auto& q : group) {
        auto lhs = act(a, GammaElt<Q>{Q(1), p * q});
        auto rhs = act(act(a, GammaElt<Q>{Q(1), p}), GammaElt<Q>{Q(1), q});
        action.add_count("compositions");
        if (!(lhs == rhs)) action.fail("not a right action at " + pair_str(a) + " for " + p.str() + ", " + q.str());
      }
    }
  }
  action.ms = sw.elapsed_ms();
  out.push_back(action);

  Stopwatch sw2;
  Report orbit("orbit_eq");
  std::vector<RationalPair> sample;
  for (int i = 0; i < 30; ++i) {
    RationalPair a{random_rational(rng), random_rational(rng)};
    if (i % 3 == 2) {
      Q mu = random_rational(rng);
      a = act(sample.back(), GammaElt<Q>{mu.is_zero() ? Q(2) : mu, group[i % 6]});
    }
    sample.push_back(a);
  }
  sample.push_back({Q(0), Q(0)});
  for (const auto& a : sample) {
    if (!orbit_eq(a, a)) orbit.fail("not reflexive at " + pair_str(a));
    for (const auto& b : sample) {
      bool ab = orbit_eq(a, b);
      orbit.add_count("pairs");
      if (ab != orbit_eq(b, a)) orbit.fail("not symmetric at " + pair_str(a) + ", " + pair_str(b));
      if (ab != (canonical_rep(a) == canonical_rep(b))) orbit.fail("canonical_rep disagrees at " + pair_str(a));
      if (!ab) continue;
      for (const auto& c : sample)
        if (orbit_eq(b, c) && !orbit_eq(a, c)) orbit.fail("not transitive at " + pair_str(a));
    }
  }
  if (!orbit_eq({Q(1), Q(0)}, {Q(1), Q(1)})) orbit.fail("(1,0) and (1,1) should be equivalent");
  if (orbit_eq({Q(1), Q(0)}, {Q(1), Q(2)})) orbit.fail("(1,0) and (1,2) should not be equivalent");
  orbit.ms = sw2.elapsed_ms();
  out.push_back(orbit);

  out.push_back(verify_iso(Perm::parse("(12)", 3)));
  out.push_back(verify_iso(Perm::parse("(123)", 3)));
  return out;
}

std::vector<Report> run_scope(const std::string& scope, const SuiteOptions& opt) {
  if (scope == "nichols") return nichols_suite(opt);
  if (scope == "diamond") return diamond_suite(opt);
  if (scope == "hopf") return hopf_suite(opt);
  if (scope == "lemmas") return lemmas_suite(opt);
  if (scope == "classify") return classify_suite(opt);
  if (scope == "all") {
    std::vector<Report> out;
    for (const auto& s : suite_scopes()) {
      auto part = run_scope(s, opt);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  throw std::invalid_argument("unknown scope '" + scope + "'");
}

}  // namespace hopfcheck
