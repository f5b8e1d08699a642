#include "hopfcheck/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "hopfcheck/classify.hpp"
#include "hopfcheck/hopf72.hpp"
#include "hopfcheck/suites.hpp"
#include "json.hpp"

namespace hopfcheck::cli {

namespace {

using Json = nlohmann::ordered_json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ParamFlags {
  std::optional<std::string> a1;
  std::optional<std::string> a2;
  bool symbolic = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--a1", a1, "First parameter (rational, e.g. 3/4)");
    cmd->add_option("--a2", a2, "Second parameter (rational)");
    cmd->add_flag("--symbolic", symbolic, "Work over Q[a1, a2] (default)");
  }

  std::optional<std::pair<Rational, Rational>> resolve() const {
    if (symbolic && (a1 || a2)) throw UsageError("--symbolic cannot be combined with --a1/--a2");
    if (a1.has_value() != a2.has_value()) throw UsageError("--a1 and --a2 must be given together");
    if (!a1) return std::nullopt;
    try {
      return std::make_pair(Rational::parse(*a1), Rational::parse(*a2));
    } catch (const ScalarError& e) {
      throw UsageError(std::string("bad parameter: ") + e.what());
    }
  }
};

std::string params_str(const std::optional<std::pair<Rational, Rational>>& p) {
  if (!p) return "symbolic over Q[a1, a2]";
  return "a1 = " + p->first.str() + ", a2 = " + p->second.str();
}

Json report_json(const Report& r, bool timing) {
  Json counts = Json::object();
  for (const auto& [k, v] : r.counts) counts[k] = v;
  Json j;
  j["check"] = r.check;
  j["status"] = to_string(r.status);
  j["counts"] = counts;
  j["details"] = r.details;
  j["ms"] = timing ? std::round(r.ms * 1000.0) / 1000.0 : 0.0;
  return j;
}

void report_text(std::ostream& os, const Report& r, bool timing) {
  std::string status = to_string(r.status);
  std::transform(status.begin(), status.end(), status.begin(), ::toupper);
  os << status << " " << r.check;
  if (!r.counts.empty()) {
    os << " [";
    for (std::size_t i = 0; i < r.counts.size(); ++i)
      os << (i ? " " : "") << r.counts[i].first << "=" << r.counts[i].second;
    os << "]";
  }
  if (timing) {
    std::ostringstream ms;
    ms.precision(1);
    ms << std::fixed << r.ms;
    os << " (" << ms.str() << " ms)";
  }
  os << "\n";
  for (const auto& d : r.details) {
    std::istringstream lines(d);
    std::string line;
    while (std::getline(lines, line)) os << "  " << line << "\n";
  }
}

int cmd_verify(std::ostream& out, const std::string& scope, const SuiteOptions& opt, bool json, bool timing) {
  auto reports = run_scope(scope, opt);
  std::size_t failed = 0;
  for (const auto& r : reports)
    if (r.status == Status::Fail) ++failed;
  if (json) {
    Json doc;
    doc["command"] = "verify";
    doc["scope"] = scope;
    doc["parameters"] = params_str(opt.point);
    doc["seed"] = opt.seed;
    Json arr = Json::array();
    for (const auto& r : reports) arr.push_back(report_json(r, timing));
    doc["reports"] = arr;
    doc["passed"] = reports.size() - failed;
    doc["failed"] = failed;
    out << doc.dump(2) << "\n";
  } else {
    out << "verify " << scope << "\nparameters: " << params_str(opt.point) << "\nseed: " << opt.seed << "\n";
    for (const auto& r : reports) report_text(out, r, timing);
    out << "result: " << reports.size() - failed << " passed, " << failed << " failed\n";
  }
  return failed == 0 ? kAllPass : kCheckFailed;
}

int cmd_classify(std::ostream& out, const std::string& path, bool json) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::vector<std::pair<std::size_t, RationalPair>> input;
  try {
    input = parse_pairs(in);
  } catch (const ParseError& e) {
    throw UsageError(path + ": " + e.what());
  }
  auto res = classify_batch(input);
  auto label_of = [&](std::size_t line) {
    auto it = std::find(res.lines.begin(), res.lines.end(), line);
    return res.labels[static_cast<std::size_t>(it - res.lines.begin())];
  };
  if (json) {
    Json doc;
    Json lines = Json::array();
    for (std::size_t i = 0; i < res.pairs.size(); ++i)
      lines.push_back({{"line", res.lines[i]}, {"pair", pair_str(res.pairs[i])}, {"label", pair_str(res.labels[i])}});
    Json groups = Json::array();
    for (const auto& g : res.groups) groups.push_back({{"label", pair_str(label_of(g.front()))}, {"lines", g}});
    doc["lines"] = lines;
    doc["orbits"] = groups;
    out << doc.dump(2) << "\n";
    return kAllPass;
  }
  for (std::size_t i = 0; i < res.pairs.size(); ++i)
    out << "line " << res.lines[i] << ": " << pair_str(res.pairs[i]) << " -> " << pair_str(res.labels[i]) << "\n";
  out << "orbits: " << res.groups.size() << "\n";
  for (const auto& g : res.groups) {
    out << "  " << pair_str(label_of(g.front())) << ": " << (g.size() == 1 ? "line " : "lines ");
    for (std::size_t i = 0; i < g.size(); ++i) out << (i ? ", " : "") << g[i];
    out << "\n";
  }
  return kAllPass;
}

template <ExactRing S>
Json sparse_json(const SparseVec<S>& v) {
  Json arr = Json::array();
  for (const auto& [k, c] : v) arr.push_back({k, c.str()});
  return arr;
}

template <ExactRing S>
Json dump_json(const Hopf72<S>& h) {
  constexpr std::uint32_t D = Hopf72<S>::kDim;
  Json doc;
  doc["a1"] = h.a1().str();
  doc["a2"] = h.a2().str();
  Json basis = Json::array();
  for (std::uint32_t i = 0; i < D; ++i) basis.push_back(h.label(i));
  doc["basis"] = basis;
  Json mult = Json::array();
  for (std::uint32_t i = 0; i < D; ++i)
    for (std::uint32_t j = 0; j < D; ++j) {
      const auto& e = h.table().at(i, j);
      if (!e.empty()) mult.push_back({{"left", i}, {"right", j}, {"terms", sparse_json(e)}});
    }
  doc["mult"] = mult;
  Json comult = Json::array();
  for (std::uint32_t i = 0; i < D; ++i) {
    Json terms = Json::array();
    for (const auto& [k, c] : h.comult(i)) terms.push_back({k / D, k % D, c.str()});
    comult.push_back(terms);
  }
  doc["comult"] = comult;
  Json counit = Json::array();
  for (std::uint32_t i = 0; i < D; ++i) counit.push_back(h.counit(i).str());
  doc["counit"] = counit;
  Json antipode = Json::array();
  for (std::uint32_t i = 0; i < D; ++i) antipode.push_back(sparse_json(h.antipode(i)));
  doc["antipode"] = antipode;
  return doc;
}

int cmd_dump(std::ostream& out, const std::optional<std::pair<Rational, Rational>>& point, std::size_t fuel,
             bool json) {
  auto emit = [&](const auto& h) {
    if (json) out << dump_json(h).dump(2) << "\n";
    else out << dump_text(h);
  };
  if (point) {
    emit(Hopf72<Rational>::build(point->first, point->second, fuel));
  } else {
    auto vars = MultiPoly::make_context({"a1", "a2"});
    emit(Hopf72<MultiPoly>::build(MultiPoly::variable(vars, 0), MultiPoly::variable(vars, 1), fuel));
  }
  return kAllPass;
}

}  // namespace

CliResult run(const std::vector<std::string>& args) {
  CliResult res;
  std::ostringstream out, err;

  CLI::App app{"Exact verification of the 72-dimensional Hopf algebras A_[a1,a2] over k^{S3}", "hopfcheck"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  std::string scope = "all";
  ParamFlags vparams;
  SuiteOptions opt;
  bool vjson = false, no_timing = false;
  std::vector<std::string> scopes{"all"};
  for (const auto& s : suite_scopes()) scopes.push_back(s);
  verify->add_option("scope", scope, "all, nichols, diamond, hopf, lemmas or classify")->check(CLI::IsMember(scopes));
  vparams.attach(verify);
  verify->add_flag("--json", vjson, "Emit JSON reports");
  verify->add_option("--seed", opt.seed, "Seed for sampled checks");
  verify->add_option("--budget-sec", opt.budget_sec, "Budget for exhaustive associativity (0 = unlimited)")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--fuel", opt.fuel, "Rewrite step limit per reduction")->check(CLI::PositiveNumber);
  verify->add_flag("--no-timing", no_timing, "Omit elapsed times so output is byte-stable");

  auto* classify = app.add_subcommand("classify", "Group parameter pairs from a file into orbits");
  std::string path;
  bool cjson = false;
  classify->add_option("file", path, "One pair \"a1, a2\" per line")->required();
  classify->add_flag("--json", cjson, "Emit JSON");

  auto* dump = app.add_subcommand("dump", "Print the structure tables");
  ParamFlags dparams;
  bool djson = false;
  std::size_t dfuel = kDefaultFuel;
  dparams.attach(dump);
  dump->add_flag("--json", djson, "Emit JSON");
  dump->add_option("--fuel", dfuel, "Rewrite step limit per reduction")->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    res.exit_code = code == 0 ? kAllPass : kUsageError;
    res.out = out.str();
    res.err = err.str();
    return res;
  }

  try {
    if (verify->parsed()) {
      opt.point = vparams.resolve();
      res.exit_code = cmd_verify(out, scope, opt, vjson, !no_timing);
    } else if (classify->parsed()) {
      res.exit_code = cmd_classify(out, path, cjson);
    } else if (dump->parsed()) {
      res.exit_code = cmd_dump(out, dparams.resolve(), dfuel, djson);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    res.exit_code = kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    res.exit_code = kCheckFailed;
  }
  res.out = out.str();
  res.err = err.str();
  return res;
}

}  // namespace hopfcheck::cli
