#pragma once

#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gapvir/gapvir.hpp"

namespace gapvir::cli {

inline constexpr int kMaxCentral = 8;
inline constexpr int kMaxBeta = 16;
inline constexpr int kDefaultGuardrail = 24;

enum Exit { kOk = 0, kFail = 1, kUsage = 2 };

struct RunConfig {
  int p = 2;
  bool p_given = false;
  std::string l0 = "0";
  std::map<int, std::string> c;     // given C_j values, 0 <= j <= p/2
  std::map<int, std::string> beta;  // given beta_i values, 1 <= i <= p-1
  std::optional<int> max_level;
  std::optional<int> window;
  std::uint64_t seed = 1;
  std::string format = "json";
};

struct Inputs {
  std::string x, y;
  std::string a = "0", b = "0";
  std::string f_matrix;
  std::string kind;
  std::string alpha = "1";
  std::optional<int> level;
  std::string cs = "0,1/2,1,26";
  int h_den = 48;
  int h_count = 97;
  int max_m = 50;
};

struct Outcome {
  Json result;
  std::vector<std::string> clauses;
  bool pass = true;
  Json inputs = Json::object();
};

inline int guardrail() {
  if (const char* env = std::getenv("GAPVIR_MAX_LEVEL")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw Error(ErrorKind::Configuration, "GAPVIR_MAX_LEVEL is not an integer");
    }
  }
  return kDefaultGuardrail;
}

inline std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long>());
  throw Error(ErrorKind::Parse, "scalars in a config file must be strings or integers");
}

inline void load_config(const std::string& path, RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Configuration, "cannot open config file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("config file: ") + e.what());
  }
  if (j.contains("p")) {
    cfg.p = j.at("p").get<int>();
    cfg.p_given = true;
  }
  if (j.contains("weights")) {
    const auto& w = j.at("weights");
    if (w.contains("L0")) cfg.l0 = scalar_text(w.at("L0"));
    if (w.contains("C")) {
      int k = 0;
      for (const auto& x : w.at("C")) cfg.c[k++] = scalar_text(x);
    }
  }
  if (j.contains("beta")) {
    int k = 1;
    for (const auto& x : j.at("beta")) cfg.beta[k++] = scalar_text(x);
  }
  if (j.contains("maxLevel")) cfg.max_level = j.at("maxLevel").get<int>();
  if (j.contains("window")) cfg.window = j.at("window").get<int>();
  if (j.contains("seed")) cfg.seed = j.at("seed").get<std::uint64_t>();
  if (j.contains("outputFormat")) cfg.format = j.at("outputFormat").get<std::string>();
}

inline FMatrix load_f_matrix(const std::string& path) {
  if (path.empty()) throw Error(ErrorKind::Configuration, "--f-matrix is required");
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::Configuration, "cannot open F-matrix file " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::Parse, std::string("F-matrix file: ") + e.what());
  }
  std::vector<std::vector<Scalar>> rows;
  for (const auto& row : j.at("rows")) {
    std::vector<Scalar> r;
    for (const auto& x : row) r.push_back(Scalar::parse(scalar_text(x)));
    rows.push_back(std::move(r));
  }
  return FMatrix(j.at("p").get<int>(), std::move(rows));
}

class Context {
 public:
  Context(RunConfig cfg, Inputs in) : cfg_(std::move(cfg)), in_(std::move(in)) {
    if (cfg_.p < 2) throw Error(ErrorKind::Configuration, "p must be >= 2");
    if (cfg_.p / 2 > kMaxCentral) throw Error(ErrorKind::Configuration, "p too large for the --c flags");
    for (const auto& [j, v] : cfg_.c) {
      if (j > cfg_.p / 2) {
        throw Error(ErrorKind::Configuration, "C_" + std::to_string(j) + " is C_" + std::to_string(cfg_.p - j) +
                                                  "; give it as --c" + std::to_string(cfg_.p - j));
      }
    }
    for (const auto& [i, v] : cfg_.beta) {
      if (i > cfg_.p - 1) throw Error(ErrorKind::Configuration, "beta_" + std::to_string(i) + " exceeds p-1");
    }
  }

  const RunConfig& config() const { return cfg_; }
  const Inputs& inputs() const { return in_; }
  int p() const { return cfg_.p; }

  int max_level(int fallback) const {
    int d = cfg_.max_level.value_or(fallback);
    if (d < 0) throw Error(ErrorKind::Configuration, "max-level must be >= 0");
    if (d > guardrail()) {
      throw Error(ErrorKind::Configuration, "max-level " + std::to_string(d) + " exceeds the guardrail " +
                                                std::to_string(guardrail()) + " (set GAPVIR_MAX_LEVEL to raise it)");
    }
    return d;
  }

  int window(int fallback) const {
    int w = cfg_.window.value_or(fallback);
    if (w < 1) throw Error(ErrorKind::Configuration, "window must be >= 1");
    return w;
  }

  HighestWeight weight() const {
    std::vector<Scalar> c(static_cast<std::size_t>(p() / 2 + 1));
    for (const auto& [j, v] : cfg_.c) c[static_cast<std::size_t>(j)] = Scalar::parse(v);
    return HighestWeight(p(), Scalar::parse(cfg_.l0), std::move(c));
  }

  std::vector<Scalar> beta() const {
    std::vector<Scalar> b(static_cast<std::size_t>(p() - 1), Scalar(1));
    for (const auto& [i, v] : cfg_.beta) b[static_cast<std::size_t>(i - 1)] = Scalar::parse(v);
    return b;
  }

  bool beta_given() const { return !cfg_.beta.empty(); }

  Json config_json() const {
    Json c = Json::array();
    for (int j = 0; j <= p() / 2; ++j) {
      auto it = cfg_.c.find(j);
      c.push_back(it == cfg_.c.end() ? "0" : it->second);
    }
    Json b = Json::array();
    for (int i = 1; i < p(); ++i) {
      auto it = cfg_.beta.find(i);
      b.push_back(it == cfg_.beta.end() ? "1" : it->second);
    }
    Json out{{"p", p()}, {"weights", {{"L0", cfg_.l0}, {"C", c}}}, {"beta", b}};
    out["maxLevel"] = cfg_.max_level ? Json(*cfg_.max_level) : Json(nullptr);
    out["window"] = cfg_.window ? Json(*cfg_.window) : Json(nullptr);
    out["seed"] = cfg_.seed;
    out["outputFormat"] = cfg_.format;
    return out;
  }

 private:
  RunConfig cfg_;
  Inputs in_;
};

inline SectorKind parse_sector(const std::string& s) {
  if (s.empty() || s == "full") return SectorKind::Full;
  if (s == "virasoro") return SectorKind::Virasoro;
  if (s == "heisenberg") return SectorKind::Heisenberg;
  if (s == "complement") return SectorKind::Complement;
  throw Error(ErrorKind::Configuration, "unknown sector '" + s + "' (full|virasoro|heisenberg|complement)");
}

inline std::vector<Scalar> parse_list(const std::string& text) {
  std::vector<Scalar> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(Scalar::parse(item));
  if (out.empty()) throw Error(ErrorKind::Parse, "empty scalar list");
  return out;
}

// ---- commands ----

inline Outcome cmd_bracket(const Context& ctx) {
  const auto& in = ctx.inputs();
  if (in.x.empty() || in.y.empty()) throw Error(ErrorKind::Configuration, "bracket needs --x and --y");
  GapVirasoro alg(ctx.p());
  Element x = alg.parse_element(in.x);
  Element y = alg.parse_element(in.y);
  Outcome o;
  o.inputs = {{"x", in.x}, {"y", in.y}};
  o.clauses = {"bracket-structure-constants"};
  o.result = {{"x", x.to_string()}, {"y", y.to_string()}, {"bracket", bracket(x, y).to_string()}};
  return o;
}

inline Outcome cmd_involution_check(const Context& ctx) {
  const auto& in = ctx.inputs();
  const int p = ctx.p();
  const int window = ctx.window(4);
  Sampler sampler(ctx.config().seed);
  const std::string kind = in.kind.empty() ? "plus" : in.kind;
  if (kind != "plus" && kind != "minus") throw Error(ErrorKind::Configuration, "kind must be plus or minus");
  std::optional<AntiInvolution> theta;
  if (ctx.beta_given()) {
    theta = kind == "plus" ? AntiInvolution::plus(p, Scalar::parse(in.alpha), ctx.beta())
                           : AntiInvolution::minus(p, Scalar::parse(in.alpha), ctx.beta());
  } else {
    theta = kind == "plus" ? sampler.plus_involution(p) : sampler.minus_involution(p);
  }
  InvolutionAxioms ax = involution_axioms(*theta, window, sampler);

  // Chevalley map: involutive automorphism on the same window
  GapVirasoro alg(p);
  const auto gens = basis_window(p, window);
  bool chev_auto = true;
  bool chev_inv = true;
  for (const auto& g : gens) {
    Element x(p, g);
    chev_inv = chev_inv && chevalley(chevalley(x)) == x;
    for (const auto& h : gens) {
      Element y(p, h);
      chev_auto = chev_auto && chevalley(alg.bracket(g, h)) == bracket(chevalley(x), chevalley(y));
    }
  }
  Outcome o;
  o.inputs = {{"kind", kind}, {"alpha", ctx.beta_given() ? in.alpha : "sampled"}, {"window", window}};
  o.clauses = {"anti-involution-axioms", "chevalley-automorphism"};
  o.result = {{"involution", theta->describe()},
              {"axioms", to_json(ax)},
              {"chevalley", {{"involutive", chev_inv}, {"automorphism", chev_auto}}}};
  o.pass = ax.pass() && chev_inv && chev_auto;
  return o;
}

inline Outcome cmd_verma_dims(const Context& ctx) {
  const int d_max = ctx.max_level(10);
  const SectorKind sector = parse_sector(ctx.inputs().kind);
  const HighestWeight w = ctx.weight();
  Json dims = Json::array();
  for (int d = 0; d <= d_max; ++d) dims.push_back(graded_dim(w, d, sector));
  Outcome o;
  o.inputs = {{"sector", to_string(sector)}};
  o.clauses = {"pbw-graded-dimension"};
  o.result = {{"sector", to_string(sector)}, {"dims", dims}};
  return o;
}

inline Outcome cmd_gram(const Context& ctx) {
  const int d = ctx.inputs().level.value_or(ctx.max_level(2));
  if (d < 0 || d > guardrail()) throw Error(ErrorKind::Configuration, "level outside 0..guardrail");
  const SectorKind sector = parse_sector(ctx.inputs().kind);
  const HighestWeight w = ctx.weight();
  const auto theta = AntiInvolution::plus(ctx.p(), Scalar(1), ctx.beta());
  GramMatrix G = gram(w, theta, d, sector);
  Outcome o;
  o.inputs = {{"level", d}, {"sector", to_string(sector)}};
  o.clauses = {"contravariant-form"};
  o.result = to_json(G);
  o.result["hermitian"] = G.entries.is_hermitian();
  o.result["definiteness"] = G.entries.is_hermitian() ? to_json(definiteness(G.entries)) : Json(nullptr);
  return o;
}

inline Outcome cmd_reducibility(const Context& ctx) {
  const int d_max = ctx.max_level(6);
  const SectorKind sector = parse_sector(ctx.inputs().kind);
  const HighestWeight w = ctx.weight();
  ReducibilityReport r = reducibility_oracle(w, d_max, sector);
  Outcome o;
  o.inputs = {{"sector", to_string(sector)}};
  o.clauses = {"singular-vector-search", "contravariant-form-radical"};
  o.result = to_json(r);
  o.pass = r.routes_agree;
  if (sector == SectorKind::Full && w.J_is_full()) {
    // phi_gap vanishing at (a, b) predicts a singular vector at p-level p*a*b
    Json zeros = Json::array();
    std::optional<long> predicted;
    for (const auto& [a, b] : phi_gap_zeros(w, d_max / w.p())) {
      const long lvl = static_cast<long>(w.p()) * a * b;
      zeros.push_back({{"a", a}, {"b", b}, {"pLevel", lvl}});
      if (!predicted || lvl < *predicted) predicted = lvl;
    }
    o.clauses.push_back("gap-kac-criterion");
    const bool agrees = predicted.has_value() == r.first_singular_level.has_value() &&
                        (!predicted || *predicted == *r.first_singular_level);
    o.result["phiZeros"] = zeros;
    o.result["criterionAgrees"] = agrees;
    o.pass = o.pass && agrees;
  }
  return o;
}

inline Outcome cmd_sugawara_check(const Context& ctx) {
  const int d_max = ctx.max_level(6);
  const int window = ctx.window(3);
  const HighestWeight w = ctx.weight();
  if (w.J().empty()) throw Error(ErrorKind::Configuration, "sugawara-check needs some nonzero C_j with j >= 1");
  FockSpace F(w);
  Json failures = Json::array();
  long checked = 0;
  for (int m = -window; m <= window; ++m) {
    for (int n = -window; n <= window; ++n) {
      ++checked;
      RelationCheck rc = virasoro_relation_check(F, m, n, d_max);
      if (!rc.pass) failures.push_back({{"m", m}, {"n", n}, {"witness", render_monomial(*rc.witness)}});
    }
  }
  Json mixed_failures = Json::array();
  for (int m = -window; m <= window; ++m) {
    for (int n = -window; n <= window; ++n) {
      for (int i : w.J()) {
        if (!mixed_relation_check(F, m, n, i, d_max)) mixed_failures.push_back({{"m", m}, {"n", n}, {"i", i}});
      }
    }
  }
  const FockVector vac(Monomial{});
  const FockVector l0v = F.sugawara_L(0, vac);
  Outcome o;
  o.clauses = {"oscillator-realisation", "central-charge-J"};
  o.result = {{"J", w.J()},
              {"centralCharge", static_cast<long>(w.J().size())},
              {"virasoroRelations", {{"checked", checked}, {"failures", failures}}},
              {"mixedRelations", {{"failures", mixed_failures}}},
              {"vacuumL0", l0v.coefficient(Monomial{}).to_string()},
              {"vacuumL0Eigen", l0v.size() <= 1}};
  o.pass = failures.empty() && mixed_failures.empty();
  return o;
}

inline Json f_rows_json(const FMatrix& F) {
  Json rows = Json::array();
  for (const auto& r : F.rows()) rows.push_back(to_json(r));
  return rows;
}

inline Outcome cmd_series_check(const Context& ctx) {
  const auto& in = ctx.inputs();
  const int window = ctx.window(6);
  FMatrix F = load_f_matrix(in.f_matrix);
  if (F.p() != ctx.p()) throw Error(ErrorKind::Configuration, "F-matrix p differs from --p");
  const Scalar a = Scalar::parse(in.a);
  const Scalar b = Scalar::parse(in.b);
  auto violations = validate_F(F);
  Json vj = Json::array();
  for (const auto& v : violations) vj.push_back(to_json(v));

  Outcome o;
  o.inputs = {{"a", in.a}, {"b", in.b}, {"fMatrix", f_rows_json(F)}};
  o.clauses = {"series-module-axioms", "series-reducibility", "series-unitarity"};
  SeriesModule M = SeriesModule::unchecked(a, b, F);
  AxiomCheck ax = series_axiom_check(M, window);
  o.result = {{"columns", M.columns()},
              {"validation", {{"ok", violations.empty()}, {"violations", vj}}},
              {"axioms", to_json(ax, F.p())}};
  if (violations.empty()) {
    SeriesPredicates pr = series_predicates(M, ctx.beta());
    o.result["predicates"] = to_json(pr);
    o.pass = ax.pass && pr.contravariance_self_test.value_or(true);
  } else {
    o.result["predicates"] = nullptr;
    o.pass = false;
  }
  return o;
}

inline Outcome cmd_unitary_check(const Context& ctx) {
  const int d_max = ctx.max_level(6);
  const HighestWeight w = ctx.weight();
  UnitarityVerdict v = highest_weight_unitary(w, ctx.beta(), d_max, ctx.inputs().max_m);
  Outcome o;
  o.inputs = {{"maxM", ctx.inputs().max_m}};
  o.clauses = {"heisenberg-positivity", "continuum-or-discrete-series", "contravariant-form-positivity"};
  o.result = to_json(v);
  o.pass = v.agreement.value_or(true);
  return o;
}

inline Outcome cmd_classify(const Context& ctx) {
  const auto& in = ctx.inputs();
  const std::string kind = in.kind.empty() ? "highest" : in.kind;
  Outcome o;
  o.inputs = {{"kind", kind}};
  Classification c;
  if (kind == "series") {
    FMatrix F = load_f_matrix(in.f_matrix);
    if (F.p() != ctx.p()) throw Error(ErrorKind::Configuration, "F-matrix p differs from --p");
    o.inputs["a"] = in.a;
    o.inputs["b"] = in.b;
    o.inputs["fMatrix"] = f_rows_json(F);
    c = classify(SeriesDescriptor{SeriesModule(Scalar::parse(in.a), Scalar::parse(in.b), F), ctx.beta()});
    o.clauses = {"series-unitarity"};
    o.pass = c.series->contravariance_self_test.value_or(true);
  } else if (kind == "highest" || kind == "lowest") {
    const int d_max = ctx.max_level(6);
    if (kind == "highest") {
      c = classify(HighestDescriptor{ctx.weight(), ctx.beta()}, d_max);
    } else {
      c = classify(LowestDescriptor{ctx.weight(), ctx.beta()}, d_max);
    }
    o.clauses = {"heisenberg-positivity", "continuum-or-discrete-series"};
    if (kind == "lowest") o.clauses.push_back("chevalley-duality");
    o.pass = c.highest->agreement.value_or(true);
  } else {
    throw Error(ErrorKind::Configuration, "kind must be series, highest or lowest");
  }
  o.result = to_json(c);
  return o;
}

inline Outcome cmd_kac_scan(const Context& ctx) {
  const auto& in = ctx.inputs();
  const int d_max = ctx.max_level(4);
  if (in.h_den < 1 || in.h_count < 1) throw Error(ErrorKind::Configuration, "h grid needs positive sizes");
  std::vector<Scalar> hs;
  for (int k = 0; k < in.h_count; ++k) hs.emplace_back(Rational(k, in.h_den));
  KacScan scan = kac_scan(parse_list(in.cs), hs, d_max);
  Outcome o;
  o.inputs = {{"cs", in.cs}, {"hDenominator", in.h_den}, {"hCount", in.h_count}};
  o.clauses = {"virasoro-kac-criterion"};
  o.result = to_json(scan);
  o.pass = scan.sets_equal;
  return o;
}

// ---- output ----

inline void flatten(const Json& j, const std::string& prefix, std::ostream& out) {
  if (j.is_object()) {
    if (j.empty()) out << prefix << ": {}\n";
    for (const auto& [k, v] : j.items()) flatten(v, prefix.empty() ? k : prefix + "." + k, out);
  } else if (j.is_array()) {
    bool scalar_items = true;
    for (const auto& v : j) scalar_items = scalar_items && !v.is_structured();
    if (scalar_items) {
      out << prefix << ": [";
      for (std::size_t k = 0; k < j.size(); ++k) out << (k ? ", " : "") << (j[k].is_string() ? j[k].get<std::string>() : j[k].dump());
      out << "]\n";
    } else {
      for (std::size_t k = 0; k < j.size(); ++k) flatten(j[k], prefix + "[" + std::to_string(k) + "]", out);
    }
  } else {
    out << prefix << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
  }
}

inline std::string render(const Json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  std::ostringstream out;
  flatten(report, "", out);
  return out.str();
}

inline bool given(const CLI::App* sub, const std::string& name) {
  const CLI::Option* opt = sub->get_option_no_throw(name);
  return opt != nullptr && opt->count() > 0;
}

using Command = std::function<Outcome(const Context&)>;

inline const std::vector<std::pair<std::string, std::string>>& command_list() {
  static const std::vector<std::pair<std::string, std::string>> list = {
      {"bracket", "Bracket of two algebra elements"},
      {"involution-check", "Anti-involution axioms on a mode window"},
      {"verma-dims", "Graded dimensions of the Verma module"},
      {"gram", "Contravariant Gram matrix at one p-level"},
      {"reducibility", "Singular vectors and form radical level by level"},
      {"sugawara-check", "Oscillator realisation relations on the Fock space"},
      {"series-check", "Intermediate series module checks"},
      {"unitary-check", "Closed-form unitarity against the Gram oracle"},
      {"classify", "Sort a module into the unitary families"},
      {"kac-scan", "Virasoro Kac criterion against brute force"},
  };
  return list;
}

inline Command command_for(const std::string& name) {
  static const std::map<std::string, Command> table = {
      {"bracket", cmd_bracket},
      {"involution-check", cmd_involution_check},
      {"verma-dims", cmd_verma_dims},
      {"gram", cmd_gram},
      {"reducibility", cmd_reducibility},
      {"sugawara-check", cmd_sugawara_check},
      {"series-check", cmd_series_check},
      {"unitary-check", cmd_unitary_check},
      {"classify", cmd_classify},
      {"kac-scan", cmd_kac_scan},
  };
  return table.at(name);
}

/// Runs one command line (without the program name). Returns the exit code:
/// 0 success, 1 a check failed or closed form and oracle disagree, 2 usage error.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"gapvir: exact computations for the gap-p Virasoro algebra"};
  app.require_subcommand(1);

  int p = 2;
  std::string l0, config_path, output_path, format;
  std::array<std::string, kMaxCentral + 1> c_flags;
  std::array<std::string, kMaxBeta + 1> beta_flags;
  int max_level = 0, window = 0;
  std::uint64_t seed = 1;
  Inputs in;
  int level = 0;

  std::vector<CLI::App*> subs;
  for (const auto& [name, help] : command_list()) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--config", config_path, "JSON run configuration");
    sub->add_option("--p", p, "Gap parameter p >= 2");
    sub->add_option("--l0", l0, "Highest weight phi(L0)");
    for (int j = 0; j <= kMaxCentral; ++j) {
      sub->add_option("--c" + std::to_string(j), c_flags[static_cast<std::size_t>(j)], "phi(C" + std::to_string(j) + ")");
    }
    for (int i = 1; i <= kMaxBeta; ++i) {
      sub->add_option("--beta" + std::to_string(i), beta_flags[static_cast<std::size_t>(i)],
                      "beta_" + std::to_string(i));
    }
    sub->add_option("--max-level", max_level, "Largest p-level (guardrail 24, env GAPVIR_MAX_LEVEL)");
    sub->add_option("--window", window, "Mode window");
    sub->add_option("--seed", seed, "Random seed");
    sub->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--output", output_path, "Write the report to this file");
    sub->add_option("--kind", in.kind, "Sector, involution kind or descriptor kind");
    if (name == "bracket") {
      sub->add_option("--x", in.x, "First element, e.g. \"L[2]\"");
      sub->add_option("--y", in.y, "Second element");
    }
    if (name == "involution-check") sub->add_option("--alpha", in.alpha, "alpha (with explicit --beta flags)");
    if (name == "gram") sub->add_option("--level", level, "p-level (default: --max-level, else 2)");
    if (name == "series-check" || name == "classify") {
      sub->add_option("--f-matrix", in.f_matrix, "F-matrix JSON file");
      sub->add_option("--a", in.a, "Series parameter a");
      sub->add_option("--b", in.b, "Series parameter b");
    }
    if (name == "unitary-check") sub->add_option("--max-m", in.max_m, "Discrete series scan bound");
    if (name == "kac-scan") {
      sub->add_option("--cs", in.cs, "Comma separated central charges");
      sub->add_option("--h-den", in.h_den, "h grid denominator");
      sub->add_option("--h-count", in.h_count, "Number of h grid points k/den, k = 0..count-1");
    }
    subs.push_back(sub);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kOk;
    }
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  CLI::App* sub = nullptr;
  for (auto* s : subs) {
    if (s->parsed()) sub = s;
  }

  try {
    RunConfig cfg;
    if (given(sub, "--config")) load_config(config_path, cfg);
    if (given(sub, "--p")) {
      cfg.p = p;
      cfg.p_given = true;
    }
    // without an explicit p, an F-matrix file fixes it
    if (!cfg.p_given && !in.f_matrix.empty()) cfg.p = load_f_matrix(in.f_matrix).p();
    if (given(sub, "--l0")) cfg.l0 = l0;
    for (int j = 0; j <= kMaxCentral; ++j) {
      if (given(sub, "--c" + std::to_string(j))) cfg.c[j] = c_flags[static_cast<std::size_t>(j)];
    }
    for (int i = 1; i <= kMaxBeta; ++i) {
      if (given(sub, "--beta" + std::to_string(i))) cfg.beta[i] = beta_flags[static_cast<std::size_t>(i)];
    }
    // config entries beyond p are dropped so a shared config fits any --p
    std::erase_if(cfg.c, [&](const auto& kv) { return kv.first > cfg.p / 2 && !given(sub, "--c" + std::to_string(kv.first)); });
    std::erase_if(cfg.beta, [&](const auto& kv) { return kv.first > cfg.p - 1 && !given(sub, "--beta" + std::to_string(kv.first)); });
    if (given(sub, "--max-level")) cfg.max_level = max_level;
    if (given(sub, "--window")) cfg.window = window;
    if (given(sub, "--seed")) cfg.seed = seed;
    if (given(sub, "--format")) cfg.format = format;
    if (cfg.format != "json" && cfg.format != "text") throw Error(ErrorKind::Configuration, "format must be json or text");
    if (given(sub, "--level")) in.level = level;

    Context ctx(cfg, in);
    Outcome o = command_for(sub->get_name())(ctx);
    Json config = ctx.config_json();
    config["inputs"] = o.inputs;
    Json report = make_report(sub->get_name(), std::move(config), o.clauses, std::move(o.result));
    report["status"] = o.pass ? "ok" : "fail";
    const std::string text = render(report, cfg.format);
    if (!output_path.empty()) {
      std::ofstream file(output_path, std::ios::binary);
      if (!file) throw Error(ErrorKind::Configuration, "cannot write " + output_path);
      file << text;
    } else {
      out << text;
    }
    return o.pass ? kOk : kFail;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Json::exception& e) {
    err << "error (parse): " << e.what() << "\n";
    return kUsage;
  }
}

}  // namespace gapvir::cli
