#include "mzv/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "mzv/error.hpp"
#include "mzv/format.hpp"
#include "mzv/relations.hpp"

namespace mzv {

namespace {

/// Raised for malformed literals; reported like a CLI11 usage error.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string format = "text";
  int root_order = 1;
  int max_weight = 12;
  long cutoff = kDefaultCutoff;
  std::uint64_t seed = kDefaultSeed;
  std::vector<std::string> positional;
  std::vector<std::string> factors;
  bool plain = false;
  bool harmonic = false;
  std::string json_in;
  int n = 1, m = 2, k = 2, samples = 50, arity = 2;
  std::string part = "prop42i";
  std::string base = "xy";
  CLI::Option* max_weight_opt = nullptr;
  CLI::Option* n_opt = nullptr;
  CLI::Option* k_opt = nullptr;
};

template <class F>
auto literal(const std::string& token, F&& parse) {
  try {
    return parse(token);
  } catch (const Error& e) {
    throw UsageError("cannot parse '" + token + "': " + e.what());
  }
}

NCPoly poly_arg(const Options& o, const std::string& token) {
  return literal(token, [&](const std::string& t) { return parse_poly(t, o.root_order); });
}

Factor factor_arg(const Options& o, const std::string& token) {
  const auto colon = token.find(':');
  if (colon == std::string::npos) throw UsageError("factor '" + token + "' must look like COEFF:WORD");
  return literal(token, [&](const std::string& t) {
    return Factor{parse_coeff(t.substr(0, colon), o.root_order), parse_word(t.substr(colon + 1))};
  });
}

std::vector<Factor> factor_args(const Options& o) {
  std::vector<Factor> fs;
  for (const auto& f : o.factors) fs.push_back(factor_arg(o, f));
  if (fs.empty()) throw UsageError("at least one --factor is required");
  return fs;
}

nlohmann::ordered_json poly_json(const NCPoly& p, int root_order) {
  auto terms = nlohmann::ordered_json::array();
  for (const auto& [w, c] : p.terms()) terms.push_back({{"word", w.str()}, {"coeff", coeff_text(c, root_order)}});
  return terms;
}

void emit_poly(const Options& o, std::ostream& out, const std::string& operation, const NCPoly& p) {
  const int order = std::max(o.root_order, root_order_of(p));
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["operation"] = operation;
    j["root_order"] = order;
    j["result"] = poly_text(p, order);
    j["terms"] = poly_json(p, order);
    out << j.dump(2) << "\n";
  } else if (o.format == "latex") {
    out << poly_latex(p, order) << "\n";
  } else {
    out << poly_text(p, order) << "\n";
  }
}

int cmd_product(const Options& o, std::ostream& out, bool is_shuffle) {
  if (o.positional.size() != 2) throw UsageError("expected exactly two operands");
  const NCPoly a = poly_arg(o, o.positional[0]);
  const NCPoly b = poly_arg(o, o.positional[1]);
  emit_poly(o, out, is_shuffle ? "shuffle" : "harmonic", is_shuffle ? shuffle(a, b) : harmonic(a, b));
  return 0;
}

int cmd_star_shuffle(const Options& o, std::ostream& out) {
  const auto fs = factor_args(o);
  GradedSeries acc = star(NCPoly::monomial(fs[0].coeff, fs[0].word), o.max_weight);
  for (std::size_t i = 1; i < fs.size(); ++i) {
    acc = shuffle(acc, star(NCPoly::monomial(fs[i].coeff, fs[i].word), o.max_weight));
  }
  emit_poly(o, out, "star-shuffle", acc.to_poly());
  return 0;
}

std::string matrix_latex(const Matrix& a) {
  std::string s = "\\begin{bmatrix}\n";
  for (int i = 0; i < a.dim(); ++i) {
    for (int j = 0; j < a.dim(); ++j) s += (j ? " & " : "") + poly_latex(a.at(i, j));
    s += i + 1 < a.dim() ? " \\\\\n" : "\n";
  }
  return s + "\\end{bmatrix}";
}

int cmd_automaton(const Options& o, std::ostream& out) {
  Automaton m;
  if (!o.json_in.empty()) {
    std::ifstream in(o.json_in);
    if (!in) throw UsageError("cannot open '" + o.json_in + "'");
    nlohmann::ordered_json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw UsageError("bad JSON in '" + o.json_in + "': " + e.what());
    }
    m = automaton_from_json(j);
  } else {
    const auto fs = factor_args(o);
    if (o.harmonic) {
      if (fs.size() != 2) throw UsageError("--harmonic takes exactly two factors");
      m = harmonic_automaton(fs[0], fs[1], !o.plain);
    } else {
      m = shuffle_automaton(fs, !o.plain);
    }
  }
  if (o.format == "json") {
    out << automaton_json(m).dump(2) << "\n";
    return 0;
  }
  const Matrix a = adjacency(m);
  if (o.format == "latex") {
    out << matrix_latex(a) << "\n";
    return 0;
  }
  out << "states: " << m.state_count() << "\ninitial: q1\nfinals:";
  for (int f : m.finals()) out << " q" << f + 1;
  out << "\n";
  for (const auto& t : m.transitions()) {
    out << "q" << t.from + 1 << " -" << t.label.str() << "-> q" << t.to + 1 << "  " << coeff_text(t.coeff) << "\n";
  }
  out << "adjacency:\n" << matrix_text(a);
  out << "accepted up to weight " << o.max_weight << ": " << poly_text(accepted(m, o.max_weight).to_poly()) << "\n";
  return 0;
}

std::string fixed(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

int cmd_zeta(const Options& o, std::ostream& out) {
  if (o.positional.size() != 1) throw UsageError("expected one composition such as 3,1");
  const Composition c = literal(o.positional[0], [](const std::string& t) { return parse_composition(t); });
  const MZVValue v = zeta_numeric(c, o.cutoff);
  if (o.format == "json") {
    nlohmann::ordered_json j;
    j["composition"] = c.parts();
    j["value"] = v.value;
    j["tail_bound"] = v.tail_bound;
    j["cutoff"] = v.cutoff;
    out << j.dump(2) << "\n";
  } else if (o.format == "latex") {
    out << composition_latex(c) << " \\approx " << fixed(v.value) << "\n";
  } else {
    out << "zeta(" << c.str() << ") = " << fixed(v.value) << "  (tail_bound " << fixed(v.tail_bound) << ", cutoff "
        << v.cutoff << ")\n";
  }
  return 0;
}

std::vector<Report> run_verifier(const Options& o, const std::string& name) {
  const bool mw = o.max_weight_opt->count() > 0;
  if (name == "all") return verify_all({o.cutoff, o.seed});
  if (name == "waldschmidt") return {verify_waldschmidt(o.max_weight)};
  if (name == "zagier_broadhurst") return {verify_zagier_broadhurst(o.n, o.cutoff)};
  if (name == "harmonic_closures") return {verify_harmonic_closures(o.m, o.k, o.max_weight)};
  if (name == "double_shuffle") return {verify_double_shuffle(o.samples, mw ? o.max_weight : 7, o.cutoff, o.seed)};
  if (name == "closure_zeta_sums") return {verify_closure_zeta_sums(o.m, o.k, o.n)};
  if (name == "stuffle_alternating") return {verify_stuffle_alternating(o.n)};
  if (name == "sawada") {
    const SawadaPart part = literal(o.part, [](const std::string& t) { return parse_sawada_part(t); });
    return {verify_sawada(part, o.n, o.cutoff, mw ? o.max_weight : 14)};
  }
  if (name == "x2y") return {verify_x2y(o.n, o.cutoff)};
  if (name == "dim3") return {verify_dim3(o.n, o.cutoff)};
  if (name == "vanishing") {
    const Word base = literal(o.base, [](const std::string& t) { return parse_word(t); });
    return {verify_vanishing(base, o.arity, mw ? o.max_weight : 24)};
  }
  if (name == "appendix") {
    const int k_lo = o.k_opt->count() ? o.k : 1, k_hi = o.k_opt->count() ? o.k : 7;
    const int n_lo = o.n_opt->count() ? o.n : 0, n_hi = o.n_opt->count() ? o.n : 4;
    return {verify_appendix(k_lo, k_hi, n_lo, n_hi)};
  }
  throw UsageError("unknown identity '" + name + "'");
}

void emit_reports(const Options& o, std::ostream& out, const std::vector<Report>& reports) {
  if (o.format == "json") {
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : reports) arr.push_back(to_json(r));
    out << arr.dump(2) << "\n";
    return;
  }
  if (o.format == "latex") {
    out << "\\begin{tabular}{llll}\n\\hline\nidentity & parameters & mode & status \\\\\n\\hline\n";
    for (const auto& r : reports) {
      std::string params = r.params.dump();
      std::string escaped;
      for (char c : params) {
        if (c == '{' || c == '}' || c == '_') escaped += '\\';
        escaped += c;
      }
      std::string id;
      for (char c : r.identity) id += c == '_' ? std::string("\\_") : std::string(1, c);
      out << id << " & " << escaped << " & " << mode_name(r.mode) << " & " << status_name(r.status) << " \\\\\n";
    }
    out << "\\hline\n\\end{tabular}\n";
    return;
  }
  for (const auto& r : reports) {
    out << status_name(r.status) << "  " << r.identity << " " << r.params.dump() << "  [" << mode_name(r.mode);
    if (r.mode == Mode::Numeric) out << ", rel_diff " << fixed(r.rel_diff) << ", tol " << fixed(r.tolerance);
    if (r.seed) out << ", seed " << *r.seed;
    char ms[32];
    std::snprintf(ms, sizeof ms, "%.1f", r.elapsed_ms);
    out << ", " << ms << " ms]\n";
    out << "    lhs: " << r.lhs << "\n    rhs: " << r.rhs << "\n";
    for (const auto& c : r.checks) {
      out << "    " << (c.ok ? "ok  " : "FAIL") << " " << c.name;
      if (!c.detail.empty()) out << " (" << c.detail << ")";
      out << "\n";
    }
  }
}

int cmd_verify(const Options& o, std::ostream& out) {
  if (o.positional.size() != 1) throw UsageError("expected one identity name or 'all'");
  const auto reports = run_verifier(o, o.positional[0]);
  emit_reports(o, out, reports);
  const bool failed = std::any_of(reports.begin(), reports.end(), [](const Report& r) { return r.status == Status::Fail; });
  return failed ? 1 : 0;
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "latex"}));
  sub->add_option("--root-order", o.root_order, "Order m of the root of unity w in coefficient literals")
      ->check(CLI::PositiveNumber);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact shuffle/harmonic algebra, weighted automata and multiple zeta values", "mzv"};
  app.require_subcommand(1);

  auto* sh = app.add_subcommand("shuffle", "Shuffle product of two polynomials");
  auto* ha = app.add_subcommand("harmonic", "Harmonic (stuffle) product of two polynomials");
  for (auto* s : {sh, ha}) {
    add_common(s, o);
    s->add_option("operands", o.positional, "Two word polynomials, e.g. x^2y or '2*xy - yx'")->required();
  }

  auto* ss = app.add_subcommand("star-shuffle", "Shuffle of Kleene closures (c1 w1)* sh (c2 w2)* ...");
  add_common(ss, o);
  ss->add_option("--factor", o.factors, "COEFF:WORD, repeatable")->required();
  o.max_weight_opt = ss->add_option("--max-weight", o.max_weight, "Truncation weight")->check(CLI::NonNegativeNumber);

  auto* au = app.add_subcommand("automaton", "Build a shuffle or harmonic automaton");
  add_common(au, o);
  au->add_option("--factor", o.factors, "COEFF:WORD, repeatable");
  au->add_flag("--plain", o.plain, "Product of words rather than of closures");
  au->add_flag("--harmonic", o.harmonic, "Harmonic automaton of two z-words");
  au->add_option("--json-in", o.json_in, "Read the automaton from a JSON document");
  au->add_option("--max-weight", o.max_weight, "Weight bound for the accepted element")->check(CLI::NonNegativeNumber);

  auto* ze = app.add_subcommand("zeta", "Numeric multiple zeta value");
  add_common(ze, o);
  ze->add_option("composition", o.positional, "Composition such as 3,1")->required();
  ze->add_option("--cutoff", o.cutoff, "Truncation M")->envname("MZV_CUTOFF")->check(CLI::PositiveNumber);

  auto* ve = app.add_subcommand("verify", "Verify an identity, or 'all'");
  add_common(ve, o);
  ve->add_option("identity", o.positional, "all, waldschmidt, zagier_broadhurst, harmonic_closures, ...")->required();
  auto* ve_mw = ve->add_option("--max-weight", o.max_weight, "Weight bound")->check(CLI::NonNegativeNumber);
  ve->add_option("--cutoff", o.cutoff, "Truncation M")->envname("MZV_CUTOFF")->check(CLI::PositiveNumber);
  ve->add_option("--seed", o.seed, "Seed for sampling verifiers");
  o.n_opt = ve->add_option("--n", o.n, "Index n");
  ve->add_option("--m", o.m, "Number of closure factors");
  o.k_opt = ve->add_option("--k", o.k, "Letter weight k");
  ve->add_option("--part", o.part, "prop42i, prop42ii, thm41i, thm41ii or lemma43");
  ve->add_option("--samples", o.samples, "Random samples")->check(CLI::PositiveNumber);
  ve->add_option("--base", o.base, "Base word for the vanishing lemma");
  ve->add_option("--arity", o.arity, "2 (factors +-w) or 3 (factors w, omega w, omega^2 w)");

  if (!args.empty() && !args[0].empty() && args[0][0] != '-' && app.get_subcommand_no_throw(args[0]) == nullptr) {
    err << "usage error: unknown command '" << args[0] << "'\n";
    return 2;
  }
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << "\n";
    return 2;
  }
  if (ve->parsed()) o.max_weight_opt = ve_mw;

  try {
    if (sh->parsed()) return cmd_product(o, out, true);
    if (ha->parsed()) return cmd_product(o, out, false);
    if (ss->parsed()) return cmd_star_shuffle(o, out);
    if (au->parsed()) return cmd_automaton(o, out);
    if (ze->parsed()) return cmd_zeta(o, out);
    return cmd_verify(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace mzv
