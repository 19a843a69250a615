#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <stdexcept>

#include "schubert/criteria.hpp"
#include "schubert/grassmannian.hpp"
#include "schubert/quiver.hpp"
#include "schubert/smt.hpp"
#include "schubert/verify.hpp"

using json = nlohmann::json;
using namespace schubert;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

struct Output {
  json input = json::object();
  json result = json::object();
  json witnesses = json::array();
  json warnings = json::array();
};

void emit(const Output& out) {
  json doc;
  doc["input"] = out.input;
  doc["result"] = out.result;
  doc["witnesses"] = out.witnesses;
  doc["warnings"] = out.warnings;
  std::cout << doc.dump(2) << '\n';
}

json to_json(const IndexSet& s) { return std::vector<int>(s.entries().begin(), s.entries().end()); }
json to_json(const Permutation& w) { return std::vector<int>(w.line().begin(), w.line().end()); }
json to_json(const BoxPartition& p) { return p.parts(); }

Permutation parse_element(const std::string& text, int n, const std::string& spelling) {
  std::string kind = spelling;
  if (kind == "auto") kind = text.find_first_of("sS") != std::string::npos || text == "e" ? "word" : "oneline";
  if (kind == "word") return word_to_perm(parse_word(text), n);
  if (kind == "oneline") {
    Permutation w = parse_one_line(text);
    if (w.size() != n) throw std::invalid_argument("one-line permutation has " + std::to_string(w.size()) + " entries, expected n=" + std::to_string(n));
    return w;
  }
  throw std::invalid_argument("--as must be auto, oneline or word");
}

int gr_analyze(int n, int r, const std::string& w_text) {
  IndexSet w = parse_index_set(w_text, n);
  if (w.r() != r) throw std::invalid_argument("expected i1<i2<...<ir with r=" + std::to_string(r) + " entries");
  MinusculeSetting setting(Family::A, n - 1, r);
  Output out;
  out.input = {{"command", "gr analyze"}, {"n", n}, {"r", r}, {"w", to_json(w)}};
  BoxPartition mu = indexset_to_partition(w);
  json corner_list = json::array();
  for (const Cell& c : corners(mu)) corner_list.push_back({c.row, c.col});
  json components = json::array();
  for (const BoxPartition& p : singular_components(mu)) components.push_back(to_json(p));
  IndexSet formula = minimal_semistable(r, n);
  auto oracle_node = setting.oracle_v();
  out.result["partition"] = to_json(mu);
  out.result["corners"] = corner_list;
  out.result["singular_components"] = components;
  out.result["smooth"] = is_smooth(mu);
  out.result["minimal_v_formula"] = to_json(formula);
  if (oracle_node) {
    IndexSet v = setting.index_set(*oracle_node);
    QuotientSmoothnessReport report = quotient_smoothness_report(w, v);
    out.result["minimal_v"] = to_json(v);
    out.result["gcd"] = report.gcd;
    out.result["semistable_nonempty"] = report.semistable_nonempty;
    out.result["ss_in_smooth"] = report.semistable_nonempty ? json(report.criterion_holds) : json(nullptr);
    out.result["quotient_smooth"] = report.quotient_smooth;
    for (const std::string& warning : report.warnings) out.warnings.push_back(warning);
    if (formula != v) out.warnings.push_back("closed-form minimal element " + formula.to_string() + " differs from the oracle minimum " + v.to_string());
    GrassmannSemistability witness = semistable_nonempty_oracle(w);
    if (witness.found) {
      json chain = json::array();
      for (const IndexSet& s : witness.chain) chain.push_back(to_json(s));
      out.witnesses.push_back({{"invariant_chain", chain}, {"degree", witness.degree}});
    }
  }
  emit(out);
  return kExitOk;
}

int quiver_build(const std::string& family_text, int rank, int weight, const std::string& w_text, const std::string& dot_path) {
  Family family = parse_family(family_text);
  if (rank == 0) rank = default_rank(family);
  MinusculeSetting setting(family, rank, weight);
  const MinusculePoset& poset = setting.poset();
  NodeId x;
  if (w_text == "minimal") {
    auto v = setting.v();
    if (!v) throw std::invalid_argument("no minimal element: projective spaces are excluded");
    x = *v;
  } else if (w_text == "longest") {
    x = poset.bottom();
  } else {
    x = poset.apply(parse_word(w_text));
  }
  MinusculeQuiver q = setting.atlas().quiver(x);
  const WordQuiver& full = q.full();
  Output out;
  out.input = {{"command", "quiver build"}, {"family", to_string(family)}, {"rank", rank}, {"weight", weight}, {"w", w_text}};
  json vertices = json::array();
  for (int v = 0; v < full.size(); ++v) vertices.push_back({{"vertex", v}, {"label", full.label(v)}, {"member", q.contains(v)}});
  json arrows = json::array();
  for (auto [s, t] : full.arrows()) arrows.push_back({s, t});
  json holes = json::array();
  for (const Hole& h : classify_holes(q).holes) {
    holes.push_back({{"vertex", h.vertex}, {"label", h.label}, {"kind", h.kind == HoleKind::Real ? "real" : "virtual"}, {"essential", h.essential}});
  }
  json components = json::array();
  for (NodeId c : singular_components_quiver(q)) components.push_back(word_to_string(canonical_reduced_word(poset, c)));
  out.result["word"] = word_to_string(canonical_reduced_word(poset, x));
  out.result["length"] = poset.length(x);
  out.result["vertices"] = vertices;
  out.result["arrows"] = arrows;
  out.result["holes"] = holes;
  out.result["smooth"] = is_smooth_quiver(q);
  out.result["singular_components"] = components;
  if (auto v = setting.v()) {
    out.result["minimal_v"] = word_to_string(canonical_reduced_word(poset, *v));
    if (poset.leq(*v, x)) {
      out.result["ss_in_smooth"] = semistable_in_smooth_quiver(q, setting.atlas().quiver(*v));
    } else {
      out.result["ss_in_smooth"] = nullptr;
      out.warnings.push_back("semistable locus empty");
    }
    if (setting.type_a() && setting.formula_v() != v) out.warnings.push_back("closed-form minimal element differs from the oracle minimum");
  }
  if (!dot_path.empty()) {
    std::ofstream file(dot_path);
    if (!file) throw std::runtime_error("cannot write " + dot_path);
    file << quiver_to_dot(q);
    out.result["dot"] = dot_path;
  }
  emit(out);
  return kExitOk;
}

json tableau_json(const AlphaZeroTableau& t) {
  json rows = json::array();
  for (const IndexSet& row : t.long_rows) rows.push_back(to_json(row));
  return {{"short_rows", t.short_rows}, {"long_rows", rows}};
}

int smt_dim(int n, const std::string& w_text, int m, const std::string& spelling) {
  Permutation w = parse_element(w_text, n, spelling);
  auto tableaux = invariant_standard_tableaux(w, m);
  Output out;
  out.input = {{"command", "smt dim"}, {"n", n}, {"w", to_json(w)}, {"m", m}};
  out.result["dim"] = tableaux.size();
  for (const AlphaZeroTableau& t : tableaux) out.witnesses.push_back(tableau_json(t));
  emit(out);
  return kExitOk;
}

int smt_minimal(int n) {
  Output out;
  out.input = {{"command", "smt minimal"}, {"n", n}};
  json elements = json::array();
  for (const Permutation& v : minimal_semistable_borel(n)) elements.push_back(to_json(v));
  out.result["elements"] = elements;
  emit(out);
  return kExitOk;
}

int smt_pn_check(int n, const std::string& w_text, int max_m, const std::string& spelling) {
  Permutation w = parse_element(w_text, n, spelling);
  NormalityReport report = projective_normality_check(w, max_m);
  Output out;
  out.input = {{"command", "smt pn-check"}, {"n", n}, {"w", to_json(w)}, {"max_m", max_m}};
  json degrees = json::array();
  for (const DegreeCheck& d : report.degrees) degrees.push_back({{"m", d.m}, {"dim", d.dimension}, {"expected", d.expected}, {"pass", d.pass}});
  out.result["t"] = report.t;
  out.result["degrees"] = degrees;
  out.result["family_element"] = report.family_element;
  out.result["lift"] = report.lift;
  out.result["pass"] = report.pass;
  if (!report.family_element) out.warnings.push_back("w is not an element of the extension families");
  if (!report.lift) out.warnings.push_back("w is not a maximal lift w^P w_{0,P}");
  emit(out);
  return report.pass ? kExitOk : kExitFailed;
}

int smt_table(const std::string& case_text, int n, int i) {
  FamilyCase c = parse_family_case(case_text);
  Output out;
  out.input = {{"command", "smt table"}, {"case", case_text}, {"n", n}, {"i", i}};
  json rows = json::array();
  bool all = true;
  for (const DimensionRow& row : dimension_table(c, n, i)) {
    rows.push_back({{"k", row.k}, {"j", row.j}, {"w", to_json(row.element)}, {"dim", row.computed}, {"predicted", row.predicted}, {"match", row.match}});
    all = all && row.match;
  }
  out.result["rows"] = rows;
  out.result["pass"] = all;
  emit(out);
  return all ? kExitOk : kExitFailed;
}

int run_verify(const std::string& suite, int exhaustive_n, const std::string& family) {
  verify::SuiteOptions options;
  options.exhaustive_n = exhaustive_n;
  options.family = family;
  std::vector<std::string> names = suite == "all" ? verify::suite_names() : std::vector<std::string>{suite};
  Output out;
  out.input = {{"command", "verify"}, {"suite", suite}, {"exhaustive_n", exhaustive_n}, {"family", family}};
  bool all = true;
  json suites = json::array();
  for (const std::string& name : names) {
    verify::SuiteResult r = verify::run_suite(name, options);
    suites.push_back({{"suite", r.name}, {"checks", r.checks}, {"failures", r.failures}, {"pass", r.pass()}});
    if (!r.first_failure.empty()) out.witnesses.push_back({{"suite", r.name}, {"first_failure", r.first_failure}});
    for (const std::string& note : r.notes) out.warnings.push_back(r.name + ": " + note);
    all = all && r.pass();
  }
  out.result["suites"] = suites;
  out.result["pass"] = all;
  emit(out);
  return all ? kExitOk : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Torus quotients of Schubert varieties: singular loci, semistability and invariant sections"};
  app.require_subcommand(1);
  bool json_flag = false;
  app.add_flag("--json", json_flag, "Emit JSON (the only output format)");

  int n = 0, r = 0, rank = 0, weight = 0, m = 1, max_m = 2, i = 1, exhaustive_n = 0;
  std::string w_text, family_text, dot_path, spelling = "auto", suite, case_text, verify_family = "A";

  auto* gr = app.add_subcommand("gr", "Grassmannian Schubert varieties");
  gr->require_subcommand(1);
  auto* gr_an = gr->add_subcommand("analyze", "Partition data, singular locus and semistability of X(w) in Gr(r,n)");
  gr_an->add_option("--n", n, "n")->required();
  gr_an->add_option("--r", r, "r")->required();
  gr_an->add_option("--w", w_text, "index set i1,i2,...,ir")->required();

  auto* quiver = app.add_subcommand("quiver", "Quivers of minuscule Schubert varieties");
  quiver->require_subcommand(1);
  auto* qb = quiver->add_subcommand("build", "Quiver, holes and singular components of X(w)");
  qb->add_option("--family", family_text, "A, D, E6 or E7")->required();
  qb->add_option("--rank", rank, "rank (defaults to 6 or 7 for E6/E7)");
  qb->add_option("--weight", weight, "index of the minuscule fundamental weight")->required();
  qb->add_option("--w", w_text, "reduced word (e.g. s2s1s3), 'minimal' or 'longest'")->required();
  qb->add_option("--dot", dot_path, "write the quiver as a Graphviz digraph to this file");

  auto* smt = app.add_subcommand("smt", "Standard monomials for L_{alpha_0} on SL(n)/B");
  smt->require_subcommand(1);
  auto* dim = smt->add_subcommand("dim", "dim H^0(X(w), L_{m alpha_0})^T");
  dim->add_option("--n", n, "n")->required();
  dim->add_option("--w", w_text, "one-line permutation or reduced word")->required();
  dim->add_option("--m", m, "degree")->check(CLI::NonNegativeNumber);
  dim->add_option("--as", spelling, "auto, oneline or word");
  auto* minimal = smt->add_subcommand("minimal", "Minimal elements of S_n with semistable points");
  minimal->add_option("--n", n, "n")->required()->check(CLI::Range(2, 64));
  auto* pn = smt->add_subcommand("pn-check", "Compare invariant dimensions with C(t+m-1, m)");
  pn->add_option("--n", n, "n")->required();
  pn->add_option("--w", w_text, "one-line permutation or reduced word")->required();
  pn->add_option("--max-m", max_m, "largest degree")->check(CLI::PositiveNumber);
  pn->add_option("--as", spelling, "auto, oneline or word");
  auto* table = smt->add_subcommand("table", "Invariant dimensions along an extension family");
  table->add_option("--case", case_text, "A, A2 or B")->required();
  table->add_option("--n", n, "n")->required();
  table->add_option("--i", i, "family parameter");

  auto* ver = app.add_subcommand("verify", "Run a verification suite (or 'all')");
  ver->add_option("suite", suite, "suite name")->required();
  ver->add_option("--exhaustive-n", exhaustive_n, "largest n for exhaustive sweeps");
  ver->add_option("--family", verify_family, "lemma34: A, D, E6, E7 or all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gr_an) return gr_analyze(n, r, w_text);
    if (*qb) return quiver_build(family_text, rank, weight, w_text, dot_path);
    if (*dim) return smt_dim(n, w_text, m, spelling);
    if (*minimal) return smt_minimal(n);
    if (*pn) return smt_pn_check(n, w_text, max_m, spelling);
    if (*table) return smt_table(case_text, n, i);
    if (*ver) return run_verify(suite, exhaustive_n, verify_family);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitFailed;
  }
  return kExitUsage;
}
