#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "oddcycle/errors.hpp"
#include "oddcycle/extremal.hpp"
#include "oddcycle/kelmans.hpp"
#include "oddcycle/matching.hpp"
#include "oddcycle/report.hpp"
#include "oddcycle/roots.hpp"
#include "oddcycle/skew.hpp"

namespace oddcycle::cli {

namespace {

int parse_int(const std::string& word) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(word, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != word.size()) {
    throw std::invalid_argument("expected an integer, got '" + word + "'");
  }
  return value;
}

std::optional<Graph> read_constructor(const std::string& text) {
  std::istringstream words(text);
  std::vector<std::string> parts;
  for (std::string w; words >> w;) parts.push_back(w);
  if (parts.empty()) return std::nullopt;
  const std::string& name = parts[0];
  auto want = [&](std::size_t count) {
    if (parts.size() != count + 1) {
      throw std::invalid_argument("constructor '" + name + "' takes " +
                                  std::to_string(count) + " argument(s)");
    }
  };
  if (name == "F") {
    want(2);
    return make_F(parse_int(parts[1]), parse_int(parts[2]));
  }
  if (name == "H") {
    want(1);
    return make_H(parse_int(parts[1]));
  }
  if (name == "K") {
    want(1);
    return complete_graph(parse_int(parts[1]));
  }
  if (name == "K1") {
    want(1);
    return star_graph(parse_int(parts[1]));
  }
  if (name == "C") {
    want(1);
    return cycle_graph(parse_int(parts[1]));
  }
  if (name == "P") {
    want(1);
    return path_graph(parse_int(parts[1]));
  }
  return std::nullopt;
}

struct Options {
  std::string format = "table";
  std::string out_path;
  int digits = 10;
  int threads = 1;
};

class Session {
 public:
  Session(const Options& opts, std::istream& in, std::ostream& out)
      : opts_(opts), in_(in), out_(out) {}

  bool json() const { return opts_.format == "json"; }

  std::vector<Graph> graphs(const std::vector<std::string>& args) {
    std::vector<Graph> out;
    if (!args.empty()) {
      for (const std::string& a : args) out.push_back(read_graph(a));
      return out;
    }
    for (std::string line; std::getline(in_, line);) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      out.push_back(parse_graph6(line));
    }
    if (out.empty()) throw std::invalid_argument("no graph given");
    return out;
  }

  // Writes either the JSON document or the table text to the chosen sink.
  void emit(const Json& doc, const std::string& table) {
    std::ofstream file;
    std::ostream* sink = &out_;
    if (!opts_.out_path.empty()) {
      file.open(opts_.out_path);
      if (!file) throw std::runtime_error("cannot write " + opts_.out_path);
      sink = &file;
    }
    if (json()) {
      *sink << doc.dump(2) << '\n';
    } else {
      *sink << table;
    }
  }

  Json envelope(const std::string& command) const {
    return Json{{"schema", kJsonSchema}, {"command", command}};
  }

  const Options& opts() const { return opts_; }

 private:
  const Options& opts_;
  std::istream& in_;
  std::ostream& out_;
};

int cmd_poly(Session& s, const std::vector<std::string>& args) {
  Json doc = s.envelope("poly");
  std::string table;
  for (const Graph& g : s.graphs(args)) {
    const MatchingProfile profile = matching_profile(g);
    const IntPolynomial p = matching_polynomial(profile, g.order());
    doc["results"].push_back(Json{{"graph6", write_graph6(g)},
                                  {"profile", to_json(profile)},
                                  {"polynomial", to_json(p)},
                                  {"text", p.to_string()}});
    std::string counts;
    for (const BigInt& c : profile.counts) counts += " " + c.get_str();
    table += write_graph6(g) + "\n  profile   " + counts.substr(1) +
             "\n  m(G,x)    " + p.to_string() + "\n";
  }
  s.emit(doc, table);
  return kExitOk;
}

int cmd_maxroot(Session& s, const std::vector<std::string>& args) {
  Json doc = s.envelope("maxroot");
  std::string table;
  for (const Graph& g : s.graphs(args)) {
    const AlgebraicRoot t = max_matching_root(g);
    doc["results"].push_back(
        Json{{"graph6", write_graph6(g)}, {"t", to_json(t, s.opts().digits)}});
    table += write_graph6(g) + "  t = " + t.to_decimal(s.opts().digits) +
             "  in [" + t.lo().get_str() + ", " + t.hi().get_str() + "]\n";
  }
  s.emit(doc, table);
  return kExitOk;
}

int cmd_skew(Session& s, const std::vector<std::string>& args,
             const std::string& mask, bool all) {
  Json doc = s.envelope("skew");
  std::string table;
  for (const Graph& g : s.graphs(args)) {
    std::vector<Orientation> orientations;
    if (all) {
      orientations = all_orientations(g);
    } else {
      orientations.push_back(parse_orientation(g, mask.empty() ? "0" : mask));
    }
    const IntPolynomial target = matching_skew_form(g);
    std::set<IntPolynomial, PolynomialLess> distinct;
    Json rows = Json::array();
    table += write_graph6(g) + "  target " + target.to_string() + "\n";
    for (const Orientation& o : orientations) {
      const IntPolynomial phi = skew_char_poly(o);
      distinct.insert(phi);
      const bool identity = phi == target;
      const AlgebraicRoot rho = skew_spectral_radius(phi, default_eps());
      rows.push_back(Json{{"mask", o.mask_hex()},
                          {"char_poly", to_json(phi)},
                          {"text", phi.to_string()},
                          {"identity", identity},
                          {"rho", to_json(rho, s.opts().digits)}});
      table += "  " + o.mask_hex() + "  " + phi.to_string() + "  identity " +
               (identity ? "yes" : "no") + "  rho " +
               rho.to_decimal(s.opts().digits) + "\n";
    }
    doc["results"].push_back(Json{{"graph6", write_graph6(g)},
                                  {"odd_cycle_graph", is_odd_cycle_graph(g)},
                                  {"target", to_json(target)},
                                  {"distinct_polynomials", distinct.size()},
                                  {"orientations", std::move(rows)}});
    table += "  distinct polynomials " + std::to_string(distinct.size()) + "\n";
  }
  s.emit(doc, table);
  return kExitOk;
}

int cmd_reduce(Session& s, const std::vector<std::string>& args) {
  Json doc = s.envelope("reduce");
  std::string table;
  for (const Graph& g : s.graphs(args)) {
    const ReductionTrace trace = reduce_to_F(g);
    doc["results"].push_back(to_json(trace));
    table += write_graph6(g) + "  " + std::to_string(trace.steps.size()) +
             " step(s)\n";
    for (const KelmansResult& r : trace.steps) {
      std::string moved;
      for (Vertex w : r.step.moved) moved += " " + std::to_string(w);
      table += "  " + std::string(to_string(r.step.phase)) + "  KT(" +
               std::to_string(r.step.beneficiary) + "," +
               std::to_string(r.step.co_beneficiary) + ") moved" +
               (moved.empty() ? " -" : moved) + "  -> " + write_graph6(r.graph) +
               "\n";
    }
    table += "  final " + write_graph6(trace.final_graph()) + "\n";
  }
  s.emit(doc, table);
  return kExitOk;
}

int cmd_dominance(Session& s, const std::vector<std::string>& args) {
  if (args.size() != 2) throw std::invalid_argument("dominance needs two graphs");
  const Graph g1 = read_graph(args[0]);
  const Graph g2 = read_graph(args[1]);
  const IntPolynomial m1 = matching_polynomial(g1);
  const IntPolynomial m2 = matching_polynomial(g2);
  const IntPolynomial d = m2 - m1;
  const DominanceVerdict verdict = dominance(m1, m2);
  std::optional<AlgebraicRoot> top;
  if (!d.is_zero()) top = isolate_max_root(d);

  Json doc = s.envelope("dominance");
  doc["g1"] = write_graph6(g1);
  doc["g2"] = write_graph6(g2);
  doc["verdict"] = std::string(to_string(verdict));
  doc["difference"] = to_json(d);
  doc["difference_max_root"] =
      top ? to_json(*top, s.opts().digits) : Json(nullptr);
  std::string table = "verdict     " + std::string(to_string(verdict)) +
                      "\ndifference  " + d.to_string() + "\nmax root    " +
                      (top ? top->to_decimal(s.opts().digits) : "none") + "\n";
  s.emit(doc, table);
  return kExitOk;
}

using Suite = std::function<VerificationReport(int, const VerifyOptions&)>;

// Per-order suites run for n = 1..max_n and are merged into one report.
VerificationReport run_per_order(const Suite& suite, int max_n,
                                 const VerifyOptions& opts) {
  VerificationReport total;
  for (int n = 1; n <= max_n; ++n) {
    VerificationReport r = suite(n, opts);
    total.suite = r.suite;
    total.checked += r.checked;
    for (auto& c : r.counterexamples) total.fail(c.graph6, c.detail);
    total.counterexample_total +=
        r.counterexample_total - static_cast<std::int64_t>(r.counterexamples.size());
    for (auto& w : r.witnesses) {
      total.witnesses.push_back(
          {"n=" + std::to_string(n) + " " + w.label, w.graph6, w.value});
    }
    for (auto& note : r.notes) total.notes.push_back("n=" + std::to_string(n) + " " + note);
    total.seconds += r.seconds;
  }
  total.universe = "orders 1.." + std::to_string(max_n);
  return total;
}

int cmd_verify(Session& s, const std::string& id, int max_n) {
  // Suite names, with the numeric identifiers accepted as aliases.
  static const std::map<std::string, std::string> kAliases = {
      {"1.5", "classification"}, {"4.2", "maximum"},   {"4.1", "monotonicity"},
      {"2.2", "reduction"},      {"3.7", "dominance"}, {"3.12", "dominance"},
  };
  std::string name = id;
  if (auto it = kAliases.find(id); it != kAliases.end()) name = it->second;

  const VerifyOptions opts{s.opts().threads};
  VerificationReport report;
  if (name == "classification") {
    report = run_per_order(verify_extremal_classification, max_n, opts);
  } else if (name == "maximum") {
    report = run_per_order(verify_maximum_at_H, max_n, opts);
  } else if (name == "reduction") {
    report = run_per_order(verify_reduction, max_n, opts);
  } else if (name == "monotonicity") {
    report = verify_monotonicity(max_n, opts);
  } else if (name == "identity") {
    report = verify_skew_identity(max_n, opts);
  } else if (name == "radius") {
    report = verify_orientation_independence(max_n, opts);
  } else if (name == "dominance") {
    report = verify_kelmans_dominance(max_n, opts);
  } else {
    throw std::invalid_argument("unknown suite '" + id + "'");
  }
  Json doc = s.envelope("verify");
  doc["max_n"] = max_n;
  doc["report"] = to_json(report);
  s.emit(doc, to_table(report));
  return report.passed() ? kExitOk : kExitCounterexample;
}

}  // namespace

Graph read_graph(const std::string& text) {
  if (std::optional<Graph> g = read_constructor(text)) return *g;
  std::error_code ec;
  if (std::filesystem::is_regular_file(text, ec)) {
    std::ifstream file(text);
    std::stringstream buffer;
    buffer << file.rdbuf();
    return parse_edge_list(buffer.str());
  }
  return parse_graph6(text);
}

int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Matching polynomials, skew spectra and extremal checks for "
               "odd-cycle graphs"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opts;
  app.add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--out", opts.out_path, "Write output to this file");
  app.add_option("--digits", opts.digits, "Decimal digits for roots")
      ->check(CLI::Range(1, 200))
      ->capture_default_str();
  app.add_option("--threads", opts.threads, "Worker threads")
      ->check(CLI::Range(1, 1024))
      ->capture_default_str();

  const std::string graph_help =
      "graph6, edge-list file, or constructor spec such as \"F 5 6\"; "
      "reads graph6 lines from stdin when omitted";
  std::vector<std::string> graphs;
  std::string mask;
  bool all = false;
  std::string suite;
  int max_n = 6;

  auto* poly = app.add_subcommand("poly", "Matching profile and polynomial");
  poly->add_option("graph", graphs, graph_help);
  auto* maxroot = app.add_subcommand("maxroot", "Largest matching root t(G)");
  maxroot->add_option("graph", graphs, graph_help);
  auto* skew = app.add_subcommand(
      "skew", "Skew characteristic polynomials of orientations");
  skew->add_option("graph", graphs, graph_help);
  auto* mask_opt = skew->add_option("--mask", mask, "Orientation as hex edge mask");
  skew->add_flag("--all", all, "Every orientation")->excludes(mask_opt);
  auto* reduce = app.add_subcommand("reduce", "Kelmans reduction to F(n,m)");
  reduce->add_option("graph", graphs, graph_help);
  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify
      ->add_option("suite", suite,
                   "classification, maximum, monotonicity, reduction, "
                   "identity, radius or dominance")
      ->required();
  verify->add_option("--max-n", max_n, "Largest order")->capture_default_str();
  auto* dom = app.add_subcommand("dominance", "Matching dominance of g1 over g2");
  dom->add_option("graphs", graphs, "g1 g2")->expected(2)->required();

  std::vector<std::string> storage{"oddcycle"};
  storage.insert(storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : storage) argv.push_back(a.data());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Session session(opts, in, out);
  try {
    if (*poly) return cmd_poly(session, graphs);
    if (*maxroot) return cmd_maxroot(session, graphs);
    if (*skew) return cmd_skew(session, graphs, mask, all);
    if (*reduce) return cmd_reduce(session, graphs);
    if (*verify) return cmd_verify(session, suite, max_n);
    if (*dom) return cmd_dominance(session, graphs);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace oddcycle::cli
