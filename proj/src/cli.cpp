#include "truss/cli.hpp"

#include <cerrno>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "truss/embedding.hpp"
#include "truss/errors.hpp"
#include "truss/extremal.hpp"
#include "truss/families.hpp"
#include "truss/peeler.hpp"
#include "truss/triangles.hpp"
#include "truss/verify.hpp"

namespace truss::cli {

namespace {

using nlohmann::json;

class IoError : public Error {
 public:
  using Error::Error;
};

std::string rational_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Graph read_graph(const RunConfig& cfg, std::istream& in) {
  ParseOptions opts;
  opts.drop_isolated = cfg.drop_isolated;
  if (!cfg.input) return parse_edge_list(in, opts);
  std::ifstream file(*cfg.input);
  if (!file) throw IoError("cannot open input file " + *cfg.input);
  return parse_edge_list(file, opts);
}

// ---- graph subcommands -------------------------------------------------

void cmd_stats(const Graph& g, std::ostream& out) {
  const auto degen = degeneracy(g);
  const auto labels = truss_decomposition(g);
  std::uint32_t max_degree = 0;
  for (Vertex v = 0; v < g.num_vertices(); ++v) max_degree = std::max(max_degree, g.degree(v));
  out << "n\t" << g.num_vertices() << '\n'
      << "m\t" << g.num_edges() << '\n'
      << "triangles\t" << triangle_counts(g).total << '\n'
      << "max_degree\t" << max_degree << '\n'
      << "degeneracy\t" << degen.degeneracy << '\n'
      << "average_degeneracy\t" << rational_text(degen.average_degeneracy) << '\n'
      << "max_tau\t" << labels.max_tau() << '\n';
}

void cmd_triangles(const RunConfig& cfg, const Graph& g, std::ostream& out) {
  if (cfg.counts) {
    const auto counts = triangle_counts(g);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      const auto [u, v] = g.endpoints(e);
      out << g.label(u) << ' ' << g.label(v) << '\t' << counts.per_edge[e] << '\n';
    }
    return;
  }
  for (const Triangle& t : list_triangles(g))
    out << g.label(t.a) << ' ' << g.label(t.b) << ' ' << g.label(t.c) << '\n';
}

void cmd_truss(const RunConfig& cfg, const Graph& g, std::ostream& out) {
  const auto labels = truss_decomposition(g);
  if (cfg.histogram) {
    for (auto [k, count] : tau_histogram(labels)) out << k << '\t' << count << '\n';
    return;
  }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.endpoints(e);
    out << g.label(u) << ' ' << g.label(v) << '\t' << labels.tau[e] << '\n';
  }
}

void cmd_truncated(const RunConfig& cfg, const Graph& g, std::ostream& out, std::ostream& err) {
  WitnessStats stats;
  const auto labels = truncated_decomposition(g, cfg.witness, &stats);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.endpoints(e);
    out << g.label(u) << ' ' << g.label(v) << '\t' << labels.tau[e] << '\t'
        << (labels.is_exact(e) ? "exact" : "lower_bound") << '\n';
  }
  if (cfg.verbosity > 0) {
    const auto r = resolve(cfg.witness, g);
    err << "sets=" << r.sets << " prob=" << r.prob << " b=" << r.b << " enumerations=" << stats.enumerations
        << " fallbacks=" << stats.fallbacks << " candidates=" << stats.candidates_tested << '\n';
  }
}

void cmd_components(const RunConfig& cfg, const Graph& g, std::ostream& out) {
  const auto labels = truss_decomposition(g);
  const auto comps = k_truss_components(g, cfg.k, labels);
  for (std::size_t c = 0; c < comps.size(); ++c)
    for (EdgeId e : comps[c].ids()) {
      const auto [u, v] = g.endpoints(e);
      out << c << '\t' << g.label(u) << ' ' << g.label(v) << '\n';
    }
}

// ---- generate ------------------------------------------------------------

json receipt_json(const ConstructionReceipt& r) {
  json j;
  j["generator"] = r.name;
  json params = json::object();
  for (const auto& [key, value] : r.parameters) params[key] = value;
  j["parameters"] = params;
  j["expected_n"] = r.expected_n;
  j["expected_m"] = r.expected_m ? json(*r.expected_m) : json(nullptr);
  j["m_upper_bound"] = r.m_upper_bound ? json(rational_text(*r.m_upper_bound)) : json(nullptr);
  j["actual_n"] = r.actual_n;
  j["actual_m"] = r.actual_m;
  j["counts_match"] = r.counts_match();
  j["checks_passed"] = r.checks_passed;
  j["notes"] = r.notes;
  return j;
}

void write_receipt_comments(const ConstructionReceipt& r, std::ostream& out) {
  out << "# generator: " << r.name << '\n';
  for (const auto& [key, value] : r.parameters) out << "# " << key << ": " << value << '\n';
  out << "# expected_n: " << r.expected_n << '\n';
  if (r.expected_m) out << "# expected_m: " << *r.expected_m << '\n';
  if (r.m_upper_bound) out << "# m_upper_bound: " << rational_text(*r.m_upper_bound) << '\n';
  out << "# actual_n: " << r.actual_n << '\n' << "# actual_m: " << r.actual_m << '\n';
  out << "# checks_passed:";
  for (const auto& c : r.checks_passed) out << ' ' << c;
  out << '\n';
  for (const auto& note : r.notes) out << "# note: " << note << '\n';
}

Construction generate(const RunConfig& cfg, std::istream& in) {
  const std::string& name = cfg.subcommand;
  if (name == "clique-chain") return clique_chain(cfg.k, cfg.s);
  if (name == "chain-remainder") return clique_chain_remainder(cfg.k, cfg.n);
  if (name == "critical-2truss") return critical_2truss(cfg.n);
  if (name == "suspend") return suspend(read_graph(cfg, in), cfg.k, cfg.added);
  if (name == "torus-critical") {
    TorusEmbedding te = torus_embedding(cfg.faces_i, cfg.faces_t);
    Construction c = truss_from_embedding(te.embedding, cfg.k);
    const auto& l = te.layout;
    c.receipt.notes.push_back("lattice q=" + std::to_string(l.q) + " sigma=" + std::to_string(l.sigma) +
                              " p=" + std::to_string(l.p) + " strip=(" + std::to_string(l.strip_x) + "," +
                              std::to_string(l.strip_y) + ")" + (l.subdivided ? " subdivided" : ""));
    return c;
  }
  if (name == "critical") return critical_truss(cfg.k, cfg.n);
  throw RangeError("unknown generator " + name);
}

void cmd_generate(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  Construction c = generate(cfg, in);
  if (cfg.receipt_path) {
    std::ofstream file(*cfg.receipt_path);
    if (!file) throw IoError("cannot open receipt file " + *cfg.receipt_path);
    file << receipt_json(c.receipt).dump(2) << '\n';
    if (!file) throw IoError("failed writing receipt file " + *cfg.receipt_path);
  }
  write_receipt_comments(c.receipt, out);
  write_edge_list(c.graph, out);
}

// ---- verify --------------------------------------------------------------

const char* relation_text(Relation r) { return r == Relation::at_least ? ">=" : "<="; }

int cmd_verify(const RunConfig& cfg, const Graph& g, std::ostream& out) {
  if (cfg.subcommand == "truss" || cfg.subcommand == "critical") {
    const bool critical = cfg.subcommand == "critical";
    const bool ok = critical ? is_critical_k_truss(g, cfg.k) : is_k_truss(g, cfg.k);
    if (cfg.json) {
      json j{{"check", critical ? "critical-k-truss" : "k-truss"}, {"k", cfg.k},
             {"n", g.num_vertices()}, {"m", g.num_edges()}, {"passed", ok}};
      out << j.dump(2) << '\n';
    } else {
      out << (critical ? "critical " : "") << cfg.k << "-truss: " << (ok ? "pass" : "fail") << '\n';
    }
    return ok ? kOk : kVerificationFailed;
  }

  const auto labels = truss_decomposition(g);
  std::optional<std::uint32_t> only_k;
  if (cfg.k > 0) only_k = cfg.k;
  const BoundReport report = bound_report(g, labels, only_k);
  if (cfg.json) {
    json checks = json::array();
    for (const auto& c : report.checks)
      checks.push_back({{"name", c.name},
                        {"k", c.k},
                        {"relation", relation_text(c.relation)},
                        {"bound", rational_text(c.bound)},
                        {"observed", rational_text(c.observed)},
                        {"passed", c.passed},
                        {"witness", c.witness}});
    json j{{"n", g.num_vertices()}, {"m", g.num_edges()}, {"passed", report.passed()},
           {"violations", report.violations()}, {"checks", checks}};
    out << j.dump(2) << '\n';
  } else {
    out << std::left << std::setw(13) << "check" << std::setw(5) << "k" << std::setw(12) << "observed"
        << std::setw(4) << "" << std::setw(12) << "bound" << std::setw(8) << "status"
        << "witness\n";
    for (const auto& c : report.checks) {
      out << std::setw(13) << c.name << std::setw(5) << (c.k ? std::to_string(c.k) : "-") << std::setw(12)
          << rational_text(c.observed) << std::setw(4) << relation_text(c.relation) << std::setw(12)
          << rational_text(c.bound) << std::setw(8) << (c.passed ? "pass" : "FAIL") << c.witness << '\n';
    }
    out << (report.passed() ? "all bounds hold" : std::to_string(report.violations()) + " violation(s)") << '\n';
  }
  return report.passed() ? kOk : kVerificationFailed;
}

// ---- bench ---------------------------------------------------------------

std::vector<std::pair<std::string, Graph>> bench_graphs(const RunConfig& cfg, std::istream& in) {
  std::vector<std::pair<std::string, Graph>> out;
  if (!cfg.family) {
    out.emplace_back(cfg.input.value_or("stdin"), read_graph(cfg, in));
    return out;
  }
  for (std::uint32_t n : cfg.sizes) {
    const std::string name = *cfg.family + "-" + std::to_string(n);
    if (*cfg.family == "complete")
      out.emplace_back(name, families::complete(n));
    else if (*cfg.family == "cycle")
      out.emplace_back(name, families::cycle(n));
    else if (*cfg.family == "star")
      out.emplace_back(name, families::star(n));
    else if (*cfg.family == "gnp")
      out.emplace_back(name, families::gnp(n, cfg.p, cfg.witness.seed));
    else
      throw RangeError("unknown bench family " + *cfg.family);
  }
  return out;
}

void cmd_bench(const RunConfig& cfg, std::istream& in, std::ostream& out) {
  using Clock = std::chrono::steady_clock;
  auto ms = [](Clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };
  out << "graph\tn\tm\tm_avg_degeneracy\tscan_length\tstack_pushes\trounds\tpeel_ms"
         "\tk_trunc\tenumerations\tfallbacks\tfallback_rate\twitness_ms\n";
  for (const auto& [name, g] : bench_graphs(cfg, in)) {
    const Rational work = degeneracy(g).average_degeneracy * static_cast<std::int64_t>(g.num_edges());
    PeelStats peel;
    auto t0 = Clock::now();
    truss_decomposition(g, {}, &peel);
    const double peel_ms = ms(Clock::now() - t0);
    out << name << '\t' << g.num_vertices() << '\t' << g.num_edges() << '\t' << rational_text(work) << '\t'
        << peel.scan_length << '\t' << peel.stack_pushes << '\t' << peel.rounds << '\t' << std::fixed
        << std::setprecision(3) << peel_ms;

    WitnessConfig wc = cfg.witness;
    const auto k_cap = static_cast<std::uint32_t>(std::ceil(std::sqrt(2.0 * g.num_edges())));
    wc.k_trunc = std::min(wc.k_trunc, k_cap);
    if (g.num_edges() == 0 || wc.k_trunc == 0) {
      out << "\t-\t-\t-\t-\t-\n";
      continue;
    }
    WitnessStats ws;
    t0 = Clock::now();
    truncated_decomposition(g, wc, &ws);
    const double witness_ms = ms(Clock::now() - t0);
    const double rate = ws.enumerations ? static_cast<double>(ws.fallbacks) / ws.enumerations : 0.0;
    out << '\t' << wc.k_trunc << '\t' << ws.enumerations << '\t' << ws.fallbacks << '\t' << std::setprecision(4)
        << rate << '\t' << std::setprecision(3) << witness_ms << '\n';
    out.unsetf(std::ios::fixed);
  }
}

int dispatch(const RunConfig& cfg, std::istream& in, std::ostream& out, std::ostream& err) {
  const std::string& c = cfg.command;
  if (c == "generate") {
    cmd_generate(cfg, in, out);
    return kOk;
  }
  if (c == "bench") {
    cmd_bench(cfg, in, out);
    return kOk;
  }
  const Graph g = read_graph(cfg, in);
  if (c == "stats") cmd_stats(g, out);
  else if (c == "triangles") cmd_triangles(cfg, g, out);
  else if (c == "truss") cmd_truss(cfg, g, out);
  else if (c == "truncated-truss") cmd_truncated(cfg, g, out, err);
  else if (c == "components") cmd_components(cfg, g, out);
  else if (c == "verify") return cmd_verify(cfg, g, out);
  else throw RangeError("unknown command " + c);
  return kOk;
}

// Default memory cap from the environment, when set.
std::uint64_t default_mem_cap() {
  const char* env = std::getenv(kMemCapEnv);
  if (!env || !*env) return kDefaultMemCap;
  char* end = nullptr;
  errno = 0;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (errno || *end || v == 0) throw RangeError(std::string(kMemCapEnv) + " must be a positive byte count");
  return v;
}

}  // namespace

int run(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  try {
    if (!config.output) return dispatch(config, in, out, err);
    // Buffer so a failed run leaves no partial output file.
    std::ostringstream buffer;
    const int status = dispatch(config, in, buffer, err);
    std::ofstream file(*config.output, std::ios::binary);
    if (!file) throw IoError("cannot open output file " + *config.output);
    file << buffer.str();
    if (!file) throw IoError("failed writing output file " + *config.output);
    return status;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kValidation;
  } catch (const RangeError& e) {
    err << "bad parameter: " << e.what() << '\n';
    return kUsage;
  } catch (const IoError& e) {
    err << "i/o error: " << e.what() << '\n';
    return kIo;
  } catch (const CapacityError& e) {
    err << "refused: " << e.what() << '\n';
    return kCapacity;
  } catch (const InfeasibleError& e) {
    err << "infeasible: " << e.what() << '\n';
    return kInfeasible;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}

std::optional<RunConfig> parse_args(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
                                    int& status) {
  RunConfig cfg;
  CLI::App app{"k-truss decomposition, extremal constructions and bound checks", "trussctl"};
  app.require_subcommand(1);

  auto io_options = [&](CLI::App* sub, bool input) {
    if (input) {
      sub->add_option("-i,--input", cfg.input, "edge-list file (default: stdin)");
      sub->add_flag("--drop-isolated", cfg.drop_isolated, "accept and drop single-label vertex lines");
    }
    sub->add_option("-o,--output", cfg.output, "output file (default: stdout)");
    sub->add_flag("-v,--verbose", cfg.verbosity, "report counters on stderr");
  };
  std::optional<std::uint64_t> mem_cap;
  std::string init = "direct";
  auto witness_options = [&](CLI::App* sub, bool required) {
    auto* kt = sub->add_option("--k-trunc", cfg.witness.k_trunc, "truncation level")->check(CLI::PositiveNumber);
    if (required) kt->required();
    sub->add_option("--seed", cfg.witness.seed, "random seed");
    sub->add_option("--sets", cfg.witness.sets, "number of random sets L")->check(CLI::PositiveNumber);
    sub->add_option("--prob", cfg.witness.prob, "inclusion probability q");
    sub->add_option("--init", init, "witness table initialization")->check(CLI::IsMember({"direct", "matrix"}));
    sub->add_option("--b", cfg.witness.b, "heavy/light exponent");
    sub->add_option("--mem-cap", mem_cap, "witness table byte budget")->check(CLI::PositiveNumber);
  };

  auto* stats = app.add_subcommand("stats", "vertex, edge, triangle and degeneracy summary");
  io_options(stats, true);
  auto* tri = app.add_subcommand("triangles", "list triangles, or per-edge counts");
  io_options(tri, true);
  tri->add_flag("--counts", cfg.counts, "print \"u v count\" per edge");
  auto* truss = app.add_subcommand("truss", "exact trussness of every edge");
  io_options(truss, true);
  truss->add_flag("--histogram", cfg.histogram, "print \"k count\" per trussness value");
  auto* trunc = app.add_subcommand("truncated-truss", "trussness below k_trunc, lower bound above");
  io_options(trunc, true);
  witness_options(trunc, true);
  auto* comps = app.add_subcommand("components", "k-truss components");
  io_options(comps, true);
  comps->add_option("--k", cfg.k, "truss level")->required()->check(CLI::PositiveNumber);

  auto* gen = app.add_subcommand("generate", "extremal constructions");
  gen->require_subcommand(1);
  auto gen_sub = [&](const char* name, const char* help) {
    auto* sub = gen->add_subcommand(name, help);
    io_options(sub, std::string(name) == "suspend");
    sub->add_option("--receipt", cfg.receipt_path, "also write the receipt as JSON");
    return sub;
  };
  auto* g_chain = gen_sub("clique-chain", "s copies of K_{k+2} glued in a chain");
  g_chain->add_option("--k", cfg.k)->required();
  g_chain->add_option("--s", cfg.s)->required();
  auto* g_rem = gen_sub("chain-remainder", "k-truss chain on exactly n vertices");
  g_rem->add_option("--k", cfg.k)->required();
  g_rem->add_option("--n", cfg.n)->required();
  auto* g_c2 = gen_sub("critical-2truss", "cycle plus two apexes");
  g_c2->add_option("--n", cfg.n)->required();
  auto* g_susp = gen_sub("suspend", "add apexes to a k-truss read from input");
  g_susp->add_option("--k", cfg.k)->required();
  g_susp->add_option("--added", cfg.added)->check(CLI::Range(1, 2));
  auto* g_torus = gen_sub("torus-critical", "k-truss from a torus embedding with two t-faces and i squares");
  g_torus->add_option("--k", cfg.k)->required();
  g_torus->add_option("--i", cfg.faces_i)->required();
  g_torus->add_option("--t", cfg.faces_t)->required();
  auto* g_crit = gen_sub("critical", "critical k-truss on n vertices");
  g_crit->add_option("--k", cfg.k)->required();
  g_crit->add_option("--n", cfg.n)->required();

  auto* ver = app.add_subcommand("verify", "k-truss, criticality and bound checks");
  ver->require_subcommand(1);
  for (const char* name : {"truss", "critical", "bounds"}) {
    auto* sub = ver->add_subcommand(name);
    io_options(sub, true);
    auto* k = sub->add_option("--k", cfg.k, "truss level");
    if (std::string(name) != "bounds") k->required();
    sub->add_flag("--json", cfg.json, "structured output");
  }

  auto* bench = app.add_subcommand("bench", "peeler and witness counters with timings");
  io_options(bench, true);
  witness_options(bench, false);
  bench->add_option("--family", cfg.family)->check(CLI::IsMember({"complete", "cycle", "star", "gnp"}));
  bench->add_option("--sizes", cfg.sizes)->delimiter(',');
  bench->add_option("--p", cfg.p, "edge probability for gnp")->check(CLI::Range(0.0, 1.0));
  cfg.witness.k_trunc = 3;

  std::vector<const char*> argv{"trussctl"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    status = app.exit(e, out, err) == 0 ? kOk : kUsage;
    return std::nullopt;
  }

  for (CLI::App* sub : app.get_subcommands()) {
    cfg.command = sub->get_name();
    for (CLI::App* inner : sub->get_subcommands()) cfg.subcommand = inner->get_name();
  }
  if (cfg.command == "bench" && cfg.family && cfg.sizes.empty()) {
    err << "--family needs --sizes\n";
    status = kUsage;
    return std::nullopt;
  }
  cfg.witness.init_mode = init == "matrix" ? InitMode::matrix : InitMode::direct;
  try {
    cfg.witness.mem_cap_bytes = mem_cap ? *mem_cap : default_mem_cap();
  } catch (const RangeError& e) {
    err << e.what() << '\n';
    status = kUsage;
    return std::nullopt;
  }
  status = kOk;
  return cfg;
}

int main_entry(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  int status = kOk;
  auto cfg = parse_args(args, out, err, status);
  if (!cfg) return status;
  return run(*cfg, in, out, err);
}

}  // namespace truss::cli
