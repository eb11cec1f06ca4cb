// cyclift: cyclic signatures, lifts and Ramanujan towers from the command
// line. JSON on stdout, human-readable summaries on stderr.
//
// Exit codes: 0 success, 1 verification failure, 2 parse error,
// 3 precondition violation, 4 search exhausted.

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "cyclift/corpus.hpp"
#include "cyclift/errors.hpp"
#include "cyclift/expectation.hpp"
#include "cyclift/json_io.hpp"
#include "cyclift/kernels.hpp"
#include "cyclift/matching.hpp"
#include "cyclift/parallel.hpp"
#include "cyclift/search.hpp"
#include "cyclift/spectra.hpp"
#include "cyclift/tower.hpp"
#include "cyclift/verify.hpp"

namespace {

using namespace cyclift;
using io::Json;

enum Exit { kOk = 0, kVerifyFailed = 1, kParse = 2, kPrecondition = 3, kExhausted = 4 };

struct Config {
  unsigned threads = 0;
  int json_indent = -1;
  std::optional<std::uint64_t> budget;

  std::uint64_t enumeration_budget(std::uint64_t fallback) const { return budget.value_or(fallback); }
};

void emit(const Json& j, const Config& cfg) { std::cout << io::dump(j, cfg.json_indent) << "\n"; }

std::optional<std::uint64_t> env_budget() {
  const char* env = std::getenv("CYCLIFT_BUDGET");
  if (!env || !*env) return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw PreconditionError("CYCLIFT_BUDGET must be a positive integer");
  return v;
}

Json exact_coeffs(const std::vector<std::string>& coeffs) {
  Json out = Json::array();
  for (const std::string& c : coeffs) {
    try {
      std::size_t used = 0;
      const long long v = std::stoll(c, &used);
      if (used == c.size()) {
        out.push_back(v);
        continue;
      }
    } catch (const std::out_of_range&) {
    }
    out.push_back(c);
  }
  return out;
}

int cmd_spectrum(const std::string& graph_path, const std::string& sig_path, int power, const Config& cfg) {
  const Graph g = read_graph_file(graph_path);
  const CyclicSignature s = io::signature_from_json(io::read_file(sig_path), g);
  const Spectrum sp = hermitian_eigenvalues(signed_adjacency(g, s, power));
  emit(io::spectrum_to_json(sp), cfg);
  std::cerr << "spectrum of A^{s," << power << "}: " << sp.size() << " eigenvalues, max " << sp.max() << "\n";
  return kOk;
}

int cmd_lift(const std::string& graph_path, const std::string& sig_path) {
  const Graph g = read_graph_file(graph_path);
  const CyclicSignature s = io::signature_from_json(io::read_file(sig_path), g);
  const Graph lift = lift_graph(g, s);
  const int k = s.k();
  std::cout << format_edge_list(lift, {"cyclic lift k=" + std::to_string(k) + " of a graph with n=" +
                                           std::to_string(g.num_vertices()) + " m=" + std::to_string(g.num_edges()),
                                       "fiber layout: vertex (u,i) -> u*" + std::to_string(k) + "+i",
                                       "edges ordered by base edge index, then fiber index"});
  std::cerr << "lift: " << lift.num_vertices() << " vertices, " << lift.num_edges() << " edges, "
            << lift.num_components() << " component(s)\n";
  return kOk;
}

int cmd_verify(const std::string& suite, int trials, std::uint64_t seed, bool inject, const Config& cfg) {
  std::vector<std::string> suites;
  if (suite == "all") {
    suites = suite_names();
  } else {
    suites = {suite};
  }
  if (trials <= 0) std::cerr << "warning: --trials " << trials << " runs no instances; suites pass vacuously\n";
  VerifyOptions opt{trials, seed, inject};
  Json report = Json::array();
  bool all_pass = true;
  for (const std::string& name : suites) {
    const SuiteResult r = run_suite(name, opt);
    all_pass = all_pass && r.pass;
    std::cerr << (r.pass ? "PASS " : "FAIL ") << name << " (" << r.instances << " instances, max discrepancy "
              << r.max_discrepancy << ")" << (r.message.empty() ? "" : ": " + r.message) << "\n";
    report.push_back(suite_to_json(r));
  }
  emit(Json{{"pass", all_pass}, {"suites", std::move(report)}}, cfg);
  return all_pass ? kOk : kVerifyFailed;
}

struct SearchArgs {
  std::string graph;
  int k = 3;
  std::string mode = "two-sided";
  int power = 1;
  std::string strategy = "exhaustive";
  std::string rho = "auto";
  std::uint64_t seed = 0;
  std::uint64_t max_iters = 100000;
  bool census = false;
};

int cmd_search(const SearchArgs& a, const Config& cfg) {
  const Graph g = read_graph_file(a.graph);
  Json extra;
  double rho = 0.0;
  if (a.rho == "auto") {
    const CoverRadius cr = universal_cover_spectral_radius(g);
    rho = cr.value;
    extra["rho_kind"] = cr.kind == RadiusKind::Regular ? "regular" : cr.kind == RadiusKind::Tree ? "tree" : "estimate";
    if (cr.kind == RadiusKind::Estimate) extra["rho_converged"] = cr.converged;
  } else {
    try {
      std::size_t used = 0;
      rho = std::stod(a.rho, &used);
      if (used != a.rho.size()) throw std::invalid_argument(a.rho);
    } catch (const std::exception&) {
      throw ParseError("--rho must be 'auto' or a number, got '" + a.rho + "'");
    }
    extra["rho_kind"] = "given";
  }
  const SearchMode mode = a.mode == "one-sided" ? SearchMode::one_sided(a.power) : SearchMode::two_sided();

  SearchOutcome out;
  if (a.strategy == "exhaustive") {
    out = exhaustive_search(g, a.k, mode, rho, a.census, cfg.enumeration_budget(kDefaultSearchBudget));
  } else if (a.strategy == "random") {
    out = random_search(g, a.k, mode, rho, a.max_iters, a.seed);
  } else {
    const int i = mode.kind == SearchMode::Kind::OneSided ? mode.power : 1;
    out = greedy_conditional_search(g, a.k, i, cfg.enumeration_budget(kDefaultBudget));
    const bool ok = mode.kind == SearchMode::Kind::OneSided ? one_sided_ok(g, *out.signature, i, rho)
                                                            : two_sided_ok(g, *out.signature, rho);
    if (!ok) {
      out.best_lambda_max = search_score(g, *out.signature, mode);
      out.signature.reset();
    }
  }
  Json j = io::outcome_to_json(g, out);
  j["mode"] = a.mode;
  j["k"] = a.k;
  j["rho"] = rho;
  for (auto it = extra.begin(); it != extra.end(); ++it) j[it.key()] = it.value();
  emit(j, cfg);
  std::cerr << out.strategy << " search: " << (out.signature ? "found" : "no") << " signature after " << out.tested
            << " candidate(s); score " << out.best_lambda_max << " vs rho " << rho << "\n";
  if (out.census) std::cerr << "census: " << *out.census << " passing assignments\n";
  return out.signature ? kOk : kExhausted;
}

struct TowerArgs {
  int d = 3;
  int levels = 2;
  std::string strategy = "random";
  std::uint64_t seed = 0;
  std::string out;
  int k = 3;
  bool allow_any_k = false;
  std::uint64_t max_iters = 200000;
};

int cmd_tower(const TowerArgs& a, const Config& cfg) {
  TowerOptions opt;
  opt.d = a.d;
  opt.levels = a.levels;
  opt.strategy = a.strategy == "exhaustive" ? TowerStrategy::Exhaustive
                 : a.strategy == "greedy"   ? TowerStrategy::Greedy
                                            : TowerStrategy::Random;
  opt.k = a.k;
  opt.allow_any_k = a.allow_any_k;
  opt.seed = a.seed;
  opt.budget = cfg.enumeration_budget(kDefaultSearchBudget);
  opt.random_iters = a.max_iters;
  const Tower tower = build_tower(opt);

  Json all = Json::array();
  for (const auto& c : tower.levels) all.push_back(io::certificate_to_json(c));
  if (!a.out.empty()) {
    std::filesystem::create_directories(a.out);
    for (std::size_t t = 0; t < tower.levels.size(); ++t) {
      std::ofstream f(std::filesystem::path(a.out) / ("level_" + std::to_string(tower.levels[t].level) + ".json"));
      f << io::dump(all[t], cfg.json_indent) << "\n";
    }
    std::ofstream f(std::filesystem::path(a.out) / "tower.json");
    f << io::dump(all, cfg.json_indent) << "\n";
  } else {
    emit(all, cfg);
  }

  // Re-verify from the serialised form, as an independent reader would.
  std::vector<RamanujanCertificate> reread;
  for (const auto& j : all) reread.push_back(io::certificate_from_json(io::parse(io::dump(j))));
  const CertificateCheck check = check_tower(reread);
  for (const auto& c : tower.levels) {
    std::cerr << "level " << c.level << ": " << c.graph.num_vertices() << " vertices, " << c.graph.num_edges()
              << " edges, margin " << c.margin << "\n";
  }
  for (const auto& p : check.problems) std::cerr << "verification: " << p << "\n";
  if (!check.ok) return kVerifyFailed;
  if (!tower.complete) {
    std::cerr << "tower incomplete: " << tower.diagnostic << "\n";
    return kExhausted;
  }
  return kOk;
}

int cmd_check(const std::vector<std::string>& files, const Config& cfg) {
  Json report = Json::array();
  bool ok = true;
  for (const std::string& path : files) {
    const Json j = io::read_file(path);
    std::vector<RamanujanCertificate> certs;
    if (j.is_array()) {
      for (const auto& c : j) certs.push_back(io::certificate_from_json(c));
    } else {
      certs.push_back(io::certificate_from_json(j));
    }
    const CertificateCheck c = certs.size() > 1 ? check_tower(certs) : check_certificate(certs.front());
    ok = ok && c.ok;
    report.push_back(Json{{"file", path}, {"ok", c.ok}, {"problems", c.problems}});
    std::cerr << (c.ok ? "OK   " : "FAIL ") << path << "\n";
    for (const auto& p : c.problems) std::cerr << "  " << p << "\n";
  }
  emit(Json{{"ok", ok}, {"files", std::move(report)}}, cfg);
  return ok ? kOk : kVerifyFailed;
}

int cmd_matching_poly(const std::string& graph_path, const Config& cfg) {
  const Graph g = read_graph_file(graph_path);
  const MatchingCounts mc = matching_counts(g);
  emit(Json{{"coeffs", exact_coeffs(matching_polynomial_exact(g))}, {"matching_counts", mc.to_strings()}}, cfg);
  return kOk;
}

int cmd_expectation(const std::string& graph_path, int k, int i, const Config& cfg) {
  const Graph g = read_graph_file(graph_path);
  const Polynomial e =
      expected_char_poly(g, i, PartialAssignment::all_free(k, g.num_edges()), cfg.enumeration_budget(kDefaultBudget));
  const Polynomial mu = matching_polynomial(g);
  const double dev = max_coeff_difference(e, mu);
  Json j = io::polynomial_to_json(e);
  j["k"] = k;
  j["i"] = i;
  j["matching_polynomial"] = exact_coeffs(matching_polynomial_exact(g));
  j["max_deviation"] = dev;
  emit(j, cfg);
  std::cerr << "expected characteristic polynomial over " << k << "^" << g.num_edges()
            << " signatures; max deviation from the matching polynomial " << dev << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"cyclift: cyclic signatures, lifts and Ramanujan towers"};
  app.require_subcommand(1);
  app.fallthrough();
  Config cfg;
  app.add_option("--threads", cfg.threads, "Worker threads (default: available parallelism)");
  app.add_option("--json-indent", cfg.json_indent, "Pretty-print JSON with this indent");
  std::optional<std::uint64_t> budget_flag;
  app.add_option("--budget", budget_flag, "Enumeration budget (overrides CYCLIFT_BUDGET)");

  std::string graph, sig;
  int power = 1;
  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of A^{s,i}");
  spectrum->add_option("graph", graph, "Edge-list file")->required();
  spectrum->add_option("signature", sig, "Signature JSON")->required();
  spectrum->add_option("--power,-i", power, "Hadamard power i");

  auto* lift = app.add_subcommand("lift", "Edge list of the k-cyclic lift");
  lift->add_option("graph", graph, "Edge-list file")->required();
  lift->add_option("signature", sig, "Signature JSON")->required();

  std::string suite = "all";
  int trials = 100;
  std::uint64_t seed = 0;
  bool inject = false;
  auto* verify = app.add_subcommand("verify", "Run spectral verification suites");
  verify->add_option("--suite", suite, "lift-spectrum|symmetry|switching|expectation|interlacing|rank-one|all");
  verify->add_option("--trials", trials, "Random instances per suite");
  verify->add_option("--seed", seed, "Random seed");
  verify->add_flag("--inject-non-hermitian", inject, "Test hook: perturb one matrix off Hermitian")
      ->group("");

  SearchArgs sa;
  auto* search = app.add_subcommand("search", "Search for a signature meeting the bound");
  search->add_option("graph", sa.graph, "Edge-list file")->required();
  search->add_option("--k", sa.k, "Cyclic order");
  search->add_option("--mode", sa.mode, "one-sided|two-sided")->check(CLI::IsMember({"one-sided", "two-sided"}));
  search->add_option("--power,-i", sa.power, "Power i for one-sided mode");
  search->add_option("--strategy", sa.strategy, "exhaustive|random|greedy")
      ->check(CLI::IsMember({"exhaustive", "random", "greedy"}));
  search->add_option("--rho", sa.rho, "auto or a number");
  search->add_option("--seed", sa.seed, "Random seed");
  search->add_option("--max-iters", sa.max_iters, "Random strategy iteration cap");
  search->add_flag("--census", sa.census, "Count every passing assignment (exhaustive)");

  TowerArgs ta;
  auto* tower = app.add_subcommand("tower", "Build and certify a tower of cyclic lifts of K_{d,d}");
  tower->add_option("--d", ta.d, "Degree")->required();
  tower->add_option("--levels", ta.levels, "Number of levels including the seed");
  tower->add_option("--strategy", ta.strategy, "exhaustive|random|greedy")
      ->check(CLI::IsMember({"exhaustive", "random", "greedy"}));
  tower->add_option("--seed", ta.seed, "Random seed");
  tower->add_option("--out", ta.out, "Directory for level_<t>.json and tower.json");
  tower->add_option("--k", ta.k, "Cyclic order (k != 3 needs --allow-any-k)");
  tower->add_flag("--allow-any-k", ta.allow_any_k, "Experiment with k != 3");
  tower->add_option("--max-iters", ta.max_iters, "Random strategy iteration cap per level");

  std::vector<std::string> files;
  auto* check = app.add_subcommand("check", "Re-verify certificate or tower JSON files");
  check->add_option("files", files, "Certificate files")->required();

  auto* mpoly = app.add_subcommand("matching-poly", "Matching polynomial with exact coefficients");
  mpoly->add_option("graph", graph, "Edge-list file")->required();

  int ek = 3, ei = 1;
  auto* expect = app.add_subcommand("expectation", "Average characteristic polynomial over all signatures");
  expect->add_option("graph", graph, "Edge-list file")->required();
  expect->add_option("--k", ek, "Cyclic order");
  expect->add_option("--i,-i", ei, "Hadamard power");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kParse;
  }

  try {
    cfg.budget = budget_flag ? budget_flag : env_budget();
    if (cfg.threads > 0) set_thread_count(cfg.threads);

    if (*spectrum) return cmd_spectrum(graph, sig, power, cfg);
    if (*lift) return cmd_lift(graph, sig);
    if (*verify) return cmd_verify(suite, trials, seed, inject, cfg);
    if (*search) return cmd_search(sa, cfg);
    if (*tower) return cmd_tower(ta, cfg);
    if (*check) return cmd_check(files, cfg);
    if (*mpoly) return cmd_matching_poly(graph, cfg);
    if (*expect) return cmd_expectation(graph, ek, ei, cfg);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition violated: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kVerifyFailed;
  }
  return kOk;
}
