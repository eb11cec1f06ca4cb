#include "cyclift/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "cyclift/corpus.hpp"
#include "cyclift/errors.hpp"
#include "cyclift/expectation.hpp"
#include "cyclift/matching.hpp"
#include "cyclift/spectra.hpp"

namespace cyclift {

namespace {

io::Json instance(const Graph& g, const CyclicSignature* s, int i = -1) {
  io::Json j;
  j["graph"] = io::graph_to_json(g);
  if (s) j["signature"] = io::signature_to_json(g, *s);
  if (i >= 0) j["i"] = i;
  return j;
}

void record_failure(SuiteResult& r, std::string message, io::Json inst) {
  if (!r.pass) return;  // keep the first failing instance
  r.pass = false;
  r.message = std::move(message);
  r.failing_instance = std::move(inst);
}

const NamedGraph& pick(std::mt19937_64& rng) {
  const auto& c = default_corpus();
  return c[std::uniform_int_distribution<std::size_t>(0, c.size() - 1)(rng)];
}

// Hook used by the matrix suites: a matrix that is no longer Hermitian
// must be rejected by the eigensolver.
void injected_check(SuiteResult& r, std::mt19937_64& rng) {
  const NamedGraph& ng = pick(rng);
  const CyclicSignature s = random_signature(ng.graph, 3, rng);
  HermitianMatrix a = signed_adjacency(ng.graph, s, 1);
  a(0, a.size() - 1) += cplx(1e-3, 0.0);
  try {
    (void)hermitian_eigenvalues(a);
    record_failure(r, "perturbed matrix was accepted", instance(ng.graph, &s, 1));
  } catch (const PreconditionError& e) {
    record_failure(r, std::string("injected fault: ") + e.what(), instance(ng.graph, &s, 1));
  }
}

SuiteResult lift_spectrum_suite(const VerifyOptions& opt) {
  SuiteResult r;
  r.name = "lift-spectrum";
  std::mt19937_64 rng(opt.seed);
  if (opt.inject_non_hermitian) injected_check(r, rng);
  for (int t = 0; t < opt.trials; ++t) {
    const NamedGraph& ng = pick(rng);
    const int k = std::uniform_int_distribution<int>(2, 6)(rng);
    const CyclicSignature s = random_signature(ng.graph, k, rng);
    const LiftSpectrumReport rep = lift_spectrum_check(ng.graph, s);
    ++r.instances;
    r.max_discrepancy = std::max(r.max_discrepancy, rep.max_discrepancy);
    if (!rep.match) record_failure(r, ng.name + ": lift spectrum differs from the union", instance(ng.graph, &s));
  }
  return r;
}

SuiteResult symmetry_suite(const VerifyOptions& opt) {
  SuiteResult r;
  r.name = "symmetry";
  std::mt19937_64 rng(opt.seed + 1);
  std::vector<const NamedGraph*> bip;
  for (const auto& ng : default_corpus()) {
    if (bipartition(ng.graph)) bip.push_back(&ng);
  }
  for (int t = 0; t < opt.trials; ++t) {
    // Alternate corpus graphs with random bipartite ones.
    const Graph g = (t % 2 == 0) ? bip[std::uniform_int_distribution<std::size_t>(0, bip.size() - 1)(rng)]->graph
                                 : random_bipartite_graph(rng);
    const int k = std::uniform_int_distribution<int>(2, 6)(rng);
    const int i = std::uniform_int_distribution<int>(0, k - 1)(rng);
    const CyclicSignature s = random_signature(g, k, rng);
    const Spectrum sp = hermitian_eigenvalues(signed_adjacency(g, s, i));
    double worst = 0.0;
    for (std::size_t j = 0; j < sp.size(); ++j) {
      worst = std::max(worst, std::abs(sp.values[j] + sp.values[sp.size() - 1 - j]));
    }
    ++r.instances;
    r.max_discrepancy = std::max(r.max_discrepancy, worst);
    if (!bipartite_symmetry_check(g, s, i)) record_failure(r, "spectrum not symmetric about 0", instance(g, &s, i));
  }
  return r;
}

SuiteResult switching_suite(const VerifyOptions& opt) {
  SuiteResult r;
  r.name = "switching";
  std::mt19937_64 rng(opt.seed + 2);
  if (opt.inject_non_hermitian) injected_check(r, rng);
  for (int t = 0; t < opt.trials; ++t) {
    const Graph g = (t % 2 == 0) ? pick(rng).graph : random_graph(rng);
    const int k = std::uniform_int_distribution<int>(2, 6)(rng);
    const int i = std::uniform_int_distribution<int>(0, k - 1)(rng);
    const CyclicSignature s = random_signature(g, k, rng);
    SwitchingFunction th{k, std::vector<int>(static_cast<std::size_t>(g.num_vertices()))};
    for (int& x : th.theta) x = std::uniform_int_distribution<int>(0, k - 1)(rng);
    const SwitchingReport rep = switching_invariance(g, s, th, i);
    ++r.instances;
    r.max_discrepancy = std::max({r.max_discrepancy, rep.spectral_discrepancy, rep.conjugation_defect});
    if (!rep.ok) {
      io::Json inst = instance(g, &s, i);
      inst["theta"] = th.theta;
      record_failure(r, "switched spectrum or conjugation identity differs", std::move(inst));
    }
  }
  return r;
}

SuiteResult expectation_suite(const VerifyOptions&) {
  SuiteResult r;
  r.name = "expectation";
  for (const auto& ng : default_corpus()) {
    if (ng.graph.num_edges() > 7) continue;
    const Polynomial mu = matching_polynomial(ng.graph);
    for (int k = 2; k <= 4; ++k) {
      for (int i = 1; i < k; ++i) {
        const Polynomial e =
            expected_char_poly(ng.graph, i, PartialAssignment::all_free(k, ng.graph.num_edges()));
        const double dev = max_coeff_difference(e, mu);
        ++r.instances;
        r.max_discrepancy = std::max(r.max_discrepancy, dev);
        if (dev > 1e-6) {
          io::Json inst = instance(ng.graph, nullptr, i);
          inst["k"] = k;
          record_failure(r, ng.name + ": expected characteristic polynomial differs from the matching polynomial",
                         std::move(inst));
        }
      }
    }
  }
  return r;
}

SuiteResult interlacing_suite(const VerifyOptions& opt) {
  SuiteResult r;
  r.name = "interlacing";
  const std::vector<NamedGraph> graphs = {{"C3", cycle_graph(3)}, {"P4", path_graph(4)}, {"C4", cycle_graph(4)}};
  const int families = (opt.trials + 1) / 2;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    const auto& ng = graphs[gi];
    const auto cc = convex_combination_real_rooted_check(ng.graph, 3, 1, opt.trials, opt.seed + 10 + gi);
    r.instances += cc.trials;
    r.max_discrepancy = std::max(r.max_discrepancy, cc.worst_imag);
    if (cc.failures > 0) {
      io::Json inst = instance(ng.graph, nullptr, 1);
      inst["weights"] = cc.failing_weights.front();
      record_failure(r, ng.name + ": convex combination is not real-rooted", std::move(inst));
    }
    const auto fam = interlacing_family_check(ng.graph, 3, 1, families, opt.seed + 20 + gi);
    r.instances += fam.trials;
    if (fam.failures > 0) {
      io::Json inst = instance(ng.graph, nullptr, 1);
      inst["prefix"] = fam.failing_prefixes.front();
      record_failure(r, ng.name + ": sibling family has no common interlacing", std::move(inst));
    }
  }
  return r;
}

SuiteResult rank_one_suite(const VerifyOptions& opt) {
  SuiteResult r;
  r.name = "rank-one";
  std::mt19937_64 rng(opt.seed + 3);
  for (int t = 0; t < opt.trials; ++t) {
    const Graph g = (t % 2 == 0) ? pick(rng).graph : random_graph(rng);
    const int k = std::uniform_int_distribution<int>(2, 6)(rng);
    const int i = std::uniform_int_distribution<int>(1, k - 1)(rng);
    const CyclicSignature s = random_signature(g, k, rng);
    const RankOneReport rep = rank_one_decomposition(g, s, i);
    ++r.instances;
    r.max_discrepancy = std::max(r.max_discrepancy, rep.defect);
    if (!rep.ok) record_failure(r, "rank-one decomposition does not reproduce A^{s,i}", instance(g, &s, i));
  }
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"lift-spectrum", "symmetry", "switching",
                                                 "expectation",   "interlacing", "rank-one"};
  return names;
}

SuiteResult run_suite(const std::string& name, const VerifyOptions& opt) {
  if (std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end()) {
    throw PreconditionError("unknown suite '" + name + "'");
  }
  if (opt.trials <= 0 && !opt.inject_non_hermitian) {
    SuiteResult r;
    r.name = name;
    r.message = "no trials requested; vacuous pass";
    return r;
  }
  try {
    if (name == "lift-spectrum") return lift_spectrum_suite(opt);
    if (name == "symmetry") return symmetry_suite(opt);
    if (name == "switching") return switching_suite(opt);
    if (name == "expectation") return expectation_suite(opt);
    if (name == "interlacing") return interlacing_suite(opt);
    return rank_one_suite(opt);
  } catch (const std::exception& e) {
    SuiteResult r;
    r.name = name;
    r.pass = false;
    r.message = std::string("error: ") + e.what();
    return r;
  }
}

io::Json suite_to_json(const SuiteResult& r) {
  io::Json j;
  j["suite"] = r.name;
  j["pass"] = r.pass;
  j["instances"] = r.instances;
  j["max_discrepancy"] = r.max_discrepancy;
  if (!r.message.empty()) j["message"] = r.message;
  if (!r.pass) j["failing_instance"] = r.failing_instance;
  return j;
}

}  // namespace cyclift
