#include "cyclift/tower.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "cyclift/errors.hpp"
#include "cyclift/spectra.hpp"

namespace cyclift {

namespace {

constexpr double kCertTol = 1e-8;

std::string fmt(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

void require_regular_bipartite(const Graph& g, int d, const std::string& what) {
  const auto deg = g.regular_degree();
  if (!deg || *deg != d) throw std::logic_error(what + " is not " + std::to_string(d) + "-regular");
  if (!bipartition(g)) throw std::logic_error(what + " is not bipartite");
}

}  // namespace

std::uint64_t level_seed(std::uint64_t seed, int level) {
  // splitmix64 of (seed, level)
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(level);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

RamanujanCertificate certify_seed(const Graph& seed, double rho) {
  RamanujanCertificate c;
  c.level = 1;
  c.graph = seed;
  c.rho = rho;
  c.margin = rho;
  return c;
}

RamanujanCertificate certify_lift(const Graph& base, const CyclicSignature& s, int level, double rho) {
  RamanujanCertificate c;
  c.level = level;
  c.graph = lift_graph(base, s);
  c.base = base;
  c.signature = s;
  c.rho = rho;
  c.new_eigs = new_eigenvalues(base, s);
  c.margin = rho - c.new_eigs.radius();
  return c;
}

Tower build_tower(const TowerOptions& opt) {
  if (opt.d < 2) {
    throw PreconditionError("tower degree d must be >= 2 (d = 1 gives rho = 0, a degenerate bound)");
  }
  if (opt.levels < 1) throw PreconditionError("tower needs at least one level");
  if (opt.k < 2) throw PreconditionError("k must be >= 2");
  if (opt.k != 3 && !opt.allow_any_k) {
    throw PreconditionError("only k = 3 lifts carry the two-sided guarantee; pass the override to experiment");
  }
  const double rho = 2.0 * std::sqrt(static_cast<double>(opt.d - 1));

  Tower tower;
  Graph current = complete_bipartite(opt.d);
  tower.levels.push_back(certify_seed(current, rho));

  for (int level = 2; level <= opt.levels; ++level) {
    require_regular_bipartite(current, opt.d, "level " + std::to_string(level - 1) + " graph");
    SearchOutcome found;
    try {
      switch (opt.strategy) {
        case TowerStrategy::Exhaustive:
          found = exhaustive_search(current, opt.k, SearchMode::two_sided(), rho, false, opt.budget);
          break;
        case TowerStrategy::Random:
          found = random_search(current, opt.k, SearchMode::two_sided(), rho, opt.random_iters,
                                level_seed(opt.seed, level));
          break;
        case TowerStrategy::Greedy:
          found = greedy_conditional_search(current, opt.k, 1, opt.budget);
          if (found.signature && !two_sided_ok(current, *found.signature, rho)) found.signature.reset();
          break;
      }
    } catch (const BudgetExceeded& e) {
      tower.diagnostic = "level " + std::to_string(level) + ": " + e.what();
      return tower;
    }
    if (!found.signature) {
      tower.diagnostic = "level " + std::to_string(level) + ": no signature within budget after " +
                         std::to_string(found.tested) + " candidates (best " + fmt(found.best_lambda_max) + ")";
      return tower;
    }
    RamanujanCertificate cert = certify_lift(current, *found.signature, level, rho);
    require_regular_bipartite(cert.graph, opt.d, "level " + std::to_string(level) + " graph");
    current = cert.graph;
    tower.levels.push_back(std::move(cert));
  }
  tower.complete = true;
  return tower;
}

CertificateCheck check_certificate(const RamanujanCertificate& c) {
  CertificateCheck out;
  auto fail = [&](std::string why) { out.problems.push_back(std::move(why)); };

  const auto deg = c.graph.regular_degree();
  if (!deg) fail("graph is not regular");
  if (!bipartition(c.graph)) fail("graph is not bipartite");
  if (!c.graph.is_connected()) fail("graph is not connected");

  if (c.level == 1 || !c.signature) {
    if (c.signature || c.base) fail("seed level must not carry a signature");
    if (!c.new_eigs.values.empty()) fail("seed level must not list new eigenvalues");
    if (deg) {
      const double rho = *deg >= 2 ? 2.0 * std::sqrt(static_cast<double>(*deg - 1)) : 0.0;
      if (std::abs(rho - c.rho) > kCertTol) fail("rho " + fmt(c.rho) + " differs from 2 sqrt(d-1) = " + fmt(rho));
    }
    if (std::abs(c.margin - c.rho) > kCertTol) fail("seed margin must equal rho");
    out.ok = out.problems.empty();
    return out;
  }

  if (!c.base) {
    fail("lifted level is missing its base graph");
    return out;
  }
  const Graph& base = *c.base;
  const CyclicSignature& s = *c.signature;
  if (s.size() != base.num_edges()) {
    fail("signature size does not match base graph");
    return out;
  }
  if (!(lift_graph(base, s) == c.graph)) fail("graph is not the lift of the base by the signature");
  if (deg && base.regular_degree() != deg) fail("lift degree differs from base degree");
  if (!bipartition(base)) fail("base graph is not bipartite");

  if (base.is_connected()) {
    const double rho = universal_cover_spectral_radius(base).value;
    if (std::abs(rho - c.rho) > kCertTol) fail("rho " + fmt(c.rho) + " differs from cover radius " + fmt(rho));
  } else {
    fail("base graph is not connected");
  }

  const Spectrum fresh = new_eigenvalues(base, s);
  const std::size_t expected = static_cast<std::size_t>(s.k() - 1) * static_cast<std::size_t>(base.num_vertices());
  if (c.new_eigs.size() != expected) {
    fail("expected " + std::to_string(expected) + " new eigenvalues, certificate lists " +
         std::to_string(c.new_eigs.size()));
  } else if (max_discrepancy(fresh, c.new_eigs) > kCertTol) {
    fail("new eigenvalues differ by " + fmt(max_discrepancy(fresh, c.new_eigs)));
  }
  const double margin = c.rho - fresh.radius();
  if (std::abs(margin - c.margin) > kCertTol) fail("margin " + fmt(c.margin) + " recomputes to " + fmt(margin));
  if (margin < -kRamanujanSlack) fail("new eigenvalues leave the Ramanujan interval (margin " + fmt(margin) + ")");
  out.ok = out.problems.empty();
  return out;
}

CertificateCheck check_tower(const std::vector<RamanujanCertificate>& levels) {
  CertificateCheck out;
  for (std::size_t t = 0; t < levels.size(); ++t) {
    const CertificateCheck c = check_certificate(levels[t]);
    for (const auto& p : c.problems) out.problems.push_back("level " + std::to_string(levels[t].level) + ": " + p);
    if (levels[t].level != static_cast<int>(t) + 1) out.problems.push_back("levels are not numbered 1..L");
    if (t > 0 && (!levels[t].base || !(*levels[t].base == levels[t - 1].graph))) {
      out.problems.push_back("level " + std::to_string(t + 1) + " does not lift level " + std::to_string(t));
    }
  }
  out.ok = out.problems.empty();
  return out;
}

}  // namespace cyclift
