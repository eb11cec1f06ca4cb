#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclift/json_io.hpp"

namespace cyclift {

struct VerifyOptions {
  int trials = 100;
  std::uint64_t seed = 0;
  // Test hook: perturbs one signed adjacency matrix off Hermitian symmetry
  // inside the matrix-based suites.
  bool inject_non_hermitian = false;
};

struct SuiteResult {
  std::string name;
  bool pass = true;
  int instances = 0;
  double max_discrepancy = 0.0;
  std::string message;
  io::Json failing_instance;  // null when passing
};

// Suite names accepted by run_suite, in "all" order.
const std::vector<std::string>& suite_names();

// Throws PreconditionError for an unknown suite name.
SuiteResult run_suite(const std::string& name, const VerifyOptions& opt);

io::Json suite_to_json(const SuiteResult& r);

}  // namespace cyclift
