#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "softdisc/configuration.hpp"

namespace softdisc {

struct VerifyOptions {
  // Caps every n-indexed range at max_n when positive; 0 runs the full suite.
  int max_n = 0;
  // 0 picks the hardware concurrency. Results never depend on the count.
  unsigned threads = 0;
};

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// Runs the ten acceptance criteria in order. Never throws: an unexpected
// exception fails the criterion that raised it and is reported in its detail.
std::vector<CriterionResult> run_acceptance(const VerifyOptions& options);

bool all_passed(const std::vector<CriterionResult>& results);

// Random connected lattice configuration grown cell by cell; deterministic in
// the generator state.
std::vector<LatticePoint> random_lattice_blob(int n, std::mt19937_64& rng);

// The blob, dilated by 1 + delta/2 and jittered by up to delta/5 per point:
// feasible by construction, same bond graph as the blob, nonzero elastic
// energy. With delta = 0 this is the exact embedded blob.
Configuration perturbed_blob_configuration(int n, double delta, std::mt19937_64& rng);

}  // namespace softdisc
