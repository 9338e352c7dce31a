#pragma once

// Seeded identity-check suite behind `zastava check` and the acceptance
// sweeps.  Every family draws its trials from derive_seed(master, id, trial),
// so a master seed fully determines the pass/fail set and any failure can be
// replayed in isolation.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "zastava/point.hpp"
#include "zastava/superpotential.hpp"

namespace zastava {

struct CheckResult {
  std::string id;
  int trials = 0;
  int failures = 0;
  std::vector<std::string> notes;  // failure repros plus info lines
  bool passed() const { return failures == 0; }
};

struct CheckSuiteReport {
  std::uint64_t seed = 0;
  int scale = 1;
  std::vector<CheckResult> results;  // sorted by id

  int total_trials() const {
    int n = 0;
    for (const auto& r : results) n += r.trials;
    return n;
  }
  int total_failures() const {
    int n = 0;
    for (const auto& r : results) n += r.failures;
    return n;
  }
  bool all_passed() const { return total_failures() == 0; }
};

CheckSuiteReport run_check_suite(std::uint64_t seed, int scale = 1);

// shared instance generators (the acceptance sweeps reuse these)
std::shared_ptr<const RootSystem> random_root_system(Rng& rng);
std::vector<long> random_alpha(Rng& rng, int rank, long total_max);
ZastavaPoint<Rational> random_regular_point(Rng& rng,
                                            std::shared_ptr<const RootSystem> rs,
                                            const std::vector<long>& alpha,
                                            bool allow_zero_y = false);
std::pair<ZastavaPoint<Rational>, ZastavaPoint<Rational>> random_disjoint_pair(
    Rng& rng, std::shared_ptr<const RootSystem> rs, const std::vector<long>& alpha_a,
    const std::vector<long>& alpha_b);
SuperParams random_super_params(Rng& rng, Variant variant,
                                std::shared_ptr<const RootSystem> rs,
                                const std::vector<long>& alpha, int n_z);
Config<Complex> random_super_config(Rng& rng, const SuperParams& params);
std::pair<SuperParamsT<Rational>, Config<Rational>> random_super_exact(Rng& rng);

}  // namespace zastava
