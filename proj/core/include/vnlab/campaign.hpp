#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "vnlab/duality.hpp"
#include "vnlab/report.hpp"

namespace vnlab {

/// Per-family default tolerances; a single override replaces all of them.
struct Tolerances {
  double bessel = 1e-8;
  double span = tol::kSpan;
  double dimension = tol::kDimension;
  double bounded = tol::kDimension;

  static Tolerances with_override(std::optional<double> all);
};

Report run_lattices(const FiniteAbelianGroup& group, std::int64_t cap = 256);
Report run_adjoint(const Lattice& lattice);
Report run_bessel(const Lattice& lattice, const Window& g, std::optional<double> tol = {});

/// One entry per (lattice, window): Bessel duality and the two bounded-vector
/// norms, plus the structural checks of each lattice's Gabor bimodule.
Report run_duality(const std::vector<Lattice>& lattices, int trials, std::uint64_t seed, std::optional<double> tol = {});

/// A seeded random bimodule: hypotheses, the two-sided norm inequality for
/// `trials` vectors, the proof identity and the cdim cross-check.
Report run_bimodule(std::uint64_t seed, int blocks, int trials, std::optional<double> tol = {}, Index space_cap = 32);

struct SuiteOptions {
  int max_order = 8;
  std::uint64_t seed = 7;
  std::optional<double> tol;
  int windows = 20;
  std::vector<int> bounded_orders = {2, 4, 6};
  int bounded_vectors = 100;
  int instances = 50;
  int instance_vectors = 100;
  int pair_trials = 100;
  int subalgebra_vectors = 1000;
};

/// The acceptance criteria as independent check batteries. Each call returns
/// detailed checks; the cross-oracle battery collects the cdim comparisons
/// made by every other battery run so far.
struct SuiteCache;

class AcceptanceSuite {
 public:
  explicit AcceptanceSuite(SuiteOptions options);

  std::vector<Check> bessel_duality();      // A1
  std::vector<Check> commutant();           // A2
  std::vector<Check> cdim_covolume();       // A3
  std::vector<Check> bounded_vectors();     // A4
  std::vector<Check> left_right_bounded();  // A5
  std::vector<Check> basic_construction();  // A6
  std::vector<Check> coefficient_change();  // A7
  std::vector<Check> cross_oracle();        // A8 (also runs module-level examples)

  const SuiteOptions& options() const { return options_; }

 private:
  void cross(const std::string& label, const CenterElement& projection_path, const CenterElement& block_path);

  SuiteOptions options_;
  Tolerances tol_;
  std::vector<Check> cross_;
  std::shared_ptr<SuiteCache> cache_;
};

/// A1-A8 in order, summarized per relation.
Report run_selftest(const SuiteOptions& options);

}  // namespace vnlab
