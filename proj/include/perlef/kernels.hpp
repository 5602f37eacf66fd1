#pragma once

// Data-parallel kernels. Each kernel has a serial reference path kept for
// testing; both paths produce identical results regardless of thread count.

#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "perlef/classifier.hpp"
#include "perlef/harness.hpp"
#include "perlef/homology.hpp"

namespace perlef::kernels {

enum class Exec { Serial, Parallel };

/// Newton iteration on f^m(z) - z from one seed.
struct SeedOutcome {
  bool converged = false;
  Complex z;
  double residual = 0.0;
};

inline constexpr int kNewtonMaxIterations = 100;

SeedOutcome newton_from_seed(const MapSpec& map, std::uint64_t m, Complex seed);

/// Runs Newton from every seed; result[i] belongs to seeds[i].
std::vector<SeedOutcome> newton_seed_scan(const MapSpec& map, std::uint64_t m,
                                          std::span<const Complex> seeds, Exec exec);

/// L(f^m) for m = 1..max_m, each term by an independent exact matrix power.
std::vector<BigInt> lefschetz_by_powers(const GradedHomologyAction& action, std::size_t max_m,
                                        Exec exec);

/// Classification outcome for batch runs; errors are captured instead of thrown.
struct BatchOutcome {
  std::variant<ClassificationResult, std::string> result;
  int exit_code = 0;
};

std::vector<BatchOutcome> classify_batch(std::span<const GradedHomologyAction> actions,
                                         std::uint64_t hard_cap, Exec exec);

}  // namespace perlef::kernels
