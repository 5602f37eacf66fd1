#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "perlef/homology.hpp"
#include "perlef/lefschetz.hpp"
#include "perlef/spectrum.hpp"

namespace perlef {

enum class Verdict { ForcedCaseA, CaseBCompatible, CaseCCompatible };
enum class ViolationKind { NegativeLefschetz, FixedPointPersistence };
/// Case labels of the proof. Case2 is kept for completeness; an integral
/// f_{*1} can never produce it.
enum class ProofCase { Case1, Case2, Case3a, Case3b, Case4 };

std::string_view to_string(Verdict v);
std::string_view to_string(ViolationKind k);
std::string_view to_string(ProofCase c);

/// The smallest m at which an L-prefix stops being realizable by a map whose
/// iterates have isolated fixed points.
struct AdmissibilityViolation {
  std::uint64_t m = 0;
  ViolationKind kind = ViolationKind::NegativeLefschetz;
  /// For persistence: the proper divisor d of m with L(f^d) >= 1.
  std::uint64_t divisor = 0;
};

std::optional<AdmissibilityViolation> admissibility_violation(const LefschetzSequence& seq);

struct ClassificationResult {
  Verdict verdict = Verdict::CaseBCompatible;
  std::optional<std::uint64_t> witness_m;
  std::optional<ViolationKind> witness_kind;
  std::uint64_t witness_divisor = 0;
  ProofCase proof_case = ProofCase::Case4;
  std::string narrative;
  LefschetzSequence l_prefix;
  SpectrumSummary spectrum;
};

inline constexpr std::uint64_t kDefaultHardCap = 65536;
inline constexpr std::size_t kInitialPrefix = 64;

/// Decide which of the trichotomy cases the homology action leaves open.
/// Throws HypothesisShapeViolated or WitnessNotFound.
ClassificationResult classify(const GradedHomologyAction& action,
                              std::uint64_t hard_cap = kDefaultHardCap);

/// Cap actually used by classify: hard_cap, raised to the Dirichlet bound for
/// all-circle spectra.
std::uint64_t effective_cap(const SpectrumSummary& spectrum, std::uint64_t hard_cap);

enum class PeriodSetKind { OnlyFixedPoint, Empty, InfinitelyManyFixed };

struct PeriodSetStatement {
  PeriodSetKind kind;
  /// "{1}", "∅", or empty when case (a) is forced.
  std::string per_f;
  std::string text;
};

PeriodSetStatement period_set_statement(const ClassificationResult& result);

}  // namespace perlef
