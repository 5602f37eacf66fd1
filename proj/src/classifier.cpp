#include "perlef/classifier.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "perlef/errors.hpp"

namespace perlef {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::ForcedCaseA: return "forced_a";
    case Verdict::CaseBCompatible: return "b_compatible";
    case Verdict::CaseCCompatible: return "c_compatible";
  }
  return "?";
}

std::string_view to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::NegativeLefschetz: return "NegativeLefschetz";
    case ViolationKind::FixedPointPersistence: return "FixedPointPersistence";
  }
  return "?";
}

std::string_view to_string(ProofCase c) {
  switch (c) {
    case ProofCase::Case1: return "1";
    case ProofCase::Case2: return "2";
    case ProofCase::Case3a: return "3a";
    case ProofCase::Case3b: return "3b";
    case ProofCase::Case4: return "4";
  }
  return "?";
}

std::optional<AdmissibilityViolation> admissibility_violation(const LefschetzSequence& seq) {
  for (std::uint64_t m = 1; m <= seq.max_m(); ++m) {
    const BigInt& l = seq.at(m);
    if (l < 0) return AdmissibilityViolation{m, ViolationKind::NegativeLefschetz, 0};
    if (l > 0) continue;
    // L(f^m) = 0: look for a proper divisor iterate that is forced to have a fixed point.
    std::uint64_t best = 0;
    for (std::uint64_t i = 1; i * i <= m; ++i) {
      if (m % i) continue;
      for (std::uint64_t d : {i, m / i}) {
        if (d < m && seq.at(d) >= 1 && (best == 0 || d < best)) best = d;
      }
    }
    if (best) return AdmissibilityViolation{m, ViolationKind::FixedPointPersistence, best};
  }
  return std::nullopt;
}

std::uint64_t effective_cap(const SpectrumSummary& spectrum, std::uint64_t hard_cap) {
  if (spectrum.outside_count > 0 || spectrum.circle_count() == 0) return hard_cap;
  BigInt bound = dirichlet_bound(spectrum.circle_count(), 0.5);
  if (bound <= hard_cap) return hard_cap;
  if (!bound.fits_ulong_p()) return std::numeric_limits<std::uint64_t>::max();
  return bound.get_ui();
}

namespace {

bool is_x_pow_times_x_minus_one(const IntPolynomial& chi, std::size_t n) {
  if (n == 0) return false;
  return chi == IntPolynomial::monomial(n - 1) * IntPolynomial{-1, 1};
}

ProofCase attribute(const SpectrumSummary& s) {
  if (s.outside_count > 0) return ProofCase::Case1;
  if (s.radius_class == RadiusClass::One) return s.circle_count() >= 2 ? ProofCase::Case3a : ProofCase::Case3b;
  // A maximal modulus in (0, 1) would be Case 2; integrality rules it out.
  return ProofCase::Case2;
}

std::string witness_narrative(const ClassificationResult& r, const AdmissibilityViolation& v) {
  std::ostringstream os;
  const BigInt& lm = r.l_prefix.at(v.m);
  if (v.kind == ViolationKind::NegativeLefschetz) {
    os << "L(f^" << v.m << ") = " << lm.get_str()
       << " < 0, but L(f^m) >= #Fix(f^m) >= 0 whenever the fixed points of f^m are isolated.";
  } else {
    os << "L(f^" << v.divisor << ") = " << r.l_prefix.at(v.divisor).get_str()
       << " != 0 forces a fixed point of f^" << v.divisor << ", which is also fixed by f^" << v.m
       << ", yet L(f^" << v.m << ") = " << lm.get_str() << " < 1.";
  }
  os << " Hence f^" << v.m << " has infinitely many fixed points (case (a)); proof case "
     << to_string(r.proof_case) << ".";
  return os.str();
}

}  // namespace

ClassificationResult classify(const GradedHomologyAction& action, std::uint64_t hard_cap) {
  require_theorem_shape(action);
  const IntMatrix& a = action.at(1);
  const std::size_t n = a.dim();
  const IntPolynomial chi = char_poly(a);

  ClassificationResult r;
  r.spectrum = spectrum_summary(chi);

  if (is_nilpotent(a)) {
    r.verdict = Verdict::CaseBCompatible;
    r.proof_case = ProofCase::Case4;
    r.l_prefix = lefschetz_sequence(action, std::min<std::uint64_t>(kInitialPrefix, hard_cap));
    r.narrative =
        "L(f^m) = 1 for all m: f has a fixed point and it is the only periodic point, so "
        "Per(f) = {1}, unless some iterate of f has infinitely many fixed points.";
    return r;
  }
  if (is_x_pow_times_x_minus_one(chi, n)) {
    r.verdict = Verdict::CaseCCompatible;
    r.proof_case = ProofCase::Case3b;
    r.l_prefix = lefschetz_sequence(action, std::min<std::uint64_t>(kInitialPrefix, hard_cap));
    r.narrative =
        "L(f^m) = 0 for all m: no iterate is forced to have a fixed point; if the fixed points of "
        "every iterate are isolated then f has no periodic points, otherwise case (a) holds.";
    return r;
  }

  r.verdict = Verdict::ForcedCaseA;
  r.proof_case = attribute(r.spectrum);
  const std::uint64_t cap = effective_cap(r.spectrum, hard_cap);
  std::uint64_t m = std::min<std::uint64_t>(kInitialPrefix, cap);
  for (;;) {
    LefschetzSequence seq = lefschetz_sequence(action, m);
    if (auto v = admissibility_violation(seq)) {
      seq.values.resize(v->m);
      r.l_prefix = std::move(seq);
      r.witness_m = v->m;
      r.witness_kind = v->kind;
      r.witness_divisor = v->divisor;
      r.narrative = witness_narrative(r, *v);
      return r;
    }
    if (m >= cap) throw WitnessNotFound(cap);
    m = cap / 2 < m ? cap : 2 * m;
  }
}

PeriodSetStatement period_set_statement(const ClassificationResult& result) {
  switch (result.verdict) {
    case Verdict::CaseBCompatible:
      return {PeriodSetKind::OnlyFixedPoint, "{1}",
              "Per(f) = {1} and #Fix(f^m) <= 1 for all m, unless case (a)"};
    case Verdict::CaseCCompatible:
      return {PeriodSetKind::Empty, "∅", "Per(f) = ∅ unless case (a)"};
    case Verdict::ForcedCaseA:
      break;
  }
  std::ostringstream os;
  os << "f^" << result.witness_m.value_or(0)
     << " has infinitely many fixed points (if f is in H(M) with the stated homology)";
  return {PeriodSetKind::InfinitelyManyFixed, "", os.str()};
}

}  // namespace perlef
