#include "perlef/homology.hpp"

#include <cmath>

#include "perlef/errors.hpp"

namespace perlef {

namespace {

const IntMatrix& empty_matrix() {
  static const IntMatrix m;
  return m;
}

BigInt entry_to_int(const RawEntry& e, int degree, std::size_t row, std::size_t col) {
  if (const auto* i = std::get_if<std::int64_t>(&e)) return BigInt(static_cast<long>(*i));
  if (const auto* d = std::get_if<double>(&e)) {
    if (!std::isfinite(*d) || std::floor(*d) != *d || std::fabs(*d) > 9007199254740992.0)
      throw NonIntegerEntry(degree, row, col);
    return BigInt(*d);
  }
  const auto& s = std::get<std::string>(e);
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (s.size() == start) throw NonIntegerEntry(degree, row, col);
  for (std::size_t k = start; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') throw NonIntegerEntry(degree, row, col);
  return BigInt(s[0] == '+' ? s.substr(1) : s, 10);
}

}  // namespace

GradedHomologyAction::GradedHomologyAction() { matrices_.emplace(0, IntMatrix::identity(1)); }

const IntMatrix& GradedHomologyAction::at(int degree) const {
  auto it = matrices_.find(degree);
  return it == matrices_.end() ? empty_matrix() : it->second;
}

int GradedHomologyAction::top_degree() const {
  int top = 0;
  for (const auto& [k, m] : matrices_)
    if (m.dim() > 0 && k > top) top = k;
  return top;
}

GradedHomologyAction GradedHomologyAction::powered(std::uint64_t p) const {
  GradedHomologyAction out = *this;
  for (auto& [k, m] : out.matrices_) m = power(m, p);
  return out;
}

GradedHomologyAction validate_action(std::map<int, IntMatrix> matrices) {
  for (const auto& [k, m] : matrices)
    if (k < 0) throw MalformedInput("h." + std::to_string(k), "degree must be non-negative");
  auto zero = matrices.find(0);
  if (zero == matrices.end()) {
    matrices.emplace(0, IntMatrix::identity(1));
  } else if (!(zero->second == IntMatrix::identity(1))) {
    throw BadDegreeZero();
  }
  GradedHomologyAction action;
  action.matrices_ = std::move(matrices);
  return action;
}

GradedHomologyAction validate_action(const RawAction& raw) {
  std::map<int, IntMatrix> matrices;
  for (const auto& [degree, rows] : raw) {
    const std::size_t n = rows.size();
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].size() != n) throw NonSquareMatrix(degree);
      for (std::size_t j = 0; j < n; ++j) m(i, j) = entry_to_int(rows[i][j], degree, i, j);
    }
    matrices.emplace(degree, std::move(m));
  }
  return validate_action(std::move(matrices));
}

GradedHomologyAction from_h1(IntMatrix h1) {
  std::map<int, IntMatrix> m;
  m.emplace(1, std::move(h1));
  return validate_action(std::move(m));
}

ShapeReport hypothesis_shape(const GradedHomologyAction& action) {
  ShapeReport report;
  report.h1_rank = action.h1_rank();
  for (const auto& [k, m] : action.degree_matrices()) {
    if (k > 1 && m.dim() > 0)
      report.violations.push_back("H_" + std::to_string(k) + " nonzero (rank " +
                                  std::to_string(m.dim()) + ")");
  }
  report.satisfies_theorem_hypotheses = report.violations.empty();
  return report;
}

void require_theorem_shape(const GradedHomologyAction& action) {
  auto report = hypothesis_shape(action);
  if (report.satisfies_theorem_hypotheses) return;
  std::string detail;
  for (const auto& v : report.violations) detail += (detail.empty() ? "" : "; ") + v;
  throw HypothesisShapeViolated(detail);
}

}  // namespace perlef
