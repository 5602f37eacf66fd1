#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "perlef/int_matrix.hpp"

namespace perlef {

/// One entry of an unvalidated matrix as it arrives from an input document:
/// a machine integer, a JSON double, or a decimal string for large values.
using RawEntry = std::variant<std::int64_t, double, std::string>;
using RawMatrix = std::vector<std::vector<RawEntry>>;
using RawAction = std::map<int, RawMatrix>;

/// The family of induced maps f_{*k} on rational homology. Degrees that are
/// not stored are zero groups. Degree 0 is always the 1x1 identity.
class GradedHomologyAction {
 public:
  GradedHomologyAction();

  const std::map<int, IntMatrix>& degree_matrices() const noexcept { return matrices_; }

  /// Matrix for degree k; a 0x0 matrix when the group is zero.
  const IntMatrix& at(int degree) const;

  /// Highest degree whose homology group is nonzero.
  int top_degree() const;

  /// Rank of H_1, i.e. the dimension of the degree-1 matrix.
  std::size_t h1_rank() const { return at(1).dim(); }

  const std::string& name() const noexcept { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Same action with every f_{*k} replaced by its p-th power.
  GradedHomologyAction powered(std::uint64_t p) const;

  friend bool operator==(const GradedHomologyAction& a, const GradedHomologyAction& b) {
    return a.matrices_ == b.matrices_;
  }

  // Construction goes through validate_action / from_h1.
  friend GradedHomologyAction validate_action(const RawAction& raw);
  friend GradedHomologyAction validate_action(std::map<int, IntMatrix> matrices);

 private:
  std::map<int, IntMatrix> matrices_;
  std::string name_;
};

GradedHomologyAction validate_action(const RawAction& raw);
GradedHomologyAction validate_action(std::map<int, IntMatrix> matrices);

/// Action on a manifold with H_1 = Q^n and no higher homology.
GradedHomologyAction from_h1(IntMatrix h1);

struct ShapeReport {
  bool satisfies_theorem_hypotheses = false;
  std::size_t h1_rank = 0;
  std::vector<std::string> violations;
};

ShapeReport hypothesis_shape(const GradedHomologyAction& action);

/// Throws HypothesisShapeViolated listing every violation when the shape is wrong.
void require_theorem_shape(const GradedHomologyAction& action);

}  // namespace perlef
