#pragma once

#include <memory>
#include <vector>

#include "latscat/rule_operator.hpp"
#include "latscat/state_vector.hpp"

namespace latscat {

/// Parameters of the perturbed models: the perturbation sits around (z, l).
struct ModelParams {
  int z{2};
  int l{3};

  void validate() const {
    if (l < 1) throw ParamError("ModelParams: l must be >= 1");
    if (z < -l + 2) throw ParamError("ModelParams: z must be >= -l + 2");
  }
};

/// One rank-one bra-ket correction: sign * |ket><bra|.
struct Correction {
  int sign;  // +1 or -1
  Site ket;
  Site bra;
};

/// A rule operator plus finitely many rank-one corrections,
/// f |-> base f + sum sign * <bra, f> * ket.
class PerturbedOperator {
 public:
  PerturbedOperator(std::shared_ptr<const RuleOperator> base, std::vector<Correction> corrections)
      : base_(std::move(base)), corrections_(std::move(corrections)) {}

  StateVector apply(const StateVector& f) const;

  /// Collapses the perturbed operator back to a rule operator. Only bra
  /// sites can change, so the result is the base table with one
  /// point-equality piece per distinct bra prepended. Fails with
  /// NotABasisMap if cancellation leaves any basis image that is not a
  /// single basis vector with coefficient one (or zero). The window is
  /// used for a brute-force agreement check.
  std::shared_ptr<RuleOperator> to_rule(const Window& w, const std::string& name) const;

  const std::vector<Correction>& corrections() const { return corrections_; }

 private:
  std::shared_ptr<const RuleOperator> base_;
  std::vector<Correction> corrections_;
};

}  // namespace latscat
