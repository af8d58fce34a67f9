#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "latscat/perturbed.hpp"
#include "latscat/rule_operator.hpp"

namespace latscat {

/// The full operator catalog for given model parameters: the evolutions
/// U0..U3 with their inverses, and the closed-form wave, adjoint and
/// scattering operators. The closed forms are transcribed case tables and
/// deliberately share no code with the iterative wave-operator engine,
/// so they can serve as oracles for it.
class Catalog {
 public:
  explicit Catalog(const ModelParams& params = {}, const Window& validation = Window(12, 4));

  std::shared_ptr<const SiteMap> at(const std::string& name) const;
  std::shared_ptr<const RuleOperator> rule(const std::string& name) const;  // null if lazy
  bool has(const std::string& name) const { return entries_.count(name) != 0; }
  std::vector<std::string> names() const;
  const ModelParams& params() const { return params_; }

  /// Test hook: replaces the named entry with a map whose image at one
  /// site is wrong, as a negative control for the verification suite.
  void corrupt(const std::string& name);

 private:
  ModelParams params_;
  std::map<std::string, std::shared_ptr<const SiteMap>> entries_;
};

/// Membership predicates of the distinguished subspaces.
bool in_omega(const Site& s);                    // -x = j, or j = 0 with x >= 0
bool in_omega_prime(const Site& s, int l);       // omega with the (-l, l) point removed

}  // namespace latscat
