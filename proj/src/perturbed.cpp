#include "latscat/perturbed.hpp"

#include <set>

namespace latscat {

StateVector PerturbedOperator::apply(const StateVector& f) const {
  StateVector out;
  for (const auto& [s, c] : f.entries()) {
    const SiteImage img = base_->image(s);
    if (img) out.add(*img, c);
  }
  for (const auto& corr : corrections_) {
    const Scalar amp = Scalar(corr.sign) * f.at(corr.bra);
    out.add(corr.ket, amp);
  }
  return out;
}

std::shared_ptr<RuleOperator> PerturbedOperator::to_rule(const Window& w,
                                                         const std::string& name) const {
  using namespace dsl;
  std::set<Site> bras;
  for (const auto& corr : corrections_) bras.insert(corr.bra);

  std::vector<Piece> pieces;
  for (const Site& bra : bras) {
    const StateVector img = apply(StateVector::basis(bra));
    const Region at = (X == bra.x) && (J == bra.j);
    if (img.empty()) {
      pieces.push_back({at, SiteAction::zero(), /*exclusive=*/true});
      continue;
    }
    if (img.entries().size() != 1 || img.entries().begin()->second != Scalar(1))
      throw NotABasisMap(name + ": image of " + bra.str() +
                         " is not a single basis vector with coefficient 1");
    const Site target = img.entries().begin()->first;
    pieces.push_back({at, SiteAction::map_to(lit(target.x), lit(target.j)), /*exclusive=*/true});
  }
  for (const auto& p : base_->pieces()) pieces.push_back(p);

  auto rule = std::make_shared<RuleOperator>(name, std::move(pieces), base_->fallback());
  rule->validate(w);
  // Agreement check against direct perturbed application on the window.
  for (const Site& s : w.extended_sites()) {
    const StateVector direct = apply(StateVector::basis(s));
    const SiteImage via_rule = rule->image(s);
    StateVector expected;
    if (via_rule) expected = StateVector::basis(*via_rule);
    if (direct != expected)
      throw NotABasisMap(name + ": rule disagrees with perturbed application at " + s.str());
  }
  return rule;
}

}  // namespace latscat
