#include "latscat/rule_operator.hpp"

#include <map>

namespace latscat {

namespace {

std::string lin_term(long long coeff, const char* sym, bool& first) {
  if (coeff == 0) return "";
  std::string out;
  if (first) {
    if (coeff == -1)
      out += "-";
    else if (coeff != 1)
      out += std::to_string(coeff) + "*";
  } else {
    out += coeff > 0 ? " + " : " - ";
    const long long mag = coeff > 0 ? coeff : -coeff;
    if (mag != 1) out += std::to_string(mag) + "*";
  }
  out += sym;
  first = false;
  return out;
}

}  // namespace

std::string Lin::str() const {
  bool first = true;
  std::string out;
  out += lin_term(a, "x", first);
  out += lin_term(b, "j", first);
  if (c != 0 || first) {
    if (first)
      out += std::to_string(c);
    else
      out += (c > 0 ? " + " : " - ") + std::to_string(c > 0 ? c : -c);
  }
  return out;
}

std::string Atom::str() const {
  const char* op = "";
  switch (cmp) {
    case Cmp::eq: op = " == 0"; break;
    case Cmp::ne: op = " != 0"; break;
    case Cmp::ge: op = " >= 0"; break;
    case Cmp::le: op = " <= 0"; break;
  }
  return lhs.str() + op;
}

std::string Region::str() const {
  if (atoms.empty()) return "true";
  std::string out;
  for (size_t i = 0; i < atoms.size(); ++i) {
    if (i) out += " and ";
    out += atoms[i].str();
  }
  return out;
}

std::string SiteAction::str() const {
  if (kind == Kind::zero) return "0";
  return "(x,j) -> (" + ex.str() + ", " + ej.str() + ")";
}

SiteImage RuleOperator::image(const Site& s) const {
  for (const auto& p : pieces_)
    if (p.when.contains(s)) return p.send.apply(s);
  if (!fallback_reachable_)
    throw RuleDefinitionError(name_ + ": no case covers site " + s.str());
  return fallback_.apply(s);
}

void RuleOperator::validate(const Window& w) const {
  for (const Site& s : w.extended_sites()) {
    bool matched = false;
    SiteImage first_image;
    for (const auto& p : pieces_) {
      if (!p.when.contains(s)) continue;
      const SiteImage img = p.send.apply(s);  // throws on j < 0
      if (!matched) {
        matched = true;
        first_image = img;
        if (p.exclusive) break;
      } else if (img != first_image) {
        throw RuleDefinitionError(name_ + ": overlapping cases disagree at " + s.str());
      }
    }
    if (!matched) {
      if (!fallback_reachable_)
        throw RuleDefinitionError(name_ + ": no case covers site " + s.str());
      fallback_.apply(s);
    }
  }
}

nlohmann::json RuleOperator::describe() const {
  nlohmann::json pieces = nlohmann::json::array();
  for (const auto& p : pieces_)
    pieces.push_back({{"when", p.when.str()}, {"send", p.send.str()}});
  nlohmann::json out;
  out["name"] = name_;
  out["pieces"] = pieces;
  if (fallback_reachable_)
    out["fallback"] = fallback_.str();
  else
    out["fallback"] = nullptr;
  return out;
}

namespace {

struct Equation {
  long long a, b, c;  // a*px + b*pj == c
};

/// Solve a small integer system in two unknowns. Returns the unique
/// solution satisfying every equation, if one exists.
std::optional<std::pair<long long, long long>> solve(const std::vector<Equation>& eqs) {
  for (size_t i = 0; i < eqs.size(); ++i) {
    for (size_t k = i + 1; k < eqs.size(); ++k) {
      const long long det = eqs[i].a * eqs[k].b - eqs[k].a * eqs[i].b;
      if (det == 0) continue;
      const long long nx = eqs[i].c * eqs[k].b - eqs[k].c * eqs[i].b;
      const long long nj = eqs[i].a * eqs[k].c - eqs[k].a * eqs[i].c;
      if (nx % det != 0 || nj % det != 0) return std::nullopt;
      const long long px = nx / det;
      const long long pj = nj / det;
      for (const auto& e : eqs)
        if (e.a * px + e.b * pj != e.c) return std::nullopt;
      return std::make_pair(px, pj);
    }
  }
  return std::nullopt;  // underdetermined
}

}  // namespace

AdjointMap::AdjointMap(std::shared_ptr<const RuleOperator> base)
    : base_(std::move(base)), name_(base_->name() + "*") {
  all_pieces_ = base_->pieces();
  all_pieces_.push_back({Region{}, base_->fallback()});
}

SiteImage AdjointMap::image(const Site& s) const {
  for (const auto& p : all_pieces_) {
    if (p.send.kind == SiteAction::Kind::zero) continue;
    std::vector<Equation> eqs;
    eqs.push_back({p.send.ex.a, p.send.ex.b, s.x - p.send.ex.c});
    eqs.push_back({p.send.ej.a, p.send.ej.b, s.j - p.send.ej.c});
    for (const auto& atom : p.when.atoms)
      if (atom.cmp == Cmp::eq) eqs.push_back({atom.lhs.a, atom.lhs.b, -atom.lhs.c});
    const auto sol = solve(eqs);
    if (!sol) continue;
    const auto [px, pj] = *sol;
    if (pj < 0) continue;
    const Site cand(static_cast<int>(px), static_cast<int>(pj));
    // The candidate must really land on s through the forward first-match map.
    if (base_->image(cand) == SiteImage(s)) return cand;
  }
  return std::nullopt;
}

std::shared_ptr<const AdjointMap> adjoint_unchecked(std::shared_ptr<const RuleOperator> op) {
  return std::make_shared<AdjointMap>(std::move(op));
}

std::shared_ptr<const AdjointMap> adjoint_of(std::shared_ptr<const RuleOperator> op,
                                             const Window& w) {
  auto adj = std::make_shared<AdjointMap>(op);
  // Brute-force cross-check on the window interior: invert the forward map
  // by scanning, compare with the symbolic inversion.
  std::map<Site, Site> preimage;
  for (const Site& s : w.extended_sites()) {
    const SiteImage img = op->image(s);
    if (!img) continue;
    auto [it, inserted] = preimage.emplace(*img, s);
    if (!inserted)
      throw NotInjective(op->name() + ": sites " + it->second.str() + " and " + s.str() +
                         " share the image " + img->str());
  }
  for (const Site& s : w.sites()) {
    const SiteImage sym = adj->image(s);
    const auto it = preimage.find(s);
    // Preimages found by the scan must match; a scan miss near the window
    // boundary may still have a true preimage outside, so only the
    // scan-hit direction is conclusive.
    if (it != preimage.end() && sym != SiteImage(it->second))
      throw RuleDefinitionError(op->name() + ": symbolic adjoint disagrees with window inverse at " +
                                s.str());
  }
  return adj;
}

}  // namespace latscat
