#pragma once

#include <boost/rational.hpp>
#include <map>

#include "latscat/site.hpp"

namespace latscat {

/// Exact scalar type. Every quantity in the models stays in {-1, 0, 1},
/// but sums of bra-ket corrections pass through intermediate rationals.
using Scalar = boost::rational<long long>;

/// Finite-support element of l2(Z x N). Zero entries are never stored,
/// so equality is support-wise exact equality.
class StateVector {
 public:
  StateVector() = default;

  static StateVector basis(const Site& s) {
    StateVector v;
    v.entries_.emplace(s, Scalar(1));
    return v;
  }

  void add(const Site& s, const Scalar& c) {
    if (c == Scalar(0)) return;
    auto [it, inserted] = entries_.emplace(s, c);
    if (!inserted) {
      it->second += c;
      if (it->second == Scalar(0)) entries_.erase(it);
    }
  }

  const std::map<Site, Scalar>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }
  Scalar at(const Site& s) const {
    auto it = entries_.find(s);
    return it == entries_.end() ? Scalar(0) : it->second;
  }

  friend bool operator==(const StateVector&, const StateVector&) = default;

  StateVector& operator+=(const StateVector& o) {
    for (const auto& [s, c] : o.entries_) add(s, c);
    return *this;
  }
  StateVector& operator-=(const StateVector& o) {
    for (const auto& [s, c] : o.entries_) add(s, -c);
    return *this;
  }
  friend StateVector operator+(StateVector a, const StateVector& b) { return a += b; }
  friend StateVector operator-(StateVector a, const StateVector& b) { return a -= b; }
  friend StateVector operator*(const Scalar& c, const StateVector& v) {
    StateVector out;
    for (const auto& [s, w] : v.entries_) out.add(s, c * w);
    return out;
  }

 private:
  std::map<Site, Scalar> entries_;
};

/// <f, g> = sum over the support union. Conjugation is the identity here:
/// scalars are rational.
inline Scalar inner_product(const StateVector& f, const StateVector& g) {
  Scalar acc(0);
  const auto& a = f.entries();
  const auto& b = g.entries();
  // Walk the smaller support.
  if (a.size() <= b.size()) {
    for (const auto& [s, c] : a) acc += c * g.at(s);
  } else {
    for (const auto& [s, c] : b) acc += f.at(s) * c;
  }
  return acc;
}

inline Scalar norm_squared(const StateVector& f) { return inner_product(f, f); }

}  // namespace latscat
