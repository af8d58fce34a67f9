#pragma once

#include <string>
#include <vector>

#include "latscat/site.hpp"

namespace latscat {

/// Integer affine form a*x + b*j + c over site coordinates.
struct Lin {
  long long a{0};
  long long b{0};
  long long c{0};

  long long eval(const Site& s) const { return a * s.x + b * s.j + c; }

  // Structural equality is spelled same(), so the dsl below can use == for
  // building Atoms without ambiguity.
  friend bool same(const Lin& l, const Lin& r) { return l.a == r.a && l.b == r.b && l.c == r.c; }
  friend Lin operator+(const Lin& l, const Lin& r) { return {l.a + r.a, l.b + r.b, l.c + r.c}; }
  friend Lin operator-(const Lin& l, const Lin& r) { return {l.a - r.a, l.b - r.b, l.c - r.c}; }
  friend Lin operator-(const Lin& l) { return {-l.a, -l.b, -l.c}; }
  friend Lin operator*(long long k, const Lin& l) { return {k * l.a, k * l.b, k * l.c}; }

  /// Substitute x := ex, j := ej (affine composition).
  Lin subst(const Lin& ex, const Lin& ej) const {
    return {a * ex.a + b * ej.a, a * ex.b + b * ej.b, a * ex.c + b * ej.c + c};
  }

  std::string str() const;
};

enum class Cmp { eq, ne, ge, le };

/// One comparison "lhs cmp 0" where lhs is an affine form in (x, j).
struct Atom {
  Lin lhs;
  Cmp cmp;

  bool holds(const Site& s) const {
    const long long v = lhs.eval(s);
    switch (cmp) {
      case Cmp::eq: return v == 0;
      case Cmp::ne: return v != 0;
      case Cmp::ge: return v >= 0;
      case Cmp::le: return v <= 0;
    }
    return false;
  }

  friend bool operator==(const Atom& x, const Atom& y) {
    return same(x.lhs, y.lhs) && x.cmp == y.cmp;
  }
  std::string str() const;
};

/// Conjunction of atoms; the empty conjunction is "true".
struct Region {
  std::vector<Atom> atoms;

  bool contains(const Site& s) const {
    for (const auto& a : atoms)
      if (!a.holds(s)) return false;
    return true;
  }

  /// Pull the region back through the coordinate substitution x := ex, j := ej.
  Region subst(const Lin& ex, const Lin& ej) const {
    Region out;
    out.atoms.reserve(atoms.size());
    for (const auto& a : atoms) out.atoms.push_back({a.lhs.subst(ex, ej), a.cmp});
    return out;
  }

  friend bool operator==(const Region&, const Region&) = default;
  std::string str() const;
};

namespace dsl {

inline constexpr Lin X{1, 0, 0};
inline constexpr Lin J{0, 1, 0};
inline Lin lit(long long c) { return {0, 0, c}; }

inline Lin operator+(const Lin& l, long long c) { return {l.a, l.b, l.c + c}; }
inline Lin operator-(const Lin& l, long long c) { return {l.a, l.b, l.c - c}; }
inline Lin operator+(long long c, const Lin& l) { return l + c; }
inline Lin operator-(long long c, const Lin& l) { return (-l) + c; }

inline Atom operator==(const Lin& l, const Lin& r) { return {l - r, Cmp::eq}; }
inline Atom operator!=(const Lin& l, const Lin& r) { return {l - r, Cmp::ne}; }
inline Atom operator>=(const Lin& l, const Lin& r) { return {l - r, Cmp::ge}; }
inline Atom operator<=(const Lin& l, const Lin& r) { return {l - r, Cmp::le}; }
inline Atom operator==(const Lin& l, long long c) { return {l - lit(c), Cmp::eq}; }
inline Atom operator!=(const Lin& l, long long c) { return {l - lit(c), Cmp::ne}; }
inline Atom operator>=(const Lin& l, long long c) { return {l - lit(c), Cmp::ge}; }
inline Atom operator<=(const Lin& l, long long c) { return {l - lit(c), Cmp::le}; }

inline Region operator&&(const Atom& a, const Atom& b) { return Region{{a, b}}; }
inline Region operator&&(Region r, const Atom& a) {
  r.atoms.push_back(a);
  return r;
}
inline Region region(const Atom& a) { return Region{{a}}; }
inline Region always() { return Region{}; }

}  // namespace dsl

}  // namespace latscat
