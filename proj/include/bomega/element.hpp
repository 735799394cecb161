#pragma once

#include <cstdint>
#include <vector>

#include "bomega/omega_set.hpp"

namespace bomega {

enum class GreenRelation { R, L, H, D, J };

/// A point of the extension semigroup over a fixed Family: a triple
/// (i, j, F) with non-negative indices and F a nonempty member, or the
/// adjoined zero when the family contains the empty set (products whose
/// third coordinate would be empty collapse onto it).
class Element {
 public:
  Element(std::int64_t i, std::int64_t j, const OmegaSet& f, const Family& family);

  static Element zero(const Family& family);
  static Element identity(const Family& family) {
    return Element(0, 0, OmegaSet::tail(0), family);
  }

  bool is_zero() const { return zero_; }
  std::int64_t i() const;
  std::int64_t j() const;
  const OmegaSet& f() const;
  const Family& family() const { return family_; }

  friend bool operator==(const Element& a, const Element& b) {
    if (a.zero_ != b.zero_) {
      return false;
    }
    if (!a.zero_ && (a.i_ != b.i_ || a.j_ != b.j_ || a.f_ != b.f_)) {
      return false;
    }
    return a.family_ == b.family_;
  }

 private:
  Element(const Family& family);  // the zero

  Family family_;
  bool zero_;
  std::int64_t i_;
  std::int64_t j_;
  OmegaSet f_;
};

/// The extension product
///   (i1,j1,F1)(i2,j2,F2) = (i1-j1+i2, j2,       (j1-i2+F1) ∩ F2)  if j1 <= i2,
///                          (i1,       j1-i2+j2, F1 ∩ (i2-j1+F2))  if j1 >= i2.
/// The two branches agree when j1 = i2. A product with empty third
/// coordinate falls onto the adjoined zero; zero absorbs.
Element multiply(const Element& a, const Element& b);

/// (i,j,F) -> (j,i,F): the unique inverse in the inverse-semigroup sense,
/// x x^-1 x = x and x^-1 x x^-1 = x^-1. Zero is its own inverse.
Element inverse(const Element& a);

/// a a = a. For triples this holds exactly when i = j.
bool is_idempotent(const Element& a);

/// The natural partial order s <= t, computed as s = t (s^-1 s).
/// Equivalently, s = t e for some idempotent e.
bool natural_leq(const Element& s, const Element& t);

/// Green's relations through the idempotent characterizations:
///   R: a a^-1 = b b^-1,  L: a^-1 a = b^-1 b,  H: R and L,
///   D: some c has a L c and c R b (c is constructed, not searched for).
/// H is the identity relation on triples. J is not provided here; it is
/// available on the endomorphism semigroup.
bool green_related(const Element& a, const Element& b, GreenRelation rel);

/// All elements with indices at most `window`: the zero first when the
/// family has one, then triples ordered by member, then i, then j.
std::vector<Element> window_elements(const Family& family, std::int64_t window);

}  // namespace bomega
