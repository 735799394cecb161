#include "bomega/element.hpp"

#include <stdexcept>
#include <utility>

#include "bomega/errors.hpp"

namespace bomega {

Element::Element(std::int64_t i, std::int64_t j, const OmegaSet& f, const Family& family)
    : family_(family), zero_(false), i_(i), j_(j), f_(f) {
  if (i < 0 || j < 0) {
    throw std::invalid_argument("element indices must be non-negative");
  }
  if (f.is_empty()) {
    throw std::invalid_argument(
        "a triple's third coordinate must be nonempty; the zero element stands "
        "for the empty-coordinate ideal");
  }
  if (!family.contains(f)) {
    throw std::invalid_argument("the third coordinate is not a member of the family");
  }
}

Element::Element(const Family& family)
    : family_(family), zero_(true), i_(0), j_(0), f_(OmegaSet::empty()) {}

Element Element::zero(const Family& family) {
  if (!family.contains_empty()) {
    throw std::invalid_argument(
        "the zero element exists only over families containing the empty set");
  }
  return Element(family);
}

std::int64_t Element::i() const {
  if (zero_) {
    throw std::logic_error("the zero element has no coordinates");
  }
  return i_;
}

std::int64_t Element::j() const {
  if (zero_) {
    throw std::logic_error("the zero element has no coordinates");
  }
  return j_;
}

const OmegaSet& Element::f() const {
  if (zero_) {
    throw std::logic_error("the zero element has no coordinates");
  }
  return f_;
}

Element multiply(const Element& a, const Element& b) {
  if (!(a.family() == b.family())) {
    throw FamilyMismatchError("cannot multiply elements over different families");
  }
  if (a.is_zero() || b.is_zero()) {
    return Element::zero(a.family());
  }
  const std::int64_t i1 = a.i(), j1 = a.j(), i2 = b.i(), j2 = b.j();
  std::int64_t i, j;
  OmegaSet f = OmegaSet::empty();
  if (j1 <= i2) {
    i = i1 - j1 + i2;
    j = j2;
    f = shift_intersect(a.f(), j1 - i2, b.f());
  } else {
    i = i1;
    j = j1 - i2 + j2;
    f = shift_intersect(b.f(), i2 - j1, a.f());
  }
  if (f.is_empty()) {
    return Element::zero(a.family());
  }
  return Element(i, j, f, a.family());
}

Element inverse(const Element& a) {
  if (a.is_zero()) {
    return a;
  }
  return Element(a.j(), a.i(), a.f(), a.family());
}

bool is_idempotent(const Element& a) { return multiply(a, a) == a; }

bool natural_leq(const Element& s, const Element& t) {
  if (!(s.family() == t.family())) {
    throw FamilyMismatchError("cannot order elements over different families");
  }
  return s == multiply(t, multiply(inverse(s), s));
}

bool green_related(const Element& a, const Element& b, GreenRelation rel) {
  if (!(a.family() == b.family())) {
    throw FamilyMismatchError("cannot relate elements over different families");
  }
  switch (rel) {
    case GreenRelation::R:
      return multiply(a, inverse(a)) == multiply(b, inverse(b));
    case GreenRelation::L:
      return multiply(inverse(a), a) == multiply(inverse(b), b);
    case GreenRelation::H:
      return green_related(a, b, GreenRelation::R) && green_related(a, b, GreenRelation::L);
    case GreenRelation::D: {
      if (a.is_zero() || b.is_zero()) {
        return a == b;
      }
      // The intermediate c must satisfy c^-1 c = a^-1 a and c c^-1 = b b^-1,
      // which pins c = (i_b, j_a, F) and forces the third coordinates equal.
      if (a.f() != b.f()) {
        return false;
      }
      Element c(b.i(), a.j(), a.f(), a.family());
      return green_related(a, c, GreenRelation::L) && green_related(c, b, GreenRelation::R);
    }
    case GreenRelation::J:
      throw UnsupportedInputError(
          "Green's J is not provided on elements; use the endomorphism semigroup");
  }
  throw std::logic_error("unreachable");
}

std::vector<Element> window_elements(const Family& family, std::int64_t window) {
  if (window < 0) {
    throw std::invalid_argument("window must be non-negative");
  }
  std::vector<Element> out;
  if (family.contains_empty()) {
    out.push_back(Element::zero(family));
  }
  for (const auto& f : family.members()) {
    if (f.is_empty()) {
      continue;
    }
    for (std::int64_t i = 0; i <= window; ++i) {
      for (std::int64_t j = 0; j <= window; ++j) {
        out.emplace_back(i, j, f, family);
      }
    }
  }
  return out;
}

}  // namespace bomega
