#include "bomega/endo.hpp"

#include <limits>
#include <stdexcept>

#include "bomega/errors.hpp"

namespace bomega {

namespace {

// All endomorphism arithmetic runs over nonnegative operands, so the
// overflow checks only need the upper bound.
std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  if (a != 0 && b > std::numeric_limits<std::int64_t>::max() / a)
    throw std::overflow_error("endomorphism image coordinate overflows");
  return a * b;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  if (a > std::numeric_limits<std::int64_t>::max() - b)
    throw std::overflow_error("endomorphism image coordinate overflows");
  return a + b;
}

}  // namespace

MonoidEndo MonoidEndo::alpha(std::int64_t k, std::int64_t p) {
  if (k < 1) throw std::invalid_argument("alpha requires k >= 1");
  if (p < 0 || p > k - 1) throw std::invalid_argument("alpha requires 0 <= p <= k - 1");
  return MonoidEndo(EndoTag::Alpha, k, p);
}

MonoidEndo MonoidEndo::beta(std::int64_t k, std::int64_t p) {
  if (k < 2) throw std::invalid_argument("beta requires k >= 2");
  if (p < 1 || p > k - 1) throw std::invalid_argument("beta requires 1 <= p <= k - 1");
  return MonoidEndo(EndoTag::Beta, k, p);
}

MonoidEndo MonoidEndo::gamma(std::int64_t k) {
  if (k < 1)
    throw std::invalid_argument("gamma requires k >= 1 (its k = 0 degeneration is the zero endomorphism)");
  return MonoidEndo(EndoTag::Gamma, k, 0);
}

MonoidEndo MonoidEndo::delta(std::int64_t k) {
  if (k < 1)
    throw std::invalid_argument("delta requires k >= 1 (its k = 0 degeneration is the zero endomorphism)");
  return MonoidEndo(EndoTag::Delta, k, 0);
}

GeneratorImages generators() {
  const Family& fam = Family::canonical();
  return GeneratorImages{Element(0, 1, OmegaSet::tail(0), fam), Element(1, 0, OmegaSet::tail(0), fam),
                         Element(0, 0, OmegaSet::tail(1), fam)};
}

GeneratorImages images_of(const MonoidEndo& e) {
  const GeneratorImages g = generators();
  return GeneratorImages{apply(e, g.img_a), apply(e, g.img_b), apply(e, g.img_c)};
}

Element apply(const MonoidEndo& e, const Element& x) {
  const Family& fam = Family::canonical();
  if (!(x.family() == fam))
    throw FamilyMismatchError("endomorphisms act on elements over the family {[0),[1)}");
  if (e.tag() == EndoTag::Zero) return Element::identity(fam);
  const std::int64_t k = e.k();
  const std::int64_t ki = checked_mul(k, x.i());
  const std::int64_t kj = checked_mul(k, x.j());
  if (e.tag() == EndoTag::Gamma || x.f().tail_index() == 0)
    return Element(ki, kj, OmegaSet::tail(0), fam);
  switch (e.tag()) {
    case EndoTag::Alpha:
      return Element(checked_add(e.p(), ki), checked_add(e.p(), kj), OmegaSet::tail(1), fam);
    case EndoTag::Beta:
      return Element(checked_add(e.p(), ki), checked_add(e.p(), kj), OmegaSet::tail(0), fam);
    case EndoTag::Delta:
      return Element(checked_add(ki, k), checked_add(kj, k), OmegaSet::tail(0), fam);
    default:
      throw std::logic_error("unreachable endomorphism tag");
  }
}

MonoidEndo compose(const MonoidEndo& e1, const MonoidEndo& e2) {
  if (e1.tag() == EndoTag::Zero || e2.tag() == EndoTag::Zero) return MonoidEndo::zero();

  const bool left_collapsing = e1.tag() == EndoTag::Gamma || e1.tag() == EndoTag::Delta;
  const bool right_collapsing = e2.tag() == EndoTag::Gamma || e2.tag() == EndoTag::Delta;

  // Within the non-injective pair the left factor decides the shape and
  // the multipliers combine.
  if (left_collapsing && right_collapsing) {
    const std::int64_t k = checked_mul(e1.k(), e2.k());
    return e1.tag() == EndoTag::Gamma ? MonoidEndo::gamma(k) : MonoidEndo::delta(k);
  }

  // Within the injective pair the affine [1)-layer actions compose; the
  // right factor only keeps its offset when the left factor preserved the
  // [1)-layer.
  if (!left_collapsing && !right_collapsing) {
    const std::int64_t k = checked_mul(e1.k(), e2.k());
    const std::int64_t shifted = checked_mul(e2.k(), e1.p());
    if (e1.tag() == EndoTag::Alpha) {
      const std::int64_t p = checked_add(e2.p(), shifted);
      return e2.tag() == EndoTag::Alpha ? MonoidEndo::alpha(k, p) : MonoidEndo::beta(k, p);
    }
    return MonoidEndo::beta(k, shifted);
  }

  // Mixed products are recovered from where the composite sends the
  // generators.
  const GeneratorImages g1 = images_of(e1);
  const GeneratorImages g{apply(e2, g1.img_a), apply(e2, g1.img_b), apply(e2, g1.img_c)};
  const std::optional<MonoidEndo> matched = match_generator_images(g);
  if (!matched) throw std::logic_error("composite of endomorphisms matched no endomorphism family");
  return *matched;
}

std::optional<MonoidEndo> match_generator_images(const GeneratorImages& g) {
  const Family& fam = Family::canonical();
  if (!(g.img_a.family() == fam) || !(g.img_b.family() == fam) || !(g.img_c.family() == fam))
    return std::nullopt;
  const Element& a = g.img_a;
  const Element& b = g.img_b;
  const Element& c = g.img_c;
  const Element one = Element::identity(fam);
  if (a == one && b == one && c == one) return MonoidEndo::zero();

  if (a.i() != 0 || a.j() < 1 || a.f().tail_index() != 0) return std::nullopt;
  const std::int64_t k = a.j();
  if (!(b == Element(k, 0, OmegaSet::tail(0), fam))) return std::nullopt;
  if (c.i() != c.j()) return std::nullopt;
  const std::int64_t p = c.i();
  if (c.f().tail_index() == 1) return p <= k - 1 ? std::optional(MonoidEndo::alpha(k, p)) : std::nullopt;
  if (p == 0) return MonoidEndo::gamma(k);
  if (p == k) return MonoidEndo::delta(k);
  if (p <= k - 1) return MonoidEndo::beta(k, p);
  return std::nullopt;
}

ClassifyResult classify(const GeneratorImages& g, std::int64_t window) {
  if (window < 2) throw std::invalid_argument("classification window must be at least 2");
  const Family& fam = Family::canonical();
  if (!(g.img_a.family() == fam) || !(g.img_b.family() == fam) || !(g.img_c.family() == fam))
    throw FamilyMismatchError("classification is defined over the family {[0),[1)}");

  const GeneratorImages gen = generators();
  const Element one = Element::identity(fam);
  const Element& a = g.img_a;
  const Element& b = g.img_b;
  const Element& c = g.img_c;

  // The generators satisfy a b = 1, c c = c, a c = a and c b = b, so the
  // images must as well; each failure yields a pair of source elements on
  // which the generated map already breaks the homomorphism law.
  if (!(multiply(a, b) == one))
    return ClassifyRejection{"the images break the relation a b = 1", std::pair{gen.img_a, gen.img_b}};
  if (!(multiply(c, c) == c))
    return ClassifyRejection{"the images break the relation c c = c", std::pair{gen.img_c, gen.img_c}};
  if (!(multiply(a, c) == a))
    return ClassifyRejection{"the images break the relation a c = a", std::pair{gen.img_a, gen.img_c}};
  if (!(multiply(c, b) == b))
    return ClassifyRejection{"the images break the relation c b = b", std::pair{gen.img_c, gen.img_b}};

  // The generated map sends (i,j,[0)) to B^i A^j and (i,j,[1)) to
  // B^i C A^j. Products of window elements need indices up to twice the
  // window, so the tables extend that far.
  const std::int64_t bound = 2 * window;
  const std::size_t n = static_cast<std::size_t>(bound) + 1;
  std::vector<Element> pow_a;
  std::vector<Element> pow_b;
  std::vector<Element> c_pow_a;
  pow_a.reserve(n);
  pow_b.reserve(n);
  c_pow_a.reserve(n);
  pow_a.push_back(one);
  pow_b.push_back(one);
  c_pow_a.push_back(c);
  for (std::int64_t t = 1; t <= bound; ++t) {
    pow_a.push_back(multiply(pow_a.back(), a));
    pow_b.push_back(multiply(pow_b.back(), b));
    c_pow_a.push_back(multiply(c_pow_a.back(), a));
  }
  std::vector<Element> lower;
  std::vector<Element> upper;
  lower.reserve(n * n);
  upper.reserve(n * n);
  for (std::int64_t i = 0; i <= bound; ++i) {
    for (std::int64_t j = 0; j <= bound; ++j) {
      lower.push_back(multiply(pow_b[static_cast<std::size_t>(i)], pow_a[static_cast<std::size_t>(j)]));
      upper.push_back(multiply(pow_b[static_cast<std::size_t>(i)], c_pow_a[static_cast<std::size_t>(j)]));
    }
  }
  const auto hat = [&](const Element& x) -> const Element& {
    const std::size_t at = static_cast<std::size_t>(x.i()) * n + static_cast<std::size_t>(x.j());
    return x.f().tail_index() == 0 ? lower[at] : upper[at];
  };

  const std::vector<Element> window_set = window_elements(fam, window);
  for (const Element& x : window_set) {
    for (const Element& y : window_set) {
      const Element xy = multiply(x, y);
      if (!(hat(xy) == multiply(hat(x), hat(y))))
        return ClassifyRejection{"the map generated by the images is not a homomorphism", std::pair{x, y}};
    }
  }

  if (const std::optional<MonoidEndo> matched = match_generator_images(g)) return *matched;
  return ClassifyRejection{
      "no violation was found within the window, but the images match no endomorphism family",
      std::nullopt};
}

bool is_injective(const MonoidEndo& e) {
  return e.tag() == EndoTag::Alpha || e.tag() == EndoTag::Beta;
}

bool green_endo(const MonoidEndo& e1, const MonoidEndo& e2, GreenRelation rel) {
  const auto in_scope = [](const MonoidEndo& e) {
    return e.tag() == EndoTag::Gamma || e.tag() == EndoTag::Delta || e.tag() == EndoTag::Zero;
  };
  if (!in_scope(e1) || !in_scope(e2))
    throw UnsupportedInputError(
        "Green's relations are provided on the non-injective endomorphisms with zero adjoined; "
        "alpha and beta lie outside that semigroup");
  if (e1.tag() == EndoTag::Zero || e2.tag() == EndoTag::Zero) return e1 == e2;
  switch (rel) {
    case GreenRelation::R:
      return e1.tag() == e2.tag() && e1.k() == e2.k();
    case GreenRelation::L:
      return e1.k() == e2.k();
    case GreenRelation::H:
      return e1 == e2;
    case GreenRelation::D:
    case GreenRelation::J:
      return e1.k() == e2.k();
  }
  throw std::logic_error("unreachable Green relation");
}

Lz2N lz2n_product(const Lz2N& a, const Lz2N& b) { return Lz2N{a.tag, checked_mul(a.k, b.k)}; }

Lz2N iso_to_lz2xN(const MonoidEndo& e) {
  switch (e.tag()) {
    case EndoTag::Gamma:
      return Lz2N{LzTag::c, e.k()};
    case EndoTag::Delta:
      return Lz2N{LzTag::d, e.k()};
    default:
      throw UnsupportedInputError(
          "the isomorphism is defined on the nonzero non-injective endomorphisms (gamma and delta) only");
  }
}

BicyclicPair apply_bicyclic(const BicyclicEndo& e, const BicyclicPair& x) {
  if (e.k < 0) throw std::invalid_argument("bicyclic endomorphism multiplier must be nonnegative");
  return BicyclicPair{checked_mul(e.k, x.first), checked_mul(e.k, x.second)};
}

std::vector<MonoidEndo> endo_grid(std::int64_t k_max, bool include_zero) {
  std::vector<MonoidEndo> out;
  if (include_zero) out.push_back(MonoidEndo::zero());
  for (std::int64_t k = 1; k <= k_max; ++k) {
    out.push_back(MonoidEndo::gamma(k));
    out.push_back(MonoidEndo::delta(k));
    for (std::int64_t p = 0; p <= k - 1; ++p) out.push_back(MonoidEndo::alpha(k, p));
    for (std::int64_t p = 1; p <= k - 1; ++p) out.push_back(MonoidEndo::beta(k, p));
  }
  return out;
}

}  // namespace bomega
