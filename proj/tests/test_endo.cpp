#include <stdexcept>
#include <vector>

#include "bomega/element.hpp"
#include "bomega/endo.hpp"
#include "bomega/errors.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using bomega::Element;
using bomega::EndoTag;
using bomega::Family;
using bomega::GreenRelation;
using bomega::MonoidEndo;
using bomega::OmegaSet;

namespace {

Element el(std::int64_t i, std::int64_t j, std::int64_t tail) {
  return Element(i, j, OmegaSet::tail(tail), Family::canonical());
}

}  // namespace

TEST_CASE("endomorphism factories enforce their parameter ranges") {
  CHECK_THROWS_AS(MonoidEndo::alpha(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(MonoidEndo::alpha(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(MonoidEndo::alpha(2, -1), std::invalid_argument);
  CHECK_THROWS_AS(MonoidEndo::beta(1, 0), std::invalid_argument);
  CHECK_THROWS_AS(MonoidEndo::beta(3, 0), std::invalid_argument);
  CHECK_THROWS_AS(MonoidEndo::beta(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(MonoidEndo::gamma(0), std::invalid_argument);
  CHECK_THROWS_AS(MonoidEndo::delta(0), std::invalid_argument);

  const MonoidEndo a = MonoidEndo::alpha(3, 2);
  CHECK(a.tag() == EndoTag::Alpha);
  CHECK(a.k() == 3);
  CHECK(a.p() == 2);
  CHECK(a == MonoidEndo::alpha(3, 2));
  CHECK_FALSE(a == MonoidEndo::alpha(3, 1));
}

TEST_CASE("apply realizes the five image formulas") {
  const Element low = el(1, 2, 0);
  const Element high = el(1, 2, 1);

  // every family fixes the bottom layer up to scaling
  CHECK(bomega::apply(MonoidEndo::gamma(2), low) == el(2, 4, 0));
  CHECK(bomega::apply(MonoidEndo::delta(2), low) == el(2, 4, 0));
  CHECK(bomega::apply(MonoidEndo::alpha(2, 1), low) == el(2, 4, 0));
  CHECK(bomega::apply(MonoidEndo::beta(2, 1), low) == el(2, 4, 0));

  // the top layer separates them
  CHECK(bomega::apply(MonoidEndo::gamma(2), high) == el(2, 4, 0));
  CHECK(bomega::apply(MonoidEndo::delta(2), high) == el(4, 6, 0));
  CHECK(bomega::apply(MonoidEndo::alpha(2, 1), high) == el(3, 5, 1));
  CHECK(bomega::apply(MonoidEndo::beta(2, 1), high) == el(3, 5, 0));

  const Element one = Element::identity(Family::canonical());
  CHECK(bomega::apply(MonoidEndo::zero(), high) == one);
  CHECK(bomega::apply(MonoidEndo::zero(), low) == one);

  for (const Element& x : bomega::window_elements(Family::canonical(), 4))
    CHECK(bomega::apply(MonoidEndo::alpha(1, 0), x) == x);
}

TEST_CASE("apply rejects elements over a family other than {[0),[1)}") {
  const Family other({OmegaSet::empty(), OmegaSet::tail(0)});
  const Element x(1, 1, OmegaSet::tail(0), other);
  CHECK_THROWS_AS(bomega::apply(MonoidEndo::gamma(2), x), bomega::FamilyMismatchError);
}

TEST_CASE("apply refuses to overflow image coordinates silently") {
  const std::int64_t big = std::int64_t{1} << 40;
  const Element x(big, 0, OmegaSet::tail(0), Family::canonical());
  CHECK_THROWS_AS(bomega::apply(MonoidEndo::gamma(big), x), std::overflow_error);
}

TEST_CASE("generator images of each family have the expected shapes") {
  const bomega::GeneratorImages gen = bomega::generators();
  CHECK(gen.img_a == el(0, 1, 0));
  CHECK(gen.img_b == el(1, 0, 0));
  CHECK(gen.img_c == el(0, 0, 1));

  const bomega::GeneratorImages d3 = bomega::images_of(MonoidEndo::delta(3));
  CHECK(d3.img_a == el(0, 3, 0));
  CHECK(d3.img_b == el(3, 0, 0));
  CHECK(d3.img_c == el(3, 3, 0));

  const bomega::GeneratorImages a21 = bomega::images_of(MonoidEndo::alpha(2, 1));
  CHECK(a21.img_c == el(1, 1, 1));
  CHECK(bomega::images_of(MonoidEndo::gamma(4)).img_c == el(0, 0, 0));
  CHECK(bomega::images_of(MonoidEndo::zero()).img_b == el(0, 0, 0));
}

TEST_CASE("composition follows the closed forms on every pure and mixed pair") {
  const auto compose = [](const MonoidEndo& x, const MonoidEndo& y) { return bomega::compose(x, y); };

  // inside the injective families the offsets accumulate left to right
  CHECK(compose(MonoidEndo::alpha(2, 1), MonoidEndo::alpha(3, 2)) == MonoidEndo::alpha(6, 5));
  CHECK(compose(MonoidEndo::alpha(2, 1), MonoidEndo::beta(3, 2)) == MonoidEndo::beta(6, 5));
  CHECK(compose(MonoidEndo::beta(2, 1), MonoidEndo::alpha(3, 1)) == MonoidEndo::beta(6, 3));
  CHECK(compose(MonoidEndo::beta(2, 1), MonoidEndo::beta(3, 2)) == MonoidEndo::beta(6, 3));

  // inside the non-injective families the left tag wins
  CHECK(compose(MonoidEndo::gamma(2), MonoidEndo::delta(3)) == MonoidEndo::gamma(6));
  CHECK(compose(MonoidEndo::delta(2), MonoidEndo::gamma(3)) == MonoidEndo::delta(6));
  CHECK(compose(MonoidEndo::gamma(2), MonoidEndo::gamma(3)) == MonoidEndo::gamma(6));
  CHECK(compose(MonoidEndo::delta(2), MonoidEndo::delta(3)) == MonoidEndo::delta(6));

  // mixed products collapse or stay injective depending on the offset
  CHECK(compose(MonoidEndo::alpha(2, 1), MonoidEndo::gamma(3)) == MonoidEndo::beta(6, 3));
  CHECK(compose(MonoidEndo::alpha(2, 0), MonoidEndo::gamma(3)) == MonoidEndo::gamma(6));
  CHECK(compose(MonoidEndo::alpha(2, 1), MonoidEndo::delta(3)) == MonoidEndo::delta(6));
  CHECK(compose(MonoidEndo::alpha(3, 1), MonoidEndo::delta(2)) == MonoidEndo::beta(6, 4));
  CHECK(compose(MonoidEndo::beta(2, 1), MonoidEndo::gamma(3)) == MonoidEndo::beta(6, 3));
  CHECK(compose(MonoidEndo::beta(2, 1), MonoidEndo::delta(3)) == MonoidEndo::beta(6, 3));
  CHECK(compose(MonoidEndo::gamma(2), MonoidEndo::alpha(3, 1)) == MonoidEndo::gamma(6));
  CHECK(compose(MonoidEndo::delta(2), MonoidEndo::beta(3, 2)) == MonoidEndo::delta(6));

  // zero absorbs from either side
  CHECK(compose(MonoidEndo::zero(), MonoidEndo::delta(3)) == MonoidEndo::zero());
  CHECK(compose(MonoidEndo::alpha(2, 1), MonoidEndo::zero()) == MonoidEndo::zero());

  // identity is neutral
  for (const MonoidEndo& e : bomega::endo_grid(3, true)) {
    CHECK(compose(MonoidEndo::alpha(1, 0), e) == e);
    CHECK(compose(e, MonoidEndo::alpha(1, 0)) == e);
  }
}

TEST_CASE("compose agrees pointwise with applying one endomorphism after the other") {
  const std::vector<MonoidEndo> grid = bomega::endo_grid(3, true);
  const std::vector<Element> set = bomega::window_elements(Family::canonical(), 4);
  for (const MonoidEndo& e1 : grid) {
    for (const MonoidEndo& e2 : grid) {
      const MonoidEndo comp = bomega::compose(e1, e2);
      for (const Element& x : set)
        CHECK(bomega::apply(comp, x) == bomega::apply(e2, bomega::apply(e1, x)));
    }
  }
}

TEST_CASE("composition is associative across the whole small grid") {
  const std::vector<MonoidEndo> grid = bomega::endo_grid(3, true);
  for (const MonoidEndo& e1 : grid)
    for (const MonoidEndo& e2 : grid)
      for (const MonoidEndo& e3 : grid)
        CHECK(bomega::compose(bomega::compose(e1, e2), e3) ==
              bomega::compose(e1, bomega::compose(e2, e3)));
}

TEST_CASE("injectivity matches a brute-force collision search on a window") {
  for (const MonoidEndo& e : bomega::endo_grid(4, true)) {
    const bool no_collision = !oracles::collision_search(e, 8).has_value();
    CHECK(bomega::is_injective(e) == no_collision);
  }
  CHECK(bomega::is_injective(MonoidEndo::alpha(5, 3)));
  CHECK_FALSE(bomega::is_injective(MonoidEndo::zero()));
}

TEST_CASE("Green's relations on the non-injective endomorphisms with zero") {
  const MonoidEndo g3 = MonoidEndo::gamma(3);
  const MonoidEndo d3 = MonoidEndo::delta(3);
  const MonoidEndo g2 = MonoidEndo::gamma(2);
  const MonoidEndo z = MonoidEndo::zero();

  CHECK(bomega::green_endo(g3, g3, GreenRelation::R));
  CHECK_FALSE(bomega::green_endo(g3, d3, GreenRelation::R));
  CHECK(bomega::green_endo(g3, d3, GreenRelation::L));
  CHECK_FALSE(bomega::green_endo(g3, g2, GreenRelation::L));
  CHECK_FALSE(bomega::green_endo(g3, d3, GreenRelation::H));
  CHECK(bomega::green_endo(d3, d3, GreenRelation::H));
  CHECK(bomega::green_endo(g3, d3, GreenRelation::D));
  CHECK(bomega::green_endo(g3, d3, GreenRelation::J));
  CHECK_FALSE(bomega::green_endo(g3, g2, GreenRelation::J));

  for (const GreenRelation rel :
       {GreenRelation::R, GreenRelation::L, GreenRelation::H, GreenRelation::D, GreenRelation::J}) {
    CHECK(bomega::green_endo(z, z, rel));
    CHECK_FALSE(bomega::green_endo(z, g3, rel));
    CHECK_FALSE(bomega::green_endo(d3, z, rel));
  }

  CHECK_THROWS_AS(bomega::green_endo(MonoidEndo::alpha(2, 1), g3, GreenRelation::R),
                  bomega::UnsupportedInputError);
  CHECK_THROWS_AS(bomega::green_endo(g3, MonoidEndo::beta(2, 1), GreenRelation::L),
                  bomega::UnsupportedInputError);
}

TEST_CASE("the left-zero-times-naturals picture matches composition") {
  CHECK(bomega::iso_to_lz2xN(MonoidEndo::gamma(4)) == bomega::Lz2N{bomega::LzTag::c, 4});
  CHECK(bomega::iso_to_lz2xN(MonoidEndo::delta(7)) == bomega::Lz2N{bomega::LzTag::d, 7});
  CHECK_THROWS_AS(bomega::iso_to_lz2xN(MonoidEndo::zero()), bomega::UnsupportedInputError);
  CHECK_THROWS_AS(bomega::iso_to_lz2xN(MonoidEndo::alpha(2, 1)), bomega::UnsupportedInputError);

  // left zero in the tag, multiplicative in the scale
  const bomega::Lz2N x{bomega::LzTag::c, 3};
  const bomega::Lz2N y{bomega::LzTag::d, 5};
  CHECK(bomega::lz2n_product(x, y) == bomega::Lz2N{bomega::LzTag::c, 15});
  CHECK(bomega::lz2n_product(y, x) == bomega::Lz2N{bomega::LzTag::d, 15});

  // the map turns composition into that product
  for (std::int64_t k1 = 1; k1 <= 4; ++k1) {
    for (std::int64_t k2 = 1; k2 <= 4; ++k2) {
      for (const MonoidEndo& e1 : {MonoidEndo::gamma(k1), MonoidEndo::delta(k1)}) {
        for (const MonoidEndo& e2 : {MonoidEndo::gamma(k2), MonoidEndo::delta(k2)}) {
          CHECK(bomega::iso_to_lz2xN(bomega::compose(e1, e2)) ==
                bomega::lz2n_product(bomega::iso_to_lz2xN(e1), bomega::iso_to_lz2xN(e2)));
        }
      }
    }
  }
}

TEST_CASE("bicyclic endomorphisms scale coordinates, k = 0 annihilates") {
  CHECK(bomega::apply_bicyclic({3}, {2, 5}) == bomega::BicyclicPair{6, 15});
  CHECK(bomega::apply_bicyclic({0}, {2, 5}) == bomega::BicyclicPair{0, 0});
  CHECK(bomega::apply_bicyclic({1}, {2, 5}) == bomega::BicyclicPair{2, 5});
  CHECK_THROWS_AS(bomega::apply_bicyclic({-1}, {0, 0}), std::invalid_argument);
}

TEST_CASE("endo_grid enumerates zero, then each k ascending with fixed family order") {
  const std::vector<MonoidEndo> grid = bomega::endo_grid(2, true);
  const std::vector<MonoidEndo> expected = {
      MonoidEndo::zero(),     MonoidEndo::gamma(1),    MonoidEndo::delta(1),
      MonoidEndo::alpha(1, 0), MonoidEndo::gamma(2),    MonoidEndo::delta(2),
      MonoidEndo::alpha(2, 0), MonoidEndo::alpha(2, 1), MonoidEndo::beta(2, 1),
  };
  CHECK(grid == expected);
  // 2k + 1 endomorphisms per k, so the grid totals (k_max + 1)^2 with zero
  CHECK(bomega::endo_grid(8, true).size() == 81);
  CHECK(bomega::endo_grid(8, false).size() == 80);
}

TEST_CASE("the only idempotents among the scalings are the two with k = 1") {
  for (std::int64_t k = 1; k <= 12; ++k) {
    CHECK((bomega::compose(MonoidEndo::gamma(k), MonoidEndo::gamma(k)) == MonoidEndo::gamma(k)) ==
          (k == 1));
    CHECK((bomega::compose(MonoidEndo::delta(k), MonoidEndo::delta(k)) == MonoidEndo::delta(k)) ==
          (k == 1));
  }
}
