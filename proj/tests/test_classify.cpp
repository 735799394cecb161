#include <set>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "bomega/element.hpp"
#include "bomega/endo.hpp"
#include "bomega/errors.hpp"
#include "bomega/text.hpp"
#include "doctest.h"
#include "support/oracles.hpp"

using bomega::ClassifyRejection;
using bomega::ClassifyResult;
using bomega::Element;
using bomega::Family;
using bomega::GeneratorImages;
using bomega::MonoidEndo;
using bomega::OmegaSet;

namespace {

Element el(std::int64_t i, std::int64_t j, std::int64_t tail) {
  return Element(i, j, OmegaSet::tail(tail), Family::canonical());
}

// Confirms that (x, y) really is a counterexample for the map generated
// by the images, by multiplying the generator images out explicitly.
bool witness_is_genuine(const GeneratorImages& g, const Element& x, const Element& y) {
  const Element lhs = oracles::generated_image(g, bomega::multiply(x, y));
  const Element rhs =
      bomega::multiply(oracles::generated_image(g, x), oracles::generated_image(g, y));
  return !(lhs == rhs);
}

}  // namespace

TEST_CASE("classification recovers every endomorphism from its generator images") {
  for (const MonoidEndo& e : bomega::endo_grid(4, true)) {
    const ClassifyResult r = bomega::classify(bomega::images_of(e), 3);
    REQUIRE(std::holds_alternative<MonoidEndo>(r));
    CHECK(std::get<MonoidEndo>(r) == e);
  }
}

TEST_CASE("an image triple with an offset idempotent classifies as alpha") {
  const GeneratorImages g{el(0, 2, 0), el(2, 0, 0), el(1, 1, 1)};
  const ClassifyResult r = bomega::classify(g, 8);
  REQUIRE(std::holds_alternative<MonoidEndo>(r));
  CHECK(std::get<MonoidEndo>(r) == MonoidEndo::alpha(2, 1));
}

TEST_CASE("an idempotent image too far out is rejected with a genuine witness") {
  const GeneratorImages g{el(0, 2, 0), el(2, 0, 0), el(5, 5, 0)};
  const ClassifyResult r = bomega::classify(g, 8);
  REQUIRE(std::holds_alternative<ClassifyRejection>(r));
  const ClassifyRejection& rej = std::get<ClassifyRejection>(r);
  CHECK(rej.reason == "the images break the relation a c = a");
  REQUIRE(rej.witness.has_value());
  CHECK(rej.witness->first == el(0, 1, 0));
  CHECK(rej.witness->second == el(0, 0, 1));
  CHECK(witness_is_genuine(g, rej.witness->first, rej.witness->second));
}

TEST_CASE("images that break each defining relation are rejected with that relation") {
  // a b lands on (1,1,[0)) instead of the identity
  const GeneratorImages bad_ab{el(1, 1, 0), el(1, 1, 0), el(0, 0, 1)};
  const ClassifyResult r1 = bomega::classify(bad_ab, 4);
  REQUIRE(std::holds_alternative<ClassifyRejection>(r1));
  CHECK(std::get<ClassifyRejection>(r1).reason == "the images break the relation a b = 1");

  // the c image is not idempotent
  const GeneratorImages bad_cc{el(0, 1, 0), el(1, 0, 0), el(1, 2, 1)};
  const ClassifyResult r2 = bomega::classify(bad_cc, 4);
  REQUIRE(std::holds_alternative<ClassifyRejection>(r2));
  const ClassifyRejection& rej2 = std::get<ClassifyRejection>(r2);
  CHECK(rej2.reason == "the images break the relation c c = c");
  REQUIRE(rej2.witness.has_value());
  CHECK(witness_is_genuine(bad_cc, rej2.witness->first, rej2.witness->second));
}

TEST_CASE("classification validates its window and its family") {
  const GeneratorImages g = bomega::generators();
  CHECK_THROWS_AS(bomega::classify(g, 1), std::invalid_argument);
  CHECK_THROWS_AS(bomega::classify(g, 0), std::invalid_argument);

  const Family other({OmegaSet::empty(), OmegaSet::tail(0)});
  const Element foreign(0, 1, OmegaSet::tail(0), other);
  const GeneratorImages mixed{foreign, foreign, foreign};
  CHECK_THROWS_AS(bomega::classify(mixed, 4), bomega::FamilyMismatchError);
}

TEST_CASE("structural matching accepts exactly the five image shapes") {
  const Element one = el(0, 0, 0);
  CHECK(bomega::match_generator_images({one, one, one}) == MonoidEndo::zero());
  CHECK(bomega::match_generator_images({el(0, 3, 0), el(3, 0, 0), el(0, 0, 0)}) ==
        MonoidEndo::gamma(3));
  CHECK(bomega::match_generator_images({el(0, 3, 0), el(3, 0, 0), el(3, 3, 0)}) ==
        MonoidEndo::delta(3));
  CHECK(bomega::match_generator_images({el(0, 3, 0), el(3, 0, 0), el(2, 2, 1)}) ==
        MonoidEndo::alpha(3, 2));
  CHECK(bomega::match_generator_images({el(0, 3, 0), el(3, 0, 0), el(2, 2, 0)}) ==
        MonoidEndo::beta(3, 2));

  // near misses fall through
  CHECK_FALSE(bomega::match_generator_images({el(0, 3, 0), el(3, 0, 0), el(4, 4, 0)}).has_value());
  CHECK_FALSE(bomega::match_generator_images({el(0, 3, 0), el(3, 0, 0), el(3, 3, 1)}).has_value());
  CHECK_FALSE(bomega::match_generator_images({el(0, 3, 0), el(2, 0, 0), el(0, 0, 0)}).has_value());
  CHECK_FALSE(bomega::match_generator_images({el(1, 3, 0), el(3, 0, 0), el(0, 0, 0)}).has_value());
  CHECK_FALSE(bomega::match_generator_images({el(0, 3, 1), el(3, 0, 0), el(0, 0, 0)}).has_value());
  CHECK_FALSE(bomega::match_generator_images({el(0, 3, 0), el(3, 0, 0), el(1, 2, 0)}).has_value());
}

TEST_CASE("a small census finds exactly the expected accepted triples") {
  // all image triples with entries at most 3 over both layers
  const std::vector<Element> pool = bomega::window_elements(Family::canonical(), 3);
  std::set<std::string> accepted;
  std::int64_t accepted_count = 0;
  for (const Element& a : pool) {
    for (const Element& b : pool) {
      for (const Element& c : pool) {
        const ClassifyResult r = bomega::classify(GeneratorImages{a, b, c}, 2);
        if (std::holds_alternative<MonoidEndo>(r)) {
          ++accepted_count;
          accepted.insert(bomega::to_string(std::get<MonoidEndo>(r)));
        }
      }
    }
  }
  // one triple per endomorphism with every coordinate within the bound:
  // zero plus 2k + 1 for each k from 1 to 3
  CHECK(accepted_count == 16);
  std::set<std::string> expected;
  for (const MonoidEndo& e : bomega::endo_grid(3, true)) expected.insert(bomega::to_string(e));
  CHECK(accepted == expected);
}
