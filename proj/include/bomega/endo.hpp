#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bomega/bicyclic.hpp"
#include "bomega/element.hpp"

namespace bomega {

enum class EndoTag { Alpha, Beta, Gamma, Delta, Zero };

/// A monoid endomorphism of the extension semigroup over {[0), [1)}, in
/// classified form. Five families exhaust the monoid endomorphisms:
///
///   alpha k p : (i,j,[0)) -> (ki,kj,[0))   (i,j,[1)) -> (p+ki, p+kj, [1))
///   beta  k p : (i,j,[0)) -> (ki,kj,[0))   (i,j,[1)) -> (p+ki, p+kj, [0))
///   gamma k   : both layers -> (ki,kj,[0))
///   delta k   : (i,j,[0)) -> (ki,kj,[0))   (i,j,[1)) -> (k(i+1), k(j+1), [0))
///   zero      : everything -> (0,0,[0))
///
/// with k >= 1 and 0 <= p <= k-1 for alpha, k >= 2 and 1 <= p <= k-1 for
/// beta. alpha 1 0 is the identity; alpha and beta are injective, the
/// rest are not. The k = 0 degenerations of gamma and delta coincide and
/// are represented by the zero tag alone.
class MonoidEndo {
 public:
  static MonoidEndo alpha(std::int64_t k, std::int64_t p);
  static MonoidEndo beta(std::int64_t k, std::int64_t p);
  static MonoidEndo gamma(std::int64_t k);
  static MonoidEndo delta(std::int64_t k);
  static MonoidEndo zero() { return MonoidEndo(EndoTag::Zero, 0, 0); }

  EndoTag tag() const { return tag_; }
  std::int64_t k() const { return k_; }
  /// Offset of the [1)-layer image; meaningful for alpha and beta only.
  std::int64_t p() const { return p_; }

  friend bool operator==(const MonoidEndo&, const MonoidEndo&) = default;

 private:
  MonoidEndo(EndoTag tag, std::int64_t k, std::int64_t p) : tag_(tag), k_(k), p_(p) {}

  EndoTag tag_;
  std::int64_t k_;
  std::int64_t p_;
};

/// Images of the generating triple a = (0,1,[0)), b = (1,0,[0)),
/// c = (0,0,[1)). Every element factors through them:
/// (i,j,[0)) = b^i a^j and (i,j,[1)) = b^i c a^j, so a monoid
/// endomorphism is determined by such a triple.
struct GeneratorImages {
  Element img_a;
  Element img_b;
  Element img_c;

  friend bool operator==(const GeneratorImages&, const GeneratorImages&) = default;
};

/// The generators themselves (the images under the identity).
GeneratorImages generators();

/// The images of the generators under e.
GeneratorImages images_of(const MonoidEndo& e);

struct ClassifyRejection {
  std::string reason;
  /// A pair (x, y) whose product breaks the homomorphism law of the map
  /// generated by the images, when one was found.
  std::optional<std::pair<Element, Element>> witness;
};

using ClassifyResult = std::variant<MonoidEndo, ClassifyRejection>;

Element apply(const MonoidEndo& e, const Element& x);

/// Left-to-right composite: apply(compose(e1, e2), x) = apply(e2, apply(e1, x)).
/// Products inside {gamma, delta} and inside {alpha, beta} use their closed
/// forms; mixed products are recovered from the generator images.
MonoidEndo compose(const MonoidEndo& e1, const MonoidEndo& e2);

/// Structural reconstruction from generator images, with no window
/// verification: the unique endomorphism family whose generator images are
/// exactly `g`, if any.
std::optional<MonoidEndo> match_generator_images(const GeneratorImages& g);

/// Decides whether the generator images extend to a monoid endomorphism.
/// The generated map e(i,j,[0)) = B^i A^j, e(i,j,[1)) = B^i C A^j (the only
/// possible extension) is verified to be a homomorphism on all products of
/// elements with indices at most `window`, and its shape is matched against
/// the five families. Rejections carry a violating pair when one exists.
ClassifyResult classify(const GeneratorImages& g, std::int64_t window);

/// Decided by classification: exactly alpha and beta are injective.
bool is_injective(const MonoidEndo& e);

/// Green's relations on the non-injective endomorphisms with zero adjoined.
/// Closed forms: R holds on equal tag and equal k, L on equal k, H is
/// equality, D and J coincide and hold on equal k; zero relates only to
/// itself. Alpha and beta inputs are not supported here.
bool green_endo(const MonoidEndo& e1, const MonoidEndo& e2, GreenRelation rel);

enum class LzTag : char { c = 'c', d = 'd' };

/// A point of the left-zero pair times the positive integers under
/// multiplication.
struct Lz2N {
  LzTag tag;
  std::int64_t k;

  friend bool operator==(const Lz2N&, const Lz2N&) = default;
};

/// (x, m)(y, n) = (x, m n): left zero in the first coordinate.
Lz2N lz2n_product(const Lz2N& a, const Lz2N& b);

/// gamma k -> (c, k) and delta k -> (d, k); an isomorphism from the
/// non-injective nonzero endomorphisms under composition.
Lz2N iso_to_lz2xN(const MonoidEndo& e);

/// Endomorphism of the plain bicyclic monoid: (i, j) -> (k i, k j).
/// k = 0 annihilates onto the identity.
struct BicyclicEndo {
  std::int64_t k;
};

BicyclicPair apply_bicyclic(const BicyclicEndo& e, const BicyclicPair& x);

/// Deterministic enumeration of endomorphisms with 1 <= k <= k_max: for
/// each k in order, gamma, delta, the alphas by p, the betas by p; with
/// the zero endomorphism first when requested.
std::vector<MonoidEndo> endo_grid(std::int64_t k_max, bool include_zero);

}  // namespace bomega
