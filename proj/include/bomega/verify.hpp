#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "bomega/element.hpp"
#include "bomega/endo.hpp"

namespace bomega {

struct Counterexample {
  std::string inputs;
  std::string expected;
  std::string actual;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

/// Outcome of one exhaustive window-bounded suite. The counterexample
/// list is truncated to the first kMaxRecorded entries; the full count is
/// kept separately, so `counterexample_count == 0` is the pass criterion.
/// Every field except elapsed_ms is deterministic for fixed parameters.
struct VerificationReport {
  static constexpr std::size_t kMaxRecorded = 10;

  std::string suite;
  std::vector<std::pair<std::string, std::int64_t>> params;
  std::int64_t checked = 0;
  std::vector<Counterexample> counterexamples;
  std::int64_t counterexample_count = 0;
  std::int64_t elapsed_ms = 0;

  bool passed() const { return counterexample_count == 0; }
};

std::string to_text(const VerificationReport& report);
std::string to_json_string(const VerificationReport& report);
std::string to_json_string(const std::vector<VerificationReport>& reports);

/// Injection points. Each suite has a default overload running the
/// library operation and an explicit one taking the operation under
/// test, which the test suite uses to prove that a corrupted operation
/// is actually caught (no vacuous passes).
using ElementProduct = std::function<Element(const Element&, const Element&)>;
using EndoApply = std::function<Element(const MonoidEndo&, const Element&)>;
using EndoCompose = std::function<MonoidEndo(const MonoidEndo&, const MonoidEndo&)>;
using EndoClassifier = std::function<ClassifyResult(const GeneratorImages&, std::int64_t)>;
using EndoGreen = std::function<bool(const MonoidEndo&, const MonoidEndo&, GreenRelation)>;
using EndoIso = std::function<Lz2N(const MonoidEndo&)>;

/// Associativity of the product on all triples with indices at most
/// `window`, both layers of the canonical family.
VerificationReport suite_associativity(std::int64_t window);
VerificationReport suite_associativity(std::int64_t window, const ElementProduct& product);

/// delta:k is an endomorphism: homomorphism identity on all windowed
/// pairs for every k <= k_max, plus the closed-form case tables for the
/// two mixed-layer products, which pin the (k(i+1), k(j+1)) shift.
VerificationReport suite_prop_2_6(std::int64_t k_max, std::int64_t window);
VerificationReport suite_prop_2_6(std::int64_t k_max, std::int64_t window, const EndoApply& delta_apply);

/// Exhaustive classification census: over all generator-image triples
/// with coordinates at most entry_bound, the classifier accepts exactly
/// the endomorphism-induced triples, reproduces each endomorphism
/// faithfully, and the accepted set splits into injective (alpha, beta:
/// no collision on the widened window) and non-injective (gamma, delta,
/// zero: collision witness found).
VerificationReport suite_thm_2_8(std::int64_t entry_bound, std::int64_t window);
VerificationReport suite_thm_2_8(std::int64_t entry_bound, std::int64_t window,
                                 const EndoClassifier& classifier);

/// The four closed-form products of gamma and delta against classification
/// of the composite's generator images, for all multiplier pairs up to
/// k_max.
VerificationReport suite_thm_2_9(std::int64_t k_max);
VerificationReport suite_thm_2_9(std::int64_t k_max, const EndoCompose& composer);

/// Green's relations on {gamma:k, delta:k, zero} against a witness
/// search over a bounded factor grid; also asserts H is equality and
/// D = J on the grid.
VerificationReport suite_thm_2_11(std::int64_t k_max);
VerificationReport suite_thm_2_11(std::int64_t k_max, const EndoGreen& green);

/// The map to the left-zero-pair times positive-integers product:
/// bijective onto its grid image and multiplicative on all pairs.
VerificationReport suite_prop_2_10(std::int64_t k_max);
VerificationReport suite_prop_2_10(std::int64_t k_max, const EndoIso& iso);

/// Desk-scale corollaries: every non-injective endomorphism lands in the
/// [0)-layer; the natural order chain (1,1,[0)) then (0,0,[1)) then
/// (0,0,[0)) holds and is preserved by every endomorphism on the grid.
VerificationReport suite_lemmas(std::int64_t window);
VerificationReport suite_lemmas(std::int64_t window, const EndoApply& endo_apply);

}  // namespace bomega
