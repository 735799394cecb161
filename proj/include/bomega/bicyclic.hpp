#pragma once

#include <cstdint>
#include <string>
#include <utility>

namespace bomega {

/// A bicyclic-monoid element in coordinates: (k, l) stands for the normal
/// form q^k p^l of the presentation on p, q with the single relation pq = 1.
using BicyclicPair = std::pair<std::int64_t, std::int64_t>;

/// (k,l)(m,n) = (k + m - t, l + n - t) with t = min(l, m).
BicyclicPair multiply_bicyclic(const BicyclicPair& a, const BicyclicPair& b);

/// A word over the alphabet {p, q}.
class BicyclicWord {
 public:
  BicyclicWord() = default;

  /// Validates the letters and reports the first foreign character.
  explicit BicyclicWord(std::string letters);

  /// The word q^k p^l.
  static BicyclicWord normal_form(std::int64_t k, std::int64_t l);

  const std::string& letters() const { return letters_; }
  bool empty() const { return letters_.empty(); }

  friend BicyclicWord operator+(const BicyclicWord& a, const BicyclicWord& b) {
    BicyclicWord w;
    w.letters_ = a.letters_ + b.letters_;
    return w;
  }

  friend bool operator==(const BicyclicWord&, const BicyclicWord&) = default;

 private:
  std::string letters_;
};

/// Folds the word through the coordinate product, sending p to (0,1) and
/// q to (1,0). The result is the unique (k, l) with w = q^k p^l, the same
/// normal form reached by deleting pq factors until none remain.
BicyclicPair normalize_word(const BicyclicWord& w);

}  // namespace bomega
