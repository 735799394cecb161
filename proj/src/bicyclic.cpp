#include "bomega/bicyclic.hpp"

#include <algorithm>

#include "bomega/errors.hpp"

namespace bomega {

BicyclicPair multiply_bicyclic(const BicyclicPair& a, const BicyclicPair& b) {
  const std::int64_t t = std::min(a.second, b.first);
  return {a.first + b.first - t, a.second + b.second - t};
}

BicyclicWord::BicyclicWord(std::string letters) : letters_(std::move(letters)) {
  for (std::size_t pos = 0; pos < letters_.size(); ++pos) {
    if (letters_[pos] != 'p' && letters_[pos] != 'q') {
      throw ParseError("invalid word letter", pos, "letter p or q");
    }
  }
}

BicyclicWord BicyclicWord::normal_form(std::int64_t k, std::int64_t l) {
  BicyclicWord w;
  w.letters_ = std::string(static_cast<std::size_t>(k), 'q') +
               std::string(static_cast<std::size_t>(l), 'p');
  return w;
}

BicyclicPair normalize_word(const BicyclicWord& w) {
  BicyclicPair acc{0, 0};
  for (char ch : w.letters()) {
    acc = multiply_bicyclic(acc, ch == 'p' ? BicyclicPair{0, 1} : BicyclicPair{1, 0});
  }
  return acc;
}

}  // namespace bomega
