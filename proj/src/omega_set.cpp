#include "bomega/omega_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace bomega {

OmegaSet OmegaSet::tail(std::int64_t n) {
  if (n < 0) {
    throw std::invalid_argument("tail index must be non-negative");
  }
  return OmegaSet(n);
}

std::int64_t OmegaSet::tail_index() const {
  if (is_empty()) {
    throw std::invalid_argument("the empty set has no tail index");
  }
  return n_;
}

OmegaSet shift_intersect(const OmegaSet& f1, std::int64_t n, const OmegaSet& f2) {
  if (f1.is_empty() || f2.is_empty()) {
    return OmegaSet::empty();
  }
  return OmegaSet::tail(std::max(f2.tail_index(), f1.tail_index() + n));
}

bool is_omega_closed(std::span<const OmegaSet> candidate) {
  std::int64_t max_tail = 0;
  for (const auto& f : candidate) {
    if (!f.is_empty()) {
      max_tail = std::max(max_tail, f.tail_index());
    }
  }
  auto contains = [&](const OmegaSet& f) {
    return std::find(candidate.begin(), candidate.end(), f) != candidate.end();
  };
  for (const auto& f1 : candidate) {
    for (const auto& f2 : candidate) {
      // Any n beyond the largest tail index gives F1 ∩ (-n + F2) = F1,
      // so this finite range decides closure.
      for (std::int64_t n = 0; n <= max_tail; ++n) {
        if (!contains(shift_intersect(f2, -n, f1))) {
          return false;
        }
      }
    }
  }
  return true;
}

Family::Family(std::vector<OmegaSet> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) {
    throw std::invalid_argument("a family needs at least one member");
  }
  if (std::find(members.begin(), members.end(), OmegaSet::tail(0)) == members.end()) {
    throw std::invalid_argument("a family must contain the tail [0)");
  }
  if (!is_omega_closed(members)) {
    throw std::invalid_argument("the family is not closed under shifted intersections");
  }
  members_ = std::make_shared<const std::vector<OmegaSet>>(std::move(members));
}

const Family& Family::canonical() {
  static const Family fam({OmegaSet::tail(0), OmegaSet::tail(1)});
  return fam;
}

bool Family::contains(const OmegaSet& f) const {
  return std::binary_search(members_->begin(), members_->end(), f);
}

}  // namespace bomega
