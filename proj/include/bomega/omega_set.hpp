#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

namespace bomega {

/// An inductive subset of the non-negative integers in canonical form:
/// the empty set, or the tail [n) = {x : x >= n}. Every nonempty
/// inductive subset equals exactly one tail, so structural equality
/// decides set equality.
class OmegaSet {
 public:
  static OmegaSet empty() { return OmegaSet(-1); }
  static OmegaSet tail(std::int64_t n);

  bool is_empty() const { return n_ < 0; }

  /// The index n of the tail [n). Nonempty sets only.
  std::int64_t tail_index() const;

  /// Membership, defined for any integer argument.
  bool contains(std::int64_t x) const { return n_ >= 0 && x >= n_; }

  /// Empty sorts before every tail, tails sort by index.
  friend auto operator<=>(const OmegaSet&, const OmegaSet&) = default;

 private:
  explicit OmegaSet(std::int64_t n) : n_(n) {}

  std::int64_t n_;  // -1 encodes the empty set
};

/// f2 ∩ (n + f1), where n + S = {n + s : s in S} is formed over the
/// integers and the intersection lands back in the non-negative ones.
/// For tails [a), [b) the result is [max(b, a + n)); empty absorbs.
OmegaSet shift_intersect(const OmegaSet& f1, std::int64_t n, const OmegaSet& f2);

/// Whether F1 ∩ (-n + F2) stays inside `candidate` for all members F1, F2
/// and all n >= 0. Shifts beyond the largest tail index reproduce F1, so
/// checking n up to that index decides the property.
bool is_omega_closed(std::span<const OmegaSet> candidate);

/// A finite family of inductive subsets, stored sorted and duplicate-free,
/// closed under the shifted intersections that the product forms, and
/// normalized to contain [0). Immutable; copies share storage.
class Family {
 public:
  explicit Family(std::vector<OmegaSet> members);

  /// The two-member family {[0), [1)} that the endomorphism calculus
  /// is developed over.
  static const Family& canonical();

  std::span<const OmegaSet> members() const { return *members_; }
  bool contains(const OmegaSet& f) const;
  bool contains_empty() const { return contains(OmegaSet::empty()); }

  friend bool operator==(const Family& a, const Family& b) {
    return a.members_ == b.members_ || *a.members_ == *b.members_;
  }

 private:
  std::shared_ptr<const std::vector<OmegaSet>> members_;
};

}  // namespace bomega
