#pragma once

// n-families: sets of pairwise-disjoint nonempty subsets of [n], their
// evaluation phi, composition, leading part, and the classifications
// (extreme / lower / new) driving the search pipeline.

#include "qramsey/rational.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qramsey {

// Subset of [1..n], n <= 62. Elements are 1-based.
class IndexSet {
public:
  IndexSet() : mask_(0) {}
  explicit IndexSet(std::uint64_t mask) : mask_(mask) {}
  static IndexSet of(std::initializer_list<int> elems);
  static IndexSet from_elements(const std::vector<int>& elems);
  static IndexSet full(int n);

  bool empty() const { return mask_ == 0; }
  int size() const { return __builtin_popcountll(mask_); }
  bool contains(int e) const { return e >= 1 && (mask_ >> (e - 1)) & 1; }
  int max_element() const;  // requires nonempty
  int min_element() const;  // requires nonempty
  bool disjoint_with(const IndexSet& o) const { return (mask_ & o.mask_) == 0; }
  bool subset_of(const IndexSet& o) const { return (mask_ & ~o.mask_) == 0; }
  IndexSet united(const IndexSet& o) const { return IndexSet(mask_ | o.mask_); }
  IndexSet without(int e) const { return IndexSet(mask_ & ~(1ULL << (e - 1))); }
  IndexSet with(int e) const { return IndexSet(mask_ | (1ULL << (e - 1))); }
  std::uint64_t mask() const { return mask_; }
  std::vector<int> elements() const;

  // product over elements of v (1-based indices); empty product is 1
  PosRational product_over(const RatVector& v) const;
  PosRational product_over(const std::vector<PosRational>& v) const;

  std::string str() const;  // "1,3" ; "" for the empty set

  // for disjoint nonempty sets this orders by max element
  friend bool operator<(const IndexSet& a, const IndexSet& b) { return a.mask_ < b.mask_; }
  friend bool operator==(const IndexSet& a, const IndexSet& b) { return a.mask_ == b.mask_; }
  friend bool operator!=(const IndexSet& a, const IndexSet& b) { return a.mask_ != b.mask_; }

private:
  std::uint64_t mask_;
};

// Immutable n-family. Parts are kept sorted by maximum element, so
// parts().back() is the leading part f(I).
class NFamily {
public:
  NFamily(int ground, std::vector<IndexSet> parts);
  static NFamily parse(int ground, const std::string& text);  // "1|2,3"

  int ground() const { return ground_; }
  const std::vector<IndexSet>& parts() const { return parts_; }
  std::size_t part_count() const { return parts_.size(); }

  const IndexSet& leading_part() const { return parts_.back(); }
  bool is_extreme() const;
  bool is_lower() const;
  bool is_new() const { return leading_part().contains(ground_); }

  std::string str() const;

  friend bool operator==(const NFamily& a, const NFamily& b) {
    return a.ground_ == b.ground_ && a.parts_ == b.parts_;
  }
  friend bool operator<(const NFamily& a, const NFamily& b);

private:
  int ground_;
  std::vector<IndexSet> parts_;
};

// phi_I(v) = sum over parts of the product of the entries
PosRational phi(const NFamily& fam, const RatVector& v);

// Composition J o (I_1..I_k): parts are unions of inner blocks along J.
// inner blocks must be pairwise disjoint and nonempty.
NFamily compose(const NFamily& outer, const std::vector<IndexSet>& inner, int ground);

// Index pair (A, B) of disjoint subsets; either side may be empty, though
// newp output always has A nonempty.
struct RatioPair {
  IndexSet a;
  IndexSet b;
  std::string str() const;                              // "1,2|3" ; empty side stays blank
  static RatioPair parse(const std::string& text);      // inverse of str()
  friend bool operator<(const RatioPair& x, const RatioPair& y) {
    return x.a < y.a || (x.a == y.a && x.b < y.b);
  }
  friend bool operator==(const RatioPair& x, const RatioPair& y) { return x.a == y.a && x.b == y.b; }
};

// Canonically ordered set of pairs; the index set Omega.
class RatioIndex {
public:
  RatioIndex() = default;
  explicit RatioIndex(std::vector<RatioPair> pairs);

  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }
  const std::vector<RatioPair>& pairs() const { return pairs_; }
  const RatioPair& operator[](std::size_t i) const { return pairs_.at(i); }
  bool contains(const RatioPair& p) const;
  std::optional<std::size_t> position(const RatioPair& p) const;
  bool contains_all_of(const RatioIndex& o) const;
  RatioIndex united(const RatioIndex& o) const;

  std::string str() const;

  friend bool operator==(const RatioIndex& a, const RatioIndex& b) { return a.pairs_ == b.pairs_; }
  friend bool operator!=(const RatioIndex& a, const RatioIndex& b) { return !(a == b); }

private:
  std::vector<RatioPair> pairs_;
};

// newp(X): pairs (A, B) with {A, B u {n}} inside some family of X,
// B = f(I) minus n. Every family must be new on the common ground.
RatioIndex newp(const std::vector<NFamily>& families);

inline constexpr int kDefaultEnumerationGuard = 6;

// Complete enumerations in canonical order; guarded by n <= guard.
std::vector<NFamily> enumerate_families(int n, int guard = kDefaultEnumerationGuard);
std::vector<NFamily> enumerate_extreme(int k, int guard = kDefaultEnumerationGuard);
std::vector<NFamily> enumerate_lower(int n, int guard = kDefaultEnumerationGuard);
std::vector<NFamily> enumerate_all_new(int n, int guard = kDefaultEnumerationGuard);

}  // namespace qramsey
