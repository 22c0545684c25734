#pragma once

// Seeded generation of random rationals, families, weight vectors, and
// perturbations for the identity suites and property tests.

#include "qramsey/family.hpp"
#include "qramsey/perturbation.hpp"
#include "qramsey/rational.hpp"

#include <random>

namespace qramsey {

class RandomGen {
public:
  explicit RandomGen(std::uint64_t seed) : rng_(seed) {}

  long int_in(long lo, long hi) {
    return std::uniform_int_distribution<long>(lo, hi)(rng_);
  }

  PosRational pos_rational(long max_part = 20) {
    return PosRational(int_in(1, max_part), int_in(1, max_part));
  }

  NonnegRational nonneg_rational(long max_part = 20) {
    if (int_in(0, 4) == 0) return NonnegRational();
    return NonnegRational(int_in(0, max_part), int_in(1, max_part));
  }

  RatVector rat_vector(std::size_t len, long max_part = 12) {
    std::vector<PosRational> v;
    v.reserve(len);
    for (std::size_t i = 0; i < len; ++i) v.push_back(pos_rational(max_part));
    return RatVector(std::move(v));
  }

  IndexSet index_set(int n, bool allow_empty) {
    while (true) {
      std::uint64_t m = static_cast<std::uint64_t>(int_in(0, (1L << n) - 1));
      if (m || allow_empty) return IndexSet(m);
    }
  }

  // disjoint pair (A, B) within [1..n], A nonempty
  RatioPair ratio_pair(int n) {
    while (true) {
      IndexSet a = index_set(n, false);
      IndexSet b = index_set(n, true);
      if (a.disjoint_with(b)) return RatioPair{a, b};
    }
  }

  RatioIndex ratio_index(int n, int max_pairs) {
    std::vector<RatioPair> pairs;
    int count = static_cast<int>(int_in(1, max_pairs));
    for (int i = 0; i < count; ++i) pairs.push_back(ratio_pair(n));
    return RatioIndex(std::move(pairs));
  }

  RatioWeights weights(const RatioIndex& omega, long max_part = 8) {
    std::vector<NonnegRational> w;
    for (std::size_t i = 0; i < omega.size(); ++i) w.push_back(nonneg_rational(max_part));
    return RatioWeights(omega, std::move(w));
  }

  Dilation dilation(long max_part = 8) { return Dilation(pos_rational(max_part), pos_rational(max_part)); }

  Perturbation perturbation(const RatioIndex& omega) {
    return Perturbation(Shift(weights(omega)), dilation());
  }

  // uniformly random n-family (via enumeration at small n)
  NFamily family(int n) {
    auto all = enumerate_families(n);
    return all[static_cast<std::size_t>(int_in(0, static_cast<long>(all.size()) - 1))];
  }

  NFamily new_family(int n) {
    auto all = enumerate_all_new(n);
    return all[static_cast<std::size_t>(int_in(0, static_cast<long>(all.size()) - 1))];
  }

  std::mt19937_64& engine() { return rng_; }

private:
  std::mt19937_64 rng_;
};

}  // namespace qramsey
