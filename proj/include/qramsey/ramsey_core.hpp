#pragma once

// Abstract (X, P, C) machinery, kept generic so toy ground sets (e.g. the
// naturals with p_m : n -> max{n, m}) exercise the same backtracking shape
// as the rational engine.
//
// A stage t owns a target map p_t, a coloring C_t, and a finite candidate
// set P'_t. Compile H_{t-1} := H_t o P'_t from t = l down to 1; at runtime
// pick, for t = 1..l, some p'_t in P'_t whose image point is H_t-stably
// p_t-consistent. The composite applies p'_1 first.

#include <functional>
#include <optional>
#include <vector>

namespace qramsey::core {

template <class Pt>
using Map = std::function<Pt(const Pt&)>;

template <class Pt>
using ColorFn = std::function<long(const Pt&)>;

template <class Pt>
bool h_stably_consistent(const Pt& x, const Map<Pt>& target, const std::vector<Map<Pt>>& h,
                         const ColorFn<Pt>& coloring) {
  for (const auto& m : h) {
    Pt y = m(x);
    if (coloring(target(y)) != coloring(y)) return false;
  }
  return true;
}

template <class Pt>
struct Stage {
  Map<Pt> target;
  ColorFn<Pt> coloring;
  std::vector<Map<Pt>> candidates;  // P'_t, must include the identity to be safe
};

template <class Pt>
struct MultiTaskOutcome {
  Pt final_point;
  std::vector<std::size_t> chosen;        // candidate index per stage
  std::vector<std::size_t> h_sizes;       // |H_t| per stage
};

template <class Pt>
std::optional<MultiTaskOutcome<Pt>> backtrack_multitask(const Pt& start,
                                                        const std::vector<Stage<Pt>>& stages,
                                                        const std::vector<Map<Pt>>& h0) {
  const std::size_t l = stages.size();
  std::vector<std::vector<Map<Pt>>> h(l);
  if (l == 0) return MultiTaskOutcome<Pt>{start, {}, {}};
  h[l - 1] = h0;
  for (std::size_t t = l - 1; t > 0; --t) {
    for (const auto& m : h[t])
      for (const auto& cand : stages[t].candidates)
        h[t - 1].push_back([m, cand](const Pt& x) { return m(cand(x)); });
  }

  MultiTaskOutcome<Pt> out{start, {}, {}};
  for (std::size_t t = 0; t < l; ++t) {
    out.h_sizes.push_back(h[t].size());
    bool found = false;
    for (std::size_t i = 0; i < stages[t].candidates.size(); ++i) {
      Pt y = stages[t].candidates[i](out.final_point);
      if (h_stably_consistent(y, stages[t].target, h[t], stages[t].coloring)) {
        out.final_point = y;
        out.chosen.push_back(i);
        found = true;
        break;
      }
    }
    if (!found) return std::nullopt;
  }
  return out;
}

}  // namespace qramsey::core
