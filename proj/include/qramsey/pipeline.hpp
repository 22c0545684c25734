#pragma once

// Top-level constructions: the inductive build of lower/fully consistent
// vectors, and the end-to-end monochromatic sum/product witness searches
// (direct height enumeration and the constructive route through the
// block builder).

#include "qramsey/coloring.hpp"
#include "qramsey/patterns.hpp"
#include "qramsey/stabilizer.hpp"

#include <optional>
#include <string>
#include <vector>

namespace qramsey {

struct BuildOptions {
  SearchBudget budget;
  long dilation_cap = 4;  // per-stage dilation window committed into Q'
};

struct BuildStage {
  int ground = 0;
  std::vector<PosRational> q_used;  // the enlarged Q' this stage had to survive
  PosRational scale;
  PosRational x_prime;
  std::vector<StageTranscript> families;
  int rounds = 0;
};

struct BuildResult {
  RatVector v;
  std::vector<BuildStage> stages;
};

enum class ConsistencyScope { lower, all };

// q.v is lower-consistent for every q in q_set; induction over the ground
// with Q enlarged by the committed dilation window at each step.
std::optional<BuildResult> build_lower_consistent(const Coloring& c, int n,
                                                  const std::vector<PosRational>& q_set,
                                                  const BuildOptions& opt);

// same, over all n-families (single-part families pass trivially)
std::optional<BuildResult> build_full_consistent(const Coloring& c, int n,
                                                 const std::vector<PosRational>& q_set,
                                                 const BuildOptions& opt);

// canonical rational enumeration: by height, then numerator, then denominator
std::vector<PosRational> rationals_up_to_height(long h);

enum class HindmanPattern { sums_and_products, disjoint_products };
enum class HindmanRoute { direct, constructive, automatic };

struct PatternValue {
  std::string label;
  PosRational value;
  int color = 0;
};

struct HindmanWitness {
  std::vector<PosRational> x;
  std::vector<PatternValue> values;
  int color = 0;
  bool distinct = false;  // whether the x_i are pairwise distinct
};

struct PartialPattern {
  std::vector<PosRational> x;
  int agreeing = 0;  // size of the largest single-color subpattern
  int total = 0;
};

struct HindmanOptions {
  long height = 64;
  HindmanRoute route = HindmanRoute::automatic;
  SearchBudget budget;
  int jobs = 1;
  int ground_cap = 6;     // constructive route tries n = k .. ground_cap
  long dilation_cap = 4;
};

struct HindmanOutcome {
  std::optional<HindmanWitness> witness;
  std::optional<PartialPattern> best_partial;
  std::string route_used;
  long candidates = 0;
  std::vector<std::string> notes;
};

// the labeled pattern of a candidate tuple
std::vector<PatternValue> pattern_values(HindmanPattern pattern, const std::vector<PosRational>& x);

// recomputes values and colors from scratch; the searcher plays no part
std::optional<HindmanWitness> verify_hindman(HindmanPattern pattern, const Coloring& c,
                                             const std::vector<PosRational>& x);

HindmanOutcome hindman_witness(const Coloring& c, int k, const HindmanOptions& opt);
HindmanOutcome generalized_witness(const Coloring& c, int k, const HindmanOptions& opt);

}  // namespace qramsey
