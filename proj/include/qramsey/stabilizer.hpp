#pragma once

// Back-tracking stabilizer machinery: single-target stabilizers through
// auxiliary colorings and the shift engine, the multi-stage composition,
// and the stable-extension wiring that turns a family collection plus a
// dilation test set into a consistent vector.

#include "qramsey/coloring.hpp"
#include "qramsey/patterns.hpp"
#include "qramsey/perturbation.hpp"
#include "qramsey/shift_engine.hpp"

#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace qramsey {

struct StabilizerTask {
  Shift target;                    // sigma, weights over omega
  std::vector<Perturbation> h;     // identity is added if absent
  PointColoring coloring;          // must carry the C_S structure
  PointX point;
  SearchBudget budget;

  StabilizerTask(Shift target, std::vector<Perturbation> h, PointColoring coloring, PointX point,
                 SearchBudget budget);
};

struct StabilizeOutcome {
  Perturbation p_prime;
  PointX moved;            // p'(point)
  long d = 1;
  RatioWeights delta;
  std::size_t h_star_size = 0;  // distinct dilation parts
  std::size_t xi_size = 0;
  long candidates = 0;
};

// Finds p' with C(sigma o h o p'(pt)) = C(h o p'(pt)) for every h in H:
// split H into dilation and shift parts, push the targets across the
// dilations, refine the coloring along the dilation parts, and run the
// shift engine on the enlarged Xi. The returned p' is re-verified against
// the definitional equalities before being accepted.
std::optional<StabilizeOutcome> stabilize(const StabilizerTask& task);

// checks the stabilizer property directly, sharing no code with the search
bool verify_stabilized(const Shift& target, const std::vector<Perturbation>& h,
                       const PointColoring& coloring, const PointX& at);

struct MultiTaskStage {
  Shift sigma;
  PointColoring coloring;   // in C_{S_t}
  RatioIndex omega;         // stage-local Omega (nested decreasing in full mode)
  std::string label;        // family literal or test name
};

struct MultiTaskInstance {
  std::vector<MultiTaskStage> stages;
  PointX point;
  std::vector<Perturbation> h0;  // retained maps, over the common (stage-1) Omega
  SearchBudget budget;
  int max_rounds = 64;
};

struct StageTranscript {
  std::string label;
  std::size_t h_size = 0;        // |H_t| in the final round
  std::size_t p_prime_size = 0;  // |P'_t| accumulated
  Perturbation chosen;
  bool verified = false;

  StageTranscript(std::string label, Perturbation chosen)
      : label(std::move(label)), chosen(std::move(chosen)) {}
};

struct MultiTaskOutcome {
  Perturbation composite;
  PointX final_point;
  std::vector<StageTranscript> stages;  // runtime order (stage 1 applied first)
  int rounds = 0;
};

struct MultiTaskFailure {
  std::size_t stage_index;  // 0-based runtime index of the stage that ran dry
  std::string label;
};

// Backtracking composition: candidate sets P'_t grow on demand (each round
// either finishes with every stage choice already anticipated by the later
// stages' sets, or enlarges some P'_t and restarts), so the final round has
// H_{t-1} = H_t o P'_t with every runtime choice covered. The composite
// applies stage 1 first.
std::variant<MultiTaskOutcome, MultiTaskFailure> multitask(const MultiTaskInstance& inst);

// final consistency equalities, all (stage, h) combinations, checked cold
bool verify_multitask(const MultiTaskInstance& inst, const MultiTaskOutcome& out);

enum class ExtensionMode { restricted, full };

struct StableExtensionResult {
  PosRational scale;   // the accumulated u-dilation factor
  PosRational x_prime;
  RatVector v;         // (scale * u_1, ..., scale * u_{n-1}, x')
  RatioWeights lambda; // total shift weights of the composite
  std::vector<StageTranscript> stages;
  int rounds = 0;
};

// Restricted mode: X given explicitly, all new, |A| > |B| on newp(X).
// Full mode: X is every new n-family with more than one part; stages are
// ordered so the largest-|f| family is applied first and each stage's
// Omega is the newp of its tail, which keeps |A| + |S_t| > |B| valid.
// Q-dilations ride inside H as uniform dilations (q, q).
std::optional<StableExtensionResult> stable_extension(const std::vector<NFamily>& families,
                                                      ExtensionMode mode,
                                                      const std::vector<PosRational>& q_set,
                                                      const Coloring& coloring, const RatVector& u,
                                                      const PosRational& x0,
                                                      const SearchBudget& budget);

}  // namespace qramsey
