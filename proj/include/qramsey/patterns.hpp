#pragma once

// Finite searchers and threshold computers for the classical ingredients:
// Schur, Folkman (finite subset sums), van der Waerden, multidimensional
// polynomial van der Waerden, the Disjoint Unions Theorem, and the
// constructive pseudo-disjoint-union block builder.
//
// The existence theorems are realized as bounded searches: budgets make
// failure observable instead of divergent. Witnesses are returned in
// canonical (lexicographically smallest) order, and every searcher has an
// independent verifier used by reports and tests.

#include "qramsey/coloring.hpp"
#include "qramsey/family.hpp"
#include "qramsey/perturbation.hpp"
#include "qramsey/rational.hpp"

#include <chrono>
#include <functional>
#include <optional>
#include <set>
#include <vector>

namespace qramsey {

struct SearchBudget {
  long height_bound = 64;        // cap on searched naturals (d, delta, lattice coords, heights)
  long max_candidates = 2000000;
  long max_seconds = 120;
};

class BudgetMeter {
public:
  explicit BudgetMeter(const SearchBudget& b)
      : budget_(b), start_(std::chrono::steady_clock::now()) {}
  bool spent() const {
    if (candidates_ >= budget_.max_candidates) return true;
    auto dt = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration_cast<std::chrono::seconds>(dt).count() >= budget_.max_seconds;
  }
  void tick(long n = 1) { candidates_ += n; }
  long candidates() const { return candidates_; }
  long elapsed_ms() const {
    auto dt = std::chrono::steady_clock::now() - start_;
    return static_cast<long>(std::chrono::duration_cast<std::chrono::milliseconds>(dt).count());
  }

private:
  const SearchBudget& budget_;
  std::chrono::steady_clock::time_point start_;
  long candidates_ = 0;
};

struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

using IntColoring = std::function<std::optional<int>(long)>;
IntColoring on_naturals(const Coloring& c);

// --- Schur -----------------------------------------------------------------

struct SchurWitness {
  long x, y;
  friend bool operator==(const SchurWitness&, const SchurWitness&) = default;
};
std::optional<SchurWitness> schur_witness(const IntColoring& c, long n, bool allow_equal = true);
bool verify_schur(const IntColoring& c, const SchurWitness& w);

struct ThresholdResult {
  int threshold;
  std::vector<int> certificate;  // avoiding coloring of [1..threshold-1], 1-based colors
};
// minimal N such that every r-coloring of [1..N] has a monochromatic
// {x, y, x+y} (repeats allowed); complete backtracking over colorings
ThresholdResult schur_threshold(int r, long guard_n = 64);

// --- Folkman ---------------------------------------------------------------

std::set<long> folkman_sums(const std::vector<long>& m);
std::optional<std::vector<long>> folkman_witness(const IntColoring& chi, int k,
                                                 const SearchBudget& budget);
bool verify_folkman(const IntColoring& chi, const std::vector<long>& m);

// --- van der Waerden -------------------------------------------------------

struct VdwWitness {
  long a, d;
  friend bool operator==(const VdwWitness&, const VdwWitness&) = default;
};
std::optional<VdwWitness> vdw_witness(const IntColoring& c, int k, long n);
bool verify_vdw(const IntColoring& c, int k, const VdwWitness& w);
// minimal N such that every r-coloring of [1..N] has a monochromatic k-AP
ThresholdResult vdw_threshold(int k, int r, long guard_n = 64);

// --- multidimensional polynomial van der Waerden ----------------------------

// Tuple of one-variable polynomials over Omega, each with zero constant term
// (exponents >= 1 enforced at construction).
class GoodPolyVector {
public:
  explicit GoodPolyVector(RatioIndex omega);
  GoodPolyVector& add_term(const RatioPair& p, long exponent, NonnegRational coeff);
  const RatioIndex& omega() const { return omega_; }
  bool is_zero() const;
  std::vector<NonnegRational> eval(long d) const;
  // lattice evaluation; throws unless every coordinate is integral
  std::vector<BigInt> eval_integral(long d) const;
  // all coordinates of eval(d) are integral whenever this divides d
  BigInt denominator_lcm() const;

private:
  RatioIndex omega_;
  std::vector<std::vector<std::pair<long, NonnegRational>>> terms_;  // aligned with omega
};

using LatticePoint = std::vector<BigInt>;  // aligned with Omega, entries >= 0
using LatticeColoring = std::function<std::optional<BigInt>(const LatticePoint&)>;

struct PvdwWitness {
  LatticePoint x;
  long d;
  long window;  // the box size at which the witness appeared
};

// First (window, d, x) in lexicographic scan order with
// C(x + p(d)) = C(x) for every p in the system; d is restricted to
// multiples of the coefficient-denominator lcm so the steps stay integral.
std::optional<PvdwWitness> pvdw_witness(const std::vector<GoodPolyVector>& polys,
                                        const LatticeColoring& c, const SearchBudget& budget,
                                        BudgetMeter* meter = nullptr);
bool verify_pvdw(const std::vector<GoodPolyVector>& polys, const LatticeColoring& c,
                 const PvdwWitness& w);

// --- Disjoint Unions -------------------------------------------------------

using SubsetColoring = std::function<std::optional<int>(const IndexSet&)>;

// k pairwise-disjoint nonempty blocks of [n] whose 2^k - 1 unions are
// monochromatic; blocks come back sorted by maximum element.
std::optional<std::vector<IndexSet>> dut_witness(const SubsetColoring& c, int n, int k,
                                                 int guard = 5);
bool verify_dut(const SubsetColoring& c, const std::vector<IndexSet>& blocks);

// minimal n such that every 2-coloring of the nonempty subsets of [n]
// admits such blocks for k = 2; complete backtracking over colorings.
// The certificate is an avoiding coloring at n-1, indexed by subset mask.
struct DutThreshold {
  int threshold;
  std::vector<int> certificate;  // colors by mask, entry 0 unused
};
DutThreshold dut_threshold_22(int guard = 6);

// --- pseudo disjoint unions ------------------------------------------------

struct HypothesisViolation : std::runtime_error {
  HypothesisViolation(std::string what, NFamily fam)
      : std::runtime_error(std::move(what)), family(std::move(fam)) {}
  NFamily family;
};

using FamilyColoringFn = std::function<std::optional<int>(const NFamily&)>;

struct PseudoDutResult {
  std::vector<IndexSet> blocks;   // max-ordered chain, |I_j| = m_j
  IndexSet s;                     // the size-homogeneous subset found
  std::vector<int> chi;           // chi[t] = color of size-(t+1) subsets of s
  std::vector<long> m;            // Folkman vector, sorted descending
};

// The constructive block builder: cardinality-homogenization, a Folkman
// vector under the induced size coloring, then consecutive blocks of S.
// Requires C'(I) = c(f(I)) on every lower n-family (checked exhaustively;
// violations raise HypothesisViolation carrying the witness family).
// Verifies the extreme-composite pattern before returning.
std::optional<PseudoDutResult> pseudo_dut_construct(const FamilyColoringFn& cprime,
                                                    const SubsetColoring& c, int n, int k,
                                                    const SearchBudget& budget);

}  // namespace qramsey
