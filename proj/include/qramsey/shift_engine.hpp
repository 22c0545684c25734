#pragma once

// The constructive shifting core: good-polynomial systems built from Xi,
// the lattice homomorphism phi, pull-back colorings, and the search that
// produces (d, delta) making all Xi-shifted values match the base color.
//
// Every returned result is re-verified exactly: the phi identity
//   prod_{s in S} (d u_s) * ((x + delta.rho_u)/d^{|S|} + xi.rho_{d u})
//     = x prod_{s in S} u_s + phi(delta) + phi(p_xi(d))
// and the color postcondition for each xi in Xi.

#include "qramsey/coloring.hpp"
#include "qramsey/patterns.hpp"
#include "qramsey/perturbation.hpp"

#include <functional>
#include <optional>

namespace qramsey {

// Colorings of Q_+ with arbitrarily wide ranges (auxiliary refinements).
using WideColoring = std::function<std::optional<BigInt>(const PosRational&)>;
WideColoring widen(const Coloring& c);

struct ShiftTask {
  IndexSet s;                    // S subset of [n-1]
  RatioIndex omega;              // every pair satisfies |A| + |S| > |B|
  std::vector<RatioWeights> xi;  // Xi, weights over omega

  ShiftTask(IndexSet s, RatioIndex omega, std::vector<RatioWeights> xi);
};

// p_xi : d -> (xi_{(A,B)} d^{|A|-|B|+|S|}); the task inequality makes every
// exponent >= 1, i.e. the polynomial good.
GoodPolyVector make_poly(const RatioWeights& xi, const IndexSet& s);

// phi : Z^Omega -> Q_+ generated by e_{(A,B)} -> prod_{s in S} u_s * rho_{(A,B)}(u),
// extended additively (with rational scaling) to weight vectors.
class PhiHom {
public:
  PhiHom(const RatVector& u, const IndexSet& s, const RatioIndex& omega);
  const PosRational& generator(std::size_t i) const { return gens_.at(i); }
  NonnegRational eval(const std::vector<NonnegRational>& coeffs) const;
  NonnegRational eval(const RatioWeights& w) const;
  NonnegRational eval(const LatticePoint& z) const;

private:
  std::vector<PosRational> gens_;
};

PhiHom phi_hom(const RatVector& u, const IndexSet& s, const RatioIndex& omega);

// exact check of the deferred identity; false would reveal a bug
bool verify_homomorph_identity(const RatVector& u, const PosRational& x, long d,
                               const RatioWeights& delta, const RatioWeights& xi,
                               const IndexSet& s);

// C~ : Z_{>=0}^Omega -> colors; z -> C(x prod_{s in S} u_s + phi(z))
LatticeColoring pullback(const WideColoring& c, const RatVector& u, const PosRational& x,
                         const IndexSet& s, const RatioIndex& omega);
LatticeColoring pullback(const Coloring& c, const RatVector& u, const PosRational& x,
                         const IndexSet& s, const RatioIndex& omega);

struct ShiftResult {
  long d = 1;
  IndexSet s;
  RatioWeights delta;  // natural entries
  PosRational x_prime;
  RatVector u_prime;
  long window = 0;      // search transcript
  long candidates = 0;

  ShiftResult(long d, IndexSet s, RatioWeights delta, PosRational xp, RatVector up)
      : d(d), s(s), delta(std::move(delta)), x_prime(std::move(xp)), u_prime(std::move(up)) {}

  // sigma_lambda o R_{(d, d^{-|S|})} with lambda = delta / d^{|A|-|B|+|S|}
  Perturbation as_perturbation() const;
};

// Search for (d, delta) with, for EVERY xi in Xi,
//   C(prod_{s in S} u'_s (x' + xi.rho_{u'})) = C(x' prod_{s in S} u'_s),
// where x' = (x + delta.rho_u)/d^{|S|}, u' = d u. Smallest d in the window
// wins. Every equality is re-verified before returning.
std::optional<ShiftResult> general_term_shift(const ShiftTask& task, const WideColoring& c,
                                              const RatVector& u, const PosRational& x,
                                              const SearchBudget& budget,
                                              BudgetMeter* meter = nullptr);
std::optional<ShiftResult> general_term_shift(const ShiftTask& task, const Coloring& c,
                                              const RatVector& u, const PosRational& x,
                                              const SearchBudget& budget);

// the postcondition equality for one xi, checked from scratch
bool verify_shift_postcondition(const WideColoring& c, const IndexSet& s, const RatVector& u_prime,
                                const PosRational& x_prime, const RatioWeights& xi);

}  // namespace qramsey
