#include "qramsey/shift_engine.hpp"

#include <stdexcept>

namespace qramsey {

WideColoring widen(const Coloring& c) {
  Coloring copy = c;
  return [copy](const PosRational& q) -> std::optional<BigInt> {
    auto v = copy(q);
    if (!v) return std::nullopt;
    return BigInt(*v);
  };
}

ShiftTask::ShiftTask(IndexSet s_, RatioIndex omega_, std::vector<RatioWeights> xi_)
    : s(s_), omega(std::move(omega_)), xi(std::move(xi_)) {
  for (const auto& p : omega.pairs()) {
    if (p.a.size() + s.size() <= p.b.size())
      throw std::invalid_argument("ShiftTask: pair (" + p.str() + ") violates |A| + |S| > |B|");
  }
  for (const auto& w : xi)
    if (!(w.omega() == omega)) throw std::invalid_argument("ShiftTask: Xi weights not over task Omega");
}

GoodPolyVector make_poly(const RatioWeights& xi, const IndexSet& s) {
  GoodPolyVector p(xi.omega());
  const auto& pairs = xi.omega().pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& w = xi.weights()[i];
    if (w.is_zero()) continue;
    long exponent = pairs[i].a.size() - pairs[i].b.size() + s.size();
    if (exponent < 1)
      throw std::invalid_argument("make_poly: pair (" + pairs[i].str() +
                                  ") violates |A| + |S| > |B|");
    p.add_term(pairs[i], exponent, w);
  }
  return p;
}

PhiHom::PhiHom(const RatVector& u, const IndexSet& s, const RatioIndex& omega) {
  PosRational su = s.product_over(u);
  gens_.reserve(omega.size());
  for (const auto& p : omega.pairs()) gens_.push_back(su * ratio_of_pair(p, u));
}

NonnegRational PhiHom::eval(const std::vector<NonnegRational>& coeffs) const {
  if (coeffs.size() != gens_.size()) throw std::invalid_argument("PhiHom: length mismatch");
  NonnegRational sum;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (coeffs[i].is_zero()) continue;
    sum = sum + coeffs[i] * gens_[i];
  }
  return sum;
}

NonnegRational PhiHom::eval(const RatioWeights& w) const { return eval(w.weights()); }

NonnegRational PhiHom::eval(const LatticePoint& z) const {
  if (z.size() != gens_.size()) throw std::invalid_argument("PhiHom: length mismatch");
  NonnegRational sum;
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (z[i] == 0) continue;
    if (z[i] < 0) throw std::invalid_argument("PhiHom: negative lattice coordinate");
    sum = sum + NonnegRational(z[i], BigInt(1)) * gens_[i];
  }
  return sum;
}

PhiHom phi_hom(const RatVector& u, const IndexSet& s, const RatioIndex& omega) {
  return PhiHom(u, s, omega);
}

bool verify_homomorph_identity(const RatVector& u, const PosRational& x, long d,
                               const RatioWeights& delta, const RatioWeights& xi,
                               const IndexSet& s) {
  const RatioIndex& omega = delta.omega();
  if (!(xi.omega() == omega)) throw std::invalid_argument("verify_homomorph_identity: mixed Omega");
  PosRational dq(d);
  RatVector du = scale(dq, u);

  PosRational lhs_scale = s.product_over(du);
  PosRational inner = (x + delta.dot(ratio_vector(u, omega))) / dq.pow(s.size());
  PosRational lhs = lhs_scale * (inner + xi.dot(ratio_vector(du, omega)));

  PhiHom hom(u, s, omega);
  PosRational rhs = x * s.product_over(u) + hom.eval(delta) + hom.eval(make_poly(xi, s).eval(d));
  return lhs == rhs;
}

LatticeColoring pullback(const WideColoring& c, const RatVector& u, const PosRational& x,
                         const IndexSet& s, const RatioIndex& omega) {
  PhiHom hom(u, s, omega);
  PosRational base = x * s.product_over(u);
  return [c, hom, base](const LatticePoint& z) -> std::optional<BigInt> {
    return c(base + hom.eval(z));
  };
}

LatticeColoring pullback(const Coloring& c, const RatVector& u, const PosRational& x,
                         const IndexSet& s, const RatioIndex& omega) {
  return pullback(widen(c), u, x, s, omega);
}

Perturbation ShiftResult::as_perturbation() const {
  const RatioIndex& omega = delta.omega();
  PosRational dq(d);
  RatioWeights lambda(omega);
  const auto& pairs = omega.pairs();
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& w = delta.weights()[i];
    if (w.is_zero()) continue;
    long e = pairs[i].a.size() - pairs[i].b.size() + s.size();
    lambda.set(pairs[i], w / dq.pow(e));
  }
  return Perturbation(Shift(std::move(lambda)), Dilation(dq, dq.pow(-s.size())));
}

bool verify_shift_postcondition(const WideColoring& c, const IndexSet& s, const RatVector& u_prime,
                                const PosRational& x_prime, const RatioWeights& xi) {
  PosRational su = s.product_over(u_prime);
  auto lhs = c(su * (x_prime + xi.dot(ratio_vector(u_prime, xi.omega()))));
  auto rhs = c(x_prime * su);
  return lhs.has_value() && rhs.has_value() && *lhs == *rhs;
}

std::optional<ShiftResult> general_term_shift(const ShiftTask& task, const WideColoring& c,
                                              const RatVector& u, const PosRational& x,
                                              const SearchBudget& budget, BudgetMeter* meter) {
  bool trivial = true;
  for (const auto& w : task.xi)
    if (!w.is_zero()) trivial = false;
  if (trivial) return ShiftResult(1, task.s, RatioWeights(task.omega), x, u);

  std::vector<GoodPolyVector> polys;
  polys.reserve(task.xi.size());
  for (const auto& w : task.xi) polys.push_back(make_poly(w, task.s));

  LatticeColoring tilde_c = pullback(c, u, x, task.s, task.omega);
  auto hit = pvdw_witness(polys, tilde_c, budget, meter);
  if (!hit) return std::nullopt;

  std::vector<NonnegRational> entries;
  entries.reserve(hit->x.size());
  for (const auto& z : hit->x) entries.emplace_back(z, BigInt(1));
  RatioWeights delta(task.omega, std::move(entries));

  PosRational dq(hit->d);
  PosRational x_prime = (x + delta.dot(ratio_vector(u, task.omega))) / dq.pow(task.s.size());
  RatVector u_prime = scale(dq, u);

  ShiftResult result(hit->d, task.s, std::move(delta), x_prime, u_prime);
  result.window = hit->window;

  // exact re-verification, independent of the lattice search path
  for (const auto& w : task.xi) {
    if (!verify_homomorph_identity(u, x, result.d, result.delta, w, task.s))
      throw std::logic_error("general_term_shift: homomorphism identity failed");
    if (!verify_shift_postcondition(c, task.s, result.u_prime, result.x_prime, w))
      throw std::logic_error("general_term_shift: postcondition failed after verified search");
  }
  return result;
}

std::optional<ShiftResult> general_term_shift(const ShiftTask& task, const Coloring& c,
                                              const RatVector& u, const PosRational& x,
                                              const SearchBudget& budget) {
  return general_term_shift(task, widen(c), u, x, budget);
}

}  // namespace qramsey
