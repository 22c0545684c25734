#pragma once

// The operator algebra on X = Q_+^{n-1} x Q_+: weight-indexed shifts
// sigma_lambda, dilations R_{(q1,q2)}, and their normal-form composites.
// A perturbation is stored as shift-after-dilation; the commutator laws
// convert the other order.

#include "qramsey/family.hpp"
#include "qramsey/rational.hpp"

#include <string>
#include <vector>

namespace qramsey {

struct PointX {
  RatVector u;  // length n-1
  PosRational x;

  friend bool operator==(const PointX& a, const PointX& b) { return a.u == b.u && a.x == b.x; }
  std::string str() const { return "(" + u.str() + ";" + x.str() + ")"; }
};

// concatenation (u_1,...,u_{n-1},x) as a vector over ground n
RatVector concat(const PointX& pt);
PointX split_point(const RatVector& v);  // inverse of concat, needs length >= 2
PointX dilate_point(const PosRational& q, const PointX& pt);  // q . (u;x) = (q u; q x)

// rho_{(A,B)}(u) = prod_{a in A} u_a / prod_{b in B} u_b
PosRational ratio_of_pair(const RatioPair& p, const RatVector& u);

// the full vector rho_u over Omega, aligned with Omega's canonical order
std::vector<PosRational> ratio_vector(const RatVector& u, const RatioIndex& omega);

// q~ = (q^{|A|-|B|})_{(A,B) in Omega}
std::vector<PosRational> tilde(const PosRational& q, const RatioIndex& omega);

// Nonnegative weight vector over an explicit Omega. Entries align with
// omega.pairs(); absent pairs are zero by construction.
class RatioWeights {
public:
  explicit RatioWeights(RatioIndex omega);
  RatioWeights(RatioIndex omega, std::vector<NonnegRational> weights);

  const RatioIndex& omega() const { return omega_; }
  const std::vector<NonnegRational>& weights() const { return weights_; }
  const NonnegRational& at(const RatioPair& p) const;
  RatioWeights& set(const RatioPair& p, NonnegRational w);
  bool is_zero() const;

  // dot with rho_u; zero weights contribute nothing
  NonnegRational dot(const std::vector<PosRational>& ratios) const;

  RatioWeights plus(const RatioWeights& o) const;                     // common Omega
  RatioWeights odot(const std::vector<PosRational>& factors) const;   // coordinatewise product
  RatioWeights scaled(const NonnegRational& c) const;
  RatioWeights divided(const PosRational& c) const;

  // widening into a larger Omega (explicit; never implicit)
  RatioWeights embedded(const RatioIndex& bigger) const;
  // restriction; throws if a nonzero weight falls outside
  RatioWeights restricted(const RatioIndex& smaller) const;

  std::string str() const;

  friend bool operator==(const RatioWeights& a, const RatioWeights& b) {
    return a.omega_ == b.omega_ && a.weights_ == b.weights_;
  }
  friend bool operator<(const RatioWeights& a, const RatioWeights& b);

private:
  RatioIndex omega_;
  std::vector<NonnegRational> weights_;
};

struct Shift {
  RatioWeights weights;

  explicit Shift(RatioWeights w) : weights(std::move(w)) {}
  static Shift zero(const RatioIndex& omega) { return Shift(RatioWeights(omega)); }
  bool is_identity() const { return weights.is_zero(); }

  friend bool operator==(const Shift& a, const Shift& b) { return a.weights == b.weights; }
  friend bool operator<(const Shift& a, const Shift& b) { return a.weights < b.weights; }
};

struct Dilation {
  PosRational q1;  // u factor
  PosRational q2;  // x factor

  Dilation() : q1(PosRational::one()), q2(PosRational::one()) {}
  Dilation(PosRational a, PosRational b) : q1(std::move(a)), q2(std::move(b)) {}
  static Dilation identity() { return Dilation(); }
  static Dilation uniform(const PosRational& q) { return Dilation(q, q); }
  bool is_identity() const { return q1 == PosRational::one() && q2 == PosRational::one(); }

  friend bool operator==(const Dilation& a, const Dilation& b) { return a.q1 == b.q1 && a.q2 == b.q2; }
  friend bool operator<(const Dilation& a, const Dilation& b) {
    return a.q1 < b.q1 || (a.q1 == b.q1 && a.q2 < b.q2);
  }
};

// Normal form sigma o R: dilation first, then shift.
struct Perturbation {
  Shift shift;
  Dilation dilation;

  Perturbation(Shift s, Dilation d) : shift(std::move(s)), dilation(std::move(d)) {}
  static Perturbation identity(const RatioIndex& omega) {
    return Perturbation(Shift::zero(omega), Dilation::identity());
  }
  static Perturbation of_shift(Shift s) { return Perturbation(std::move(s), Dilation::identity()); }
  static Perturbation of_dilation(const RatioIndex& omega, Dilation d) {
    return Perturbation(Shift::zero(omega), std::move(d));
  }
  bool is_identity() const { return shift.is_identity() && dilation.is_identity(); }
  const RatioIndex& omega() const { return shift.weights.omega(); }
  Perturbation embedded(const RatioIndex& bigger) const {
    return Perturbation(Shift(shift.weights.embedded(bigger)), dilation);
  }

  std::string str() const;  // shift{(1|2):3/2} dil{2,3}
  static Perturbation parse(const std::string& text, const RatioIndex& omega);

  friend bool operator==(const Perturbation& a, const Perturbation& b) {
    return a.shift == b.shift && a.dilation == b.dilation;
  }
  friend bool operator<(const Perturbation& a, const Perturbation& b) {
    if (!(a.dilation == b.dilation)) return a.dilation < b.dilation;
    return a.shift < b.shift;
  }
};

PointX apply(const Shift& s, const PointX& pt);
PointX apply(const Dilation& d, const PointX& pt);
PointX apply(const Perturbation& p, const PointX& pt);

// sigma_a o sigma_b = sigma_{a+b}
Shift compose_shift(const Shift& a, const Shift& b);

// R_{q*} o sigma_lambda = sigma_{lambda'} o R_{q*}
RatioWeights commute_dilation_past_shift(const RatioWeights& lambda, const Dilation& q);

// sigma_lambda o R_{q*} = R_{q*} o sigma_{lambda''}
RatioWeights uncommute_shift_past_dilation(const RatioWeights& lambda, const Dilation& q);

// normal form of p1 o p2 (p2 applied first); common Omega required
Perturbation compose(const Perturbation& p1, const Perturbation& p2);

// The I-shift of a new family I = {A_1,...,A_l, S u {n}}: weight 1 on each
// (A_i, S). Omega must contain every such pair.
Shift family_shift(const NFamily& fam, const RatioIndex& omega);

}  // namespace qramsey
