#include "qramsey/perturbation.hpp"

#include <sstream>
#include <stdexcept>

namespace qramsey {

RatVector concat(const PointX& pt) {
  std::vector<PosRational> v = pt.u.entries();
  v.push_back(pt.x);
  return RatVector(std::move(v));
}

PointX split_point(const RatVector& v) {
  if (v.size() < 2) throw std::invalid_argument("split_point: need length >= 2");
  std::vector<PosRational> u(v.entries().begin(), v.entries().end() - 1);
  return PointX{RatVector(std::move(u)), v.entries().back()};
}

PointX dilate_point(const PosRational& q, const PointX& pt) {
  return PointX{scale(q, pt.u), q * pt.x};
}

PosRational ratio_of_pair(const RatioPair& p, const RatVector& u) {
  return p.a.product_over(u) / p.b.product_over(u);
}

std::vector<PosRational> ratio_vector(const RatVector& u, const RatioIndex& omega) {
  std::vector<PosRational> out;
  out.reserve(omega.size());
  for (const auto& p : omega.pairs()) out.push_back(ratio_of_pair(p, u));
  return out;
}

std::vector<PosRational> tilde(const PosRational& q, const RatioIndex& omega) {
  std::vector<PosRational> out;
  out.reserve(omega.size());
  for (const auto& p : omega.pairs()) out.push_back(q.pow(p.a.size() - p.b.size()));
  return out;
}

RatioWeights::RatioWeights(RatioIndex omega)
    : omega_(std::move(omega)), weights_(omega_.size(), NonnegRational()) {}

RatioWeights::RatioWeights(RatioIndex omega, std::vector<NonnegRational> weights)
    : omega_(std::move(omega)), weights_(std::move(weights)) {
  if (weights_.size() != omega_.size())
    throw std::invalid_argument("RatioWeights: weight count does not match Omega");
}

const NonnegRational& RatioWeights::at(const RatioPair& p) const {
  auto pos = omega_.position(p);
  if (!pos) throw std::invalid_argument("RatioWeights: pair (" + p.str() + ") not in Omega");
  return weights_[*pos];
}

RatioWeights& RatioWeights::set(const RatioPair& p, NonnegRational w) {
  auto pos = omega_.position(p);
  if (!pos) throw std::invalid_argument("RatioWeights: pair (" + p.str() + ") not in Omega");
  weights_[*pos] = std::move(w);
  return *this;
}

bool RatioWeights::is_zero() const {
  for (const auto& w : weights_)
    if (!w.is_zero()) return false;
  return true;
}

NonnegRational RatioWeights::dot(const std::vector<PosRational>& ratios) const {
  if (ratios.size() != weights_.size())
    throw std::invalid_argument("RatioWeights: ratio vector length mismatch");
  NonnegRational sum;
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i].is_zero()) continue;
    sum = sum + weights_[i] * ratios[i];
  }
  return sum;
}

RatioWeights RatioWeights::plus(const RatioWeights& o) const {
  if (omega_ != o.omega_)
    throw std::invalid_argument("RatioWeights: mixed-Omega addition rejected");
  std::vector<NonnegRational> out;
  out.reserve(weights_.size());
  for (std::size_t i = 0; i < weights_.size(); ++i) out.push_back(weights_[i] + o.weights_[i]);
  return RatioWeights(omega_, std::move(out));
}

RatioWeights RatioWeights::odot(const std::vector<PosRational>& factors) const {
  if (factors.size() != weights_.size())
    throw std::invalid_argument("RatioWeights: factor vector length mismatch");
  std::vector<NonnegRational> out;
  out.reserve(weights_.size());
  for (std::size_t i = 0; i < weights_.size(); ++i) out.push_back(weights_[i] * factors[i]);
  return RatioWeights(omega_, std::move(out));
}

RatioWeights RatioWeights::scaled(const NonnegRational& c) const {
  std::vector<NonnegRational> out;
  out.reserve(weights_.size());
  for (const auto& w : weights_) out.push_back(w * c);
  return RatioWeights(omega_, std::move(out));
}

RatioWeights RatioWeights::divided(const PosRational& c) const {
  std::vector<NonnegRational> out;
  out.reserve(weights_.size());
  for (const auto& w : weights_) out.push_back(w / c);
  return RatioWeights(omega_, std::move(out));
}

RatioWeights RatioWeights::embedded(const RatioIndex& bigger) const {
  if (!bigger.contains_all_of(omega_))
    throw std::invalid_argument("RatioWeights: target Omega does not contain source Omega");
  RatioWeights out(bigger);
  for (std::size_t i = 0; i < omega_.size(); ++i)
    if (!weights_[i].is_zero()) out.set(omega_[i], weights_[i]);
  return out;
}

RatioWeights RatioWeights::restricted(const RatioIndex& smaller) const {
  RatioWeights out(smaller);
  for (std::size_t i = 0; i < omega_.size(); ++i) {
    if (weights_[i].is_zero()) continue;
    if (!smaller.contains(omega_[i]))
      throw std::invalid_argument("RatioWeights: nonzero weight on (" + omega_[i].str() +
                                  ") outside restricted Omega");
    out.set(omega_[i], weights_[i]);
  }
  return out;
}

std::string RatioWeights::str() const {
  std::string out;
  bool first = true;
  for (std::size_t i = 0; i < omega_.size(); ++i) {
    if (weights_[i].is_zero()) continue;
    if (!first) out += " ";
    out += "(" + omega_[i].str() + "):" + weights_[i].str();
    first = false;
  }
  return out.empty() ? "0" : out;
}

bool operator<(const RatioWeights& a, const RatioWeights& b) {
  if (!(a.omega_ == b.omega_)) return a.omega_.pairs() < b.omega_.pairs();
  for (std::size_t i = 0; i < a.weights_.size(); ++i) {
    if (a.weights_[i] != b.weights_[i]) return a.weights_[i] < b.weights_[i];
  }
  return false;
}

PointX apply(const Shift& s, const PointX& pt) {
  if (s.weights.is_zero()) return pt;
  NonnegRational add = s.weights.dot(ratio_vector(pt.u, s.weights.omega()));
  return PointX{pt.u, pt.x + add};
}

PointX apply(const Dilation& d, const PointX& pt) {
  return PointX{scale(d.q1, pt.u), d.q2 * pt.x};
}

PointX apply(const Perturbation& p, const PointX& pt) {
  return apply(p.shift, apply(p.dilation, pt));
}

Shift compose_shift(const Shift& a, const Shift& b) {
  return Shift(a.weights.plus(b.weights));
}

RatioWeights commute_dilation_past_shift(const RatioWeights& lambda, const Dilation& q) {
  return lambda.scaled(q.q2.as_nonneg()).odot(tilde(q.q1.inverse(), lambda.omega()));
}

RatioWeights uncommute_shift_past_dilation(const RatioWeights& lambda, const Dilation& q) {
  return lambda.divided(q.q2).odot(tilde(q.q1, lambda.omega()));
}

Perturbation compose(const Perturbation& p1, const Perturbation& p2) {
  if (p1.omega() != p2.omega())
    throw std::invalid_argument("compose: mixed-Omega perturbations rejected; embed first");
  // sigma1 R1 sigma2 R2 = sigma1 sigma2' R1 R2
  RatioWeights pushed = commute_dilation_past_shift(p2.shift.weights, p1.dilation);
  Shift s(p1.shift.weights.plus(pushed));
  Dilation d(p1.dilation.q1 * p2.dilation.q1, p1.dilation.q2 * p2.dilation.q2);
  return Perturbation(std::move(s), std::move(d));
}

Shift family_shift(const NFamily& fam, const RatioIndex& omega) {
  if (!fam.is_new())
    throw std::invalid_argument("family_shift: family " + fam.str() + " is not new");
  IndexSet s = fam.leading_part().without(fam.ground());
  RatioWeights w(omega);
  for (const auto& part : fam.parts()) {
    if (part == fam.leading_part()) continue;
    RatioPair p{part, s};
    if (!omega.contains(p))
      throw std::invalid_argument("family_shift: Omega lacks pair (" + p.str() + ")");
    w.set(p, w.at(p) + NonnegRational(1));
  }
  return Shift(std::move(w));
}

std::string Perturbation::str() const {
  return "shift{" + shift.weights.str() + "} dil{" + dilation.q1.str() + "," + dilation.q2.str() + "}";
}

Perturbation Perturbation::parse(const std::string& text, const RatioIndex& omega) {
  auto spos = text.find("shift{");
  auto dpos = text.find("dil{");
  if (spos == std::string::npos || dpos == std::string::npos)
    throw std::invalid_argument("perturbation literal: expected shift{...} dil{q1,q2}");
  auto send = text.find('}', spos);
  auto dend = text.find('}', dpos);
  if (send == std::string::npos || dend == std::string::npos)
    throw std::invalid_argument("perturbation literal: unbalanced braces");
  std::string sbody = text.substr(spos + 6, send - spos - 6);
  std::string dbody = text.substr(dpos + 4, dend - dpos - 4);

  RatioWeights w(omega);
  std::stringstream ss(sbody);
  std::string tok;
  while (ss >> tok) {
    if (tok == "0") continue;
    auto open = tok.find('(');
    auto close = tok.find(')');
    auto colon = tok.find(':', close == std::string::npos ? 0 : close);
    if (open != 0 || close == std::string::npos || colon == std::string::npos)
      throw std::invalid_argument("perturbation literal: bad shift entry " + tok);
    RatioPair p = RatioPair::parse(tok.substr(1, close - 1));
    w.set(p, NonnegRational::parse(tok.substr(colon + 1)));
  }

  auto comma = dbody.find(',');
  if (comma == std::string::npos)
    throw std::invalid_argument("perturbation literal: dil needs two factors");
  Dilation d(PosRational::parse(dbody.substr(0, comma)), PosRational::parse(dbody.substr(comma + 1)));
  return Perturbation(Shift(std::move(w)), std::move(d));
}

}  // namespace qramsey
