#pragma once

// Finite-range coloring oracles on Q_+ and on X = Q_+^{n-1} x Q_+, the
// built-in adversaries, pull-backs, auxiliary refinements, and the
// consistency predicates.
//
// Colorings are closures over serializable descriptors, so they are total
// on all of Q_+ unless a domain predicate restricts them; the "equal colors"
// predicates treat an undefined side as false.

#include "qramsey/family.hpp"
#include "qramsey/perturbation.hpp"
#include "qramsey/rational.hpp"

#include <json.hpp>

#include <functional>
#include <memory>
#include <optional>
#include <vector>

namespace qramsey {

using Json = nlohmann::ordered_json;

// r-coloring of Q_+, possibly partial.
class Coloring {
public:
  using Eval = std::function<std::optional<int>(const PosRational&)>;

  Coloring(int range, Eval eval, Json descriptor);

  int range() const { return range_; }
  std::optional<int> operator()(const PosRational& q) const { return eval_(q); }
  const Json& descriptor() const { return descriptor_; }

  // partial coloring: undefined above the height cutoff
  Coloring restricted_to_height(const BigInt& cutoff) const;

private:
  int range_;
  Eval eval_;
  Json descriptor_;
};

// Builds a coloring from its JSON spec:
//   {"kind":"val2_parity"} | {"kind":"val2_mod","m":3} |
//   {"kind":"numerator_mod","m":3} | {"kind":"denominator_mod","m":3} |
//   {"kind":"product","parts":[...]} | {"kind":"random","r":2,"seed":42} |
//   {"kind":"constant","r":1,"c":1}
// Unknown kinds raise std::invalid_argument.
Coloring builtin(const Json& spec);
Coloring parse_coloring(const std::string& spec_text);

// Coloring of points (u;x). Members of C_S factor through
// pi_S((u;x)) = x * prod_{s in S} u_s and expose that base map.
class PointColoring {
public:
  using BaseEval = std::function<std::optional<BigInt>(const PosRational&)>;
  using PointEval = std::function<std::optional<BigInt>(const PointX&)>;

  // member of C_S
  static PointColoring structured(IndexSet s, BigInt range, BaseEval base, Json descriptor);
  // unstructured point coloring (adversarial counterexamples live here)
  static PointColoring arbitrary(BigInt range, PointEval eval, Json descriptor);

  const BigInt& range() const { return range_; }
  std::optional<BigInt> operator()(const PointX& pt) const;
  bool is_structured() const { return structured_; }
  const IndexSet& structure() const;  // the S tag
  std::optional<BigInt> eval_base(const PosRational& w) const;
  const Json& descriptor() const { return descriptor_; }

  // pi_S at a point
  PosRational project(const PointX& pt) const;

private:
  PointColoring() = default;
  bool structured_ = false;
  IndexSet s_;
  BigInt range_;
  BaseEval base_;
  PointEval point_;
  Json descriptor_;
};

// the member of C_S induced by a coloring of Q_+
PointColoring project_coloring(const Coloring& c, const IndexSet& s);

// Auxiliary coloring along a finite set of dilations: the refinement with
// C'(x1) = C'(x2)  iff  C(h(x1)) = C(h(x2)) for all h in H.
// Needs the C_S structure; range is r^|H| after deduplicating H.
PointColoring auxiliary(const PointColoring& c, const std::vector<Dilation>& h);

// C(phi_I(v)) = C(prod over the leading part); undefined counts as false.
bool is_family_consistent(const RatVector& v, const NFamily& fam, const Coloring& c);

struct ConsistencyResult {
  bool consistent = true;
  std::optional<NFamily> failing;  // first failing family in canonical order
};

ConsistencyResult is_X_consistent(const RatVector& v, const std::vector<NFamily>& families,
                                  const Coloring& c);

// C'(I) = C(phi_I(v)); the induced coloring of n-families.
class FamilyColoring {
public:
  FamilyColoring(Coloring base, RatVector v) : base_(std::move(base)), v_(std::move(v)) {}
  int range() const { return base_.range(); }
  std::optional<int> operator()(const NFamily& fam) const { return base_(phi(fam, v_)); }

private:
  Coloring base_;
  RatVector v_;
};

FamilyColoring family_coloring(const Coloring& c, const RatVector& v);

}  // namespace qramsey
